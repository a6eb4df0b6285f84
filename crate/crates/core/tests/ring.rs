use commutator_core::ring::{
    avoid_with_vanishing, coprimify, crt, egcd, factor_integer, gcd, ideal_generator, in_prime, is_irreducible,
    is_prime, prime_avoidance, EuclidElem, FpPoly, Frac, Integers, IntegersMod, Pid, PolyRing, PrimeElement, Ring,
    RingDescriptor, RingElem,
};
use commutator_core::Error;
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;

fn zi(v: i64) -> BigInt {
    BigInt::from(v)
}

fn zp(v: i64) -> PrimeElement<BigInt> {
    Integers.prime_element(zi(v))
}

#[test]
fn egcd_examples() {
    let (d, s, t) = egcd(&zi(12), &zi(18)).unwrap();
    assert_eq!(d, zi(6));
    assert_eq!(s * zi(12) + t * zi(18), zi(6));

    let (d, s, t) = egcd(&zi(-7), &zi(0)).unwrap();
    assert_eq!(d, zi(7));
    assert_eq!((s.clone(), t), (zi(-1), zi(0)));
    assert_eq!(s * zi(-7), zi(7));

    let r = PolyRing::new(5).unwrap();
    let a = r.poly(&[-1, 0, 1]);
    let b = r.poly(&[-1, 1]);
    let (d, s, t) = egcd(&a, &b).unwrap();
    assert_eq!(d, r.poly(&[-1, 1]));
    assert_eq!(s * a + t * b, d);

    assert!(matches!(egcd(&zi(0), &zi(0)), Err(Error::DegenerateInput(_))));
}

#[test]
fn ideal_generator_examples() {
    assert_eq!(ideal_generator(&[zi(4), zi(6), zi(9)]).unwrap(), zi(1));
    assert_eq!(ideal_generator(&[zi(0), zi(0)]).unwrap(), zi(0));
    assert_eq!(ideal_generator(&[zi(6), zi(10), zi(15)]).unwrap(), zi(1));
    assert_eq!(ideal_generator(&[zi(-4), zi(6)]).unwrap(), zi(2));
    assert!(matches!(ideal_generator::<BigInt>(&[]), Err(Error::DegenerateInput(_))));
}

#[test]
fn factor_examples() {
    let f = Integers.factor(&zi(60)).unwrap();
    assert_eq!(f.unit, zi(1));
    let got: Vec<(BigInt, u32)> = f.factors.iter().map(|(p, e)| (p.value.clone(), *e)).collect();
    assert_eq!(got, vec![(zi(2), 2), (zi(3), 1), (zi(5), 1)]);

    let f = Integers.factor(&zi(-186)).unwrap();
    assert_eq!(f.unit, zi(-1));
    let got: Vec<BigInt> = f.primes().map(|p| p.value.clone()).collect();
    assert_eq!(got, vec![zi(2), zi(3), zi(31)]);
    // Trial-division oracle.
    let mut m = 186i64;
    let mut trial = Vec::new();
    for d in 2..=186 {
        if m % d == 0 {
            trial.push(zi(d));
            while m % d == 0 {
                m /= d;
            }
        }
    }
    assert_eq!(got, trial);

    let r = PolyRing::new(2).unwrap();
    let f = r.factor(&r.poly(&[0, 1, 1])).unwrap();
    let got: Vec<FpPoly> = f.primes().map(|p| p.value.clone()).collect();
    assert_eq!(got, vec![r.poly(&[0, 1]), r.poly(&[1, 1])]);
    assert!(f
        .factors
        .iter()
        .all(|(p, e)| *e == 1 && p.residue_field_size == BigUint::from(2u32)));

    assert!(matches!(Integers.factor(&zi(0)), Err(Error::DegenerateInput(_))));
}

#[test]
fn crt_examples() {
    assert_eq!(crt(&[zi(1), zi(2)], &[zi(2), zi(3)]).unwrap(), zi(5));
    assert_eq!(crt(&[zi(17)], &[zi(5)]).unwrap(), zi(2));
    assert_eq!(crt(&[zi(1), zi(1), zi(1)], &[zi(2), zi(3), zi(5)]).unwrap(), zi(1));
    assert!(matches!(
        crt(&[zi(1), zi(1)], &[zi(4), zi(6)]),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn maximal_ideals_examples() {
    let two = BigUint::from(2u32);
    let z2: Vec<BigInt> = Integers
        .maximal_ideals_of_index(&two)
        .unwrap()
        .into_iter()
        .map(|p| p.value)
        .collect();
    assert_eq!(z2, vec![zi(2)]);
    assert!(Integers
        .maximal_ideals_of_index(&BigUint::from(4u32))
        .unwrap()
        .is_empty());

    let f2 = PolyRing::new(2).unwrap();
    let got: Vec<FpPoly> = f2
        .maximal_ideals_of_index(&two)
        .unwrap()
        .into_iter()
        .map(|p| p.value)
        .collect();
    assert_eq!(got, vec![f2.poly(&[0, 1]), f2.poly(&[1, 1])]);
    assert_eq!(f2.maximal_ideals_of_index(&BigUint::from(4u32)).unwrap().len(), 1);

    let f3 = PolyRing::new(3).unwrap();
    assert!(f3.maximal_ideals_of_index(&two).unwrap().is_empty());
    assert_eq!(f3.maximal_ideals_of_index(&BigUint::from(9u32)).unwrap().len(), 3);
}

#[test]
fn prime_avoidance_examples() {
    let x = prime_avoidance(&zi(3), &zi(5), &[zp(2), zp(3)]).unwrap();
    assert_eq!(x, zi(2));
    let v = zi(3) + zi(5) * &x;
    assert!(!in_prime(&v, &zi(2)) && !in_prime(&v, &zi(3)));

    assert_eq!(prime_avoidance(&zi(1), &zi(8), &[zp(2)]).unwrap(), zi(2));
    assert_eq!(prime_avoidance(&zi(4), &zi(7), &[]).unwrap(), zi(1));
    assert!(matches!(
        prime_avoidance(&zi(2), &zi(4), &[zp(3)]),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn avoid_with_vanishing_examples() {
    let t = avoid_with_vanishing(&Integers, &zi(1), &zi(0), &zp(3), &[zp(2)]).unwrap();
    assert_eq!(t, zi(2));
    let t = avoid_with_vanishing(&Integers, &zi(0), &zi(1), &zp(5), &[]).unwrap();
    assert_eq!(t, zi(1));
    let t = avoid_with_vanishing(&Integers, &zi(1), &zi(4), &zp(5), &[zp(2)]).unwrap();
    assert_eq!(t, zi(2));
    assert!(matches!(
        avoid_with_vanishing(&Integers, &zi(1), &zi(0), &zp(2), &[]),
        Err(Error::Precondition(_))
    ));
}

#[test]
fn coprimify_examples() {
    let ok = |a: i64, b: i64, c: i64, x: &BigInt| gcd(&(zi(a) + zi(c) * x), &(zi(b) - zi(a) * x)) == zi(1);
    let x = coprimify(&Integers, &zi(6), &zi(10), &zi(15)).unwrap();
    assert!(ok(6, 10, 15, &x));
    assert!(ok(6, 10, 15, &zi(1)));
    assert!(matches!(
        coprimify(&Integers, &zi(2), &zi(3), &zi(5)),
        Err(Error::Precondition(_))
    ));
    let x = coprimify(&Integers, &zi(6), &zi(4), &zi(9)).unwrap();
    assert!(ok(6, 4, 9, &x));
    assert!(ok(6, 4, 9, &zi(1)));
}

#[test]
fn descriptors_validate() {
    assert!(RingDescriptor::PolyOverPrimeField { p: 6 }.validate().is_err());
    assert!(RingDescriptor::IntegersModN { n: BigUint::from(1u32) }
        .validate()
        .is_err());
    assert!(PolyRing::new(4).is_err());
}

#[test]
fn canonical_forms() {
    let r = PolyRing::new(5).unwrap();
    assert_eq!(r.poly(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
    let (n, u) = r.poly(&[1, 3]).unit_normal();
    assert_eq!(n.leading(), 1);
    assert_eq!(n * u.unit_inv(), r.poly(&[1, 3]));
    let zn = IntegersMod::new(BigUint::from(12u32));
    assert_eq!(zn.from_int(-1).value(), &zi(11));
    let f = Frac::new(zi(6), zi(-4));
    assert_eq!((f.num().clone(), f.den().clone()), (zi(-3), zi(2)));
}

fn poly_strategy(p: u64, max_len: usize) -> impl Strategy<Value = FpPoly> {
    prop::collection::vec(0..p, 0..max_len).prop_map(move |c| FpPoly::new(p, c))
}

fn is_prime_int(p: &BigInt) -> bool {
    // Trial division to the square root.
    let m = u64::try_from(p).expect("small");
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| m % d != 0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn bezout_integers(a in -10i64.pow(12)..10i64.pow(12), b in -10i64.pow(12)..10i64.pow(12)) {
        prop_assume!(a != 0 || b != 0);
        let (d, s, t) = egcd(&zi(a), &zi(b)).unwrap();
        prop_assert_eq!(s * zi(a) + t * zi(b), d.clone());
        prop_assert!(d > zi(0));
        prop_assert!((zi(a) % &d) == zi(0) && (zi(b) % &d) == zi(0));
    }

    #[test]
    fn bezout_polys(a in poly_strategy(7, 8), b in poly_strategy(7, 8)) {
        prop_assume!(!a.is_zero() || !b.is_zero());
        let (d, s, t) = egcd(&a, &b).unwrap();
        prop_assert_eq!(s * a.clone() + t * b.clone(), d.clone());
        prop_assert_eq!(d.leading(), 1);
        prop_assert!(a.div_rem(&d).1.is_zero() && b.div_rem(&d).1.is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn factor_round_trip_integers(a in -10i64.pow(9)..10i64.pow(9)) {
        prop_assume!(a != 0);
        let f = Integers.factor(&zi(a)).unwrap();
        prop_assert_eq!(f.expand(), zi(a));
        for (p, e) in &f.factors {
            prop_assert!(*e >= 1 && is_prime_int(&p.value));
        }
        let primes: Vec<_> = f.primes().map(|p| p.value.clone()).collect();
        prop_assert!(primes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn factor_round_trip_polys(a in poly_strategy(3, 10)) {
        prop_assume!(!a.is_zero());
        let r = PolyRing::new(3).unwrap();
        let f = r.factor(&a).unwrap();
        prop_assert_eq!(f.expand(), a);
        for (p, _) in &f.factors {
            prop_assert!(is_irreducible(&p.value));
            prop_assert_eq!(p.value.leading(), 1);
        }
    }

    #[test]
    fn factor_large_integers(a in 1u64..u64::MAX) {
        let f = factor_integer(&BigUint::from(a));
        let back = f.iter().fold(BigUint::from(1u32), |acc, (p, e)| acc * p.pow(*e));
        prop_assert_eq!(back, BigUint::from(a));
        prop_assert!(f.iter().all(|(p, _)| is_prime(p)));
    }

    #[test]
    fn crt_reconstructs(r in prop::collection::vec(-1000i64..1000, 3)) {
        let moduli = [zi(7), zi(9), zi(10)];
        let x = crt(&r.iter().map(|&v| zi(v)).collect::<Vec<_>>(), &moduli).unwrap();
        for (ri, m) in r.iter().zip(&moduli) {
            prop_assert_eq!((x.clone() - zi(*ri)).div_rem(m).1, zi(0));
        }
        // A second reconstruction order agrees modulo the product.
        let rev: Vec<BigInt> = r.iter().rev().map(|&v| zi(v)).collect();
        let moduli_rev: Vec<BigInt> = moduli.iter().rev().cloned().collect();
        let y = crt(&rev, &moduli_rev).unwrap();
        prop_assert_eq!(x, y);
    }

    #[test]
    fn prime_avoidance_postcondition(a in -500i64..500, b in -500i64..500) {
        prop_assume!(gcd(&zi(a), &zi(b)) == zi(1));
        let s: Vec<_> = [2, 3, 5, 7, 11, 13].iter().map(|&p| zp(p)).collect();
        let x = prime_avoidance(&zi(a), &zi(b), &s).unwrap();
        let v = zi(a) + zi(b) * x;
        for p in &s {
            prop_assert!(!in_prime(&v, &p.value));
        }
    }

    #[test]
    fn avoid_with_vanishing_postcondition(alpha in -200i64..200, beta in -200i64..200, pi in 0usize..4) {
        prop_assume!(gcd(&zi(alpha), &zi(beta)) == zi(1));
        let p = zp([3, 5, 7, 11][pi]);
        let others: Vec<_> = [2, 13].iter().map(|&q| zp(q)).collect();
        let t = avoid_with_vanishing(&Integers, &zi(alpha), &zi(beta), &p, &others).unwrap();
        prop_assert!(!in_prime(&t, &p.value));
        prop_assert!(others.iter().all(|q| in_prime(&t, &q.value)));
        prop_assert!(!in_prime(&(zi(alpha) * t + zi(beta)), &p.value));
    }

    #[test]
    fn coprimify_postcondition(i in 0usize..4, j in 0usize..4, k in -60i64..60, u in -60i64..60, v in -60i64..60) {
        // (a, b) and (a, c) share distinct primes.
        let primes = [2i64, 3, 5, 7];
        prop_assume!(i != j);
        let (a, b, c) = (zi(primes[i] * primes[j] * k), zi(primes[i] * u), zi(primes[j] * v));
        prop_assume!(ideal_generator(&[a.clone(), b.clone(), c.clone()]).unwrap() == zi(1));
        let x = coprimify(&Integers, &a, &b, &c).unwrap();
        let (d, _, _) = egcd(&(a.clone() + c * x.clone()), &(b - a * x)).unwrap();
        prop_assert_eq!(d, zi(1));
    }

    #[test]
    fn coprimify_postcondition_polys(k in poly_strategy(3, 3), u in poly_strategy(3, 3), v in poly_strategy(3, 3)) {
        let r = PolyRing::new(3).unwrap();
        let (p1, p2) = (r.poly(&[0, 1]), r.poly(&[1, 1]));
        let (u, v) = (u * p2.clone() + r.one(), v * p1.clone() + r.one());
        let (a, b, c) = (p1.clone() * p2.clone() * k, p1 * u, p2 * v);
        prop_assume!(ideal_generator(&[a.clone(), b.clone(), c.clone()]).unwrap().is_one());
        let x = coprimify(&r, &a, &b, &c).unwrap();
        let d = gcd(&(a.clone() + c * x.clone()), &(b - a * x));
        prop_assert!(d.is_one());
    }
}
