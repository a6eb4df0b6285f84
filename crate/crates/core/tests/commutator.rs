use commutator_core::commutator::{criterion_check, decompose, decompose_mod_n, decompose_with_state, MainBranch};
use commutator_core::gen::{random_int_matrix, trace_zero_int, trace_zero_mod, trace_zero_poly};
use commutator_core::matrix::{mat_crt, reduce_matrix, Matrix};
use commutator_core::regularity::{centralizer_basis_mod_p, lift_residue_matrix};
use commutator_core::ring::{egcd, in_prime, Integers, IntegersMod, ModInt, Pid, PolyRing, Ring, RingElem};
use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
    .unwrap()
}

#[test]
fn random_integer_matrices() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut branches = std::collections::HashMap::new();
    for n in 2..=5 {
        for _ in 0..40 {
            let a = trace_zero_int(&mut rng, n, 50);
            let (w, st) = decompose_with_state(&Integers, &a).unwrap_or_else(|e| panic!("{a}\n{e}"));
            w.verify(&a).unwrap();
            if let Some(st) = st {
                *branches.entry(format!("{:?}", st.branch)).or_insert(0) += 1;
            }
        }
    }
    eprintln!("branches: {branches:?}");
}

#[test]
fn random_poly_matrices() {
    let r = PolyRing::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for n in 3..=4 {
        for _ in 0..20 {
            let a = trace_zero_poly(&mut rng, 3, n, 2);
            decompose(&r, &a)
                .unwrap_or_else(|e| panic!("{a}\n{e}"))
                .verify(&a)
                .unwrap();
        }
    }
}

#[test]
fn refined_branch_is_reached() {
    // Small entries with a composite pivot push primes into x + qy.
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let mut refined = 0;
    for n in 3..=5 {
        for _ in 0..150 {
            let mut a = trace_zero_int(&mut rng, n, 6);
            for j in 1..n {
                a[(0, j)] = a[(0, j)].clone() * BigInt::from(6);
                a[(j, 0)] = a[(j, 0)].clone() * BigInt::from(10);
            }
            let (w, st) = decompose_with_state(&Integers, &a).unwrap_or_else(|e| panic!("{a}\n{e}"));
            w.verify(&a).unwrap();
            if st.is_some_and(|s| s.branch == MainBranch::Refined) {
                refined += 1;
            }
        }
    }
    eprintln!("refined: {refined}");
}

/// `lambda + m R` with trace zero; needs `m | n lambda`.
fn congruent_to_scalar(rng: &mut ChaCha8Rng, n: usize, lambda: i64, m: i64, bound: i64) -> Matrix<BigInt> {
    let mut r = trace_zero_int(rng, n, bound);
    r[(n - 1, n - 1)] = r[(n - 1, n - 1)].clone() - BigInt::from(n as i64 * lambda / m);
    let lam = Matrix::scalar(n, &BigInt::from(lambda));
    &lam + &r.scale(&BigInt::from(m))
}

#[test]
fn general_branch_integers() {
    let mut rng = ChaCha8Rng::seed_from_u64(24);
    let mut counts = std::collections::HashMap::new();
    for (n, m) in [(3, 3), (4, 2), (4, 4), (5, 5), (6, 2), (6, 3), (6, 6)] {
        for lambda in [1, -1, 5, 7] {
            for _ in 0..15 {
                let a = congruent_to_scalar(&mut rng, n, lambda, m, 4);
                let (w, st) = decompose_with_state(&Integers, &a).unwrap_or_else(|e| panic!("{a}\n{e}"));
                w.verify(&a).unwrap();
                let key = st.map(|s| format!("{:?}", s.branch)).unwrap_or_else(|| "other".into());
                *counts.entry(key).or_insert(0) += 1;
            }
        }
    }
    eprintln!("branches: {counts:?}");
    assert!(counts.contains_key("Direct"));
}

#[test]
fn general_branch_polys() {
    let r = PolyRing::new(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(25);
    let x = r.x();
    let mut counts = std::collections::HashMap::new();
    for n in [3, 6] {
        for _ in 0..20 {
            let rm = trace_zero_poly(&mut rng, 3, n, 1);
            let m = x.clone() * x.clone() + r.one();
            let a = &Matrix::scalar(n, &r.one()) + &rm.scale(&m);
            let (w, st) = decompose_with_state(&r, &a).unwrap_or_else(|e| panic!("{a}\n{e}"));
            w.verify(&a).unwrap();
            let key = st.map(|s| format!("{:?}", s.branch)).unwrap_or_else(|| "other".into());
            *counts.entry(key).or_insert(0) += 1;
        }
    }
    eprintln!("branches: {counts:?}");
}

#[test]
fn spec_examples() {
    let a = z(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
    decompose(&Integers, &a).unwrap().verify(&a).unwrap();
    for n in 3..=5 {
        let a = Matrix::zeros(n, n, &BigInt::from(0));
        let w = decompose(&Integers, &a).unwrap();
        assert!(w.y.is_zero());
    }
}

/// Size of the centralizer of `x` over `Z/N`, by enumeration.
fn centralizer_size(x: &Matrix<BigInt>, modulus: u32) -> usize {
    let ring = IntegersMod::new(BigUint::from(modulus));
    let xm: Matrix<ModInt> = x.map(|e| ring.elem(e.clone()));
    let n = x.n();
    let total = (modulus as usize).pow((n * n) as u32);
    (0..total)
        .filter(|&code| {
            let mut c = code;
            let y = Matrix::from_fn(n, n, |_, _| {
                let v = c % modulus as usize;
                c /= modulus as usize;
                ring.from_int(v as i64)
            });
            xm.commutator(&y).is_zero()
        })
        .count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn witnesses_are_exact(seed in any::<u64>(), n in 2usize..=5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = trace_zero_int(&mut rng, n, 30);
        decompose(&Integers, &a).unwrap().verify(&a).unwrap();

        let r = PolyRing::new(3).unwrap();
        let a = trace_zero_poly(&mut rng, 3, n.min(4), 2);
        decompose(&r, &a).unwrap().verify(&a).unwrap();

        let zn = IntegersMod::new(BigUint::from([6u32, 8, 12, 30][rng.gen_range(0..4)]));
        let a = trace_zero_mod(&mut rng, &zn, n.min(4));
        decompose_mod_n(&zn, &a).unwrap().verify(&a).unwrap();
    }

    #[test]
    fn general_branch_choices(seed in any::<u64>(), n in 3usize..=6, lambda in prop::sample::select(vec![1i64, -1, 5, 7])) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = [2, 3, 6][rng.gen_range(0..3)];
        prop_assume!((n as i64 * lambda) % m == 0);
        let a = congruent_to_scalar(&mut rng, n, lambda, m, 4);
        let (w, st) = decompose_with_state(&Integers, &a).unwrap();
        w.verify(&a).unwrap();
        if let Some(st) = st {
            let (d, _, _) = egcd(&st.x, &st.y).unwrap();
            prop_assert!(d.is_one());
            let shifted = st.x.clone() + st.q.clone() * st.y.clone();
            for p in &st.s {
                prop_assert!(!in_prime(&shifted, &p.value), "x + qy in ({})", p.value);
            }
            let report = criterion_check(&st.x_matrix, &st.a).unwrap();
            prop_assert!(report.satisfied, "traces {:?}", report.traces);
        }
    }

    #[test]
    fn centralizers_split_over_coprime_moduli(seed in any::<u64>(), n in 2usize..=4, k in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (p1, p2) = [(2, 3), (2, 5), (3, 5)][k];
        let x = random_int_matrix(&mut rng, n, 3);
        let primes = [Integers.prime_element(BigInt::from(p1)), Integers.prime_element(BigInt::from(p2))];
        let bases: Vec<_> = primes.iter().map(|p| centralizer_basis_mod_p(&Integers, &x, p)).collect();
        let moduli = [BigInt::from(p1), BigInt::from(p2)];
        let modulus = BigInt::from(p1 * p2);
        for (i, c) in bases[0].iter().enumerate() {
            let c2 = &bases[1][i % bases[1].len()];
            let lifts = [lift_residue_matrix(&Integers, &primes[0], c), lift_residue_matrix(&Integers, &primes[1], c2)];
            let y = mat_crt(&lifts, &moduli).unwrap();
            prop_assert!(x.commutator(&y).entries().iter().all(|e| in_prime(e, &modulus)));
            for (p, target) in primes.iter().zip([c, c2]) {
                prop_assert_eq!(&reduce_matrix(&Integers.residue_field(&p.value), &y), target);
            }
        }
        if n == 2 {
            let expected = (p1 as usize).pow(bases[0].len() as u32) * (p2 as usize).pow(bases[1].len() as u32);
            prop_assert_eq!(centralizer_size(&x, (p1 * p2) as u32), expected);
        }
    }
}
