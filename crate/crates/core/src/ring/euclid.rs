//! Bézout, CRT and the prime-avoidance constructions.

use num_bigint::BigUint;

use super::{in_prime, EuclidElem, FiniteField, Pid, PrimeElement, ResidueMap, RingElem};
use crate::error::{Error, Result};

/// Extended gcd: `(d, s, t)` with `d = s*a + t*b` and `d` unit-normal.
pub fn egcd<E: EuclidElem>(a: &E, b: &E) -> Result<(E, E, E)> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::DegenerateInput("egcd(0, 0) is undefined".into()));
    }
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (a.one_like(), a.zero_like());
    let (mut t0, mut t1) = (a.zero_like(), a.one_like());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        r0 = r1;
        r1 = r;
        let s = s0 - q.clone() * s1.clone();
        s0 = s1;
        s1 = s;
        let t = t0 - q * t1.clone();
        t0 = t1;
        t1 = t;
    }
    let (d, u) = r0.unit_normal();
    Ok((d, s0 * u.clone(), t0 * u))
}

/// Unit-normal gcd; `gcd(0, 0) = 0`.
pub fn gcd<E: EuclidElem>(a: &E, b: &E) -> E {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let r = x.div_rem(&y).1;
        x = y;
        y = r;
    }
    x.unit_normal().0
}

pub fn lcm<E: EuclidElem>(a: &E, b: &E) -> E {
    if a.is_zero() || b.is_zero() {
        return a.zero_like();
    }
    let g = gcd(a, b);
    (a.div_rem(&g).0 * b.clone()).unit_normal().0
}

pub fn unit_normal_of<E: EuclidElem>(a: &E) -> E {
    a.unit_normal().0
}

/// `b | a`.
pub fn divides<E: EuclidElem>(b: &E, a: &E) -> bool {
    if b.is_zero() {
        a.is_zero()
    } else {
        a.div_rem(b).1.is_zero()
    }
}

/// `a / b`, failing if `b` does not divide `a`.
pub fn exact_div<E: EuclidElem>(a: &E, b: &E) -> Result<E> {
    if b.is_zero() {
        return Err(Error::DegenerateInput("division by zero".into()));
    }
    let (q, r) = a.div_rem(b);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Internal(format!("{b} does not divide {a}")))
    }
}

pub fn is_associate<E: EuclidElem>(a: &E, b: &E) -> bool {
    a.unit_normal().0 == b.unit_normal().0
}

pub fn product<'a, E: EuclidElem + 'a>(one: E, items: impl IntoIterator<Item = &'a E>) -> E {
    items.into_iter().fold(one, |acc, x| acc * x.clone())
}

/// Unit-normal generator of the ideal spanned by `values`.
pub fn ideal_generator<E: EuclidElem>(values: &[E]) -> Result<E> {
    let Some(first) = values.first() else {
        return Err(Error::DegenerateInput("ideal_generator of an empty sequence".into()));
    };
    Ok(values.iter().fold(first.zero_like(), |g, v| gcd(&g, v)))
}

/// Chinese remainder reconstruction, reduced modulo the product of the moduli.
pub fn crt<E: EuclidElem>(residues: &[E], moduli: &[E]) -> Result<E> {
    if residues.len() != moduli.len() || residues.is_empty() {
        return Err(Error::Precondition("crt needs equally many residues and moduli".into()));
    }
    for m in moduli {
        if m.is_zero() || m.is_unit() {
            return Err(Error::Precondition(format!(
                "crt modulus {m} must be a nonzero nonunit"
            )));
        }
    }
    let mut x = residues[0].div_rem(&moduli[0]).1;
    let mut big = moduli[0].clone();
    for (r, m) in residues.iter().zip(moduli).skip(1) {
        let (d, s, _) = egcd(&big, m)?;
        if !d.is_one() {
            return Err(Error::Precondition(format!("crt moduli {big} and {m} are not coprime")));
        }
        // x + big * k with k = (r - x) * big^{-1} mod m.
        let k = ((r.clone() - x.clone()) * s).div_rem(m).1;
        x = x + big.clone() * k;
        big = big * m.clone();
        x = x.div_rem(&big).1;
    }
    Ok(x)
}

fn check_coprime<E: EuclidElem>(a: &E, b: &E, what: &str) -> Result<()> {
    if gcd(a, b).is_one() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{what}: ({a}, {b}) is not the unit ideal")))
    }
}

/// Product of the primes in `primes` that do not contain `a` (one if none).
fn avoid_core<E: EuclidElem>(a: &E, primes: &[PrimeElement<E>]) -> E {
    primes
        .iter()
        .filter(|p| !in_prime(a, &p.value))
        .fold(a.one_like(), |acc, p| acc * p.value.clone())
}

/// Returns `x` with `a + b x` outside every prime of `primes`.
///
/// `x` is the product of the primes not containing `a`; requires `(a, b) = (1)`.
pub fn prime_avoidance<E: EuclidElem>(a: &E, b: &E, primes: &[PrimeElement<E>]) -> Result<E> {
    check_coprime(a, b, "prime_avoidance")?;
    Ok(avoid_core(a, primes))
}

/// Returns `t` with `t` outside `p`, `t` inside every prime of `others`, and
/// `alpha t + beta` outside `p`.
pub fn avoid_with_vanishing<R: Pid>(
    ring: &R,
    alpha: &R::Elem,
    beta: &R::Elem,
    p: &PrimeElement<R::Elem>,
    others: &[PrimeElement<R::Elem>],
) -> Result<R::Elem> {
    check_coprime(alpha, beta, "avoid_with_vanishing")?;
    if p.residue_field_size < BigUint::from(3u32) {
        return Err(Error::Precondition(format!(
            "avoid_with_vanishing needs |R/p| >= 3, but R/({}) has {} elements",
            p.value, p.residue_field_size
        )));
    }
    if others.iter().any(|q| is_associate(&q.value, &p.value)) {
        return Err(Error::Precondition(format!(
            "{} must not lie in the vanishing set",
            p.value
        )));
    }
    let field = ring.residue_field(&p.value);
    // r1 = 1 and r2 = the first residue outside {0, 1}; then r1 - r2 is a unit mod p.
    let r1 = ring.one();
    let r2 = field.lift(&field.element(&BigUint::from(2u32)));
    let s = others.iter().fold(ring.one(), |acc, q| acc * q.value.clone());
    for r in [r1, r2] {
        let t = r * s.clone();
        if !in_prime(&(alpha.clone() * t.clone() + beta.clone()), &p.value) {
            return Ok(t);
        }
    }
    Err(Error::Internal("avoid_with_vanishing: both candidates failed".into()))
}

/// Returns `x` with `(a + c x, b - a x) = (1)`.
///
/// Requires `(a, b, c) = (1)`, `(a, b) != (1)` and `(a, c) != (1)`.
pub fn coprimify<R: Pid>(ring: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Result<R::Elem> {
    let g_abc = ideal_generator(&[a.clone(), b.clone(), c.clone()])?;
    if !g_abc.is_one() {
        return Err(Error::Precondition(format!("coprimify: ({a}, {b}, {c}) != (1)")));
    }
    if gcd(a, b).is_one() {
        return Err(Error::Precondition(format!("coprimify: ({a}, {b}) = (1) already")));
    }
    if gcd(a, c).is_one() {
        return Err(Error::Precondition(format!("coprimify: ({a}, {c}) = (1) already")));
    }
    // a (a + c x) + c (b - a x) = a^2 + b c
    let disc = a.clone() * a.clone() + b.clone() * c.clone();
    let x = if !disc.is_zero() {
        let g_ac = gcd(a, c);
        let primes: Vec<_> = ring
            .factor(&disc)?
            .factors
            .into_iter()
            .map(|(p, _)| p)
            .filter(|p| !in_prime(&g_ac, &p.value))
            .collect();
        avoid_core(a, &primes)
    } else {
        // a + c x and b - a x are proportional; both are unit multiples of
        // a' + c' x where a = g a', c = g c', g = gcd(a, c). Solvable iff a'
        // is congruent to a unit modulo c'.
        let g = gcd(a, c);
        let a1 = exact_div(a, &g)?;
        let c1 = exact_div(c, &g)?;
        let r = a1.div_rem(&c1).1;
        let candidates = [r.clone(), r.clone() - c1.clone(), r + c1.clone()];
        let u = candidates.into_iter().find(|u| u.is_unit()).ok_or_else(|| {
            Error::NoSolution(format!(
                "no x makes ({a} + ({c})x, {b} - ({a})x) coprime: both are multiples of {a1} + ({c1})x"
            ))
        })?;
        exact_div(&(u - a1), &c1)?
    };
    let lhs = a.clone() + c.clone() * x.clone();
    let rhs = b.clone() - a.clone() * x.clone();
    if !gcd(&lhs, &rhs).is_one() {
        return Err(Error::Internal(format!(
            "coprimify produced x = {x} with non-coprime pair"
        )));
    }
    Ok(x)
}
