//! Dense univariate polynomials over a field, stored low degree first with
//! no trailing zeros. The zero polynomial is the empty vector.

use crate::matrix::Matrix;
use crate::ring::{FieldElem, RingElem};

pub fn trim<E: RingElem>(mut f: Vec<E>) -> Vec<E> {
    while f.last().is_some_and(RingElem::is_zero) {
        f.pop();
    }
    f
}

pub fn degree<E>(f: &[E]) -> Option<usize> {
    f.len().checked_sub(1)
}

pub fn monic<E: FieldElem>(f: &[E]) -> Vec<E> {
    match f.last() {
        None => Vec::new(),
        Some(lead) => {
            let inv = lead.inv().expect("nonzero leading coefficient");
            f.iter().map(|c| c.clone() * inv.clone()).collect()
        }
    }
}

pub fn mul<E: RingElem>(f: &[E], g: &[E], zero: &E) -> Vec<E> {
    if f.is_empty() || g.is_empty() {
        return Vec::new();
    }
    let mut out = vec![zero.clone(); f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        for (j, b) in g.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    trim(out)
}

/// Quotient and remainder; `g` must be nonzero.
pub fn divrem<E: FieldElem>(f: &[E], g: &[E], zero: &E) -> (Vec<E>, Vec<E>) {
    let dg = degree(g).expect("division by the zero polynomial");
    let mut rem = trim(f.to_vec());
    if rem.len() <= dg {
        return (Vec::new(), rem);
    }
    let inv = g[dg].inv().expect("nonzero leading coefficient");
    let mut quot = vec![zero.clone(); rem.len() - dg];
    while rem.len() > dg {
        let k = rem.len() - 1 - dg;
        let c = rem[rem.len() - 1].clone() * inv.clone();
        for (j, gj) in g.iter().enumerate() {
            rem[k + j] = rem[k + j].clone() - c.clone() * gj.clone();
        }
        quot[k] = c;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

/// Exact quotient `f / g`.
pub fn div_exact<E: FieldElem>(f: &[E], g: &[E], zero: &E) -> Vec<E> {
    let (q, r) = divrem(f, g, zero);
    debug_assert!(r.is_empty(), "inexact polynomial division");
    q
}

/// Monic gcd.
pub fn gcd<E: FieldElem>(f: &[E], g: &[E], zero: &E) -> Vec<E> {
    let (mut a, mut b) = (trim(f.to_vec()), trim(g.to_vec()));
    while !b.is_empty() {
        let r = divrem(&a, &b, zero).1;
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn is_constant<E>(f: &[E]) -> bool {
    f.len() <= 1
}

/// Largest divisor of `f` coprime to `g`.
pub fn coprime_part<E: FieldElem>(f: &[E], g: &[E], zero: &E) -> Vec<E> {
    let mut a = monic(f);
    loop {
        let d = gcd(&a, g, zero);
        if is_constant(&d) {
            return a;
        }
        a = div_exact(&a, &d, zero);
    }
}

/// `f(A) v`, by Horner's rule.
pub fn apply_to_vector<E: RingElem>(f: &[E], a: &Matrix<E>, v: &[E]) -> Vec<E> {
    let mut acc = vec![a.zero_elem(); v.len()];
    for c in f.iter().rev() {
        acc = a.mul_vec(&acc);
        for (x, vi) in acc.iter_mut().zip(v) {
            *x = x.clone() + c.clone() * vi.clone();
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{IntegersMod, ModInt, Ring};
    use num_bigint::BigUint;

    fn p7(c: &[i64]) -> Vec<ModInt> {
        let f = IntegersMod::new(BigUint::from(7u32));
        trim(c.iter().map(|&v| f.from_int(v)).collect())
    }

    #[test]
    fn gcd_and_division() {
        let zero = p7(&[0, 1])[0].clone();
        let f = p7(&[-1, 0, 1]); // (x-1)(x+1)
        let g = p7(&[-1, 1]);
        assert_eq!(gcd(&f, &g, &zero), g);
        let (q, r) = divrem(&f, &g, &zero);
        assert_eq!(q, p7(&[1, 1]));
        assert!(r.is_empty());
        // (x-1)^2 (x+1) with respect to x-1
        let h = mul(&f, &g, &zero);
        assert_eq!(coprime_part(&h, &g, &zero), p7(&[1, 1]));
    }
}
