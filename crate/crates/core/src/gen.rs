//! Seeded random instances.

use num_bigint::BigInt;
use rand::Rng;

use crate::matrix::Matrix;
use crate::ring::{FpPoly, IntegersMod, ModInt};

pub fn random_int_matrix<G: Rng>(rng: &mut G, n: usize, bound: i64) -> Matrix<BigInt> {
    Matrix::from_fn(n, n, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

fn random_poly<G: Rng>(rng: &mut G, p: u64, max_deg: usize) -> FpPoly {
    FpPoly::new(p, (0..=max_deg).map(|_| rng.gen_range(0..p)).collect())
}

pub fn random_poly_matrix<G: Rng>(rng: &mut G, p: u64, n: usize, max_deg: usize) -> Matrix<FpPoly> {
    Matrix::from_fn(n, n, |_, _| random_poly(rng, p, max_deg))
}

pub fn random_mod_matrix<G: Rng>(rng: &mut G, ring: &IntegersMod, n: usize) -> Matrix<ModInt> {
    let m = ring.modulus().clone();
    Matrix::from_fn(n, n, |_, _| {
        let v: u64 = rng.gen_range(0..u64::try_from(&m).unwrap_or(u64::MAX));
        ring.elem(BigInt::from(v))
    })
}

/// Replaces the last diagonal entry so that the trace vanishes.
pub fn balance_trace<E: crate::ring::RingElem>(mut a: Matrix<E>) -> Matrix<E> {
    let n = a.n();
    let rest = (0..n - 1).fold(a.zero_elem(), |acc, i| acc + a[(i, i)].clone());
    a[(n - 1, n - 1)] = -rest;
    a
}

pub fn trace_zero_int<G: Rng>(rng: &mut G, n: usize, bound: i64) -> Matrix<BigInt> {
    balance_trace(random_int_matrix(rng, n, bound))
}

pub fn trace_zero_poly<G: Rng>(rng: &mut G, p: u64, n: usize, max_deg: usize) -> Matrix<FpPoly> {
    balance_trace(random_poly_matrix(rng, p, n, max_deg))
}

pub fn trace_zero_mod<G: Rng>(rng: &mut G, ring: &IntegersMod, n: usize) -> Matrix<ModInt> {
    let a = balance_trace(random_mod_matrix(rng, ring, n));
    // Keep entries canonical.
    a.map(|x| ring.elem(x.value().clone()))
}
