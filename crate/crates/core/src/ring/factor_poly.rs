//! Factorization over `F_p`: squarefree, distinct-degree, equal-degree.

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{EuclidElem, FpPoly};

const SEED: u64 = 0x5eed_f00d;

fn is_one(f: &FpPoly) -> bool {
    f.degree() == Some(0) && f.coeff(0) == 1
}

fn pth_root(f: &FpPoly) -> FpPoly {
    let p = f.p();
    let coeffs = f.coeffs().iter().step_by(p as usize).copied().collect();
    FpPoly::new(p, coeffs)
}

fn squarefree(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.divrem(&c).0;
    let mut i = 1;
    while !is_one(&w) {
        let y = w.gcd(&c);
        let z = w.divrem(&y).0;
        if !is_one(&z) {
            out.push((z, i));
        }
        i += 1;
        w = y.clone();
        c = c.divrem(&y).0;
    }
    if !is_one(&c) {
        let p = f.p() as u32;
        for (g, e) in squarefree(&pth_root(&c)) {
            out.push((g, e * p));
        }
    }
    out
}

/// Splits a squarefree monic `f` into `(product of degree-d factors, d)`.
fn distinct_degree(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.p();
    let pb = BigUint::from(p);
    let x = FpPoly::x(p);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest);
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.powmod(&pb, &rest);
        let g = (h.clone() - x.clone()).gcd(&rest);
        if !is_one(&g) {
            out.push((g.clone(), d));
            rest = rest.divrem(&g).0;
            h = h.rem(&rest);
        }
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    out
}

fn equal_degree(f: &FpPoly, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
    let n = f.degree().unwrap();
    if n == d {
        out.push(f.clone());
        return;
    }
    let p = f.p();
    loop {
        let coeffs: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = FpPoly::new(p, coeffs);
        if a.degree().unwrap_or(0) == 0 {
            continue;
        }
        let b = if p == 2 {
            // Trace map a + a^2 + ... + a^(2^(md-1)) with m = 1 over F_2.
            let mut t = a.clone();
            let mut acc = a.clone();
            for _ in 1..d {
                t = t.mulmod(&t, f);
                acc = acc + t.clone();
            }
            acc
        } else {
            let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
            a.powmod(&e, f) - FpPoly::constant(p, 1)
        };
        let g = b.gcd(f);
        let gd = g.degree().unwrap_or(0);
        if gd > 0 && gd < n {
            let h = f.divrem(&g).0;
            equal_degree(&g, d, rng, out);
            equal_degree(&h.monic(), d, rng, out);
            return;
        }
    }
}

/// Monic irreducible factors with multiplicities, in canonical order.
/// The input must be nonzero; its leading coefficient is dropped.
pub fn factor_fp_poly(f: &FpPoly) -> Vec<(FpPoly, u32)> {
    assert!(!f.coeffs().is_empty(), "cannot factor the zero polynomial");
    let f = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    for (g, e) in squarefree(&f) {
        for (h, d) in distinct_degree(&g) {
            let mut parts = Vec::new();
            equal_degree(&h, d, &mut rng, &mut parts);
            out.extend(parts.into_iter().map(|q| (q, e)));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    // Merge equal primes arising from different squarefree layers.
    let mut merged: Vec<(FpPoly, u32)> = Vec::new();
    for (q, e) in out {
        match merged.last_mut() {
            Some((last, k)) if *last == q => *k += e,
            _ => merged.push((q, e)),
        }
    }
    merged
}

/// Rabin's test: `f` of degree `n` is irreducible iff `x^(p^n) = x mod f` and
/// `gcd(x^(p^(n/r)) - x, f) = 1` for each prime `r | n`.
pub fn is_irreducible(f: &FpPoly) -> bool {
    let Some(n) = f.degree() else { return false };
    if n == 0 {
        return false;
    }
    let f = f.monic();
    let p = f.p();
    let x = FpPoly::x(p);
    let pow_frob = |k: usize| {
        let e = BigUint::from(p).pow(k as u32);
        x.powmod(&e, &f)
    };
    let mut m = n;
    let mut r = 2;
    let mut prime_divisors = Vec::new();
    while r * r <= m {
        if m % r == 0 {
            prime_divisors.push(r);
            while m % r == 0 {
                m /= r;
            }
        }
        r += 1;
    }
    if m > 1 {
        prime_divisors.push(m);
    }
    for r in prime_divisors {
        let g = (pow_frob(n / r) - x.clone()).gcd(&f);
        if !is_one(&g) {
            return false;
        }
    }
    (pow_frob(n) - x.clone()).rem(&f).coeffs().is_empty()
}
