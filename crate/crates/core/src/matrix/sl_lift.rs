//! Lifting from `SL_n` of several residue fields to `SL_n(R)`.

use super::{det, elementary, reduce_matrix, Matrix, SimilarityWitness};
use crate::error::{Error, Result};
use crate::ring::{crt, FieldElem, Pid, PrimeElement, ResidueMap, Ring, RingElem};

/// Row operations `(a, b, mu)`, each adding `mu` times row `b` to row `a`,
/// that carry `t` to the identity. Then `t` is the product, in order, of
/// the transvections `1 - mu E_ab`.
pub(crate) fn transvection_factors<F: FieldElem>(t: &Matrix<F>) -> Result<Vec<(usize, usize, F)>> {
    let n = t.n();
    if !det(t).is_one() {
        return Err(Error::Precondition("sl_lift target must have determinant 1".into()));
    }
    let mut m = t.clone();
    let one = t.one_elem();
    let mut ops = Vec::new();
    let mut add_row = |m: &mut Matrix<F>, a: usize, b: usize, mu: F| {
        for j in 0..n {
            let v = m[(a, j)].clone() + mu.clone() * m[(b, j)].clone();
            m[(a, j)] = v;
        }
        ops.push((a, b, mu));
    };
    for j in 0..n {
        if j + 1 < n {
            if m[(j, j)].is_zero() {
                let k = (j + 1..n).find(|&k| !m[(k, j)].is_zero()).expect("invertible target");
                add_row(&mut m, j, k, one.clone());
            }
            if !m[(j, j)].is_one() {
                if m[(j + 1, j)].is_zero() {
                    add_row(&mut m, j + 1, j, one.clone());
                }
                let c = (one.clone() - m[(j, j)].clone()).div(&m[(j + 1, j)]).expect("nonzero");
                add_row(&mut m, j, j + 1, c);
            }
        }
        for i in 0..n {
            if i != j && !m[(i, j)].is_zero() {
                let mu = -m[(i, j)].clone();
                add_row(&mut m, i, j, mu);
            }
        }
    }
    debug_assert!(m.is_identity());
    Ok(ops)
}

/// A matrix `g` in `SL_n(R)` with `g = targets[i]` modulo `primes[i]`,
/// returned with its inverse.
pub fn sl_lift<R: Pid>(
    ring: &R,
    n: usize,
    targets: &[Matrix<<R::Residue as Ring>::Elem>],
    primes: &[PrimeElement<R::Elem>],
) -> Result<SimilarityWitness<R::Elem>> {
    if targets.len() != primes.len() {
        return Err(Error::ShapeMismatch("one target per prime is required".into()));
    }
    let zero = ring.zero();
    let moduli: Vec<R::Elem> = primes.iter().map(|p| p.value.clone()).collect();
    let mut g = Matrix::identity(n, &zero);
    let mut g_inv = Matrix::identity(n, &zero);
    for (i, (target, p)) in targets.iter().zip(primes).enumerate() {
        if target.n() != n {
            return Err(Error::ShapeMismatch(format!("target {i} is not {n}x{n}")));
        }
        let field = ring.residue_field(&p.value);
        for (a, b, mu) in transvection_factors(target)? {
            let lam = field.lift(&-mu);
            let mut residues = vec![zero.clone(); primes.len()];
            residues[i] = lam;
            let lam = crt(&residues, &moduli)?;
            if lam.is_zero() {
                continue;
            }
            g = &g * &elementary(n, a, b, &lam);
            g_inv = &elementary(n, a, b, &-lam) * &g_inv;
        }
    }
    for (i, (target, p)) in targets.iter().zip(primes).enumerate() {
        let field = ring.residue_field(&p.value);
        if reduce_matrix(&field, &g) != *target {
            return Err(Error::Internal(format!("sl_lift disagrees with target {i}")));
        }
    }
    Ok(SimilarityWitness { g, g_inv })
}
