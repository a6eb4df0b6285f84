//! Similarity to a matrix with zero diagonal.

use super::lr::lr_form;
use crate::error::{Error, Result};
use crate::matrix::{direct_sum_identity, elementary, permutation, Matrix, SimilarityWitness};
use crate::ring::{in_prime, EuclidElem, Pid, RingElem};

fn transvection<E: EuclidElem>(n: usize, i: usize, j: usize, lam: &E) -> SimilarityWitness<E> {
    SimilarityWitness {
        g: elementary(n, i, j, lam),
        g_inv: elementary(n, i, j, &-lam.clone()),
    }
}

/// A permutation conjugation moving a unit off-diagonal entry to `(1,2)`.
fn unit_to_b12<E: EuclidElem>(a: &Matrix<E>) -> Option<SimilarityWitness<E>> {
    let n = a.n();
    let (i, j) = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && a[(i, j)].is_unit())?;
    // sigma sends i -> 0 and j -> 1; P e_k = e_{sigma(k)}.
    let mut rest = (0..n).filter(|&k| k != i && k != j);
    let mut sigma = vec![0; n];
    sigma[i] = 0;
    sigma[j] = 1;
    for target in 2..n {
        sigma[rest.next().unwrap()] = target;
    }
    let p = permutation(&sigma, &a.zero_elem());
    let p_inv = p.transpose();
    Some(SimilarityWitness { g: p, g_inv: p_inv })
}

/// Zero-diagonal similarity for a trace-zero matrix whose scalar defect
/// ideal is the unit ideal.
fn zero_diag_unit<R: Pid>(ring: &R, a: &Matrix<R::Elem>) -> Result<SimilarityWitness<R::Elem>> {
    let n = a.n();
    let z = ring.zero();
    if n == 1 {
        return Ok(SimilarityWitness::identity(1, &z));
    }
    if n == 2 {
        if a[(0, 1)].is_unit() {
            let t = a[(0, 0)].clone() * a[(0, 1)].unit_inv();
            return Ok(transvection(2, 1, 0, &t));
        }
        if a[(1, 0)].is_unit() {
            let t = -(a[(0, 0)].clone() * a[(1, 0)].unit_inv());
            return Ok(transvection(2, 0, 1, &t));
        }
        return Err(Error::NotApplicable {
            prime: None,
            reason: "a 2x2 matrix needs a unit off-diagonal entry".into(),
        });
    }
    // Unit pivot at (1,2).
    let mut w = match unit_to_b12(a) {
        Some(p) => p,
        None => lr_form(ring, a)?.witness,
    };
    let mut b = w.apply(a);
    let u = b[(0, 1)].clone();
    if !u.is_unit() {
        return Err(Error::Internal("pivot is not a unit".into()));
    }
    let u_inv = u.unit_inv();
    // a_{n2} = 1, then a_{11} = 0.
    let alpha = (ring.one() - b[(n - 1, 1)].clone()) * u_inv.clone();
    let s1 = transvection(n, n - 1, 0, &alpha);
    b = s1.apply(&b);
    w = w.then(&s1);
    let beta = b[(0, 0)].clone() * u_inv;
    let s2 = transvection(n, 1, 0, &beta);
    b = s2.apply(&b);
    w = w.then(&s2);
    debug_assert!(b[(0, 0)].is_zero() && b[(n - 1, 1)].is_one());
    let trailing = b.submatrix(1, n, 1, n);
    let q = zero_diag_unit(ring, &trailing)?;
    let lift = SimilarityWitness {
        g: direct_sum_identity(1, &q.g),
        g_inv: direct_sum_identity(1, &q.g_inv),
    };
    Ok(w.then(&lift))
}

/// Similar matrix with zero diagonal.
///
/// The content `m` of `a` is divided out first; the quotient must be
/// non-scalar modulo every prime, otherwise the offending prime is reported.
pub fn zero_diagonal_form<R: Pid>(
    ring: &R,
    a: &Matrix<R::Elem>,
) -> Result<(Matrix<R::Elem>, SimilarityWitness<R::Elem>)> {
    let n = a.n();
    let z = ring.zero();
    if !a.trace().is_zero() {
        return Err(Error::Precondition("zero_diagonal_form needs trace zero".into()));
    }
    if (0..n).all(|i| a[(i, i)].is_zero()) {
        return Ok((a.clone(), SimilarityWitness::identity(n, &z)));
    }
    let m = a.content();
    let a1 = a.exact_div(&m)?;
    let g = a1.scalar_defect_generator();
    if !g.is_unit() {
        let culprit = if g.is_zero() {
            None
        } else {
            let fac = ring.factor(&g)?;
            fac.factors
                .iter()
                .map(|(p, _)| p.value.clone())
                .find(|p| in_prime(&g, p))
        };
        return Err(Error::NotApplicable {
            prime: culprit.as_ref().map(|p| p.to_string()),
            reason: match &culprit {
                Some(p) => format!("A/content is congruent to a nonzero scalar modulo {p}"),
                None => "A is a nonzero scalar matrix".into(),
            },
        });
    }
    let w = zero_diag_unit(ring, &a1)?;
    let b = w.apply(a);
    if (0..n).any(|i| !b[(i, i)].is_zero()) {
        return Err(Error::Internal("diagonal not cleared".into()));
    }
    Ok((b, w))
}
