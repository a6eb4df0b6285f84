//! Making the `(1,2)` entry a unit modulo finitely many primes.

use crate::error::{Error, Result};
use crate::matrix::{det, inverse_field, reduce_matrix, sl_lift, Matrix, SimilarityWitness};
use crate::ring::{FieldElem, Pid, PrimeElement, Ring, RingElem};

fn independent<F: FieldElem>(u: &[F], v: &[F]) -> bool {
    // u, v independent iff some 2x2 minor is nonzero.
    let n = u.len();
    (0..n).any(|i| (i + 1..n).any(|j| !(u[i].clone() * v[j].clone() - u[j].clone() * v[i].clone()).is_zero()))
}

/// An `SL_n` matrix `g` over a field with `(g A g^{-1})_{12} != 0`, for non-scalar `a`.
pub(crate) fn b12_target<F: FieldElem>(a: &Matrix<F>) -> Option<Matrix<F>> {
    let n = a.n();
    let z = a.zero_elem();
    let e = |i: usize| {
        (0..n)
            .map(|k| if k == i { z.one_like() } else { z.clone() })
            .collect::<Vec<F>>()
    };
    let mut candidates: Vec<Vec<F>> = (0..n).map(e).collect();
    for i in 0..n {
        for j in i + 1..n {
            candidates.push(e(i).into_iter().zip(e(j)).map(|(x, y)| x + y).collect());
        }
    }
    let u = candidates.into_iter().find(|u| independent(u, &a.mul_vec(u)))?;
    let au = a.mul_vec(&u);
    // Columns t_1 = Au, t_2 = u, completed by standard vectors.
    let mut cols = vec![au, u];
    for i in 0..n {
        if cols.len() == n {
            break;
        }
        let mut trial = cols.clone();
        trial.push(e(i));
        let m = Matrix::from_columns(&trial);
        if crate::matrix::rank(&m) == trial.len() {
            cols = trial;
        }
    }
    let last = cols.len() - 1;
    let d = det(&Matrix::from_columns(&cols));
    let dinv = d.inv()?;
    cols[last] = cols[last].iter().map(|x| x.clone() * dinv.clone()).collect();
    let t = Matrix::from_columns(&cols);
    let g = inverse_field(&t)?;
    Some(g)
}

/// Conjugates `a` so that its `(1,2)` entry lies outside every prime of `s`.
pub fn make_b12_nonzero_mod<R: Pid>(
    ring: &R,
    a: &Matrix<R::Elem>,
    s: &[PrimeElement<R::Elem>],
) -> Result<(Matrix<R::Elem>, SimilarityWitness<R::Elem>)> {
    let n = a.n();
    let z = ring.zero();
    let mut targets = Vec::new();
    let mut primes = Vec::new();
    for p in s {
        let field = ring.residue_field(&p.value);
        let ap = reduce_matrix(&field, a);
        if ap.is_scalar() {
            return Err(Error::Precondition(format!("matrix is scalar modulo {}", p.value)));
        }
        if !ap[(0, 1)].is_zero() {
            continue;
        }
        let g = b12_target(&ap).ok_or_else(|| Error::Internal("no cyclic pair found".into()))?;
        debug_assert!(!(&(&g * &ap) * &inverse_field(&g).unwrap())[(0, 1)].is_zero());
        targets.push(g);
        primes.push(p.clone());
    }
    if primes.is_empty() {
        return Ok((a.clone(), SimilarityWitness::identity(n, &z)));
    }
    // Primes already fine take the identity target.
    for p in s {
        if !primes.contains(p) {
            let field = ring.residue_field(&p.value);
            targets.push(Matrix::identity(n, &field.one()));
            primes.push(p.clone());
        }
    }
    let w = sl_lift(ring, n, &targets, &primes)?;
    let b = w.apply(a);
    for p in s {
        if crate::ring::in_prime(&b[(0, 1)], &p.value) {
            return Err(Error::Internal(format!("b12 still in ({}) after lifting", p.value)));
        }
    }
    Ok((b, w))
}
