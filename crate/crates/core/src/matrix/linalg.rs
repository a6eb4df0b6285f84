//! Gaussian elimination over fields. Pivots are the first nonzero entry in
//! column order; free variables are set to zero.

use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::FieldElem;

/// Reduced row echelon form and the pivot columns.
pub fn rref<E: FieldElem>(m: &Matrix<E>) -> (Matrix<E>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let t = a[(p, j)].clone();
                a[(p, j)] = a[(r, j)].clone();
                a[(r, j)] = t;
            }
        }
        let inv = a[(r, c)].inv().expect("nonzero pivot in a field");
        for j in c..cols {
            a[(r, j)] = a[(r, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for j in c..cols {
                if !a[(r, j)].is_zero() {
                    a[(i, j)] = a[(i, j)].clone() - f.clone() * a[(r, j)].clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank<E: FieldElem>(m: &Matrix<E>) -> usize {
    rref(m).1.len()
}

/// A basis of `{v : m v = 0}`, one vector per free column, in reduced form.
pub fn nullspace<E: FieldElem>(m: &Matrix<E>) -> Vec<Vec<E>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    let zero = m.zero_elem();
    let one = m.one_elem();
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![zero.clone(); cols];
        v[free] = one.clone();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -r[(row, free)].clone();
        }
        basis.push(v);
    }
    basis
}

/// A solution of `a x = b`, or `None` if the system is inconsistent.
pub fn solve<E: FieldElem>(a: &Matrix<E>, b: &[E]) -> Option<Vec<E>> {
    assert_eq!(a.rows(), b.len());
    let cols = a.cols();
    let aug = Matrix::from_fn(a.rows(), cols + 1, |i, j| {
        if j < cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![a.zero_elem(); cols];
    for (row, &pc) in pivots.iter().enumerate() {
        x[pc] = r[(row, cols)].clone();
    }
    Some(x)
}

pub fn inverse_field<E: FieldElem>(m: &Matrix<E>) -> Option<Matrix<E>> {
    let n = m.n();
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            m.one_elem()
        } else {
            m.zero_elem()
        }
    });
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.submatrix(0, n, n, 2 * n))
}

/// Coefficient matrix of `Q -> [X, Q]` on row-major vectorized `Q`.
pub(crate) fn ad_operator<E: FieldElem>(x: &Matrix<E>) -> Matrix<E> {
    let n = x.n();
    let mut m = Matrix::zeros(n * n, n * n, &x.zero_elem());
    for i in 0..n {
        for j in 0..n {
            let row = i * n + j;
            for k in 0..n {
                // (XQ)_ij = sum_k X_ik Q_kj
                let c = k * n + j;
                m[(row, c)] = m[(row, c)].clone() + x[(i, k)].clone();
                // (QX)_ij = sum_k Q_ik X_kj
                let c = i * n + k;
                m[(row, c)] = m[(row, c)].clone() - x[(k, j)].clone();
            }
        }
    }
    m
}

/// Solves `[X, Q] = A` over a field.
pub fn solve_commutator_equation<E: FieldElem>(x: &Matrix<E>, a: &Matrix<E>) -> Result<Matrix<E>> {
    x.check_same_shape(a)?;
    let n = x.n();
    let op = ad_operator(x);
    let sol =
        solve(&op, a.entries()).ok_or_else(|| Error::CriterionViolation("A is not in the image of ad(X)".into()))?;
    Ok(Matrix::from_fn(n, n, |i, j| sol[i * n + j].clone()))
}

/// Coefficients `f_0..f_{n-1}` with `sum f_i X^i = C`.
pub fn express_as_polynomial<E: FieldElem>(c: &Matrix<E>, x: &Matrix<E>) -> Result<Vec<E>> {
    c.check_same_shape(x)?;
    let n = x.n();
    let mut powers = vec![x.identity_like()];
    for i in 1..n {
        powers.push(&powers[i - 1] * x);
    }
    let sys = Matrix::from_fn(n * n, n, |r, k| powers[k].entries()[r].clone());
    solve(&sys, c.entries()).ok_or_else(|| Error::NotInCentralizer("C is not a polynomial in X".into()))
}
