//! Gathering the off-diagonal entries of a row or column into one position.

use crate::error::{Error, Result};
use crate::matrix::{Matrix, SimilarityWitness};
use crate::ring::{egcd, exact_div, EuclidElem};

/// Unimodular `2x2` block embedded at `(t, j)`.
fn embed2<E: EuclidElem>(n: usize, t: usize, j: usize, m: [[E; 2]; 2], template: &E) -> Matrix<E> {
    let mut g = Matrix::identity(n, template);
    let [[a, b], [c, d]] = m;
    g[(t, t)] = a;
    g[(t, j)] = b;
    g[(j, t)] = c;
    g[(j, j)] = d;
    g
}

/// Conjugations by column operations on `(t, j)` that move the gcd of
/// `b[r][t], b[r][j]` to `(r, t)` and zero `(r, j)`, for each `j` in `js`.
pub(crate) fn gather_row<E: EuclidElem>(
    b: &Matrix<E>,
    r: usize,
    t: usize,
    js: &[usize],
) -> Result<(Matrix<E>, SimilarityWitness<E>)> {
    let n = b.n();
    let z = b.zero_elem();
    let mut cur = b.clone();
    let mut w = SimilarityWitness::identity(n, &z);
    for &j in js {
        debug_assert!(j != r && j != t && t != r);
        if cur[(r, j)].is_zero() {
            continue;
        }
        let (at, aj) = (cur[(r, t)].clone(), cur[(r, j)].clone());
        let (g, s, u) = egcd(&at, &aj)?;
        let v = embed2(
            n,
            t,
            j,
            [[s.clone(), -exact_div(&aj, &g)?], [u.clone(), exact_div(&at, &g)?]],
            &z,
        );
        let v_inv = embed2(n, t, j, [[exact_div(&at, &g)?, exact_div(&aj, &g)?], [-u, s]], &z);
        // B -> V^{-1} B V, so the witness matrix is V^{-1}.
        let step = SimilarityWitness { g: v_inv, g_inv: v };
        cur = step.apply(&cur);
        w = w.then(&step);
        debug_assert!(cur[(r, j)].is_zero() && cur[(r, t)] == g);
    }
    Ok((cur, w))
}

/// Row operations on `(t, i)` that move the gcd of `b[t][c], b[i][c]` to
/// `(t, c)` and zero `(i, c)`, for each `i` in `is`.
pub(crate) fn gather_col<E: EuclidElem>(
    b: &Matrix<E>,
    c: usize,
    t: usize,
    is: &[usize],
) -> Result<(Matrix<E>, SimilarityWitness<E>)> {
    let n = b.n();
    let z = b.zero_elem();
    let mut cur = b.clone();
    let mut w = SimilarityWitness::identity(n, &z);
    for &i in is {
        debug_assert!(i != c && i != t && t != c);
        if cur[(i, c)].is_zero() {
            continue;
        }
        let (at, ai) = (cur[(t, c)].clone(), cur[(i, c)].clone());
        let (g, s, u) = egcd(&at, &ai)?;
        let a1 = exact_div(&at, &g)?;
        let i1 = exact_div(&ai, &g)?;
        let m = embed2(n, t, i, [[s.clone(), u.clone()], [-i1.clone(), a1.clone()]], &z);
        let m_inv = embed2(n, t, i, [[a1, -u], [i1, s]], &z);
        let step = SimilarityWitness { g: m, g_inv: m_inv };
        cur = step.apply(&cur);
        w = w.then(&step);
        debug_assert!(cur[(i, c)].is_zero() && cur[(t, c)] == g);
    }
    Ok((cur, w))
}

fn check_n<E: EuclidElem>(a: &Matrix<E>, what: &str) -> Result<()> {
    if a.n() < 3 {
        return Err(Error::Precondition(format!("{what} needs n >= 3, got n = {}", a.n())));
    }
    Ok(())
}

/// Similar matrix whose row `u` (0-based) has off-diagonal part `(r, 0, ..., 0)`,
/// with `r` at column 1 when `u = 0` and at column 0 otherwise.
pub fn row_reduce<E: EuclidElem>(a: &Matrix<E>, u: usize) -> Result<(Matrix<E>, SimilarityWitness<E>)> {
    check_n(a, "row_reduce")?;
    let t = if u == 0 { 1 } else { 0 };
    let js: Vec<usize> = (0..a.n()).filter(|&j| j != u && j != t).collect();
    gather_row(a, u, t, &js)
}

/// Similar matrix whose column `v` (0-based) has off-diagonal part gathered
/// at row 1 when `v = 0` and at row 0 otherwise.
pub fn col_reduce<E: EuclidElem>(a: &Matrix<E>, v: usize) -> Result<(Matrix<E>, SimilarityWitness<E>)> {
    check_n(a, "col_reduce")?;
    let t = if v == 0 { 1 } else { 0 };
    let is: Vec<usize> = (0..a.n()).filter(|&i| i != v && i != t).collect();
    gather_col(a, v, t, &is)
}

/// Shrinks entries below the superdiagonal in columns `1..=last_col` by
/// conjugations `1 + lambda E_{r,c-1}`, reducing `b[r][c]` modulo the
/// superdiagonal entry `b[c-1][c]`. Rows `0..=last_col - 1` must already have
/// zeros beyond the superdiagonal; that band and the superdiagonal are kept.
pub(crate) fn band_reduce<E: EuclidElem>(b: &Matrix<E>, last_col: usize) -> (Matrix<E>, SimilarityWitness<E>) {
    let n = b.n();
    let mut cur = b.clone();
    let mut g = Matrix::identity(n, &b.zero_elem());
    let mut g_inv = g.clone();
    for c in (1..=last_col.min(n - 1)).rev() {
        let s = cur[(c - 1, c)].clone();
        if s.is_zero() {
            continue;
        }
        for r in c + 1..n {
            let lambda = -cur[(r, c)].div_rem(&s).0;
            if lambda.is_zero() {
                continue;
            }
            // Row r += lambda row (c-1), then column (c-1) -= lambda column r.
            for k in 0..n {
                let v = cur[(c - 1, k)].clone() * lambda.clone();
                cur[(r, k)] = cur[(r, k)].clone() + v;
                let v = g[(c - 1, k)].clone() * lambda.clone();
                g[(r, k)] = g[(r, k)].clone() + v;
            }
            for k in 0..n {
                let v = cur[(k, r)].clone() * lambda.clone();
                cur[(k, c - 1)] = cur[(k, c - 1)].clone() - v;
                let v = g_inv[(k, r)].clone() * lambda.clone();
                g_inv[(k, c - 1)] = g_inv[(k, c - 1)].clone() - v;
            }
        }
    }
    (cur, SimilarityWitness { g, g_inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z(rows: &[&[i64]]) -> Matrix<BigInt> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn row_one_gcd() {
        let a = z(&[&[7, 4, 6], &[1, 2, 3], &[5, -1, 8]]);
        let (b, w) = row_reduce(&a, 0).unwrap();
        w.verify(&a, &b).unwrap();
        assert_eq!(b[(0, 0)], BigInt::from(7));
        assert_eq!(b[(0, 1)], BigInt::from(2));
        assert_eq!(b[(0, 2)], BigInt::from(0));
    }

    #[test]
    fn trivial_rows_and_columns() {
        let a = z(&[&[7, 3, 0], &[1, 2, 3], &[5, -1, 8]]);
        let (b, w) = row_reduce(&a, 0).unwrap();
        assert_eq!(b, a);
        assert!(w.g.is_identity());
        let d = z(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(col_reduce(&d, 1).unwrap().0, d);
        assert!(row_reduce(&z(&[&[1, 2], &[3, 4]]), 0).is_err());
    }

    #[test]
    fn column_two_gcd() {
        let a = z(&[&[1, 4, 0], &[1, 2, 3], &[5, 6, 8]]);
        let (b, w) = col_reduce(&a, 1).unwrap();
        w.verify(&a, &b).unwrap();
        assert_eq!(b[(0, 1)], BigInt::from(2));
        assert_eq!(b[(2, 1)], BigInt::from(0));
    }

    #[test]
    fn other_rows_and_columns() {
        let a = z(&[&[1, 4, 9], &[6, 2, 10], &[5, 15, 8]]);
        let (b, w) = row_reduce(&a, 1).unwrap();
        w.verify(&a, &b).unwrap();
        assert_eq!(b[(1, 0)], BigInt::from(2));
        assert_eq!(b[(1, 2)], BigInt::from(0));
        let (c, w) = col_reduce(&a, 0).unwrap();
        w.verify(&a, &c).unwrap();
        assert_eq!(c[(1, 0)], BigInt::from(1));
        assert_eq!(c[(2, 0)], BigInt::from(0));
        let (d, w) = col_reduce(&a, 2).unwrap();
        w.verify(&a, &d).unwrap();
        assert_eq!(d[(0, 2)], BigInt::from(1));
        assert_eq!(d[(1, 2)], BigInt::from(0));
    }

    #[test]
    fn band_reduce_keeps_band() {
        let a = z(&[&[1, 3, 0, 0], &[40, 5, 4, 0], &[-17, 23, 9, 7], &[8, 100, -61, 2]]);
        let (b, w) = band_reduce(&a, 3);
        w.verify(&a, &b).unwrap();
        for i in 0..4 {
            if i < 3 {
                assert_eq!(b[(i, i + 1)], a[(i, i + 1)]);
            }
            for j in i + 2..4 {
                assert_eq!(b[(i, j)], BigInt::from(0));
            }
        }
        for c in 1..4 {
            for r in c + 1..4 {
                assert!(b[(r, c)].magnitude() < a[(c - 1, c)].magnitude());
            }
        }
    }
}
