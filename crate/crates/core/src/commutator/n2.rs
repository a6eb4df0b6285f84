//! The `2 x 2` case over a PID.

use super::clear::solve_over_ring;
use super::{require_trace_zero, CommutatorWitness};
use crate::error::{Error, Result};
use crate::matrix::{elementary, Matrix};
use crate::ring::{coprimify, egcd, gcd, EuclidElem, Pid, RingElem};

/// `X = [[0, 1], [x1, x2]]` with `b x1 - a x2 + c = 0`; needs `(a, b) = (1)`.
fn companion_solution<E: EuclidElem>(a: &E, b: &E, c: &E) -> Result<Matrix<E>> {
    // s b + t a = 1, so b (-c s) - a (c t) = -c.
    let (g, s, t) = egcd(b, a)?;
    if !g.is_one() {
        return Err(Error::Internal(format!("({a}, {b}) is not the unit ideal")));
    }
    let x1 = -(c.clone() * s);
    let x2 = c.clone() * t;
    Matrix::from_rows(vec![vec![a.zero_like(), a.one_like()], vec![x1, x2]])
}

/// Stripped case: `A = [[a, b], [c, -a]]` with `(a, b, c) = (1)`.
fn primitive<R: Pid>(ring: &R, a: &Matrix<R::Elem>, depth: u8) -> Result<CommutatorWitness<R::Elem>> {
    let (p, q, r) = (&a[(0, 0)], &a[(0, 1)], &a[(1, 0)]);
    if gcd(p, q).is_one() {
        let x = companion_solution(p, q, r)?;
        let y = solve_over_ring(ring, &x, a)?;
        return Ok(CommutatorWitness::new(x, y).with_log("n = 2: (a, b) = (1), companion X"));
    }
    if gcd(p, r).is_one() {
        let x = companion_solution(p, r, q)?.transpose();
        let y = solve_over_ring(ring, &x, a)?;
        return Ok(CommutatorWitness::new(x, y).with_log("n = 2: (a, c) = (1), transposed companion X"));
    }
    if depth > 0 {
        return Err(Error::Internal("coprimified matrix still has (a, b) != (1)".into()));
    }
    let t = coprimify(ring, p, q, r)?;
    let g = elementary(2, 0, 1, &t);
    let g_inv = elementary(2, 0, 1, &-t.clone());
    let inner = primitive(ring, &a.conjugate_by(&g, &g_inv), depth + 1)?;
    Ok(inner
        .pull_back(&g, &g_inv)
        .with_log(format!("n = 2: coprimified with T = 1 + ({t})E12")))
}

pub fn decompose_2x2<R: Pid>(ring: &R, a: &Matrix<R::Elem>) -> Result<CommutatorWitness<R::Elem>> {
    require_trace_zero(a)?;
    if a.n() != 2 {
        return Err(Error::Precondition(format!("decompose_2x2 needs n = 2, got {}", a.n())));
    }
    if a.is_zero() {
        return Ok(CommutatorWitness::new(a.zeros_like(), a.zeros_like()).with_log("A = 0"));
    }
    let d = a.content();
    let w = primitive(ring, &a.exact_div(&d)?, 0)?.scale_y(&d);
    w.verify(a)?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;
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
    fn diag_one_minus_one() {
        let a = z(&[&[1, 0], &[0, -1]]);
        let w = decompose_2x2(&Integers, &a).unwrap();
        assert_eq!(w.x, z(&[&[0, 1], &[0, 0]]));
        w.verify(&a).unwrap();
        assert_eq!(w.x.commutator(&z(&[&[0, 0], &[1, 0]])), a);
    }

    #[test]
    fn coprimify_branch() {
        let a = z(&[&[6, 10], &[15, -6]]);
        let w = decompose_2x2(&Integers, &a).unwrap();
        w.verify(&a).unwrap();
        assert!(w.log.iter().any(|l| l.contains("coprimified")));
    }

    #[test]
    fn zero_and_content() {
        let a = z(&[&[0, 0], &[0, 0]]);
        let w = decompose_2x2(&Integers, &a).unwrap();
        assert!(w.x.is_zero() && w.y.is_zero());
        let a = z(&[&[4, 8], &[12, -4]]);
        decompose_2x2(&Integers, &a).unwrap().verify(&a).unwrap();
    }

    #[test]
    fn transposed_branch() {
        let a = z(&[&[3, 6], &[5, -3]]);
        let w = decompose_2x2(&Integers, &a).unwrap();
        w.verify(&a).unwrap();
        assert!(w.log[0].contains("transposed"));
    }
}
