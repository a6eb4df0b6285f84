//! Writing trace-zero matrices as commutators `XY - YX`.

mod clear;
mod field;
mod main;
mod n2;
mod n3;
mod quotient;

pub use clear::{clear_denominators, descend, Descent};
pub use field::field_commutator;
pub use main::{
    centralizer_extras, conjugated_template, decompose, decompose_with_state, kappa, main_template,
    subregular_dimensions, MainBranch, MainDecompositionState,
};
pub use n2::decompose_2x2;
pub use n3::{decompose_3x3_regular, RegularX3};
pub use quotient::decompose_mod_n;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::RingElem;

/// `X` and `Y` with `[X, Y] = A`, plus the branch decisions taken.
#[derive(Clone, Debug)]
pub struct CommutatorWitness<E> {
    pub x: Matrix<E>,
    pub y: Matrix<E>,
    pub log: Vec<String>,
}

impl<E: RingElem> CommutatorWitness<E> {
    pub fn new(x: Matrix<E>, y: Matrix<E>) -> Self {
        CommutatorWitness { x, y, log: Vec::new() }
    }

    pub fn with_log(mut self, entry: impl Into<String>) -> Self {
        self.log.push(entry.into());
        self
    }

    /// Recomputes `XY - YX` and compares it with `a` entrywise.
    pub fn verify(&self, a: &Matrix<E>) -> Result<()> {
        a.check_same_shape(&self.x)?;
        a.check_same_shape(&self.y)?;
        let c = self.x.commutator(&self.y);
        match c.first_difference(a) {
            None => Ok(()),
            Some((i, j)) => Err(Error::WitnessInvalid(format!(
                "[X, Y] differs from A at ({}, {}): {} vs {}",
                i + 1,
                j + 1,
                c[(i, j)],
                a[(i, j)]
            ))),
        }
    }

    /// Conjugates both matrices by `g^{-1}` on the left: `g^{-1} X g`.
    pub(crate) fn pull_back(self, g: &Matrix<E>, g_inv: &Matrix<E>) -> Self {
        CommutatorWitness {
            x: self.x.conjugate_by(g_inv, g),
            y: self.y.conjugate_by(g_inv, g),
            log: self.log,
        }
    }

    pub(crate) fn scale_y(mut self, d: &E) -> Self {
        self.y = self.y.scale(d);
        self
    }
}

/// Traces `Tr(X^r A)` for `r < n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport<E> {
    pub traces: Vec<E>,
    pub satisfied: bool,
}

impl<E: RingElem> CriterionReport<E> {
    /// First `r` with `Tr(X^r A) != 0`.
    pub fn first_failure(&self) -> Option<usize> {
        self.traces.iter().position(|t| !t.is_zero())
    }
}

pub fn criterion_check<E: RingElem>(x: &Matrix<E>, a: &Matrix<E>) -> Result<CriterionReport<E>> {
    x.check_same_shape(a)?;
    if !x.is_square() {
        return Err(Error::ShapeMismatch("criterion needs square matrices".into()));
    }
    let n = x.n();
    let mut traces = Vec::with_capacity(n);
    let mut p = a.clone();
    for _ in 0..n {
        traces.push(p.trace());
        p = x * &p;
    }
    let satisfied = traces.iter().all(RingElem::is_zero);
    Ok(CriterionReport { traces, satisfied })
}

/// `1`-based `c(A)`: the sum of the diagonal entries at even positions.
pub fn c_of<E: RingElem>(a: &Matrix<E>) -> E {
    (1..a.n())
        .step_by(2)
        .fold(a.zero_elem(), |acc, i| acc + a[(i, i)].clone())
}

pub(crate) fn require_trace_zero<E: RingElem>(a: &Matrix<E>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} matrix is not square",
            a.rows(),
            a.cols()
        )));
    }
    let t = a.trace();
    if t.is_zero() {
        Ok(())
    } else {
        Err(Error::Precondition(format!("trace is {t}, not zero")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regularity::p_n;
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
    fn criterion_holds_for_commutators() {
        let x = z(&[&[1, 2, 0], &[3, -1, 4], &[0, 5, 2]]);
        let y = z(&[&[0, 1, 7], &[2, 2, -3], &[1, 0, 1]]);
        let rep = criterion_check(&x, &x.commutator(&y)).unwrap();
        assert!(rep.satisfied);
        assert_eq!(rep.traces.len(), 3);
    }

    #[test]
    fn criterion_fails_at_zero_for_nonzero_trace() {
        let id = z(&[&[1, 0], &[0, 1]]);
        let a = z(&[&[1, 0], &[0, 0]]);
        let rep = criterion_check(&id, &a).unwrap();
        assert!(!rep.satisfied);
        assert_eq!(rep.first_failure(), Some(0));
    }

    #[test]
    fn criterion_against_p4_tracks_c() {
        let t = BigInt::from(0);
        let p4 = p_n(4, &t);
        // b_ij = 0 for j >= i + 2, c(A) = a22 + a44 = 3 - 3 = 0.
        let a = z(&[&[1, 2, 0, 0], &[4, 3, 5, 0], &[1, 2, -1, 7], &[3, 1, 2, -3]]);
        assert_eq!(c_of(&a), BigInt::from(0));
        assert!(criterion_check(&p4, &a).unwrap().satisfied);
        let b = z(&[&[1, 2, 0, 0], &[4, 3, 5, 0], &[1, 2, -2, 7], &[3, 1, 2, -2]]);
        let rep = criterion_check(&p4, &b).unwrap();
        assert!(rep.traces[1..].iter().all(|t| *t == c_of(&b)));
    }
}
