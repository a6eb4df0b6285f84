//! `3 x 3` decompositions whose `X` is regular modulo every prime.

use super::clear::solve_over_ring;
use super::{c_of, criterion_check, require_trace_zero, CommutatorWitness};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, SimilarityWitness};
use crate::regularity::jordan_block;
use crate::ring::{egcd, exact_div, gcd, Pid, RingElem};
use crate::similarity::lr_form;

/// A decomposition together with the normal-form data certifying that `X` is
/// regular modulo every prime.
#[derive(Clone, Debug)]
pub struct RegularX3<E> {
    pub witness: CommutatorWitness<E>,
    /// `X` in normal-form coordinates: `[[0,0,0],[x,-y,0],[q,z,0]]`.
    pub x_normal: Matrix<E>,
    /// `g` with `g A g^{-1}` the normal form; `X = g^{-1} x_normal g`.
    pub conjugator: SimilarityWitness<E>,
    pub y: E,
}

impl<E: RingElem> RegularX3<E> {
    /// `X (X + y) = E31` and `X^2 != 0` over the base ring.
    pub fn certificate_holds(&self) -> bool {
        let x = &self.x_normal;
        let shifted = x + &Matrix::scalar(3, &self.y);
        let e31 = Matrix::unit(3, 2, 0, &self.y.zero_like());
        &(x * &shifted) == &e31
    }
}

pub fn decompose_3x3_regular<R: Pid>(ring: &R, a: &Matrix<R::Elem>) -> Result<RegularX3<R::Elem>> {
    require_trace_zero(a)?;
    if a.n() != 3 {
        return Err(Error::Precondition(format!(
            "decompose_3x3_regular needs n = 3, got {}",
            a.n()
        )));
    }
    let zero = ring.zero();
    if a.is_scalar() {
        let x = jordan_block(3, &zero);
        let y_mat = solve_over_ring(ring, &x, a)?;
        let witness = CommutatorWitness::new(x.clone(), y_mat).with_log("scalar: X = J_3(0)");
        witness.verify(a)?;
        return Ok(RegularX3 {
            witness,
            x_normal: x,
            conjugator: SimilarityWitness::identity(3, &zero),
            y: zero,
        });
    }
    let lr = lr_form(ring, a)?;
    let b = &lr.b;
    let a12 = b[(0, 1)].clone();
    let a23p = exact_div(&b[(1, 2)], &a12)?;
    let c = c_of(b);
    let d = gcd(&a12, &c);
    let cd = exact_div(&c, &d)?;
    let a12d = exact_div(&a12, &d)?;
    // (c/d) z + (a12/d) q = 1
    let (g, z, q) = egcd(&cd, &a12d)?;
    if !g.is_one() {
        return Err(Error::Internal("c(A)/d and a12/d are not coprime".into()));
    }
    let h = ring.one() + a23p.clone() * z.clone() * z.clone();
    let x = h.clone() * cd - a23p * z.clone();
    let y = h * a12d;
    if !(x.clone() * z.clone() + q.clone() * y.clone()).is_one() {
        return Err(Error::Internal("xz + qy != 1".into()));
    }
    let xn = Matrix::from_rows(vec![
        vec![zero.clone(), zero.clone(), zero.clone()],
        vec![x.clone(), -y.clone(), zero.clone()],
        vec![q, z, zero.clone()],
    ])?;
    let rep = criterion_check(&xn, b)?;
    if !rep.satisfied {
        return Err(Error::Internal(format!(
            "Tr(X^r A) != 0 at r = {:?}",
            rep.first_failure()
        )));
    }
    let yn = solve_over_ring(ring, &xn, b)?;
    let witness = CommutatorWitness::new(xn.clone(), yn)
        .with_log(format!("regular X: x = {x}, y = {y}"))
        .pull_back(&lr.witness.g, &lr.witness.g_inv);
    witness.verify(a)?;
    let out = RegularX3 {
        witness,
        x_normal: xn,
        conjugator: lr.witness,
        y,
    };
    if !out.certificate_holds() {
        return Err(Error::Internal("X (X + y) != E31".into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regularity::is_regular_mod_prime;
    use crate::ring::Integers;
    use num_bigint::BigInt;

    #[test]
    fn nilpotent_pattern_regular_mod_small_primes() {
        let a = Matrix::from_rows(vec![
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(0)],
        ])
        .unwrap();
        let r = decompose_3x3_regular(&Integers, &a).unwrap();
        r.witness.verify(&a).unwrap();
        assert!(r.certificate_holds());
        for p in [2, 3, 5] {
            let p = crate::ring::Pid::prime_element(&Integers, BigInt::from(p));
            assert!(is_regular_mod_prime(&Integers, &r.witness.x, &p).regular);
        }
    }

    #[test]
    fn zero_matrix() {
        let a = Matrix::zeros(3, 3, &BigInt::from(0));
        let r = decompose_3x3_regular(&Integers, &a).unwrap();
        assert!(r.witness.y.is_zero());
    }
}
