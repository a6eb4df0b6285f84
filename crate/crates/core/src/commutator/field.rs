//! Commutators over a field with a regular first factor.

use super::{c_of, criterion_check, require_trace_zero, CommutatorWitness};
use crate::error::{Error, Result};
use crate::matrix::{elementary, frobenius_form, solve_commutator_equation, Matrix};
use crate::regularity::{is_regular_field, jordan_block, p_n};
use crate::ring::FieldElem;

/// `A = [X, Y]` with `X` regular: `X` is conjugate to `P_n`, or `X = J_n(0)`
/// when `A` is scalar.
pub fn field_commutator<F: FieldElem>(a: &Matrix<F>) -> Result<CommutatorWitness<F>> {
    require_trace_zero(a)?;
    let n = a.n();
    let zero = a.zero_elem();
    if n == 1 {
        return Ok(CommutatorWitness::new(a.zeros_like(), a.zeros_like()).with_log("n = 1"));
    }
    let w = if a.is_scalar() {
        let x = jordan_block(n, &zero);
        let y = solve_commutator_equation(&x, a)?;
        CommutatorWitness::new(x, y).with_log("scalar: X = J_n(0)")
    } else {
        let ff = frobenius_form(a);
        let b = &ff.form;
        if !b[(0, 1)].is_one() {
            return Err(Error::Internal("leading Frobenius block has size 1".into()));
        }
        let c = c_of(b);
        let z = elementary(n, 1, 0, &c);
        let z_inv = elementary(n, 1, 0, &-c.clone());
        let b1 = b.conjugate_by(&z_inv, &z);
        let pn = p_n(n, &zero);
        let report = criterion_check(&pn, &b1)?;
        if !report.satisfied {
            return Err(Error::Internal(format!(
                "criterion against P_n fails at r = {:?}",
                report.first_failure()
            )));
        }
        let y1 = solve_commutator_equation(&pn, &b1)?;
        // B = [z P_n z^{-1}, z Y1 z^{-1}], A = g^{-1} B g.
        let back_g = &ff.witness.g_inv * &z;
        let back_g_inv = &z_inv * &ff.witness.g;
        CommutatorWitness::new(
            pn.conjugate_by(&back_g, &back_g_inv),
            y1.conjugate_by(&back_g, &back_g_inv),
        )
        .with_log(format!("non-scalar: X conjugate to P_n, c(B) = {c}"))
    };
    if !is_regular_field(&w.x).regular {
        return Err(Error::Internal("X is not regular".into()));
    }
    w.verify(a)?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Frac, IntegersMod, Ring};
    use num_bigint::{BigInt, BigUint};

    #[test]
    fn identity_over_f2() {
        let f = IntegersMod::new(BigUint::from(2u32));
        let a = Matrix::identity(2, &f.one());
        let w = field_commutator(&a).unwrap();
        assert_eq!(w.x, jordan_block(2, &f.zero()));
        w.verify(&a).unwrap();
        let e12 = Matrix::unit(2, 0, 1, &f.zero());
        assert_eq!(w.x.commutator(&e12), a);
    }

    #[test]
    fn diag_one_minus_one_over_q() {
        let q = |v: i64| Frac::from_base(BigInt::from(v));
        let a = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(0), q(-1)]]).unwrap();
        field_commutator(&a).unwrap().verify(&a).unwrap();
    }

    #[test]
    fn nonzero_trace_is_rejected() {
        let f = IntegersMod::new(BigUint::from(5u32));
        let a = Matrix::identity(2, &f.one());
        assert!(matches!(field_commutator(&a), Err(Error::Precondition(_))));
    }
}
