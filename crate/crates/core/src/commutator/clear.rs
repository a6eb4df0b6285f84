//! Turning a fraction-field solution of `[X, M] = A` into one over the base ring.

use crate::error::{Error, Result};
use crate::matrix::{
    common_denominator, embed_fractions, express_as_polynomial, reduce_matrix, scale_to_base,
    solve_commutator_equation, Matrix,
};
use crate::ring::{exact_div, EuclidElem, Frac, Pid, PrimeElement, ResidueMap};

/// Result of dividing primes out of `m` in `[X, C] = m A`.
#[derive(Clone, Debug)]
pub struct Descent<E> {
    pub c: Matrix<E>,
    pub m: E,
    /// Primes at which `C mod p` was not a polynomial in `X mod p`, with the
    /// exponent still present in `m`.
    pub stuck: Vec<(PrimeElement<E>, u32)>,
    pub steps: usize,
}

/// One division step: `C = f(X) + p C'` with `C'` returned.
pub(crate) fn descend_once<R: Pid>(
    ring: &R,
    x: &Matrix<R::Elem>,
    c: &Matrix<R::Elem>,
    p: &R::Elem,
) -> Result<Matrix<R::Elem>> {
    let field = ring.residue_field(p);
    let f = express_as_polynomial(&reduce_matrix(&field, c), &reduce_matrix(&field, x))?;
    let lifted: Vec<R::Elem> = f.iter().map(|a| field.lift(a)).collect();
    (c - &x.eval_poly(&lifted)).exact_div(p)
}

/// Given `[X, C] = m A` over the base ring, divides out of `m` every prime
/// at which `C` reduces to a polynomial in `X`.
pub fn descend<R: Pid>(ring: &R, x: &Matrix<R::Elem>, c: &Matrix<R::Elem>, m: &R::Elem) -> Result<Descent<R::Elem>> {
    let mut c = c.clone();
    let mut m = m.clone();
    let mut stuck = Vec::new();
    let mut steps = 0;
    for (p, e) in ring.factor(&m)?.factors {
        let mut left = e;
        while left > 0 {
            match descend_once(ring, x, &c, &p.value) {
                Ok(next) => {
                    c = next;
                    m = exact_div(&m, &p.value)?;
                    left -= 1;
                    steps += 1;
                }
                Err(Error::NotInCentralizer(_)) => break,
                Err(e) => return Err(e),
            }
        }
        if left > 0 {
            stuck.push((p, left));
        }
    }
    Ok(Descent { c, m, stuck, steps })
}

/// Returns `Y` over the base ring with `[X, Y] = [X, M]`.
pub fn clear_denominators<R: Pid>(ring: &R, x: &Matrix<R::Elem>, m: &Matrix<Frac<R::Elem>>) -> Result<Matrix<R::Elem>> {
    x.check_same_shape(&m.map(|a| a.num().clone()))?;
    let xf = x.map(|a| Frac::from_base(a.clone()));
    let target = xf.commutator(m);
    let a = crate::matrix::to_base(&target)
        .ok_or_else(|| Error::Precondition("[X, M] is not defined over the base ring".into()))?;
    let d = common_denominator(m);
    let c = scale_to_base(m, &d)?;
    let out = descend(ring, x, &c, &d)?;
    if let Some((p, _)) = out.stuck.first() {
        return Err(Error::NotApplicable {
            prime: Some(p.value.to_string()),
            reason: "X is not regular modulo this prime, so C is not a polynomial in X there".into(),
        });
    }
    let y = out.c.scale(&out.m.unit_inv());
    if x.commutator(&y) != a {
        return Err(Error::Internal("cleared matrix changes the commutator".into()));
    }
    Ok(y)
}

/// Solves `[X, M] = A` over the fraction field and clears denominators.
pub(crate) fn solve_over_ring<R: Pid>(ring: &R, x: &Matrix<R::Elem>, a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let m = solve_commutator_equation(&embed_fractions(x), &embed_fractions(a))?;
    clear_denominators(ring, x, &m)
}
