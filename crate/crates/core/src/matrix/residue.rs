//! Moving matrices between a PID, its residue fields and its fraction field.

use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::{exact_div, lcm, EuclidElem, Frac, ResidueMap};

pub fn reduce_matrix<E, F>(field: &F, m: &Matrix<E>) -> Matrix<F::Target>
where
    E: EuclidElem,
    F: ResidueMap<E>,
{
    m.map(|a| field.reduce(a))
}

pub fn lift_matrix<E, F>(field: &F, m: &Matrix<F::Target>) -> Matrix<E>
where
    E: EuclidElem,
    F: ResidueMap<E>,
{
    m.map(|a| field.lift(a))
}

pub fn embed_fractions<E: EuclidElem>(m: &Matrix<E>) -> Matrix<Frac<E>> {
    m.map(|a| Frac::from_base(a.clone()))
}

/// Least common denominator of the entries.
pub fn common_denominator<E: EuclidElem>(m: &Matrix<Frac<E>>) -> E {
    m.entries()
        .iter()
        .fold(m.entries()[0].den().one_like(), |acc, a| lcm(&acc, a.den()))
}

/// `d * m` as a matrix over the base ring; `d` must clear every denominator.
pub fn scale_to_base<E: EuclidElem>(m: &Matrix<Frac<E>>, d: &E) -> Result<Matrix<E>> {
    m.try_map(|a| {
        let q = exact_div(d, a.den())
            .map_err(|_| Error::Internal(format!("{d} does not clear denominator {}", a.den())))?;
        Ok(a.num().clone() * q)
    })
}

/// The matrix over the base ring, if every entry is integral.
pub fn to_base<E: EuclidElem>(m: &Matrix<Frac<E>>) -> Option<Matrix<E>> {
    if m.entries().iter().all(|a| a.den().is_one()) {
        Some(m.map(|a| a.num().clone()))
    } else {
        None
    }
}
