use super::{char_poly, inverse_field, Matrix};
use crate::error::{Error, Result};
use crate::ring::{EuclidElem, FieldElem, RingElem};

/// Inverse of a matrix with unit determinant over a Euclidean domain, via
/// Cayley–Hamilton: `A^{-1} = -(A^{n-1} + c_{n-1}A^{n-2} + ... + c_1) / c_0`.
pub fn inverse_unimodular<E: EuclidElem>(a: &Matrix<E>) -> Result<Matrix<E>> {
    let cp = char_poly(a);
    let c0 = &cp[0];
    if !c0.is_unit() {
        return Err(Error::WitnessInvalid(format!("determinant {} is not a unit", c0)));
    }
    let adj = a.eval_poly(&cp[1..]);
    Ok(adj.scale(&-c0.unit_inv()))
}

/// An invertible `g` with its inverse, asserting `g A g^{-1} = B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimilarityWitness<E> {
    pub g: Matrix<E>,
    pub g_inv: Matrix<E>,
}

impl<E: RingElem> SimilarityWitness<E> {
    pub fn identity(n: usize, template: &E) -> Self {
        let g = Matrix::identity(n, template);
        SimilarityWitness { g_inv: g.clone(), g }
    }

    /// Pairs `g` with a claimed inverse, checking both products.
    pub fn from_pair(g: Matrix<E>, g_inv: Matrix<E>) -> Result<Self> {
        if !g.is_square() || g.n() != g_inv.n() {
            return Err(Error::ShapeMismatch(
                "witness matrices must be square of equal size".into(),
            ));
        }
        if !(&g * &g_inv).is_identity() || !(&g_inv * &g).is_identity() {
            return Err(Error::WitnessInvalid("g * g_inv is not the identity".into()));
        }
        Ok(SimilarityWitness { g, g_inv })
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    /// `g A g^{-1}`.
    pub fn apply(&self, a: &Matrix<E>) -> Matrix<E> {
        a.conjugate_by(&self.g, &self.g_inv)
    }

    /// `g^{-1} B g`.
    pub fn apply_inverse(&self, b: &Matrix<E>) -> Matrix<E> {
        b.conjugate_by(&self.g_inv, &self.g)
    }

    /// The witness for `self` followed by `next`.
    pub fn then(&self, next: &SimilarityWitness<E>) -> Self {
        SimilarityWitness {
            g: &next.g * &self.g,
            g_inv: &self.g_inv * &next.g_inv,
        }
    }

    pub fn inverse(&self) -> Self {
        SimilarityWitness {
            g: self.g_inv.clone(),
            g_inv: self.g.clone(),
        }
    }

    pub fn det(&self) -> E {
        super::det(&self.g)
    }

    /// Checks `g g^{-1} = 1` and `g A g^{-1} = B` exactly.
    pub fn verify(&self, a: &Matrix<E>, b: &Matrix<E>) -> Result<()> {
        if !(&self.g * &self.g_inv).is_identity() {
            return Err(Error::WitnessInvalid("g * g_inv is not the identity".into()));
        }
        let c = self.apply(a);
        match c.first_difference(b) {
            None => Ok(()),
            Some((i, j)) => Err(Error::WitnessInvalid(format!(
                "g A g^-1 differs from B at ({}, {}): {} vs {}",
                i + 1,
                j + 1,
                c[(i, j)],
                b[(i, j)]
            ))),
        }
    }

    pub fn map<F: RingElem>(&self, f: impl Fn(&E) -> F + Copy) -> SimilarityWitness<F> {
        SimilarityWitness {
            g: self.g.map(f),
            g_inv: self.g_inv.map(f),
        }
    }
}

impl<E: EuclidElem> SimilarityWitness<E> {
    /// Wraps `g`, computing its inverse; fails unless `det g` is a unit.
    pub fn from_unimodular(g: Matrix<E>) -> Result<Self> {
        let g_inv = inverse_unimodular(&g)?;
        Ok(SimilarityWitness { g, g_inv })
    }
}

impl<E: FieldElem> SimilarityWitness<E> {
    pub fn from_invertible(g: Matrix<E>) -> Result<Self> {
        let g_inv = inverse_field(&g).ok_or_else(|| Error::WitnessInvalid("conjugator is singular".into()))?;
        Ok(SimilarityWitness { g, g_inv })
    }
}
