//! Dense matrices over the coefficient rings and the linear algebra built on them.

mod charpoly;
mod crt;
mod elementary;
mod frobenius;
mod linalg;
mod residue;
mod sl_lift;
mod witness;

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{EuclidElem, RingElem};

pub use charpoly::{char_poly, det};
pub use crt::mat_crt;
pub use elementary::{block_diag, direct_sum_identity, elementary, m_embed, permutation, swap_perm};
pub(crate) use frobenius::maximal_vector as frobenius_maximal_vector;
pub use frobenius::{companion, frobenius_form, FrobeniusForm};
pub(crate) use linalg::ad_operator as linalg_ad_operator;
pub use linalg::{express_as_polynomial, inverse_field, nullspace, rank, rref, solve, solve_commutator_equation};
pub use residue::{common_denominator, embed_fractions, lift_matrix, reduce_matrix, scale_to_base, to_base};
pub use sl_lift::sl_lift;
pub use witness::{inverse_unimodular, SimilarityWitness};

/// A dense row-major matrix. Every matrix has at least one entry, which is
/// used as a template when zeros or ones of the same ring are needed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: RingElem> Matrix<E> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        assert!(rows > 0 && cols > 0, "matrices must be nonempty");
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r == 0 || c == 0 || rows.iter().any(|row| row.len() != c) {
            return Err(Error::ShapeMismatch("rows must be nonempty and of equal length".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(cols: &[Vec<E>]) -> Self {
        Matrix::from_fn(cols[0].len(), cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn zeros(rows: usize, cols: usize, template: &E) -> Self {
        let z = template.zero_like();
        Matrix::from_fn(rows, cols, |_, _| z.clone())
    }

    pub fn identity(n: usize, template: &E) -> Self {
        let z = template.zero_like();
        let o = template.one_like();
        Matrix::from_fn(n, n, |i, j| if i == j { o.clone() } else { z.clone() })
    }

    pub fn scalar(n: usize, a: &E) -> Self {
        let z = a.zero_like();
        Matrix::from_fn(n, n, |i, j| if i == j { a.clone() } else { z.clone() })
    }

    /// The matrix unit `E_ij` (zero-based).
    pub fn unit(n: usize, i: usize, j: usize, template: &E) -> Self {
        let mut m = Matrix::zeros(n, n, template);
        m[(i, j)] = template.one_like();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Side length of a square matrix.
    pub fn n(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn zero_elem(&self) -> E {
        self.data[0].zero_like()
    }

    pub fn one_elem(&self) -> E {
        self.data[0].one_like()
    }

    pub fn zeros_like(&self) -> Self {
        Matrix::zeros(self.rows, self.cols, &self.data[0])
    }

    pub fn identity_like(&self) -> Self {
        Matrix::identity(self.rows, &self.data[0])
    }

    pub fn map<F: RingElem>(&self, f: impl Fn(&E) -> F) -> Matrix<F> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<F: RingElem>(&self, f: impl Fn(&E) -> Result<F>) -> Result<Matrix<F>> {
        let data = self.data.iter().map(f).collect::<Result<Vec<F>>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn trace(&self) -> E {
        (0..self.rows.min(self.cols)).fold(self.zero_elem(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn scale(&self, c: &E) -> Self {
        self.map(|a| c.clone() * a.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(RingElem::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)].is_one()
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    /// True if the matrix equals `a * 1` for some `a`.
    pub fn is_scalar(&self) -> bool {
        let a = &self[(0, 0)];
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self[(i, j)] == *a
                    } else {
                        self[(i, j)].is_zero()
                    }
                })
            })
    }

    pub fn mul_vec(&self, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(self.zero_elem(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = self.identity_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `[self, other] = self*other - other*self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Conjugation `g * self * g_inv`.
    pub fn conjugate_by(&self, g: &Self, g_inv: &Self) -> Self {
        &(g * self) * g_inv
    }

    /// The sub-block with rows `r0..r1` and columns `c0..c1`.
    pub fn submatrix(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Matrix::from_fn(r1 - r0, c1 - c0, |i, j| self[(r0 + i, c0 + j)].clone())
    }

    /// Evaluates `sum c_i self^i` for a coefficient list, low degree first.
    pub fn eval_poly(&self, coeffs: &[E]) -> Self {
        let mut acc = self.zeros_like();
        for c in coeffs.iter().rev() {
            acc = &(&acc * self) + &Matrix::scalar(self.rows, c);
        }
        acc
    }

    /// Position of the first entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|i| (0..self.cols).map(move |j| (i, j)))
            .find(|&(i, j)| self[(i, j)] != other[(i, j)])
    }

    pub fn check_same_shape(&self, other: &Self) -> Result<()> {
        if self.rows == other.rows && self.cols == other.cols {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )))
        }
    }
}

impl<E: EuclidElem> Matrix<E> {
    /// Generator of the scalar-defect ideal `I(A)`: off-diagonal entries and
    /// diagonal differences.
    pub fn scalar_defect_generator(&self) -> E {
        let n = self.n();
        let mut g = self.zero_elem();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    g = crate::ring::gcd(&g, &self[(i, j)]);
                }
            }
            g = crate::ring::gcd(&g, &(self[(i, i)].clone() - self[(0, 0)].clone()));
        }
        g
    }

    /// Generator of the ideal of all entries.
    pub fn content(&self) -> E {
        self.data.iter().fold(self.zero_elem(), |g, a| crate::ring::gcd(&g, a))
    }

    /// Exact entrywise division.
    pub fn exact_div(&self, d: &E) -> Result<Self> {
        self.try_map(|a| crate::ring::exact_div(a, d))
    }
}

impl<E> Index<(usize, usize)> for Matrix<E> {
    type Output = E;
    fn index(&self, (i, j): (usize, usize)) -> &E {
        &self.data[i * self.cols + j]
    }
}

impl<E> IndexMut<(usize, usize)> for Matrix<E> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut E {
        &mut self.data[i * self.cols + j]
    }
}

impl<E: RingElem> Add for &Matrix<E> {
    type Output = Matrix<E>;
    fn add(self, rhs: &Matrix<E>) -> Matrix<E> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch in add");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<E: RingElem> Sub for &Matrix<E> {
    type Output = Matrix<E>;
    fn sub(self, rhs: &Matrix<E>) -> Matrix<E> {
        assert!(self.rows == rhs.rows && self.cols == rhs.cols, "shape mismatch in sub");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

impl<E: RingElem> Mul for &Matrix<E> {
    type Output = Matrix<E>;
    fn mul(self, rhs: &Matrix<E>) -> Matrix<E> {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in mul");
        let zero = self.zero_elem();
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..rhs.cols {
                let mut acc = zero.clone();
                for (k, a) in row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                data.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }
}

impl<E: RingElem> Neg for &Matrix<E> {
    type Output = Matrix<E>;
    fn neg(self) -> Matrix<E> {
        self.map(|a| -a.clone())
    }
}

impl<E: RingElem> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}
