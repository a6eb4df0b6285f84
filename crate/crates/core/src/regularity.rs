//! Regular (cyclic) matrices: Krylov certificates, regularity modulo primes
//! and over the fraction field, centralizers, and the matrices `P_n`.

use crate::error::{Error, Result};
use crate::matrix::{
    det, embed_fractions, inverse_unimodular, lift_matrix, nullspace, reduce_matrix, Matrix, SimilarityWitness,
};
use crate::matrix::{frobenius_maximal_vector, linalg_ad_operator};
use crate::ring::{EuclidElem, FieldElem, Pid, PrimeElement, ResidueMap, Ring, RingElem};

/// A vector `v` with `(v, Xv, ..., X^{n-1} v)` invertible over the base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularityCertificate<E> {
    pub vector: Vec<E>,
    pub krylov_det: E,
}

impl<E: EuclidElem> RegularityCertificate<E> {
    /// Recomputes the Krylov determinant and checks that it is a unit.
    pub fn check(&self, x: &Matrix<E>) -> Result<()> {
        let d = det(&krylov_matrix(x, &self.vector));
        if d != self.krylov_det || !d.is_unit() {
            return Err(Error::NotCertified(format!("Krylov determinant {d} is not a unit")));
        }
        Ok(())
    }
}

/// The matrix with columns `v, Xv, ..., X^{n-1} v`.
pub fn krylov_matrix<E: RingElem>(x: &Matrix<E>, v: &[E]) -> Matrix<E> {
    let mut cols = vec![v.to_vec()];
    for i in 1..x.n() {
        cols.push(x.mul_vec(&cols[i - 1]));
    }
    Matrix::from_columns(&cols)
}

/// Witness `g = K^{-1}` for the Krylov matrix `K` of `v`, so that
/// `g X g^{-1}` sends `e_i` to `e_{i+1}` for `i < n`.
pub fn krylov_witness<E: EuclidElem>(x: &Matrix<E>, v: &[E]) -> Result<SimilarityWitness<E>> {
    let k = krylov_matrix(x, v);
    let k_inv =
        inverse_unimodular(&k).map_err(|_| Error::NotCertified(format!("Krylov matrix of {v:?} is not invertible")))?;
    Ok(SimilarityWitness { g: k_inv, g_inv: k })
}

fn certificate_for<E: EuclidElem>(x: &Matrix<E>, v: Vec<E>) -> Option<RegularityCertificate<E>> {
    let d = det(&krylov_matrix(x, &v));
    d.is_unit().then_some(RegularityCertificate {
        vector: v,
        krylov_det: d,
    })
}

fn basis_vector<E: RingElem>(n: usize, i: usize, template: &E) -> Vec<E> {
    (0..n)
        .map(|j| {
            if i == j {
                template.one_like()
            } else {
                template.zero_like()
            }
        })
        .collect()
}

/// Which triangular pattern a matrix has, if any.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HessenbergPattern {
    /// `a_{i,i+1} = 1` and `a_ij = 0` for `j >= i + 2`.
    UnitSuperdiagonal,
    /// `a_{i+1,i} = 1` and `a_ij = 0` for `i >= j + 2`.
    UnitSubdiagonal,
}

pub fn hessenberg_pattern<E: RingElem>(a: &Matrix<E>) -> Option<HessenbergPattern> {
    let n = a.n();
    let sup = (0..n).all(|i| {
        (i + 1..n).all(|j| {
            if j == i + 1 {
                a[(i, j)].is_one()
            } else {
                a[(i, j)].is_zero()
            }
        })
    });
    if sup {
        return Some(HessenbergPattern::UnitSuperdiagonal);
    }
    let sub = (0..n).all(|j| {
        (j + 1..n).all(|i| {
            if i == j + 1 {
                a[(i, j)].is_one()
            } else {
                a[(i, j)].is_zero()
            }
        })
    });
    sub.then_some(HessenbergPattern::UnitSubdiagonal)
}

/// The forced cyclic vector of a unit-Hessenberg matrix: `e_n` for the
/// superdiagonal pattern and `e_1` for the subdiagonal one.
pub fn hessenberg_cyclic_vector<E: EuclidElem>(a: &Matrix<E>) -> Result<RegularityCertificate<E>> {
    let n = a.n();
    let t = a.zero_elem();
    let v = match hessenberg_pattern(a) {
        Some(HessenbergPattern::UnitSuperdiagonal) => basis_vector(n, n - 1, &t),
        Some(HessenbergPattern::UnitSubdiagonal) => basis_vector(n, 0, &t),
        None => return Err(Error::Precondition("matrix has neither unit-Hessenberg pattern".into())),
    };
    certificate_for(a, v).ok_or_else(|| Error::Internal("unit-Hessenberg Krylov matrix is not unimodular".into()))
}

/// Outcome of a regularity test over a residue field.
#[derive(Clone, Debug)]
pub struct ResidueRegularity<F> {
    pub regular: bool,
    /// A cyclic vector over the residue field when `regular` holds.
    pub cyclic_vector: Option<Vec<F>>,
    /// Degree of the minimal polynomial.
    pub min_poly_degree: usize,
}

/// Regularity of a matrix over a field: minimal polynomial equal to the
/// characteristic polynomial.
pub fn is_regular_field<F: FieldElem>(x: &Matrix<F>) -> ResidueRegularity<F> {
    let (v, f) = frobenius_maximal_vector(x);
    let deg = f.len() - 1;
    let regular = deg == x.n();
    ResidueRegularity {
        regular,
        cyclic_vector: regular.then_some(v),
        min_poly_degree: deg,
    }
}

pub fn is_regular_mod_prime<R: Pid>(
    ring: &R,
    x: &Matrix<R::Elem>,
    p: &PrimeElement<R::Elem>,
) -> ResidueRegularity<<R::Residue as Ring>::Elem> {
    let field = ring.residue_field(&p.value);
    is_regular_field(&reduce_matrix(&field, x))
}

pub fn is_regular_over_fractions<E: EuclidElem>(x: &Matrix<E>) -> bool {
    is_regular_field(&embed_fractions(x)).regular
}

const SIGNED_SEARCH_MAX_N: usize = 9;
const BINARY_SEARCH_MAX_N: usize = 14;

/// Searches standard basis vectors, then 0/1 vectors, then 0/±1 vectors
/// for one with a unimodular Krylov matrix. `None` means unknown.
pub fn find_cyclic_vector<E: EuclidElem>(x: &Matrix<E>) -> Option<RegularityCertificate<E>> {
    let n = x.n();
    let t = x.zero_elem();
    for i in 0..n {
        if let Some(c) = certificate_for(x, basis_vector(n, i, &t)) {
            return Some(c);
        }
    }
    if n <= BINARY_SEARCH_MAX_N {
        for mask in 1u32..(1 << n) {
            if mask.count_ones() < 2 {
                continue;
            }
            let v = (0..n).map(|i| t.int_like(((mask >> i) & 1) as i64)).collect();
            if let Some(c) = certificate_for(x, v) {
                return Some(c);
            }
        }
    }
    if n <= SIGNED_SEARCH_MAX_N {
        for code in 0..3u32.pow(n as u32) {
            let mut digits = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                digits.push(c % 3);
                c /= 3;
            }
            if !digits.contains(&2) {
                continue;
            }
            let v = digits.iter().map(|&d| t.int_like([0, 1, -1][d as usize])).collect();
            if let Some(c) = certificate_for(x, v) {
                return Some(c);
            }
        }
    }
    None
}

/// Basis of the centralizer of `x` over a field, each element a matrix.
pub fn centralizer_basis_field<F: FieldElem>(x: &Matrix<F>) -> Vec<Matrix<F>> {
    let n = x.n();
    nullspace(&linalg_ad_operator(x))
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

pub fn centralizer_basis_mod_p<R: Pid>(
    ring: &R,
    x: &Matrix<R::Elem>,
    p: &PrimeElement<R::Elem>,
) -> Vec<Matrix<<R::Residue as Ring>::Elem>> {
    let field = ring.residue_field(&p.value);
    centralizer_basis_field(&reduce_matrix(&field, x))
}

/// Lifts a residue-field cyclic vector to the base ring.
pub fn lift_vector<R: Pid>(ring: &R, p: &PrimeElement<R::Elem>, v: &[<R::Residue as Ring>::Elem]) -> Vec<R::Elem> {
    let field = ring.residue_field(&p.value);
    v.iter().map(|c| field.lift(c)).collect()
}

/// `P_n`: ones at even diagonal positions and on the second subdiagonal.
pub fn p_n<E: RingElem>(n: usize, template: &E) -> Matrix<E> {
    let k = n / 2;
    Matrix::from_fn(n, n, |i, j| {
        // 1-based positions (i + 1, j + 1).
        let on_diag = i == j && (i + 1) % 2 == 0 && i < 2 * k;
        let on_sub = i >= 2 && j == i - 2;
        if on_diag || on_sub {
            template.one_like()
        } else {
            template.zero_like()
        }
    })
}

/// `J_m(a)` with ones on the subdiagonal.
pub fn jordan_block<E: RingElem>(m: usize, a: &E) -> Matrix<E> {
    Matrix::from_fn(m, m, |i, j| {
        if i == j {
            a.clone()
        } else if i == j + 1 {
            a.one_like()
        } else {
            a.zero_like()
        }
    })
}

/// `P_n` together with a certificate of regularity over the base ring.
#[derive(Clone, Debug)]
pub struct PnMatrix<E> {
    pub n: usize,
    pub matrix: Matrix<E>,
    pub certificate: RegularityCertificate<E>,
}

pub fn p_n_certified<E: EuclidElem>(n: usize, template: &E) -> Result<PnMatrix<E>> {
    if n < 2 {
        return Err(Error::Precondition(format!("P_n needs n >= 2, got {n}")));
    }
    let matrix = p_n(n, template);
    let certificate =
        find_cyclic_vector(&matrix).ok_or_else(|| Error::Internal(format!("no cyclic vector found for P_{n}")))?;
    Ok(PnMatrix { n, matrix, certificate })
}

/// Witness `g` with `g A g^{-1} = B` for two matrices certified regular
/// with the same characteristic polynomial.
pub fn regular_similarity<E: EuclidElem>(
    a: &Matrix<E>,
    ca: &RegularityCertificate<E>,
    b: &Matrix<E>,
    cb: &RegularityCertificate<E>,
) -> Result<SimilarityWitness<E>> {
    let ka = krylov_witness(a, &ca.vector)?;
    let kb = krylov_witness(b, &cb.vector)?;
    let w = ka.then(&kb.inverse());
    w.verify(a, b)?;
    Ok(w)
}

/// Witness that `P_n` is similar to `J_k(1) + J_{n-k}(0)`, `k = floor(n/2)`.
pub fn p_n_jordan_witness<E: EuclidElem>(n: usize, template: &E) -> Result<SimilarityWitness<E>> {
    let pn = p_n_certified(n, template)?;
    let k = n / 2;
    let j = crate::matrix::block_diag(
        &jordan_block(k, &template.one_like()),
        &jordan_block(n - k, &template.zero_like()),
    );
    let mut v = vec![template.zero_like(); n];
    v[0] = template.one_like();
    v[k] = template.one_like();
    let cj = certificate_for(&j, v)
        .ok_or_else(|| Error::Internal("Jordan sum has no unimodular Krylov matrix at e_1 + e_{k+1}".into()))?;
    regular_similarity(&pn.matrix, &pn.certificate, &j, &cj)
}

/// Lifts a residue-field matrix through `field`.
pub fn lift_residue_matrix<R: Pid>(
    ring: &R,
    p: &PrimeElement<R::Elem>,
    m: &Matrix<<R::Residue as Ring>::Elem>,
) -> Matrix<R::Elem> {
    lift_matrix(&ring.residue_field(&p.value), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::char_poly;
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

    fn t() -> BigInt {
        BigInt::from(0)
    }

    #[test]
    fn krylov_of_nilpotent_2x2() {
        let x = z(&[&[0, 1], &[0, 0]]);
        let v = vec![t(), BigInt::from(1)];
        assert_eq!(krylov_matrix(&x, &v), z(&[&[0, 1], &[1, 0]]));
        let w = krylov_witness(&x, &v).unwrap();
        assert!(w.det().is_unit());
        let c = w.apply(&x);
        assert_eq!(c, z(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn hessenberg_examples() {
        let c = hessenberg_cyclic_vector(&z(&[&[0, 1], &[0, 0]])).unwrap();
        assert_eq!(c.vector, vec![t(), BigInt::from(1)]);
        let a = z(&[&[5, 1, 0], &[7, 3, 1], &[2, 4, 9]]);
        let c = hessenberg_cyclic_vector(&a).unwrap();
        assert_eq!(c.vector, vec![t(), t(), BigInt::from(1)]);
        assert!(c.krylov_det.is_unit());
        let sub = z(&[&[0, 0], &[1, -3]]);
        assert_eq!(
            hessenberg_cyclic_vector(&sub).unwrap().vector,
            vec![BigInt::from(1), t()]
        );
        assert!(hessenberg_cyclic_vector(&z(&[&[1, 2], &[3, 4]])).is_err());
    }

    #[test]
    fn regularity_mod_primes() {
        let p2 = Integers.prime_element(BigInt::from(2));
        let p5 = Integers.prime_element(BigInt::from(5));
        assert!(!is_regular_mod_prime(&Integers, &z(&[&[1, 0], &[0, 1]]), &p5).regular);
        assert!(!is_regular_mod_prime(&Integers, &z(&[&[0, 2], &[0, 0]]), &p2).regular);
        assert!(is_regular_mod_prime(&Integers, &p_n(3, &t()), &p5).regular);
        assert!(is_regular_over_fractions(&z(&[&[0, 2], &[0, 0]])));
        assert!(!is_regular_over_fractions(&z(&[&[3, 0], &[0, 3]])));
    }

    #[test]
    fn cyclic_vector_search() {
        // Companion in the e_i -> e_{i+1} orientation is cyclic at e_1; the
        // superdiagonal orientation is cyclic at e_n.
        let comp = z(&[&[0, 1, 0], &[0, 0, 1], &[4, -2, 7]]);
        assert_eq!(
            find_cyclic_vector(&comp.transpose()).unwrap().vector,
            vec![BigInt::from(1), t(), t()]
        );
        assert_eq!(
            find_cyclic_vector(&comp).unwrap().vector,
            vec![t(), t(), BigInt::from(1)]
        );
        assert!(find_cyclic_vector(&z(&[&[1, 0], &[0, 1]])).is_none());
        for n in 2..=6 {
            let pn = p_n_certified(n, &t()).unwrap();
            pn.certificate.check(&pn.matrix).unwrap();
        }
    }

    #[test]
    fn centralizer_dimensions() {
        let p5 = Integers.prime_element(BigInt::from(5));
        let p2 = Integers.prime_element(BigInt::from(2));
        let comp = z(&[&[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert_eq!(centralizer_basis_mod_p(&Integers, &comp, &p5).len(), 3);
        assert_eq!(
            centralizer_basis_mod_p(&Integers, &z(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), &p2).len(),
            9
        );
    }

    #[test]
    fn p_n_shape_and_jordan_similarity() {
        assert_eq!(
            p_n(4, &t()),
            z(&[&[0, 0, 0, 0], &[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 1]])
        );
        assert_eq!(p_n(3, &t()), z(&[&[0, 0, 0], &[0, 1, 0], &[1, 0, 0]]));
        for n in 2..=6 {
            let w = p_n_jordan_witness(n, &t()).unwrap();
            let k = n / 2;
            let j = crate::matrix::block_diag(&jordan_block(k, &BigInt::from(1)), &jordan_block(n - k, &t()));
            w.verify(&p_n(n, &t()), &j).unwrap();
            assert_eq!(char_poly(&p_n(n, &t())), char_poly(&j));
        }
    }
}
