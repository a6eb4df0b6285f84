use super::Matrix;
use crate::error::{Error, Result};
use crate::ring::{crt, EuclidElem};

/// Entrywise Chinese remaindering of equally shaped matrices.
pub fn mat_crt<E: EuclidElem>(residues: &[Matrix<E>], moduli: &[E]) -> Result<Matrix<E>> {
    let first = residues
        .first()
        .ok_or_else(|| Error::Precondition("mat_crt needs at least one matrix".into()))?;
    for m in residues {
        first.check_same_shape(m)?;
    }
    let (rows, cols) = (first.rows(), first.cols());
    let mut out = first.clone();
    for i in 0..rows {
        for j in 0..cols {
            let rs: Vec<E> = residues.iter().map(|m| m[(i, j)].clone()).collect();
            out[(i, j)] = crt(&rs, moduli)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn diagonal_residues() {
        let b = |v: i64| BigInt::from(v);
        let m2 = Matrix::scalar(2, &b(1));
        let m3 = Matrix::scalar(2, &b(2));
        let out = mat_crt(&[m2, m3], &[b(2), b(3)]).unwrap();
        assert_eq!(out, Matrix::scalar(2, &b(5)));
        let single = mat_crt(&[Matrix::scalar(2, &b(7))], &[b(5)]).unwrap();
        assert_eq!(single, Matrix::scalar(2, &b(2)));
    }
}
