//! The conjugator catalog: transvections, `M_ij` embeddings, permutations.
//! All indices are zero-based.

use super::Matrix;
use crate::ring::RingElem;

/// `1 + lambda * E_ij`, `i != j`.
pub fn elementary<E: RingElem>(n: usize, i: usize, j: usize, lambda: &E) -> Matrix<E> {
    assert_ne!(i, j, "transvections need i != j");
    let mut m = Matrix::identity(n, lambda);
    m[(i, j)] = lambda.clone();
    m
}

/// `1 + (x-1)E_ii + y E_ij + z E_ji + (w-1)E_jj`; invertible with inverse
/// `m_embed(n, i, j, w, -y, -z, x)` whenever `xw - yz = 1`.
pub fn m_embed<E: RingElem>(n: usize, i: usize, j: usize, x: &E, y: &E, z: &E, w: &E) -> Matrix<E> {
    assert_ne!(i, j);
    let mut m = Matrix::identity(n, x);
    m[(i, i)] = x.clone();
    m[(i, j)] = y.clone();
    m[(j, i)] = z.clone();
    m[(j, j)] = w.clone();
    m
}

/// The permutation matrix sending `e_j` to `e_{perm[j]}`.
pub fn permutation<E: RingElem>(perm: &[usize], template: &E) -> Matrix<E> {
    let n = perm.len();
    let mut m = Matrix::zeros(n, n, template);
    for (j, &i) in perm.iter().enumerate() {
        m[(i, j)] = template.one_like();
    }
    m
}

/// The transposition matrix exchanging `e_a` and `e_b`.
pub fn swap_perm<E: RingElem>(n: usize, a: usize, b: usize, template: &E) -> Matrix<E> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(a, b);
    permutation(&perm, template)
}

pub fn block_diag<E: RingElem>(a: &Matrix<E>, b: &Matrix<E>) -> Matrix<E> {
    let (ra, ca) = (a.rows(), a.cols());
    let z = a.zero_elem();
    Matrix::from_fn(ra + b.rows(), ca + b.cols(), |i, j| {
        if i < ra && j < ca {
            a[(i, j)].clone()
        } else if i >= ra && j >= ca {
            b[(i - ra, j - ca)].clone()
        } else {
            z.clone()
        }
    })
}

/// `1_k (+) m`.
pub fn direct_sum_identity<E: RingElem>(k: usize, m: &Matrix<E>) -> Matrix<E> {
    if k == 0 {
        return m.clone();
    }
    block_diag(&Matrix::identity(k, &m.zero_elem()), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn m_embed_inverse_formula() {
        let b = |v: i64| BigInt::from(v);
        // 2*3 - 1*5 = 1
        let m = m_embed(4, 1, 3, &b(2), &b(1), &b(5), &b(3));
        let mi = m_embed(4, 1, 3, &b(3), &b(-1), &b(-5), &b(2));
        assert!((&m * &mi).is_identity());
    }

    #[test]
    fn permutations_and_sums() {
        let one = BigInt::from(1);
        let w = swap_perm(3, 0, 2, &one);
        assert!((&w * &w).is_identity());
        let p = permutation(&[1, 2, 0], &one);
        assert_eq!(p[(1, 0)], one);
        let s = direct_sum_identity(2, &w);
        assert_eq!(s.n(), 5);
        assert_eq!(s[(2, 4)], one);
        let e = elementary(3, 2, 0, &BigInt::from(7));
        assert_eq!(e[(2, 0)], BigInt::from(7));
    }
}
