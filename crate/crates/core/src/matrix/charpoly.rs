use super::Matrix;
use crate::ring::RingElem;

/// Characteristic polynomial `det(x*1 - A)` by Berkowitz's division-free
/// recurrence. Coefficients low degree first; the last one is `1`.
pub fn char_poly<E: RingElem>(a: &Matrix<E>) -> Vec<E> {
    assert!(a.is_square(), "char_poly needs a square matrix");
    let n = a.n();
    let one = a.one_elem();
    let zero = a.zero_elem();
    // Highest degree first while building.
    let mut p = vec![one.clone()];
    for r in 0..n {
        let row: Vec<E> = (0..r).map(|j| a[(r, j)].clone()).collect();
        let mut v: Vec<E> = (0..r).map(|i| a[(i, r)].clone()).collect();
        let mut t = vec![one.clone(), -a[(r, r)].clone()];
        for _ in 0..r {
            let dot = row
                .iter()
                .zip(&v)
                .fold(zero.clone(), |acc, (x, y)| acc + x.clone() * y.clone());
            t.push(-dot);
            v = (0..r)
                .map(|i| (0..r).fold(zero.clone(), |acc, k| acc + a[(i, k)].clone() * v[k].clone()))
                .collect();
        }
        let mut q = vec![zero.clone(); r + 2];
        for (i, qi) in q.iter_mut().enumerate() {
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                if !pj.is_zero() && !t[i - j].is_zero() {
                    *qi = qi.clone() + t[i - j].clone() * pj.clone();
                }
            }
        }
        p = q;
    }
    p.reverse();
    p
}

/// Determinant, from the constant term of the characteristic polynomial.
pub fn det<E: RingElem>(a: &Matrix<E>) -> E {
    let c0 = char_poly(a).swap_remove(0);
    if a.n() % 2 == 0 {
        c0
    } else {
        -c0
    }
}
