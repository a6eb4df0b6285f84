//! Rational canonical form with an explicit conjugator.

use super::{block_diag, inverse_field, nullspace, solve, Matrix, SimilarityWitness};
use crate::poly;
use crate::ring::FieldElem;

/// Companion matrix of a monic `f` (low degree first): ones on the
/// superdiagonal and `-f_{j}` in the last row.
pub fn companion<E: FieldElem>(f: &[E]) -> Matrix<E> {
    let d = f.len() - 1;
    let zero = f[0].zero_like();
    let one = f[0].one_like();
    Matrix::from_fn(d, d, |i, j| {
        if i == d - 1 {
            let c = -f[j].clone();
            if j == i + 1 {
                c + one.clone()
            } else {
                c
            }
        } else if j == i + 1 {
            one.clone()
        } else {
            zero.clone()
        }
    })
}

/// Invariant factors (largest first) and a witness `g` with
/// `g A g^{-1} = form`, the block sum of their companion matrices.
#[derive(Clone, Debug)]
pub struct FrobeniusForm<E> {
    pub invariant_factors: Vec<Vec<E>>,
    pub form: Matrix<E>,
    pub witness: SimilarityWitness<E>,
}

fn vec_sub<E: FieldElem>(a: &[E], b: &[E]) -> Vec<E> {
    a.iter().zip(b).map(|(x, y)| x.clone() - y.clone()).collect()
}

fn vec_add<E: FieldElem>(a: &[E], b: &[E]) -> Vec<E> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

/// Minimal polynomial of `v` relative to `a`, monic, low degree first.
pub(crate) fn local_min_poly<E: FieldElem>(a: &Matrix<E>, v: &[E]) -> Vec<E> {
    let n = a.n();
    let mut krylov: Vec<Vec<E>> = vec![v.to_vec()];
    loop {
        let next = a.mul_vec(krylov.last().unwrap());
        let k = krylov.len();
        let m = Matrix::from_columns(&krylov);
        let dependent = if v.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            solve(&m, &next)
        };
        match dependent {
            Some(c) if !c.is_empty() || k == 0 => {
                let mut f: Vec<E> = c.into_iter().map(|x| -x).collect();
                f.push(a.one_elem());
                return f;
            }
            Some(_) => return vec![a.one_elem()],
            None => {
                assert!(k < n, "Krylov sequence longer than the dimension");
                krylov.push(next);
            }
        }
    }
}

/// A vector whose minimal polynomial is the minimal polynomial of `a`.
pub(crate) fn maximal_vector<E: FieldElem>(a: &Matrix<E>) -> (Vec<E>, Vec<E>) {
    let n = a.n();
    let zero = a.zero_elem();
    let basis = |i: usize| {
        (0..n)
            .map(|j| if i == j { a.one_elem() } else { zero.clone() })
            .collect::<Vec<_>>()
    };
    let mut v = basis(0);
    let mut f = local_min_poly(a, &v);
    for i in 1..n {
        let w = basis(i);
        let g = local_min_poly(a, &w);
        if poly::divrem(&f, &g, &zero).1.is_empty() {
            continue;
        }
        // lcm(f, g) = f1 * g1 with coprime f1 | f, g1 | g.
        let d = poly::gcd(&f, &g, &zero);
        let g_over_d = poly::div_exact(&g, &d, &zero);
        let f1 = poly::coprime_part(&f, &g_over_d, &zero);
        let g1 = poly::div_exact(&g, &poly::coprime_part(&g, &g_over_d, &zero), &zero);
        let vf = poly::apply_to_vector(&poly::div_exact(&f, &f1, &zero), a, &v);
        let wg = poly::apply_to_vector(&poly::div_exact(&g, &g1, &zero), a, &w);
        v = vec_add(&vf, &wg);
        f = poly::mul(&f1, &g1, &zero);
        debug_assert_eq!(local_min_poly(a, &v), f);
    }
    (v, f)
}

/// Columns `T` with `T^{-1} A T` block diagonal; returns the factors too.
fn cyclic_decomposition<E: FieldElem>(a: &Matrix<E>) -> (Vec<Vec<E>>, Matrix<E>) {
    let n = a.n();
    let (v, f) = maximal_vector(a);
    let d = f.len() - 1;
    // Horner basis: c[d-1] = v, c[m-1] = A c[m] + f[m] v.
    let mut cols = vec![v.clone(); d];
    for m in (1..d).rev() {
        let av = a.mul_vec(&cols[m]);
        cols[m - 1] = vec_add(&av, &v.iter().map(|x| f[m].clone() * x.clone()).collect::<Vec<_>>());
    }
    if d == n {
        return (vec![f], Matrix::from_columns(&cols));
    }
    // Invariant complement {u : phi(A^i u) = 0, i < d} with phi(A^i v) = delta_{i, d-1}.
    let mut krylov = vec![v.clone()];
    for i in 1..d {
        krylov.push(a.mul_vec(&krylov[i - 1]));
    }
    let kt = Matrix::from_columns(&krylov).transpose();
    let mut e_last = vec![a.zero_elem(); d];
    e_last[d - 1] = a.one_elem();
    let phi = solve(&kt, &e_last).expect("Krylov vectors are independent");
    let at = a.transpose();
    let mut rows = vec![phi];
    for i in 1..d {
        rows.push(at.mul_vec(&rows[i - 1]));
    }
    let constraints = Matrix::from_rows(rows).unwrap();
    let comp = nullspace(&constraints);
    let wb = Matrix::from_columns(&comp);
    let restricted: Vec<Vec<E>> = comp
        .iter()
        .map(|w| solve(&wb, &a.mul_vec(w)).expect("complement is invariant"))
        .collect();
    let a_rest = Matrix::from_columns(&restricted);
    let (mut factors, t_rest) = cyclic_decomposition(&a_rest);
    let lifted = &wb * &t_rest;
    for j in 0..lifted.cols() {
        cols.push(lifted.column(j));
    }
    factors.insert(0, f);
    (factors, Matrix::from_columns(&cols))
}

pub fn frobenius_form<E: FieldElem>(a: &Matrix<E>) -> FrobeniusForm<E> {
    let (factors, t) = cyclic_decomposition(a);
    let mut form = companion(&factors[0]);
    for f in &factors[1..] {
        form = block_diag(&form, &companion(f));
    }
    let t_inv = inverse_field(&t).expect("cyclic decomposition basis is invertible");
    let _ = vec_sub::<E>;
    FrobeniusForm {
        invariant_factors: factors,
        form,
        witness: SimilarityWitness { g: t_inv, g_inv: t },
    }
}
