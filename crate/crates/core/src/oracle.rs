//! Brute-force cross-checks over small prime fields, written with plain
//! `u64` arithmetic and independent of the generic linear algebra.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::commutator::field_commutator;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{is_probable_prime_u64, IntegersMod, ModInt, Ring};

/// Hard cap on field-commutator enumeration.
pub const COMMUTATOR_BUDGET: u64 = 10_000_000;
/// Hard cap on vectors enumerated by [`brute_regularity`].
pub const VECTOR_BUDGET: u64 = 1_000_000;

pub type SmallMatrix = Vec<Vec<u64>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub claim: String,
    pub enumerated: u64,
    pub agreement: bool,
    pub counterexample: Option<String>,
}

fn check_prime(p: u64) -> Result<()> {
    if p >= 2 && p < (1 << 31) && is_probable_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::Precondition(format!("{p} is not a prime below 2^31")))
    }
}

fn pow_budget(base: u64, exp: u32, cap: u64, what: &str) -> Result<u64> {
    match base.checked_pow(exp) {
        Some(v) if v <= cap => Ok(v),
        _ => Err(Error::BudgetExceeded(format!("{what}: {base}^{exp} exceeds {cap}"))),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Rank of a rectangular matrix over `F_p`.
pub fn rank_mod_p(rows: &[Vec<u64>], p: u64) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|v| v % p).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = inv_mod(m[rank][c], p);
        for v in m[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p - f * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn mat_vec(x: &SmallMatrix, v: &[u64], p: u64) -> Vec<u64> {
    x.iter()
        .map(|row| row.iter().zip(v).fold(0, |acc, (a, b)| (acc + a * b) % p))
        .collect()
}

/// Dimension of the centralizer of `x` over `F_p`: the nullity of `Q -> XQ - QX`.
pub fn brute_centralizer_dim(x: &SmallMatrix, p: u64) -> Result<usize> {
    check_prime(p)?;
    let n = x.len();
    let mut rows = vec![vec![0u64; n * n]; n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                rows[i * n + j][k * n + j] = (rows[i * n + j][k * n + j] + x[i][k]) % p;
                rows[i * n + j][i * n + k] = (rows[i * n + j][i * n + k] + p - x[k][j] % p) % p;
            }
        }
    }
    Ok(n * n - rank_mod_p(&rows, p))
}

/// True iff some vector over `F_p` is cyclic for `x`, by full enumeration.
pub fn brute_regularity(x: &SmallMatrix, p: u64) -> Result<bool> {
    check_prime(p)?;
    let n = x.len();
    let total = pow_budget(p, n as u32, VECTOR_BUDGET, "brute_regularity")?;
    for idx in 1..total {
        let mut v = vec![0u64; n];
        let mut t = idx;
        for c in v.iter_mut() {
            *c = t % p;
            t /= p;
        }
        let mut krylov = vec![v.clone()];
        for _ in 1..n {
            let next = mat_vec(x, krylov.last().expect("nonempty"), p);
            krylov.push(next);
        }
        if rank_mod_p(&krylov, p) == n {
            return Ok(true);
        }
    }
    Ok(n == 0)
}

pub fn to_small(m: &Matrix<ModInt>) -> SmallMatrix {
    m.to_rows()
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|v| v.value().to_u64().expect("reduced residue fits u64"))
                .collect()
        })
        .collect()
}

pub fn from_small(field: &IntegersMod, m: &SmallMatrix) -> Matrix<ModInt> {
    Matrix::from_fn(m.len(), m.len(), |i, j| field.from_int(m[i][j] as i64))
}

/// Reduces an integer matrix into `[0, p)`.
pub fn reduce_int(m: &Matrix<BigInt>, p: u64) -> SmallMatrix {
    let pb = BigInt::from(p);
    m.to_rows()
        .into_iter()
        .map(|r| {
            r.iter()
                .map(|v| v.mod_floor(&pb).to_u64().expect("residue below p"))
                .collect()
        })
        .collect()
}

pub fn small_mul(a: &SmallMatrix, b: &SmallMatrix, p: u64) -> SmallMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let mut out = vec![vec![0u64; m]; n];
    for i in 0..n {
        for j in 0..m {
            out[i][j] = (0..b.len()).fold(0, |s, k| (s + a[i][k] * b[k][j]) % p);
        }
    }
    out
}

/// `XY - YX` over `F_p` in plain `u64` arithmetic.
pub fn small_commutator(x: &SmallMatrix, y: &SmallMatrix, p: u64) -> SmallMatrix {
    let (xy, yx) = (small_mul(x, y, p), small_mul(y, x, p));
    xy.iter()
        .zip(&yx)
        .map(|(r, s)| r.iter().zip(s).map(|(a, b)| (a + p - b) % p).collect())
        .collect()
}

/// All trace-zero `n x n` matrices over `F_q`: the last diagonal entry
/// balances the trace.
pub fn trace_zero_matrices(n: usize, q: u64) -> impl Iterator<Item = SmallMatrix> {
    let free = (n * n).saturating_sub(1) as u32;
    let total = q.pow(free);
    (0..total).map(move |idx| {
        let mut m = vec![vec![0u64; n]; n];
        let mut t = idx;
        let mut trace = 0u64;
        for k in 0..n * n - 1 {
            let (i, j) = (k / n, k % n);
            m[i][j] = t % q;
            t /= q;
            if i == j {
                trace = (trace + m[i][j]) % q;
            }
        }
        m[n - 1][n - 1] = (q - trace) % q;
        m
    })
}

/// Runs the field decomposition on every trace-zero matrix over `F_q` and
/// checks each witness and the regularity of each `X` independently.
pub fn exhaustive_field_commutators(n: usize, q: u64) -> Result<OracleReport> {
    check_prime(q)?;
    if n == 0 {
        return Err(Error::Precondition("n must be positive".into()));
    }
    let total = pow_budget(q, (n * n - 1) as u32, COMMUTATOR_BUDGET, "exhaustive_field_commutators")?;
    let field = IntegersMod::new(BigUint::from(q));
    let mut counterexample = None;
    for a in trace_zero_matrices(n, q) {
        let am = from_small(&field, &a);
        let bad = match field_commutator(&am) {
            Err(e) => Some(format!("{am}: {e}")),
            Ok(w) => {
                let (x, y) = (to_small(&w.x), to_small(&w.y));
                if small_commutator(&x, &y, q) != a {
                    Some(format!("{am}: [X, Y] != A"))
                } else if !brute_regularity(&x, q)? {
                    Some(format!("{am}: X = {} is not regular", w.x))
                } else {
                    None
                }
            }
        };
        if bad.is_some() {
            counterexample = bad;
            break;
        }
    }
    Ok(OracleReport {
        claim: format!("every trace-zero {n}x{n} matrix over F_{q} is [X, Y] with X regular"),
        enumerated: total,
        agreement: counterexample.is_none(),
        counterexample,
    })
}

/// Exhaustive search for `X, Y` with `[X, Y] = a` over `F_p`, for tiny sizes.
pub fn brute_is_commutator(a: &SmallMatrix, p: u64) -> Result<bool> {
    check_prime(p)?;
    let n = a.len();
    let per = pow_budget(p, (n * n) as u32, 1 << 12, "brute_is_commutator")?;
    let decode = |mut t: u64| {
        let mut m = vec![vec![0u64; n]; n];
        for k in 0..n * n {
            m[k / n][k % n] = t % p;
            t /= p;
        }
        m
    };
    for xi in 0..per {
        let x = decode(xi);
        for yi in 0..per {
            if small_commutator(&x, &decode(yi), p) == *a {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn centralizer_dims() {
        let id = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        assert_eq!(brute_centralizer_dim(&id, 2).unwrap(), 9);
        let comp = vec![vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1], vec![1, 2, 0, 1]];
        assert_eq!(brute_centralizer_dim(&comp, 3).unwrap(), 4);
    }

    #[test]
    fn regularity_examples() {
        assert!(brute_regularity(&vec![vec![0, 0], vec![1, 0]], 2).unwrap());
        assert!(!brute_regularity(&vec![vec![1, 0], vec![0, 1]], 3).unwrap());
        // P_3: ones at (2,2) and (3,1).
        let p3 = vec![vec![0, 0, 0], vec![0, 1, 0], vec![1, 0, 0]];
        assert!(brute_regularity(&p3, 2).unwrap());
    }

    #[test]
    fn exhaustive_counts() {
        for (n, q, count) in [(2, 2, 8), (3, 2, 256), (2, 3, 27)] {
            let r = exhaustive_field_commutators(n, q).unwrap();
            assert_eq!(r.enumerated, count);
            assert!(r.agreement, "{:?}", r.counterexample);
        }
    }

    #[test]
    fn budgets_are_enforced() {
        assert!(matches!(
            exhaustive_field_commutators(5, 3),
            Err(Error::BudgetExceeded(_))
        ));
        let big = vec![vec![0u64; 21]; 21];
        assert!(matches!(brute_regularity(&big, 2), Err(Error::BudgetExceeded(_))));
    }

    #[test]
    fn reduction_and_products() {
        let m = Matrix::from_rows(vec![
            vec![BigInt::from(-1), BigInt::from(7)],
            vec![BigInt::from(3), BigInt::from(0)],
        ])
        .unwrap();
        let s = reduce_int(&m, 5);
        assert_eq!(s, vec![vec![4, 2], vec![3, 0]]);
        assert_eq!(small_mul(&s, &vec![vec![1, 0], vec![0, 1]], 5), s);
        assert_eq!(small_commutator(&s, &s, 5), vec![vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn tiny_commutator_search() {
        assert!(brute_is_commutator(&vec![vec![1, 0], vec![0, 1]], 2).unwrap());
        assert!(!brute_is_commutator(&vec![vec![1, 0], vec![0, 0]], 2).unwrap());
    }
}
