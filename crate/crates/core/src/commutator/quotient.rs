//! Commutators over `Z/N` through a lift to `Z`.

use num_bigint::BigInt;

use super::{decompose, CommutatorWitness};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::ring::{Integers, IntegersMod, ModInt, ResidueMap, RingElem};

pub fn decompose_mod_n(ring: &IntegersMod, a: &Matrix<ModInt>) -> Result<CommutatorWitness<ModInt>> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("matrix is not square".into()));
    }
    if !a.trace().is_zero() {
        return Err(Error::Precondition(format!(
            "trace is {} mod {}, not zero",
            a.trace(),
            ring.modulus()
        )));
    }
    let mut lifted: Matrix<BigInt> = a.map(|v| ring.lift(v));
    // The integer trace is a multiple of N; move it off the (1,1) entry.
    let t = lifted.trace();
    lifted[(0, 0)] = lifted[(0, 0)].clone() - t.clone();
    let w = decompose(&Integers, &lifted)?;
    let out = CommutatorWitness {
        x: w.x.map(|v| ring.reduce(v)),
        y: w.y.map(|v| ring.reduce(v)),
        log: w.log,
    }
    .with_log(format!("lifted to Z with (1,1) shifted by {}", -t));
    out.verify(a)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use num_bigint::BigUint;

    fn zn(n: u32, rows: &[&[i64]]) -> (IntegersMod, Matrix<ModInt>) {
        let r = IntegersMod::new(BigUint::from(n));
        let m = Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| r.from_int(v)).collect())
                .collect(),
        )
        .unwrap();
        (r, m)
    }

    #[test]
    fn zero_over_z12() {
        let (r, a) = zn(12, &[&[0, 0], &[0, 0]]);
        let w = decompose_mod_n(&r, &a).unwrap();
        assert!(w.x.commutator(&w.y).is_zero());
    }

    #[test]
    fn diag_3_9_over_z12() {
        let (r, a) = zn(12, &[&[3, 0], &[0, 9]]);
        decompose_mod_n(&r, &a).unwrap().verify(&a).unwrap();
    }

    #[test]
    fn e12_over_z4() {
        let (r, a) = zn(4, &[&[0, 1], &[0, 0]]);
        decompose_mod_n(&r, &a).unwrap().verify(&a).unwrap();
    }

    #[test]
    fn nonzero_trace_rejected() {
        let (r, a) = zn(8, &[&[1, 0], &[0, 0]]);
        assert!(matches!(decompose_mod_n(&r, &a), Err(Error::Precondition(_))));
    }
}
