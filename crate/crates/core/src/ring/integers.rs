use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{
    factor_integer, is_prime, EuclidElem, Factorisation, IntegersMod, Pid, PrimeElement, Ring, RingDescriptor, RingElem,
};
use crate::error::{Error, Result};

impl RingElem for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn int_like(&self, k: i64) -> Self {
        BigInt::from(k)
    }
    fn pow(&self, e: u64) -> Self {
        num_traits::Pow::pow(self, e)
    }
}

impl EuclidElem for BigInt {
    fn div_rem(&self, other: &Self) -> (Self, Self) {
        // Remainder in [0, |other|).
        let (q, r) = self.div_mod_floor(other);
        if r.is_negative() {
            (q + 1, r - other)
        } else {
            (q, r)
        }
    }

    fn unit_normal(&self) -> (Self, Self) {
        if self.is_negative() {
            (-self, BigInt::from(-1))
        } else {
            (self.clone(), BigInt::one())
        }
    }

    fn is_unit(&self) -> bool {
        self.magnitude().is_one()
    }

    fn unit_inv(&self) -> Self {
        assert!(EuclidElem::is_unit(self), "{self} is not a unit in Z");
        self.clone()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.magnitude()
            .cmp(other.magnitude())
            .then_with(|| other.sign().cmp(&self.sign()))
    }

    fn norm_size(&self) -> u64 {
        self.bits()
    }
}

/// The ring of rational integers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;
    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, k: i64) -> BigInt {
        BigInt::from(k)
    }
}

impl Pid for Integers {
    type Residue = IntegersMod;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }

    fn residue_field(&self, p: &BigInt) -> IntegersMod {
        IntegersMod::new(p.magnitude().clone())
    }

    fn residue_field_size(&self, p: &BigInt) -> BigUint {
        p.magnitude().clone()
    }

    fn factor(&self, a: &BigInt) -> Result<Factorisation<BigInt>> {
        if Zero::is_zero(a) {
            return Err(Error::DegenerateInput("cannot factor zero".into()));
        }
        let unit = if a.sign() == Sign::Minus {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        let factors = factor_integer(a.magnitude())
            .into_iter()
            .map(|(p, e)| {
                let v = BigInt::from(p);
                (
                    PrimeElement {
                        residue_field_size: v.magnitude().clone(),
                        value: v,
                    },
                    e,
                )
            })
            .collect();
        Ok(Factorisation { unit, factors })
    }

    fn maximal_ideals_of_index(&self, k: &BigUint) -> Result<Vec<PrimeElement<BigInt>>> {
        if *k < BigUint::from(2u32) {
            return Err(Error::Precondition(format!("index must be >= 2, got {k}")));
        }
        if is_prime(k) {
            Ok(vec![PrimeElement {
                value: BigInt::from(k.clone()),
                residue_field_size: k.clone(),
            }])
        } else {
            Ok(Vec::new())
        }
    }

    fn as_bigint(&self, a: &BigInt) -> Option<BigInt> {
        Some(a.clone())
    }
}
