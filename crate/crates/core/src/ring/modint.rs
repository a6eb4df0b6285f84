use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FieldElem, FiniteField, ResidueMap, Ring, RingElem};

/// A residue class modulo `m`, stored as its representative in `[0, m)`.
///
/// Doubles as the residue field `Z/(p)` and as the quotient ring `Z/N`;
/// `inv` returns `None` for non-invertible classes.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ModInt {
    value: BigInt,
    modulus: Arc<BigInt>,
}

impl ModInt {
    pub fn new(value: BigInt, modulus: Arc<BigInt>) -> Self {
        let value = value.mod_floor(&modulus);
        ModInt { value, modulus }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    fn with(&self, value: BigInt) -> Self {
        ModInt::new(value, self.modulus.clone())
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let mut v = self.value + rhs.value;
        if v >= *self.modulus {
            v -= &*self.modulus;
        }
        ModInt {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let mut v = self.value - rhs.value;
        if v < BigInt::zero() {
            v += &*self.modulus;
        }
        ModInt {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        let v = (self.value * rhs.value) % &*self.modulus;
        ModInt {
            value: v,
            modulus: self.modulus,
        }
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        if Zero::is_zero(&self.value) {
            self
        } else {
            let v = &*self.modulus - self.value;
            ModInt {
                value: v,
                modulus: self.modulus,
            }
        }
    }
}

impl RingElem for ModInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.value)
    }
    fn zero_like(&self) -> Self {
        self.with(BigInt::zero())
    }
    fn one_like(&self) -> Self {
        self.with(BigInt::one())
    }
    fn int_like(&self, k: i64) -> Self {
        self.with(BigInt::from(k))
    }
    fn pow(&self, e: u64) -> Self {
        self.with(self.value.modpow(&BigInt::from(e), &self.modulus))
    }
}

impl FieldElem for ModInt {
    fn inv(&self) -> Option<Self> {
        let e = self.value.extended_gcd(&self.modulus);
        if One::is_one(&e.gcd) {
            Some(self.with(e.x))
        } else {
            None
        }
    }
}

/// `Z/mZ`: the residue field at a prime, or the quotient ring `Z/N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegersMod {
    modulus: Arc<BigInt>,
}

impl IntegersMod {
    pub fn new(m: BigUint) -> Self {
        assert!(m >= BigUint::from(2u32), "modulus must be at least 2");
        IntegersMod {
            modulus: Arc::new(BigInt::from(m)),
        }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn elem(&self, v: BigInt) -> ModInt {
        ModInt::new(v, self.modulus.clone())
    }
}

impl Ring for IntegersMod {
    type Elem = ModInt;
    fn zero(&self) -> ModInt {
        self.elem(BigInt::zero())
    }
    fn one(&self) -> ModInt {
        self.elem(BigInt::one())
    }
    fn from_int(&self, k: i64) -> ModInt {
        self.elem(BigInt::from(k))
    }
}

impl FiniteField for IntegersMod {
    fn size(&self) -> BigUint {
        self.modulus.magnitude().clone()
    }

    fn element(&self, index: &BigUint) -> ModInt {
        self.elem(BigInt::from(index.clone()))
    }

    fn characteristic(&self) -> BigUint {
        self.size()
    }
}

impl ResidueMap<BigInt> for IntegersMod {
    type Target = ModInt;
    fn reduce(&self, a: &BigInt) -> ModInt {
        self.elem(a.clone())
    }
    fn lift(&self, a: &ModInt) -> BigInt {
        a.value.clone()
    }
}
