use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;

use super::{FieldElem, FiniteField, FpPoly, ResidueMap, Ring, RingElem};

/// An element of `F_p[x]/(f)` for a monic irreducible `f`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GfElem {
    value: FpPoly,
    modulus: Arc<FpPoly>,
}

impl GfElem {
    fn with(&self, value: FpPoly) -> GfElem {
        GfElem {
            value: value.rem(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }

    pub fn value(&self) -> &FpPoly {
        &self.value
    }
}

impl fmt::Display for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for GfElem {
    type Output = GfElem;
    fn add(self, rhs: GfElem) -> GfElem {
        GfElem {
            value: self.value + rhs.value,
            modulus: self.modulus,
        }
    }
}

impl Sub for GfElem {
    type Output = GfElem;
    fn sub(self, rhs: GfElem) -> GfElem {
        GfElem {
            value: self.value - rhs.value,
            modulus: self.modulus,
        }
    }
}

impl Mul for GfElem {
    type Output = GfElem;
    fn mul(self, rhs: GfElem) -> GfElem {
        let value = (self.value * rhs.value).rem(&self.modulus);
        GfElem {
            value,
            modulus: self.modulus,
        }
    }
}

impl Neg for GfElem {
    type Output = GfElem;
    fn neg(self) -> GfElem {
        GfElem {
            value: -self.value,
            modulus: self.modulus,
        }
    }
}

impl RingElem for GfElem {
    fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
    fn zero_like(&self) -> Self {
        self.with(self.value.zero_like())
    }
    fn one_like(&self) -> Self {
        self.with(self.value.one_like())
    }
    fn int_like(&self, k: i64) -> Self {
        self.with(self.value.int_like(k))
    }
}

impl FieldElem for GfElem {
    fn inv(&self) -> Option<Self> {
        if self.value.is_zero() {
            return None;
        }
        // Extended Euclid on (value, modulus).
        let (mut r0, mut r1) = ((*self.modulus).clone(), self.value.clone());
        let (mut t0, mut t1) = (r0.zero_like(), r0.one_like());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = r1;
            r1 = r;
            let t = t0 - q * t1.clone();
            t0 = t1;
            t1 = t;
        }
        // r0 is a nonzero constant since the modulus is irreducible.
        let c = r0.coeff(0);
        Some(self.with(t0.scale(super::fp_poly::inv_mod(c, r0.p()))))
    }
}

/// The finite field `F_p[x]/(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfField {
    modulus: Arc<FpPoly>,
}

impl GfField {
    /// `f` must be monic irreducible of positive degree.
    pub fn new(f: FpPoly) -> Self {
        assert!(
            f.degree().unwrap_or(0) >= 1,
            "residue modulus must have positive degree"
        );
        GfField { modulus: Arc::new(f) }
    }

    pub fn modulus(&self) -> &FpPoly {
        &self.modulus
    }

    pub fn elem(&self, v: FpPoly) -> GfElem {
        GfElem {
            value: v.rem(&self.modulus),
            modulus: self.modulus.clone(),
        }
    }
}

impl Ring for GfField {
    type Elem = GfElem;
    fn zero(&self) -> GfElem {
        self.elem(FpPoly::zero(self.modulus.p()))
    }
    fn one(&self) -> GfElem {
        self.elem(FpPoly::constant(self.modulus.p(), 1))
    }
}

impl FiniteField for GfField {
    fn size(&self) -> BigUint {
        BigUint::from(self.modulus.p()).pow(self.modulus.degree().unwrap() as u32)
    }

    fn element(&self, index: &BigUint) -> GfElem {
        self.elem(FpPoly::from_index(self.modulus.p(), index))
    }

    fn characteristic(&self) -> BigUint {
        BigUint::from(self.modulus.p())
    }
}

impl ResidueMap<FpPoly> for GfField {
    type Target = GfElem;
    fn reduce(&self, a: &FpPoly) -> GfElem {
        self.elem(a.clone())
    }
    fn lift(&self, a: &GfElem) -> FpPoly {
        a.value.clone()
    }
}
