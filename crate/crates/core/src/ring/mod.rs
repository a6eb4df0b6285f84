//! Coefficient rings.
//!
//! Elements carry whatever context they need (a modulus, a prime `p`) so that
//! arithmetic is available through the std operator traits. Ring structures
//! supply constructors and the global operations that need more than one
//! element's worth of information: factorization, residue fields, enumeration
//! of maximal ideals of a given index.

mod euclid;
mod factor_int;
mod factor_poly;
mod fp_poly;
mod fraction;
mod gf;
mod integers;
mod modint;

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};

use crate::error::{Error, Result};

pub use euclid::{
    avoid_with_vanishing, coprimify, crt, divides, egcd, exact_div, gcd, ideal_generator, is_associate, lcm,
    prime_avoidance, product, unit_normal_of,
};
pub use factor_int::{factor_integer, is_prime, is_probable_prime_u64};
pub use factor_poly::{factor_fp_poly, is_irreducible};
pub use fp_poly::{FpPoly, PolyRing};
pub use fraction::{Frac, FracField};
pub use gf::{GfElem, GfField};
pub use integers::Integers;
pub use modint::{IntegersMod, ModInt};

/// Arithmetic shared by every element type in the crate.
pub trait RingElem:
    Clone
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn int_like(&self, k: i64) -> Self {
        let one = self.one_like();
        let mut acc = self.zero_like();
        let mut base = one;
        let mut m = k.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc + base.clone();
            }
            base = base.clone() + base;
            m >>= 1;
        }
        if k < 0 {
            -acc
        } else {
            acc
        }
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

/// Elements of a field.
pub trait FieldElem: RingElem {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }
}

/// Elements of a Euclidean domain (all PIDs used here are Euclidean).
pub trait EuclidElem: RingElem {
    /// Division with remainder; the remainder is strictly smaller than `other`
    /// in the Euclidean norm. `other` must be nonzero.
    fn div_rem(&self, other: &Self) -> (Self, Self);

    /// Returns `(n, u)` with `n = self * u`, `u` a unit and `n` the
    /// canonical associate (nonnegative integer, monic polynomial, zero).
    fn unit_normal(&self) -> (Self, Self);

    fn is_unit(&self) -> bool;

    /// Inverse of a unit. Panics if `self` is not a unit.
    fn unit_inv(&self) -> Self;

    /// The fixed total order used to sort primes and enumerate candidates.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    /// Size proxy used for the Euclidean norm (absolute value bits, degree).
    fn norm_size(&self) -> u64;
}

/// Runtime description of a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    PolyOverPrimeField { p: u64 },
    IntegersModN { n: BigUint },
}

impl RingDescriptor {
    pub fn validate(&self) -> Result<()> {
        match self {
            RingDescriptor::Integers => Ok(()),
            RingDescriptor::PolyOverPrimeField { p } => {
                if *p >= 2 && *p < (1 << 31) && is_probable_prime_u64(*p) {
                    Ok(())
                } else {
                    Err(Error::Precondition(format!("Fp[x] requires a prime p < 2^31, got {p}")))
                }
            }
            RingDescriptor::IntegersModN { n } => {
                if *n >= BigUint::from(2u32) {
                    Ok(())
                } else {
                    Err(Error::Precondition(format!("Z/N requires N >= 2, got {n}")))
                }
            }
        }
    }
}

impl Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::PolyOverPrimeField { p } => write!(f, "F_{p}[x]"),
            RingDescriptor::IntegersModN { n } => write!(f, "Z/{n}"),
        }
    }
}

/// A commutative ring with identity.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: RingElem;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;

    fn from_int(&self, k: i64) -> Self::Elem {
        self.one().int_like(k)
    }
}

/// A field whose elements can be enumerated.
pub trait FiniteField: Ring<Elem: FieldElem> {
    fn size(&self) -> BigUint;

    /// The element with the given index in the fixed enumeration order.
    /// Index 0 is zero and index 1 is one.
    fn element(&self, index: &BigUint) -> Self::Elem;

    fn characteristic(&self) -> BigUint;
}

/// Reduction from a PID onto one of its residue fields.
pub trait ResidueMap<B> {
    type Target: FieldElem;
    fn reduce(&self, a: &B) -> Self::Target;
    fn lift(&self, a: &Self::Target) -> B;
}

/// An irreducible element in canonical form together with `|R/(p)|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeElement<E> {
    pub value: E,
    pub residue_field_size: BigUint,
}

/// `unit * prod(p_i^e_i)`, primes pairwise non-associate and sorted by the
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorisation<E> {
    pub unit: E,
    pub factors: Vec<(PrimeElement<E>, u32)>,
}

impl<E: EuclidElem> Factorisation<E> {
    /// Number of prime factors counted with multiplicity.
    pub fn omega_total(&self) -> u64 {
        self.factors.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    pub fn primes(&self) -> impl Iterator<Item = &PrimeElement<E>> {
        self.factors.iter().map(|(p, _)| p)
    }

    /// Multiplies the factorisation back out.
    pub fn expand(&self) -> E {
        let mut acc = self.unit.clone();
        for (p, e) in &self.factors {
            acc = acc * p.value.pow(u64::from(*e));
        }
        acc
    }
}

/// A computable principal ideal domain with finite residue fields.
pub trait Pid: Ring<Elem: EuclidElem> {
    type Residue: FiniteField + ResidueMap<Self::Elem, Target = <Self::Residue as Ring>::Elem>;

    fn descriptor(&self) -> RingDescriptor;

    /// The residue field `R/(p)` for an irreducible `p`.
    fn residue_field(&self, p: &Self::Elem) -> Self::Residue;

    fn residue_field_size(&self, p: &Self::Elem) -> BigUint;

    fn factor(&self, a: &Self::Elem) -> Result<Factorisation<Self::Elem>>;

    /// All primes `p` (canonical form) with `|R/(p)| = k`.
    fn maximal_ideals_of_index(&self, k: &BigUint) -> Result<Vec<PrimeElement<Self::Elem>>>;

    fn prime_element(&self, p: Self::Elem) -> PrimeElement<Self::Elem> {
        let residue_field_size = self.residue_field_size(&p);
        PrimeElement {
            value: p,
            residue_field_size,
        }
    }

    fn fraction_field(&self) -> FracField<Self> {
        FracField::new(self.clone())
    }

    /// Embeds a small integer.
    fn int(&self, k: i64) -> Self::Elem {
        self.from_int(k)
    }

    /// Converts to a big integer when the ring is `Z`; used for reporting only.
    fn as_bigint(&self, _a: &Self::Elem) -> Option<BigInt> {
        None
    }
}

/// The index-2 primes, kept out of the pivot during the similarity descent.
pub fn index_two_primes<R: Pid>(ring: &R) -> Vec<PrimeElement<R::Elem>> {
    ring.maximal_ideals_of_index(&BigUint::from(2u32))
        .expect("k = 2 is a valid index")
}

/// True if `a` lies in the ideal generated by the prime `p`.
pub fn in_prime<E: EuclidElem>(a: &E, p: &E) -> bool {
    a.div_rem(p).1.is_zero()
}
