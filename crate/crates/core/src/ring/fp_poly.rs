use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigUint, ToBigUint};
use num_traits::{One, ToPrimitive, Zero};

use super::{
    factor_fp_poly, is_irreducible, EuclidElem, Factorisation, GfField, Pid, PrimeElement, Ring, RingDescriptor,
    RingElem,
};
use crate::error::{Error, Result};

/// Largest residue-field size for which irreducibles are enumerated.
const ENUMERATION_LIMIT: u64 = 1 << 20;

pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// A polynomial over `F_p`, coefficients low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: Vec<u64>) -> Self {
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_signed(p: u64, coeffs: &[i64]) -> Self {
        let pi = p as i64;
        FpPoly::new(p, coeffs.iter().map(|c| c.rem_euclid(pi) as u64).collect())
    }

    pub fn zero(p: u64) -> Self {
        FpPoly { p, coeffs: Vec::new() }
    }

    pub fn constant(p: u64, c: u64) -> Self {
        FpPoly::new(p, vec![c])
    }

    pub fn x(p: u64) -> Self {
        FpPoly::new(p, vec![0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn scale(&self, c: u64) -> Self {
        FpPoly::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn monic(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        self.scale(inv_mod(self.leading(), self.p))
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mul_mod(c, (i as u64) % p, p))
            .collect();
        FpPoly::new(p, coeffs)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        FpPoly { p: self.p, coeffs: c }
    }

    /// Quotient and remainder; `d` must be nonzero.
    pub fn divrem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dd = d.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else {
            return (FpPoly::zero(p), FpPoly::zero(p));
        };
        if nd < dd {
            return (FpPoly::zero(p), self.clone());
        }
        let inv_lead = inv_mod(d.leading(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = mul_mod(rem[i + dd], inv_lead, p);
            quot[i] = c;
            if c != 0 {
                for (j, &dj) in d.coeffs.iter().enumerate() {
                    rem[i + j] = sub_mod(rem[i + j], mul_mod(c, dj, p), p);
                }
            }
        }
        (FpPoly::new(p, quot), FpPoly::new(p, rem))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &FpPoly) -> FpPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.coeffs.is_empty() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn mulmod(&self, other: &FpPoly, m: &FpPoly) -> FpPoly {
        (self.clone() * other.clone()).rem(m)
    }

    pub fn powmod(&self, e: &BigUint, m: &FpPoly) -> FpPoly {
        let mut acc = FpPoly::constant(self.p, 1).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            acc = acc.mulmod(&acc, m);
            if e.bit(i) {
                acc = acc.mulmod(&base, m);
            }
        }
        acc
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, self.p), c, self.p))
    }

    /// Encodes a polynomial of degree `< d` as its base-`p` index.
    pub fn from_index(p: u64, index: &BigUint) -> FpPoly {
        let mut coeffs = Vec::new();
        let mut n = index.clone();
        let pb = BigUint::from(p);
        while !n.is_zero() {
            coeffs.push((&n % &pb).to_u64().unwrap());
            n /= &pb;
        }
        FpPoly::new(p, coeffs)
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{c}x")?,
                (_, 1) => write!(f, "x^{i}")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for FpPoly {
    type Output = FpPoly;
    fn add(self, rhs: FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        let (mut long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self.coeffs, rhs.coeffs)
        } else {
            (rhs.coeffs, self.coeffs)
        };
        for (a, b) in long.iter_mut().zip(short) {
            *a = add_mod(*a, b, p);
        }
        FpPoly::new(p, long)
    }
}

impl Neg for FpPoly {
    type Output = FpPoly;
    fn neg(self) -> FpPoly {
        let p = self.p;
        FpPoly {
            p,
            coeffs: self
                .coeffs
                .into_iter()
                .map(|c| if c == 0 { 0 } else { p - c })
                .collect(),
        }
    }
}

impl Sub for FpPoly {
    type Output = FpPoly;
    fn sub(self, rhs: FpPoly) -> FpPoly {
        self + (-rhs)
    }
}

impl Mul for FpPoly {
    type Output = FpPoly;
    fn mul(self, rhs: FpPoly) -> FpPoly {
        debug_assert_eq!(self.p, rhs.p);
        let p = self.p;
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return FpPoly::zero(p);
        }
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = add_mod(out[i + j], mul_mod(a, b, p), p);
            }
        }
        FpPoly::new(p, out)
    }
}

impl RingElem for FpPoly {
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn zero_like(&self) -> Self {
        FpPoly::zero(self.p)
    }
    fn one_like(&self) -> Self {
        FpPoly::constant(self.p, 1)
    }
    fn int_like(&self, k: i64) -> Self {
        FpPoly::from_signed(self.p, &[k])
    }
}

impl EuclidElem for FpPoly {
    fn div_rem(&self, other: &Self) -> (Self, Self) {
        self.divrem(other)
    }

    fn unit_normal(&self) -> (Self, Self) {
        if self.coeffs.is_empty() {
            return (self.clone(), FpPoly::constant(self.p, 1));
        }
        let u = inv_mod(self.leading(), self.p);
        (self.scale(u), FpPoly::constant(self.p, u))
    }

    fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    fn unit_inv(&self) -> Self {
        assert!(self.coeffs.len() == 1, "{self} is not a unit in F_p[x]");
        FpPoly::constant(self.p, inv_mod(self.coeffs[0], self.p))
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }

    fn norm_size(&self) -> u64 {
        self.coeffs.len() as u64
    }
}

/// `F_p[x]` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyRing {
    p: u64,
}

impl PolyRing {
    pub fn new(p: u64) -> Result<Self> {
        RingDescriptor::PolyOverPrimeField { p }.validate()?;
        Ok(PolyRing { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn poly(&self, coeffs: &[i64]) -> FpPoly {
        FpPoly::from_signed(self.p, coeffs)
    }

    pub fn x(&self) -> FpPoly {
        FpPoly::x(self.p)
    }

    /// All monic polynomials of exact degree `d`, in canonical order.
    pub fn monic_of_degree(&self, d: usize) -> impl Iterator<Item = FpPoly> + '_ {
        let count = self.p.pow(d as u32);
        (0..count).map(move |i| {
            let low = FpPoly::from_index(self.p, &i.to_biguint().unwrap());
            let mut c = low.coeffs().to_vec();
            c.resize(d, 0);
            c.push(1);
            FpPoly::new(self.p, c)
        })
    }
}

impl Ring for PolyRing {
    type Elem = FpPoly;
    fn zero(&self) -> FpPoly {
        FpPoly::zero(self.p)
    }
    fn one(&self) -> FpPoly {
        FpPoly::constant(self.p, 1)
    }
    fn from_int(&self, k: i64) -> FpPoly {
        FpPoly::from_signed(self.p, &[k])
    }
}

impl Pid for PolyRing {
    type Residue = GfField;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PolyOverPrimeField { p: self.p }
    }

    fn residue_field(&self, f: &FpPoly) -> GfField {
        GfField::new(f.monic())
    }

    fn residue_field_size(&self, f: &FpPoly) -> BigUint {
        BigUint::from(self.p).pow(f.degree().unwrap_or(0) as u32)
    }

    fn factor(&self, a: &FpPoly) -> Result<Factorisation<FpPoly>> {
        if a.coeffs.is_empty() {
            return Err(Error::DegenerateInput("cannot factor the zero polynomial".into()));
        }
        let unit = FpPoly::constant(self.p, a.leading());
        let factors = factor_fp_poly(a)
            .into_iter()
            .map(|(f, e)| (self.prime_element(f), e))
            .collect();
        Ok(Factorisation { unit, factors })
    }

    fn maximal_ideals_of_index(&self, k: &BigUint) -> Result<Vec<PrimeElement<FpPoly>>> {
        if *k < BigUint::from(2u32) {
            return Err(Error::Precondition(format!("index must be >= 2, got {k}")));
        }
        // k must be a power p^d.
        let pb = BigUint::from(self.p);
        let mut d = 0usize;
        let mut rest = k.clone();
        while (&rest % &pb).is_zero() {
            rest /= &pb;
            d += 1;
        }
        if !rest.is_one() {
            return Ok(Vec::new());
        }
        if *k > BigUint::from(ENUMERATION_LIMIT) {
            return Err(Error::BudgetExceeded(format!(
                "enumerating irreducibles of degree {d} over F_{} exceeds the budget",
                self.p
            )));
        }
        Ok(self
            .monic_of_degree(d)
            .filter(is_irreducible)
            .map(|f| self.prime_element(f))
            .collect())
    }
}
