use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{gcd, EuclidElem, FieldElem, Pid, Ring, RingElem};

/// A reduced fraction over a Euclidean domain: `gcd(num, den)` is a unit and
/// `den` is unit-normal, so equal values have equal representations.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frac<E> {
    num: E,
    den: E,
}

impl<E: EuclidElem> Frac<E> {
    pub fn new(num: E, den: E) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Frac {
                den: num.one_like(),
                num,
            };
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let (den, u) = den.unit_normal();
        Frac { num: num * u, den }
    }

    pub fn from_base(a: E) -> Self {
        Frac {
            den: a.one_like(),
            num: a,
        }
    }

    pub fn num(&self) -> &E {
        &self.num
    }

    pub fn den(&self) -> &E {
        &self.den
    }

    /// The value as a base-ring element when the denominator is one.
    pub fn to_base(&self) -> Option<E> {
        self.den.is_one().then(|| self.num.clone())
    }
}

impl<E: EuclidElem> fmt::Display for Frac<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl<E: EuclidElem> Add for Frac<E> {
    type Output = Frac<E>;
    fn add(self, rhs: Frac<E>) -> Frac<E> {
        if self.den == rhs.den {
            return Frac::new(self.num + rhs.num, self.den);
        }
        let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
        Frac::new(num, self.den * rhs.den)
    }
}

impl<E: EuclidElem> Sub for Frac<E> {
    type Output = Frac<E>;
    fn sub(self, rhs: Frac<E>) -> Frac<E> {
        self + (-rhs)
    }
}

impl<E: EuclidElem> Mul for Frac<E> {
    type Output = Frac<E>;
    fn mul(self, rhs: Frac<E>) -> Frac<E> {
        if self.num.is_zero() || rhs.num.is_zero() {
            return Frac::from_base(self.num.zero_like());
        }
        Frac::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl<E: EuclidElem> Neg for Frac<E> {
    type Output = Frac<E>;
    fn neg(self) -> Frac<E> {
        Frac {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<E: EuclidElem> RingElem for Frac<E> {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn zero_like(&self) -> Self {
        Frac::from_base(self.num.zero_like())
    }
    fn one_like(&self) -> Self {
        Frac::from_base(self.num.one_like())
    }
    fn int_like(&self, k: i64) -> Self {
        Frac::from_base(self.num.int_like(k))
    }
}

impl<E: EuclidElem> FieldElem for Frac<E> {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Frac::new(self.den.clone(), self.num.clone()))
        }
    }
}

/// The field of fractions of a PID.
#[derive(Clone, Debug)]
pub struct FracField<R> {
    base: R,
}

impl<R: Pid> FracField<R> {
    pub fn new(base: R) -> Self {
        FracField { base }
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn embed(&self, a: &R::Elem) -> Frac<R::Elem> {
        Frac::from_base(a.clone())
    }
}

impl<R: Pid> Ring for FracField<R> {
    type Elem = Frac<R::Elem>;
    fn zero(&self) -> Self::Elem {
        Frac::from_base(self.base.zero())
    }
    fn one(&self) -> Self::Elem {
        Frac::from_base(self.base.one())
    }
}
