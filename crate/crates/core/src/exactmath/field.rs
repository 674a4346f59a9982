//! Exact fields used for tableau construction: the rationals, and quadratic
//! extensions `Q(sqrt d)` for nodes that are roots of rational quadratics.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::{to_f64, Scalar};

pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn is_zero_elem(&self) -> bool;
    fn from_rational(q: Scalar) -> Self;
}

impl Field for Scalar {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_rational(q: Scalar) -> Self {
        q
    }
}

/// `rational + surd * sqrt(radicand)`, with `radicand` a positive non-square
/// integer. A radicand of zero marks a value promoted from the rationals,
/// which combines with any radicand. Mixing two different nonzero radicands
/// panics.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub rational: Scalar,
    pub surd: Scalar,
    pub radicand: BigInt,
}

impl QuadraticSurd {
    pub fn new(rational: Scalar, surd: Scalar, radicand: BigInt) -> Self {
        if surd.is_zero() {
            return QuadraticSurd::rational(rational);
        }
        QuadraticSurd {
            rational,
            surd,
            radicand,
        }
    }

    pub fn rational(q: Scalar) -> Self {
        QuadraticSurd {
            rational: q,
            surd: Scalar::zero(),
            radicand: BigInt::zero(),
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt(d: i64) -> Self {
        QuadraticSurd::new(Scalar::zero(), Scalar::one(), BigInt::from(d))
    }

    fn common(&self, other: &Self) -> BigInt {
        match (self.radicand.is_zero(), other.radicand.is_zero()) {
            (true, _) => other.radicand.clone(),
            (_, true) => self.radicand.clone(),
            _ => {
                assert_eq!(
                    self.radicand, other.radicand,
                    "mixed quadratic extensions"
                );
                self.radicand.clone()
            }
        }
    }

    fn d(&self) -> Scalar {
        Scalar::from_integer(self.radicand.clone())
    }

    pub fn conjugate(&self) -> Self {
        QuadraticSurd::new(self.rational.clone(), -&self.surd, self.radicand.clone())
    }

    /// `a^2 - d b^2`.
    pub fn norm(&self) -> Scalar {
        &self.rational * &self.rational - &self.surd * &self.surd * self.d()
    }

    pub fn to_f64(&self) -> f64 {
        let d = to_f64(&self.d());
        to_f64(&self.rational) + to_f64(&self.surd) * d.sqrt()
    }
}

impl fmt::Debug for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.surd.is_zero() {
            write!(f, "{}", self.rational)
        } else {
            write!(f, "{} + {}*sqrt({})", self.rational, self.surd, self.radicand)
        }
    }
}

impl Add for QuadraticSurd {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.common(&rhs);
        QuadraticSurd::new(self.rational + rhs.rational, self.surd + rhs.surd, d)
    }
}

impl Sub for QuadraticSurd {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for QuadraticSurd {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticSurd::new(-self.rational, -self.surd, self.radicand)
    }
}

impl Mul for QuadraticSurd {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.common(&rhs);
        let dq = Scalar::from_integer(d.clone());
        let rational = &self.rational * &rhs.rational + &self.surd * &rhs.surd * dq;
        let surd = &self.rational * &rhs.surd + &self.surd * &rhs.rational;
        QuadraticSurd::new(rational, surd, d)
    }
}

impl Div for QuadraticSurd {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm();
        assert!(!n.is_zero(), "division by zero in quadratic extension");
        let inv_n = n.recip();
        let num = self * rhs.conjugate();
        QuadraticSurd::new(num.rational * &inv_n, num.surd * &inv_n, num.radicand)
    }
}

impl Field for QuadraticSurd {
    fn zero_elem() -> Self {
        QuadraticSurd::rational(Scalar::zero())
    }
    fn one_elem() -> Self {
        QuadraticSurd::rational(Scalar::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.rational.is_zero() && self.surd.is_zero()
    }
    fn from_rational(q: Scalar) -> Self {
        QuadraticSurd::rational(q)
    }
}
