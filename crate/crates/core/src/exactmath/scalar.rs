//! Rational scalars and the textual node/coefficient grammar.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Scalar = BigRational;

/// How a scalar was written by the user.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exactness {
    /// An integer or `p/q` literal.
    Exact,
    /// A decimal literal, taken as an approximation of the intended value.
    Numerical,
}

impl Exactness {
    pub fn is_exact(self) -> bool {
        matches!(self, Exactness::Exact)
    }

    /// `Exact` only if both inputs are exact.
    pub fn and(self, other: Exactness) -> Exactness {
        if self.is_exact() && other.is_exact() {
            Exactness::Exact
        } else {
            Exactness::Numerical
        }
    }
}

pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n/d`, reduced. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn to_f64(x: &Scalar) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        if x.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Exact rational value of a finite double.
pub fn from_f64(x: f64) -> Scalar {
    BigRational::from_float(x).expect("finite float")
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn pow2(bits: u32) -> Scalar {
    BigRational::from_integer(BigInt::one() << bits)
}

/// Rounds to the nearest multiple of `2^-bits`.
pub fn round_dyadic(x: &Scalar, bits: u32) -> Scalar {
    let scale = pow2(bits);
    (x * &scale).round() / scale
}

/// `"p/q"`, or `"n"` for integers.
pub fn format_scalar(x: &Scalar) -> String {
    x.to_string()
}

/// Parses one token of the node/coefficient grammar: `n`, `p/q`, or a
/// decimal literal (`0.25`, `-1.5e-3`). Decimal literals are converted to
/// their exact decimal value and flagged [`Exactness::Numerical`].
pub fn parse_scalar(token: &str) -> Result<(Scalar, Exactness), Error> {
    let t = token.trim();
    if t.is_empty() {
        return Err(Error::Parse(format!("empty token in `{token}`")));
    }
    let bad = || Error::Parse(format!("cannot parse `{t}` as a rational or decimal number"));

    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{t}`")));
        }
        return Ok((BigRational::new(n, d), Exactness::Exact));
    }
    if let Ok(n) = t.parse::<BigInt>() {
        return Ok((BigRational::from_integer(n), Exactness::Exact));
    }
    parse_decimal(t).map(|v| (v, Exactness::Numerical)).ok_or_else(bad)
}

fn parse_decimal(t: &str) -> Option<Scalar> {
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return None;
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let mut value = BigRational::from_integer(all.parse::<BigInt>().ok()?);
    let shift = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= num_traits::pow(ten, shift as usize);
    } else {
        value /= num_traits::pow(ten, (-shift) as usize);
    }
    Some(if negative { -value } else { value })
}

/// Parses a comma-separated list of scalars.
pub fn parse_scalar_list(text: &str) -> Result<Vec<(Scalar, Exactness)>, Error> {
    if text.trim().is_empty() {
        return Err(Error::EmptyNodes);
    }
    text.split(',').map(parse_scalar).collect()
}
