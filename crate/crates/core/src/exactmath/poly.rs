//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::scalar::{factorial, to_f64, Scalar};

/// Polynomial with exact rational coefficients. `coeffs[k]` is the
/// coefficient of `X^k`; the highest stored coefficient is never zero, so the
/// zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Scalar::one(), 1)
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// Ascending integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Scalar::from_integer(c.into())).collect())
    }

    /// `(X - r_1)...(X - r_n)`.
    pub fn from_roots(roots: &[Scalar]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| {
            &acc * &Poly::new(vec![-r.clone(), Scalar::one()])
        })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(to_f64).collect()
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Scalar::from_integer(k.into()))
                .collect(),
        )
    }

    /// Antiderivative vanishing at zero.
    pub fn antiderivative(&self) -> Poly {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Scalar::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / Scalar::from_integer((k + 1).into()));
        }
        Poly::new(coeffs)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) if !lc.is_one() => self.scale(&lc.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] * &lc_inv;
            if q.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    /// Quotient of a division known to be exact.
    pub fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn pow(&self, k: u32) -> Poly {
        (0..k).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// `p(-X)`.
    pub fn compose_neg(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `p(X + a)`, by Horner expansion.
    pub fn shift(&self, a: &Scalar) -> Poly {
        let linear = Poly::new(vec![a.clone(), Scalar::one()]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, c| {
            &(&acc * &linear) + &Poly::constant(c.clone())
        })
    }

    /// The linear map multiplying the coefficient of `X^k` by `k!`.
    pub fn tau(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c * Scalar::from_integer(factorial(k)))
                .collect(),
        )
    }

    /// `X^n p(1/X)`. Panics if `n` is below the degree.
    pub fn reversal(&self, n: usize) -> Poly {
        if let Some(d) = self.degree() {
            assert!(n >= d, "reversal bound {n} below degree {d}");
        }
        let mut coeffs = vec![Scalar::zero(); n + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[n - k] = c.clone();
        }
        Poly::new(coeffs)
    }

    /// Multiplicity of the root at zero (0 for the zero polynomial).
    pub fn zero_root_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `X^k`, where `k` is the multiplicity of the root at zero.
    pub fn strip_zero_roots(&self) -> Poly {
        Poly::new(self.coeffs[self.zero_root_multiplicity()..].to_vec())
    }

    /// Real and imaginary parts of `p(ix)` as real polynomials in `x`.
    pub fn axis_parts(&self) -> (Poly, Poly) {
        let mut re = vec![Scalar::zero(); self.coeffs.len()];
        let mut im = vec![Scalar::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            // i^k cycles through 1, i, -1, -i
            match k % 4 {
                0 => re[k] = c.clone(),
                1 => im[k] = c.clone(),
                2 => re[k] = -c,
                _ => im[k] = -c,
            }
        }
        (Poly::new(re), Poly::new(im))
    }

    /// `|p(ix)|^2` as a real polynomial in `x`.
    pub fn axis_modulus_squared(&self) -> Poly {
        let (re, im) = self.axis_parts();
        &(&re * &re) + &(&im * &im)
    }

    /// Scales by a positive rational so that every coefficient is an integer
    /// and their gcd is one. Returns the scaled integer coefficients and the
    /// factor used.
    pub fn primitive_integer_form(&self) -> (Vec<BigInt>, Scalar) {
        if self.is_zero() {
            return (Vec::new(), Scalar::one());
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let ints: Vec<BigInt> = ints.into_iter().map(|c| c / &g).collect();
        (ints, BigRational::new(lcm, g))
    }

    /// Human-readable form in descending powers of `var`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mag_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match k {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !mag.is_one() {
                        out.push_str(&mag_str);
                    }
                    out.push_str(var);
                    if k > 1 {
                        out.push('^');
                        out.push_str(&k.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.display_with("X"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("X"))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Monic greatest common divisor over the rationals.
///
/// Panics if both inputs are zero.
pub fn gcd_poly(p: &Poly, q: &Poly) -> Poly {
    assert!(
        !(p.is_zero() && q.is_zero()),
        "gcd of two zero polynomials is undefined"
    );
    let mut a = p.monic();
    let mut b = q.monic();
    while !b.is_zero() {
        let r = a.rem(&b).monic();
        a = b;
        b = r;
    }
    a
}

/// Square-free part `p / gcd(p, p')`, monic: every distinct root once.
pub fn radical(p: &Poly) -> Poly {
    assert!(!p.is_zero(), "radical of the zero polynomial");
    if p.is_constant() {
        return Poly::one();
    }
    p.exact_div(&gcd_poly(p, &p.derivative())).monic()
}

/// Yun's square-free decomposition: monic, pairwise coprime, square-free
/// factors `f_i` with `p = c * prod f_i^i`. Constant factors are omitted.
pub fn square_free_decomposition(p: &Poly) -> Vec<(Poly, usize)> {
    assert!(!p.is_zero(), "square-free decomposition of the zero polynomial");
    let mut out = Vec::new();
    if p.is_constant() {
        return out;
    }
    let dp = p.derivative();
    let a0 = gcd_poly(p, &dp);
    let mut b = p.exact_div(&a0);
    let c = dp.exact_div(&a0);
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while !b.is_constant() {
        let a = gcd_poly(&b, &d);
        let next_b = b.exact_div(&a);
        let next_c = d.exact_div(&a);
        if !a.is_constant() {
            out.push((a, i));
        }
        d = &next_c - &next_b.derivative();
        b = next_b;
        i += 1;
    }
    out
}

/// Splits `p` into the monic product of its odd-multiplicity irreducible
/// factors and the cofactor `p / odd_part`.
///
/// The cofactor is a positive multiple of a perfect square exactly when its
/// leading coefficient is positive. Panics on the zero polynomial.
pub fn square_free_part(p: &Poly) -> (Poly, Poly) {
    assert!(!p.is_zero(), "square-free part of the zero polynomial");
    let odd = square_free_decomposition(p)
        .into_iter()
        .filter(|(_, m)| m % 2 == 1)
        .fold(Poly::one(), |acc, (f, _)| &acc * &f);
    let even = p.exact_div(&odd);
    (odd, even)
}
