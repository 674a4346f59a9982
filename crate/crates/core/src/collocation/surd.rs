//! Exact tableaux for node polynomials that split into rational linear
//! factors and a single irreducible quadratic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactmath::field::QuadraticSurd;
use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::Scalar;

use super::nodes::NodeSet;
use super::tableau::collocation_coefficients;

#[derive(Clone, Debug, PartialEq)]
pub struct SurdTableau {
    pub radicand: BigInt,
    pub c: Vec<QuadraticSurd>,
    pub a: Vec<Vec<QuadraticSurd>>,
    pub b: Vec<QuadraticSurd>,
}

/// `n = k^2 m` with `m` square-free; returns `(k, m)`. `n > 0`.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut k = BigInt::one();
    let mut m = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    while &p * &p <= rest {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        k *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            m *= &p;
        }
        p += 1;
    }
    (k, m * rest)
}

/// Roots of a monic rational quadratic as `r ± s sqrt(d)`, `None` if they
/// are rational or not real.
fn quadratic_roots(q: &Poly) -> Option<(QuadraticSurd, QuadraticSurd)> {
    let q = q.monic();
    let (b, c) = (q.coeff(1), q.coeff(0));
    let disc = &b * &b - Scalar::from_integer(4.into()) * c;
    if !disc.is_positive() {
        return None;
    }
    // sqrt(n/d) = sqrt(n d)/d
    let nd = disc.numer() * disc.denom();
    let (k, m) = split_square(&nd);
    if m.is_one() {
        return None;
    }
    let coef = Scalar::new(k, disc.denom().clone()) / Scalar::from_integer(2.into());
    let mid = -b / Scalar::from_integer(2.into());
    Some((
        QuadraticSurd::new(mid.clone(), -coef.clone(), m.clone()),
        QuadraticSurd::new(mid, coef, m),
    ))
}

/// Works when every node outside a single conjugate pair is rational.
/// `approx` supplies node approximations used to spot the rational ones.
pub fn surd_tableau(pi: &Poly, approx: &NodeSet) -> Option<SurdTableau> {
    let rational: Vec<Scalar> = approx
        .values()
        .iter()
        .filter(|c| pi.eval(c).is_zero())
        .cloned()
        .collect();
    let rest = pi.monic().exact_div(&Poly::from_roots(&rational));
    if rest.degree() != Some(2) {
        return None;
    }
    let (lo, hi) = quadratic_roots(&rest)?;
    let radicand = lo.radicand.clone();
    let mut c: Vec<QuadraticSurd> = rational.into_iter().map(QuadraticSurd::rational).collect();
    c.push(lo);
    c.push(hi);
    c.sort_by(|x, y| x.to_f64().total_cmp(&y.to_f64()));
    let (a, b) = collocation_coefficients(&c);
    Some(SurdTableau { radicand, c, a, b })
}

impl SurdTableau {
    /// `"a + b*sqrt(d)"` style text for one entry, with rationals plain.
    pub fn format_entry(x: &QuadraticSurd) -> String {
        if x.surd.is_zero() {
            return x.rational.to_string();
        }
        let d = &x.radicand;
        let s = if x.surd.abs().is_one() {
            format!("sqrt({d})")
        } else {
            format!("{}*sqrt({d})", x.surd.abs())
        };
        match (x.rational.is_zero(), x.surd.is_negative()) {
            (true, false) => s,
            (true, true) => format!("-{s}"),
            (false, neg) => format!("{} {} {s}", x.rational, if neg { "-" } else { "+" }),
        }
    }
}
