//! Floating-point root oracle: Aberth-Ehrlich iteration followed by Newton
//! polishing in exact complex rational arithmetic.

use num_complex::Complex64;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::{from_f64, pow2, to_f64, Scalar};

pub const DEFAULT_DIGITS: u32 = 64;

#[derive(Clone, Debug, PartialEq)]
pub struct ApproxRoot {
    pub re: f64,
    pub im: f64,
    /// A disk of this radius around `(re, im)` contains a root; infinite if
    /// no bound could be established.
    pub radius: f64,
}

impl ApproxRoot {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumApprox {
    /// Sorted by real part, then imaginary part.
    pub roots: Vec<ApproxRoot>,
    pub converged: bool,
    pub digits: u32,
}

/// `(re + i im) / 2^bits`.
#[derive(Clone, Debug)]
struct Fixed {
    re: BigInt,
    im: BigInt,
}

impl Fixed {
    fn from_complex(z: Complex64, bits: u32) -> Self {
        let scale = pow2(bits);
        let conv = |x: f64| (from_f64(x) * &scale).round().to_integer();
        Fixed {
            re: conv(z.re),
            im: conv(z.im),
        }
    }

    fn to_complex(&self, bits: u32) -> Complex64 {
        let scale = pow2(bits);
        let conv = |x: &BigInt| to_f64(&(Scalar::from_integer(x.clone()) / &scale));
        Complex64::new(conv(&self.re), conv(&self.im))
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// `2^(bits * deg) p(z)` for integer coefficients, exactly.
fn eval_scaled(coeffs: &[BigInt], z: &Fixed, bits: u32) -> Fixed {
    let mut re = BigInt::zero();
    let mut im = BigInt::zero();
    for (j, c) in coeffs.iter().rev().enumerate() {
        let (r, i) = (&re * &z.re - &im * &z.im, &re * &z.im + &im * &z.re);
        re = r + (c << (bits as usize * j));
        im = i;
    }
    Fixed { re, im }
}

/// Newton step `p(z)/p'(z)` in the same fixed-point scale, or `None` if
/// `p'(z) = 0`.
fn newton_step(p: &[BigInt], dp: &[BigInt], z: &Fixed, bits: u32) -> Option<(Fixed, bool)> {
    let pv = eval_scaled(p, z, bits);
    if pv.is_zero() {
        return Some((Fixed { re: BigInt::zero(), im: BigInt::zero() }, true));
    }
    let dv = eval_scaled(dp, z, bits);
    let den = &dv.re * &dv.re + &dv.im * &dv.im;
    if den.is_zero() {
        return None;
    }
    // pv / dv carries exactly one factor 2^bits more than p(z)/p'(z)
    let re = (&pv.re * &dv.re + &pv.im * &dv.im).div_floor(&den);
    let im = (&pv.im * &dv.re - &pv.re * &dv.im).div_floor(&den);
    Some((Fixed { re, im }, false))
}

fn integer_coeffs(p: &Poly) -> Vec<BigInt> {
    p.primitive_integer_form().0
}

fn horner(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    let bound = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lc).abs())
            .fold(0.0f64, f64::max);
    let r0 = bound.min(1.0 + (coeffs[0] / lc).abs().powf(1.0 / n as f64));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(r0, theta)
        })
        .collect();
    for _ in 0..1000 {
        let mut max_step = 0.0f64;
        for k in 0..n {
            let (p, dp) = horner(coeffs, z[k]);
            if p == Complex64::new(0.0, 0.0) {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != k)
                .map(|j| Complex64::new(1.0, 0.0) / (z[k] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[k].norm()));
            }
        }
        if max_step < 1e-16 {
            break;
        }
    }
    z
}

/// Approximates all complex roots of `p` (with multiplicity). `digits` sets
/// the working precision of the polishing stage.
///
/// Panics if `p` has degree below one.
pub fn numeric_roots(p: &Poly, digits: u32) -> SpectrumApprox {
    let n = p.degree().filter(|&d| d >= 1).expect("numeric roots need degree >= 1");
    let ip = integer_coeffs(p);
    let idp: Vec<BigInt> = ip.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();
    let bits = (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 32;
    let target = 10f64.powi(-(digits.min(300) as i32));
    let coeffs = p.monic().to_f64_coeffs();
    let mut converged = true;
    let mut roots: Vec<ApproxRoot> = aberth(&coeffs)
        .into_iter()
        .map(|z0| {
            let start = Fixed::from_complex(z0, bits);
            let mut z = start.clone();
            let mut radius = f64::INFINITY;
            for _ in 0..64 {
                let Some((step, exact)) = newton_step(&ip, &idp, &z, bits) else {
                    break;
                };
                if exact {
                    radius = 0.0;
                    break;
                }
                let size = step.to_complex(bits).norm();
                radius = n as f64 * size;
                if size <= target * (1.0 + z.to_complex(bits).norm()) {
                    break;
                }
                let next = Fixed {
                    re: &z.re - &step.re,
                    im: &z.im - &step.im,
                };
                if (next.to_complex(bits) - z0).norm() > 1e-3 * (1.0 + z0.norm()) {
                    // Newton wandered off; keep the Aberth estimate
                    z = start.clone();
                    radius = residual_radius(&ip, &idp, &z, bits, n);
                    break;
                }
                z = next;
            }
            let w = z.to_complex(bits);
            if radius.is_nan() || radius > 1e-10 * (1.0 + w.norm()) {
                converged = false;
            }
            ApproxRoot {
                re: w.re,
                im: w.im,
                radius,
            }
        })
        .collect();
    roots.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    SpectrumApprox {
        roots,
        converged,
        digits,
    }
}

fn residual_radius(p: &[BigInt], dp: &[BigInt], z: &Fixed, bits: u32, n: usize) -> f64 {
    match newton_step(p, dp, z, bits) {
        Some((_, true)) => 0.0,
        Some((step, false)) => n as f64 * step.to_complex(bits).norm(),
        None => f64::INFINITY,
    }
}

/// Count of approximate roots with real part below `-tol`, within `tol` of
/// zero, and above `tol`.
pub fn real_part_signs(spec: &SpectrumApprox, tol: f64) -> (usize, usize, usize) {
    spec.roots.iter().fold((0, 0, 0), |(l, z, r), root| {
        if root.re < -tol {
            (l + 1, z, r)
        } else if root.re > tol {
            (l, z, r + 1)
        } else {
            (l, z + 1, r)
        }
    })
}
