//! Floating-point cross-checks: direct time stepping on the Dahlquist
//! equation and the Laplace-integral form of `R`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::collocation::tableau::ButcherTableau;
use crate::error::{Error, Result};
use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::{factorial, to_f64, Scalar};

use super::function::StabilityFunction;

/// Runs `n` steps of the method on `y' = a y`, `y(0) = 1`, with step `h`,
/// and returns `|y_n - R(ah)^n| / max(1, |R(ah)^n|)`.
pub fn dahlquist_validate(
    tab: &ButcherTableau,
    sf: &StabilityFunction,
    a: Complex64,
    h: f64,
    n: usize,
) -> Result<f64> {
    let s = tab.stages();
    let z = a * h;
    let am = tab.a_f64();
    let b = tab.b_f64();
    let m = DMatrix::from_fn(s, s, |i, j| {
        let id = if i == j { 1.0 } else { 0.0 };
        Complex64::new(id, 0.0) - z * am[i][j]
    });
    let lu = m.lu();
    let mut y = Complex64::new(1.0, 0.0);
    for _ in 0..n {
        let stages = lu
            .solve(&DVector::from_element(s, y))
            .ok_or(Error::SingularStageSystem)?;
        let incr: Complex64 = stages.iter().zip(&b).map(|(yi, bi)| yi * *bi).sum();
        y += z * incr;
    }
    if !y.is_finite() {
        return Err(Error::SingularStageSystem);
    }
    let rn = sf.eval_complex(z).powu(n as u32);
    Ok((y - rn).norm() / rn.norm().max(1.0))
}

/// `int_0^inf e^{-l t} p(t) dt = sum_k p_k k! / l^{k+1}`.
fn laplace(p: &Poly, l: Complex64) -> Complex64 {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| to_f64(&(c * Scalar::from_integer(factorial(k)))) / l.powu(k as u32 + 1))
        .sum()
}

/// Relative gap between the Laplace-integral ratio for `pi` and `N/D` at `l`.
///
/// Panics unless `Re l > 0`.
pub fn laplace_cross_check(pi: &Poly, sf: &StabilityFunction, l: Complex64) -> f64 {
    assert!(l.re > 0.0, "Laplace form needs Re(λ) > 0");
    let ratio = laplace(&pi.shift(&Scalar::from_integer(1.into())), l) / laplace(pi, l);
    let r = sf.n.eval_complex(l) / sf.d.eval_complex(l);
    (ratio - r).norm() / r.norm().max(f64::MIN_POSITIVE)
}
