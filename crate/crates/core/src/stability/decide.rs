//! Decision procedures for the individual stability notions.

use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::Signed;

use crate::collocation::tableau::ButcherTableau;
use crate::exactmath::linalg::{rank, transpose};
use crate::exactmath::matrix::RationalFunction;
use crate::exactmath::poly::{gcd_poly, square_free_part, Poly};
use crate::exactmath::sturm::{sturm_real_root_count, Bound, RootInterval};
use crate::rootloc::numeric::{numeric_roots, DEFAULT_DIGITS};
use crate::rootloc::{all_open_rhp, imaginary_axis_roots};

use super::function::{BoundaryDeficit, StabilityFunction};
use super::resolvent::Resolvent;

/// Real-part tolerance for placing a numerical eigenvalue in a region.
pub const EIGEN_TOLERANCE: f64 = 1e-9;
/// Bound on `|b^t v| / (|b| |v|)` for an eigenvector `v` to count as
/// orthogonal to `b`.
pub const ORTHOGONALITY_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    GaussTheorem,
    SymmetricFastpathA,
    SymmetricFastpathI,
    LemmaAHat,
    LemmaIHat,
    FullDecision,
    ResolventExact,
    ResolventNumerical,
    BInRangeAt,
    SmallSTheorem,
}

impl Criterion {
    pub const ALL: [Criterion; 10] = [
        Criterion::GaussTheorem,
        Criterion::SymmetricFastpathA,
        Criterion::SymmetricFastpathI,
        Criterion::LemmaAHat,
        Criterion::LemmaIHat,
        Criterion::FullDecision,
        Criterion::ResolventExact,
        Criterion::ResolventNumerical,
        Criterion::BInRangeAt,
        Criterion::SmallSTheorem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Criterion::GaussTheorem => "gauss-theorem",
            Criterion::SymmetricFastpathA => "symmetric-fastpath-A",
            Criterion::SymmetricFastpathI => "symmetric-fastpath-I",
            Criterion::LemmaAHat => "lemma-A-hat",
            Criterion::LemmaIHat => "lemma-I-hat",
            Criterion::FullDecision => "full-decision",
            Criterion::ResolventExact => "resolvent-exact",
            Criterion::ResolventNumerical => "resolvent-numerical",
            Criterion::BInRangeAt => "b-in-range-At",
            Criterion::SmallSTheorem => "small-s-theorem",
        }
    }

    pub fn parse(s: &str) -> Option<Criterion> {
        Criterion::ALL.into_iter().find(|c| c.as_str() == s)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub criterion: Criterion,
    /// Decided in exact arithmetic from exactly known input.
    pub exact: bool,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn new(holds: bool, criterion: Criterion, exact: bool, details: impl Into<String>) -> Self {
        Verdict {
            holds,
            certificate: Certificate {
                criterion,
                exact,
                details: details.into(),
            },
        }
    }

    pub fn criterion(&self) -> Criterion {
        self.certificate.criterion
    }

    pub fn is_exact(&self) -> bool {
        self.certificate.exact
    }
}

/// Where boundedness is required: the closed left half-plane or the
/// imaginary axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    ClosedLhp,
    Axis,
}

impl Region {
    fn name(self) -> &'static str {
        match self {
            Region::ClosedLhp => "the closed left half-plane",
            Region::Axis => "the imaginary axis",
        }
    }

    /// `p` has no root in this region.
    pub fn root_free(self, p: &Poly) -> bool {
        match self {
            Region::ClosedLhp => all_open_rhp(p),
            Region::Axis => imaginary_axis_roots(p).is_empty(),
        }
    }

    fn contains(self, z: Complex64) -> bool {
        match self {
            Region::ClosedLhp => z.re <= EIGEN_TOLERANCE,
            Region::Axis => z.re.abs() <= EIGEN_TOLERANCE,
        }
    }
}

fn format_axis(roots: &[RootInterval]) -> String {
    let xs: Vec<String> = roots.iter().map(|r| format!("{:.10}", r.to_f64())).collect();
    xs.join(", ")
}

/// `p(x) >= 0` for every real `x`.
pub fn nonnegative_on_reals(p: &Poly) -> bool {
    let Some(lc) = p.leading_coeff() else {
        return true;
    };
    if lc.is_negative() {
        return false;
    }
    let (odd, _) = square_free_part(p);
    odd.is_constant() || sturm_real_root_count(&odd, &Bound::NegInf, &Bound::PosInf) == 0
}

fn deficit_verdict(e: &BoundaryDeficit) -> (bool, String) {
    if e.is_identically_zero() {
        (true, "|R(ix)| = 1 on the whole axis".into())
    } else if nonnegative_on_reals(&e.e) {
        (true, "|D(ix)|^2 - |N(ix)|^2 >= 0 on the real line".into())
    } else {
        (false, "|R(ix)| > 1 for some real x".into())
    }
}

/// I-stability from the reduced stability function alone.
pub fn decide_i_full(sf: &StabilityFunction, e: &BoundaryDeficit, exact: bool) -> Verdict {
    let poles = imaginary_axis_roots(&sf.d_red);
    if !poles.is_empty() {
        return Verdict::new(
            false,
            Criterion::FullDecision,
            exact,
            format!("R has poles on the imaginary axis at x = {}", format_axis(&poles)),
        );
    }
    let (ok, why) = deficit_verdict(e);
    Verdict::new(ok, Criterion::FullDecision, exact, format!("no axis pole; {why}"))
}

/// I-stability, taking the symmetric shortcut when available.
pub fn decide_i(
    sf: &StabilityFunction,
    e: &BoundaryDeficit,
    symmetric: bool,
    exact: bool,
) -> Verdict {
    if symmetric {
        return Verdict::new(
            true,
            Criterion::SymmetricFastpathI,
            exact,
            "symmetric nodes give |R(ix)| = 1",
        );
    }
    decide_i_full(sf, e, exact)
}

/// A-stability: no pole of the reduced `R` in the closed left half-plane and
/// `|R| <= 1` on the axis.
pub fn decide_a_full(sf: &StabilityFunction, e: &BoundaryDeficit, exact: bool) -> Verdict {
    if !all_open_rhp(&sf.d_red) {
        return Verdict::new(
            false,
            Criterion::FullDecision,
            exact,
            "reduced R has a pole with non-positive real part",
        );
    }
    let (ok, why) = deficit_verdict(e);
    Verdict::new(
        ok,
        Criterion::FullDecision,
        exact,
        format!("poles of reduced R in the open right half-plane; {why}"),
    )
}

fn rational_function_bounded(f: &RationalFunction, region: Region) -> bool {
    f.is_proper() && region.root_free(f.den())
}

/// ASI (`ClosedLhp`) or ISI (`Axis`) from exact resolvent entries.
pub fn decide_resolvent_exact(res: &Resolvent, region: Region, exact: bool) -> Verdict {
    let bad = res
        .entries
        .iter()
        .flatten()
        .any(|f| !rational_function_bounded(f, region));
    let details = if bad {
        format!("an entry of (I - λA)^-1 is unbounded on {}", region.name())
    } else {
        format!("every entry of (I - λA)^-1 is proper with no pole on {}", region.name())
    };
    Verdict::new(!bad, Criterion::ResolventExact, exact, details)
}

/// ASI or ISI from the characteristic polynomial of `A`: the resolvent is
/// unbounded exactly when `A` has a nonzero eigenvalue in the region (the
/// zero eigenvalue is always simple).
pub fn decide_resolvent_spectral(char_poly: &Poly, region: Region, exact: bool) -> Verdict {
    let nonzero = char_poly.strip_zero_roots();
    let ok = region.root_free(&nonzero);
    let details = if ok {
        format!("no nonzero eigenvalue of A on {}", region.name())
    } else {
        format!("A has a nonzero eigenvalue on {}", region.name())
    };
    Verdict::new(ok, Criterion::FullDecision, exact, details)
}

/// AS or IS from the exact weighted row `λ b^t (I - λA)^{-1}`.
pub fn decide_weighted_exact(
    row: &[RationalFunction],
    region: Region,
    exact: bool,
) -> Verdict {
    let bad = row.iter().any(|f| !rational_function_bounded(f, region));
    let details = if bad {
        format!("an entry of λ b^t (I - λA)^-1 is unbounded on {}", region.name())
    } else {
        format!("every entry of λ b^t (I - λA)^-1 is proper with no pole on {}", region.name())
    };
    Verdict::new(!bad, Criterion::ResolventExact, exact, details)
}

/// `b` lies in the range of `A^t`, in which case the resolvent bound
/// carries over to the weighted row.
pub fn b_in_range_of_at(tab: &ButcherTableau) -> bool {
    let at = transpose(&tab.a);
    let mut aug = at.clone();
    for (row, b) in aug.iter_mut().zip(&tab.b) {
        row.push(b.clone());
    }
    rank(&at) == rank(&aug)
}

/// AS or IS for tableaux known only approximately. `λ b^t (I - λA)^{-1}` is
/// bounded on the region exactly when every eigenvalue `μ` of `A` in the
/// region (zero included, for the behavior at infinity) is simple with a
/// right eigenvector orthogonal to `b`.
pub fn decide_weighted_numerical(
    tab: &ButcherTableau,
    char_poly: &Poly,
    region: Region,
    exact_input: bool,
) -> Verdict {
    if region.root_free(char_poly) {
        return Verdict::new(
            true,
            Criterion::FullDecision,
            exact_input,
            format!("no eigenvalue of A on {}", region.name()),
        );
    }
    let repeated = gcd_poly(char_poly, &char_poly.derivative());
    if !repeated.is_constant() && !region.root_free(&repeated) {
        return Verdict::new(
            false,
            Criterion::ResolventNumerical,
            false,
            format!("repeated eigenvalue of A on {}; not certified", region.name()),
        );
    }
    let spectrum = numeric_roots(char_poly, DEFAULT_DIGITS);
    let a = tab.a_f64();
    let b = tab.b_f64();
    let mut worst = 0.0f64;
    let mut count = 0;
    for root in spectrum.roots.iter().filter(|r| region.contains(r.value())) {
        count += 1;
        let v = right_eigenvector(&a, root.value());
        worst = worst.max(orthogonality_residual(&b, &v));
    }
    let ok = worst < ORTHOGONALITY_TOLERANCE;
    Verdict::new(
        ok,
        Criterion::ResolventNumerical,
        false,
        format!(
            "{count} eigenvalue(s) of A on {}; max |b^t v|/(|b||v|) = {worst:.3e} (tolerance {ORTHOGONALITY_TOLERANCE:.0e})",
            region.name()
        ),
    )
}

/// Inverse iteration for the eigenvector of `a` at eigenvalue `mu`.
pub fn right_eigenvector(a: &[Vec<f64>], mu: Complex64) -> Vec<Complex64> {
    let s = a.len();
    let shift = mu + Complex64::new(1e-11, 1e-11) * (1.0 + mu.norm());
    let m = DMatrix::from_fn(s, s, |i, j| {
        let diag = if i == j { shift } else { Complex64::new(0.0, 0.0) };
        Complex64::new(a[i][j], 0.0) - diag
    });
    let lu = m.lu();
    let mut x = DVector::from_element(s, Complex64::new(1.0, 0.3));
    for _ in 0..4 {
        match lu.solve(&x) {
            Some(y) => {
                let n = y.norm();
                if n == 0.0 || !n.is_finite() {
                    break;
                }
                x = y.unscale(n);
            }
            None => break,
        }
    }
    x.iter().copied().collect()
}

fn orthogonality_residual(b: &[f64], v: &[Complex64]) -> f64 {
    let dot: Complex64 = b.iter().zip(v).map(|(bi, vi)| vi * *bi).sum();
    let nb = b.iter().map(|x| x * x).sum::<f64>().sqrt();
    let nv = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    dot.norm() / (nb * nv)
}
