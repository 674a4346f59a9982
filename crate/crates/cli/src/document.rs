//! Serializable analysis report. Exact values are strings (`"p/q"` or
//! `"n"`); floats appear only as approximations alongside them.

use num_complex::Complex64;
use rkcolloc::collocation::{surd_tableau, SurdTableau};
use rkcolloc::exactmath::{format_scalar, QuadraticSurd};
use rkcolloc::exactmath::scalar::from_f64;
use rkcolloc::rootloc::SpectrumApprox;
use rkcolloc::stability::{dahlquist_validate, laplace_cross_check, BoundaryDeficit};
use rkcolloc::{CollocationMethod, Poly, Scalar, StabilityFunction, StabilityReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub method: MethodEcho,
    pub stability_function: StabilityEcho,
    pub verdicts: Vec<VerdictEntry>,
    pub spectrum: SpectrumEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<Vec<SampleRow>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dahlquist: Option<DahlquistEcho>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub laplace: Option<Vec<LaplaceEcho>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MethodEcho {
    pub family: String,
    pub stages: usize,
    /// Sorted nodes. For irrational nodes these are isolating midpoints.
    pub nodes: Vec<String>,
    pub nodes_exact: bool,
    pub input_order: Vec<String>,
    pub nodes_approx: Vec<f64>,
    /// Coefficients, constant term first.
    pub pi: Vec<String>,
    pub char_poly: Vec<String>,
    pub tableau: TableauEcho,
    pub flags: FlagsEcho,
    pub exact_input: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableauEcho {
    pub c: Vec<String>,
    pub a: Vec<Vec<String>>,
    pub b: Vec<String>,
    pub exact_entries: bool,
    /// Exact entries in `Q(sqrt d)` when the rational entries above are
    /// approximations and the nodes allow it.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surd: Option<SurdEcho>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SurdEcho {
    pub radicand: String,
    pub c: Vec<String>,
    pub a: Vec<Vec<String>>,
    pub b: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlagsEcho {
    pub forward: bool,
    pub symmetric: bool,
    pub contains_zero_node: bool,
    pub gauss: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityEcho {
    /// `R` in lowest terms with integer coefficients, constant term first.
    pub numerator: Vec<String>,
    pub denominator: Vec<String>,
    pub display: String,
    /// Common factor of the unreduced pair, made monic.
    pub common_factor: Vec<String>,
    /// `|D(ix)|^2 - |N(ix)|^2` for the reduced pair, in powers of `x`.
    pub boundary_deficit: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub notion: String,
    pub holds: bool,
    pub criterion: String,
    pub exact: bool,
    pub details: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumEcho {
    pub digits: u32,
    pub converged: bool,
    pub eigenvalues: Vec<EigenEcho>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EigenEcho {
    pub re: f64,
    pub im: f64,
    /// `None` when no error bound was obtained.
    pub radius: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampleRow {
    pub x: f64,
    /// `None` at a pole.
    pub abs_r: Option<f64>,
    pub deficit: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DahlquistRequest {
    pub a_re: f64,
    pub a_im: f64,
    pub h: f64,
    pub n: usize,
}

impl std::str::FromStr for DahlquistRequest {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [re, im, h, n] = parts[..] else {
            return Err("expected A_REAL,A_IMAG,H,N".into());
        };
        let f = |t: &str| t.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or(format!("`{t}` is not a finite number"));
        Ok(DahlquistRequest {
            a_re: f(re)?,
            a_im: f(im)?,
            h: f(h)?,
            n: n.parse().map_err(|_| format!("`{n}` is not a step count"))?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DahlquistEcho {
    pub request: DahlquistRequest,
    pub deviation: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaplaceEcho {
    pub re: f64,
    pub im: f64,
    /// `None` at a pole of `R`.
    pub deviation: Option<f64>,
}

/// Points at which the Laplace form is compared with `N/D`.
pub const LAPLACE_POINTS: [(f64, f64); 3] = [(1.0, 0.0), (2.0, 0.0), (1.0, 1.0)];

fn strs(v: &[Scalar]) -> Vec<String> {
    v.iter().map(format_scalar).collect()
}

fn poly_strs(p: &Poly) -> Vec<String> {
    strs(p.coeffs())
}

fn finite(x: f64) -> Option<f64> {
    x.is_finite().then_some(x)
}

fn surd_echo(m: &CollocationMethod) -> Option<SurdEcho> {
    if m.tableau.has_exact_entries() {
        return None;
    }
    let t = surd_tableau(&m.pi, &m.nodes)?;
    let f = |v: &[QuadraticSurd]| v.iter().map(SurdTableau::format_entry).collect::<Vec<_>>();
    Some(SurdEcho {
        radicand: t.radicand.to_string(),
        c: f(&t.c),
        a: t.a.iter().map(|r| f(r)).collect(),
        b: f(&t.b),
    })
}

pub fn method_echo(m: &CollocationMethod, char_poly: &Poly) -> MethodEcho {
    MethodEcho {
        family: m.family.to_string(),
        stages: m.stages(),
        nodes: strs(m.nodes.values()),
        nodes_exact: m.nodes.exactness().is_exact(),
        input_order: strs(m.nodes.input_order()),
        nodes_approx: m.nodes.to_f64(),
        pi: poly_strs(&m.pi),
        char_poly: poly_strs(char_poly),
        tableau: TableauEcho {
            c: strs(&m.tableau.c),
            a: m.tableau.a.iter().map(|r| strs(r)).collect(),
            b: strs(&m.tableau.b),
            exact_entries: m.tableau.has_exact_entries(),
            surd: surd_echo(m),
        },
        flags: FlagsEcho {
            forward: m.flags.forward,
            symmetric: m.flags.symmetric,
            contains_zero_node: m.flags.contains_zero_node,
            gauss: m.is_gauss,
        },
        exact_input: m.pi_exact(),
    }
}

fn stability_echo(sf: &StabilityFunction, e: &BoundaryDeficit) -> StabilityEcho {
    let (n, d) = sf.integer_polys();
    StabilityEcho {
        numerator: poly_strs(&n),
        denominator: poly_strs(&d),
        display: sf.display(),
        common_factor: poly_strs(&sf.g.monic()),
        boundary_deficit: poly_strs(&e.e),
    }
}

fn spectrum_echo(spec: &SpectrumApprox) -> SpectrumEcho {
    SpectrumEcho {
        digits: spec.digits,
        converged: spec.converged,
        eigenvalues: spec
            .roots
            .iter()
            .map(|r| EigenEcho {
                re: r.re,
                im: r.im,
                radius: finite(r.radius),
            })
            .collect(),
    }
}

/// `|R(ix)|` and the boundary deficit on `num` evenly spaced points.
pub fn sample_rows(sf: &StabilityFunction, e: &BoundaryDeficit, xmin: f64, xmax: f64, num: usize) -> Vec<SampleRow> {
    let (dre, dim) = sf.d_red.axis_parts();
    (0..num)
        .map(|k| {
            let x = if num == 1 {
                xmin
            } else {
                xmin + (xmax - xmin) * k as f64 / (num - 1) as f64
            };
            let xq = from_f64(x);
            let pole = dre.eval(&xq) == Scalar::from_integer(0.into()) && dim.eval(&xq) == Scalar::from_integer(0.into());
            let z = Complex64::new(0.0, x);
            let abs_r = if pole {
                None
            } else {
                finite((sf.n_red.eval_complex(z) / sf.d_red.eval_complex(z)).norm())
            };
            SampleRow {
                x,
                abs_r,
                deficit: e.eval_f64(x),
            }
        })
        .collect()
}

pub fn run_dahlquist(m: &CollocationMethod, sf: &StabilityFunction, req: DahlquistRequest) -> DahlquistEcho {
    match dahlquist_validate(&m.tableau, sf, Complex64::new(req.a_re, req.a_im), req.h, req.n) {
        Ok(dev) => DahlquistEcho {
            request: req,
            deviation: finite(dev),
            error: None,
        },
        Err(e) => DahlquistEcho {
            request: req,
            deviation: None,
            error: Some(e.to_string()),
        },
    }
}

pub fn run_laplace(m: &CollocationMethod, sf: &StabilityFunction) -> Vec<LaplaceEcho> {
    LAPLACE_POINTS
        .iter()
        .map(|&(re, im)| {
            let l = Complex64::new(re, im);
            let at_pole = sf.d.eval_complex(l).norm() == 0.0;
            LaplaceEcho {
                re,
                im,
                deviation: if at_pole { None } else { finite(laplace_cross_check(&m.pi, sf, l)) },
            }
        })
        .collect()
}

impl ReportDocument {
    pub fn new(m: &CollocationMethod, r: &StabilityReport) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            method: method_echo(m, &r.char_poly),
            stability_function: stability_echo(&r.stability_function, &r.deficit),
            verdicts: r
                .verdicts()
                .map(|(n, v)| VerdictEntry {
                    notion: n.as_str().to_string(),
                    holds: v.holds,
                    criterion: v.criterion().as_str().to_string(),
                    exact: v.is_exact(),
                    details: v.certificate.details.clone(),
                })
                .collect(),
            spectrum: spectrum_echo(&r.spectrum),
            samples: None,
            dahlquist: None,
            laplace: None,
        }
    }

    pub fn verdict(&self, notion: &str) -> Option<&VerdictEntry> {
        self.verdicts.iter().find(|v| v.notion == notion)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dahlquist_request_parsing() {
        let r: DahlquistRequest = "-1, 0.5,0.1,20".parse().unwrap();
        assert_eq!(r, DahlquistRequest { a_re: -1.0, a_im: 0.5, h: 0.1, n: 20 });
        assert!("1,2,3".parse::<DahlquistRequest>().is_err());
        assert!("1,2,inf,3".parse::<DahlquistRequest>().is_err());
        assert!("1,2,3,-4".parse::<DahlquistRequest>().is_err());
    }
}
