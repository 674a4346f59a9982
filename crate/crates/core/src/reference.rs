//! Worked examples with independently published tableaux, stability
//! functions, spectra and verdicts, and a checker that recomputes each one.

use num_complex::Complex64;

use crate::collocation::family::{CollocationMethod, NodeFamily};
use crate::collocation::nodes::parse_nodes;
use crate::collocation::tableau::collocation_coefficients;
use crate::exactmath::field::QuadraticSurd;
use crate::exactmath::matrix::RationalFunction;
use crate::exactmath::poly::{gcd_poly, Poly};
use crate::exactmath::scalar::{parse_scalar, rat, Scalar};
use crate::rootloc::axis::axis_gcd;
use crate::rootloc::char_poly;
use crate::stability::classify::{classify, AnalysisOptions, Notion, StabilityReport};
use crate::stability::decide::Criterion;
use crate::stability::resolvent::resolvent_entries;

/// Tolerance for matching published eigenvalue digits.
pub const EIGENVALUE_TOLERANCE: f64 = 1e-8;

#[derive(Clone, Debug)]
pub enum MethodInput {
    Nodes(&'static str),
    Gauss(usize),
    Pi(Poly),
}

impl MethodInput {
    pub fn build(&self) -> crate::Result<CollocationMethod> {
        let family = match self {
            MethodInput::Nodes(t) => NodeFamily::Explicit(parse_nodes(t)?),
            MethodInput::Gauss(s) => NodeFamily::Gauss(*s),
            MethodInput::Pi(p) => NodeFamily::PiCoefficients(p.clone()),
        };
        CollocationMethod::from_family(family)
    }
}

/// A published Butcher tableau.
#[derive(Clone, Debug)]
pub enum TableauFixture {
    Rational {
        a: Vec<Vec<Scalar>>,
        b: Vec<Scalar>,
    },
    /// Entries in `Q(sqrt d)`, compared against an exact recomputation from
    /// the listed nodes in the same field.
    Surd {
        c: Vec<QuadraticSurd>,
        a: Vec<Vec<QuadraticSurd>>,
        b: Vec<QuadraticSurd>,
    },
}

/// Rational function given by ascending integer coefficients.
pub type IntRatio = (Vec<i64>, Vec<i64>);

#[derive(Clone, Debug)]
pub struct ExampleFixture {
    pub name: &'static str,
    pub input: MethodInput,
    pub tableau: Option<TableauFixture>,
    /// Reduced stability function, up to a common constant.
    pub stability_function: Option<IntRatio>,
    /// Integer multiple of the characteristic polynomial of `A`.
    pub char_poly_multiple: Option<Vec<i64>>,
    /// Eigenvalues of `A` that must appear in the computed spectrum.
    pub eigenvalues: Vec<(f64, f64)>,
    /// Reduced entries of `(I - λA)^{-1}`, row by row.
    pub resolvent: Option<Vec<Vec<IntRatio>>>,
    /// Reduced entries of `λ b^t (I - λA)^{-1}`.
    pub weighted_row: Option<Vec<IntRatio>>,
    /// Integer polynomial whose real roots are the axis parameters of
    /// `tau(pi)`, and the common factor of `tau(pi(X))` and `tau(pi(X+1))`.
    pub shared_axis_factor: Option<Vec<i64>>,
    pub verdicts: Vec<(Notion, bool)>,
    pub criteria: Vec<(Notion, Criterion)>,
    pub uncertified: Vec<Notion>,
}

impl ExampleFixture {
    fn new(name: &'static str, input: MethodInput) -> Self {
        ExampleFixture {
            name,
            input,
            tableau: None,
            stability_function: None,
            char_poly_multiple: None,
            eigenvalues: Vec::new(),
            resolvent: None,
            weighted_row: None,
            shared_axis_factor: None,
            verdicts: Vec::new(),
            criteria: Vec::new(),
            uncertified: Vec::new(),
        }
    }
}

fn q(t: &str) -> Scalar {
    parse_scalar(t).expect("fixture literal").0
}

fn rows(entries: &[&[&str]]) -> Vec<Vec<Scalar>> {
    entries.iter().map(|r| r.iter().map(|t| q(t)).collect()).collect()
}

fn vec_q(entries: &[&str]) -> Vec<Scalar> {
    entries.iter().map(|t| q(t)).collect()
}

/// `a + b sqrt(d)`.
fn surd(a: &str, b: &str, d: i64) -> QuadraticSurd {
    QuadraticSurd::new(q(a), q(b), d.into())
}

fn qr(a: &str) -> QuadraticSurd {
    QuadraticSurd::rational(q(a))
}

fn ints(v: &[i64]) -> Poly {
    Poly::from_i64(v)
}

fn ratio(num: &[i64], den: &[i64]) -> IntRatio {
    (num.to_vec(), den.to_vec())
}

fn gauss2() -> ExampleFixture {
    let mut f = ExampleFixture::new("Gauss, s = 2", MethodInput::Gauss(2));
    f.tableau = Some(TableauFixture::Surd {
        c: vec![surd("1/2", "-1/6", 3), surd("1/2", "1/6", 3)],
        a: vec![
            vec![qr("1/4"), surd("1/4", "-1/6", 3)],
            vec![surd("1/4", "1/6", 3), qr("1/4")],
        ],
        b: vec![qr("1/2"), qr("1/2")],
    });
    f.verdicts = vec![(Notion::AHat, true), (Notion::IHat, true)];
    f.criteria = vec![(Notion::AHat, Criterion::GaussTheorem)];
    f
}

fn equispaced2() -> ExampleFixture {
    let mut f = ExampleFixture::new("nodes (1/3, 2/3)", MethodInput::Nodes("1/3,2/3"));
    f.tableau = Some(TableauFixture::Rational {
        a: rows(&[&["1/2", "-1/6"], &["2/3", "0"]]),
        b: vec_q(&["1/2", "1/2"]),
    });
    let im = 7f64.sqrt() / 12.0;
    f.eigenvalues = vec![(0.25, im), (0.25, -im)];
    // 18 X^2 - 9 X + 2 = 18 (X^2 - X/2 + 1/9)
    f.char_poly_multiple = Some(vec![2, -9, 18]);
    f.verdicts = vec![(Notion::AHat, true), (Notion::IHat, true)];
    f.criteria = vec![(Notion::AHat, Criterion::SymmetricFastpathA)];
    f
}

fn lobatto2() -> ExampleFixture {
    let mut f = ExampleFixture::new("Lobatto nodes (0, 1)", MethodInput::Nodes("0,1"));
    f.tableau = Some(TableauFixture::Rational {
        a: rows(&[&["0", "0"], &["1/2", "1/2"]]),
        b: vec_q(&["1/2", "1/2"]),
    });
    // -(l + 2)/(l - 2)
    f.stability_function = Some(ratio(&[-2, -1], &[-2, 1]));
    f.resolvent = Some(vec![
        vec![ratio(&[1], &[1]), ratio(&[0], &[1])],
        vec![ratio(&[0, 1], &[2, -1]), ratio(&[2], &[2, -1])],
    ]);
    f.weighted_row = Some(vec![ratio(&[0, 1], &[2, -1]), ratio(&[0, 1], &[2, -1])]);
    f.verdicts = vec![
        (Notion::A, true),
        (Notion::AS, true),
        (Notion::ASI, true),
        (Notion::AHat, true),
    ];
    f
}

fn quarter_third() -> ExampleFixture {
    let mut f = ExampleFixture::new("nodes (1/4, 1/3)", MethodInput::Nodes("1/4,1/3"));
    f.tableau = Some(TableauFixture::Rational {
        a: rows(&[&["5/8", "-3/8"], &["2/3", "-1/3"]]),
        b: vec_q(&["-2", "3"]),
    });
    f.stability_function = Some(ratio(&[24, 17, 6], &[24, -7, 1]));
    f.verdicts = vec![(Notion::A, false), (Notion::I, false)];
    f
}

fn four_stage() -> ExampleFixture {
    let mut f = ExampleFixture::new("uniform nodes (0, 1/3, 2/3, 1)", MethodInput::Nodes("0,1/3,2/3,1"));
    f.tableau = Some(TableauFixture::Rational {
        a: rows(&[
            &["0", "0", "0", "0"],
            &["1/8", "19/72", "-5/72", "1/72"],
            &["1/9", "4/9", "1/9", "0"],
            &["1/8", "3/8", "3/8", "1/8"],
        ]),
        b: vec_q(&["1/8", "3/8", "3/8", "1/8"]),
    });
    f.stability_function = Some(ratio(&[-108, -54, -11, -1], &[-108, 54, -11, 1]));
    f.verdicts = vec![(Notion::AHat, true)];
    f
}

/// `(X - 1/4)(X - 1/2)(X - 3/4)(X^2 - X + 3/14)`.
pub fn sqrt7_pi() -> Poly {
    &Poly::from_roots(&[rat(1, 4), rat(1, 2), rat(3, 4)]) * &Poly::new(vec![rat(3, 14), rat(-1, 1), rat(1, 1)])
}

fn sqrt7_method() -> ExampleFixture {
    let mut f = ExampleFixture::new("five stages with nodes 1/2 ± sqrt(7)/14", MethodInput::Pi(sqrt7_pi()));
    let r7 = QuadraticSurd::sqrt(7);
    let k_minus = (qr("7") - r7.clone()) * (qr("7") - r7.clone());
    let k_plus = (qr("7") + r7.clone()) * (qr("7") + r7.clone());
    let s = |a: &str, b: &str| surd(a, b, 7);
    let km = |x: &str, y: &str, d: &str| k_minus.clone() * s(y, x) / qr(d);
    let kp = |x: &str, y: &str, d: &str| k_plus.clone() * s(y, x) / qr(d);
    f.tableau = Some(TableauFixture::Surd {
        c: vec![qr("1/4"), s("1/2", "-1/14"), qr("1/2"), s("1/2", "1/14"), qr("3/4")],
        a: vec![
            vec![qr("3259/1440"), s("-1421/720", "-21/64"), qr("163/120"), s("-1421/720", "21/64"), qr("829/1440")],
            vec![
                km("281", "1120", "15435"),
                s("-343/180", "-107/315"),
                km("106", "455", "10290"),
                -km("97", "770", "17640"),
                km("71", "280", "15435"),
            ],
            vec![qr("203/90"), s("-343/180", "-7/24"), qr("22/15"), s("-343/180", "7/24"), qr("53/90")],
            vec![
                -kp("281", "-1120", "15435"),
                kp("97", "-770", "17640"),
                -kp("106", "-455", "10290"),
                s("-343/180", "107/315"),
                -kp("71", "-280", "15435"),
            ],
            vec![qr("363/160"), s("-147/80", "-21/64"), qr("63/40"), s("-147/80", "21/64"), qr("93/160")],
        ],
        b: ["128/45", "-343/90", "44/15", "-343/90", "128/45"].iter().map(|t| qr(t)).collect(),
    });
    f.shared_axis_factor = Some(vec![-63, 0, 3136]);
    f.verdicts = vec![(Notion::A, true), (Notion::ASI, false), (Notion::AS, true)];
    f.criteria = vec![(Notion::AS, Criterion::ResolventNumerical)];
    f.uncertified = vec![Notion::AS];
    f
}

fn five_stage_rational() -> ExampleFixture {
    let mut f = ExampleFixture::new(
        "nodes (1/4, 1/3, 1/2, 2/3, 3/4)",
        MethodInput::Nodes("1/4,1/3,1/2,2/3,3/4"),
    );
    f.tableau = Some(TableauFixture::Rational {
        a: rows(&[
            &["4453/2400", "-4347/1600", "221/120", "-1917/1600", "1123/2400"],
            &["3824/2025", "-133/50", "742/405", "-179/150", "944/2025"],
            &["281/150", "-513/200", "29/15", "-243/200", "71/150"],
            &["3808/2025", "-194/75", "824/405", "-28/25", "928/2025"],
            &["1503/800", "-4131/1600", "81/40", "-1701/1600", "393/800"],
        ]),
        b: vec_q(&["176/75", "-189/50", "58/15", "-189/50", "176/75"]),
    });
    f.char_poly_multiple = Some(vec![-6, 71, -642, 4164, -17280, 34560]);
    f.eigenvalues = vec![(-0.0008959473813, 0.1432367668), (-0.0008959473813, -0.1432367668)];
    f.verdicts = vec![
        (Notion::IHat, true),
        (Notion::A, false),
        (Notion::I, true),
        (Notion::IS, true),
        (Notion::ISI, true),
    ];
    f
}

/// Every worked example, in presentation order.
pub fn fixtures() -> Vec<ExampleFixture> {
    vec![
        gauss2(),
        equispaced2(),
        lobatto2(),
        quarter_third(),
        four_stage(),
        sqrt7_method(),
        five_stage_rational(),
    ]
}

#[derive(Clone, Debug)]
pub struct FixtureOutcome {
    pub name: &'static str,
    pub failures: Vec<String>,
}

impl FixtureOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn same_up_to_constant(a: &Poly, b: &Poly) -> bool {
    match (a.leading_coeff(), b.leading_coeff()) {
        (Some(la), Some(lb)) => a.scale(&(lb / la)) == *b,
        (None, None) => true,
        _ => false,
    }
}

fn rf(r: &IntRatio) -> RationalFunction {
    RationalFunction::new(ints(&r.0), ints(&r.1))
}

fn check_tableau(fx: &TableauFixture, m: &CollocationMethod, out: &mut Vec<String>) {
    match fx {
        TableauFixture::Rational { a, b } => {
            if !m.tableau.has_exact_entries() {
                out.push("tableau: entries are not exact".into());
                return;
            }
            for (i, row) in a.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if m.tableau.a[i][j] != *x {
                        out.push(format!("tableau: a[{}][{}] = {} but expected {}", i + 1, j + 1, m.tableau.a[i][j], x));
                    }
                }
            }
            if m.tableau.b != *b {
                out.push("tableau: b differs".into());
            }
        }
        TableauFixture::Surd { c, a, b } => {
            let approx: Vec<f64> = c.iter().map(QuadraticSurd::to_f64).collect();
            let nodes = m.nodes.to_f64();
            if approx.len() != nodes.len() || approx.iter().zip(&nodes).any(|(x, y)| (x - y).abs() > 1e-12) {
                out.push("tableau: nodes differ from the method's nodes".into());
            }
            let (ca, cb) = collocation_coefficients(c);
            for (i, row) in a.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    if ca[i][j] != *x {
                        out.push(format!("tableau: a[{}][{}] = {:?} but expected {:?}", i + 1, j + 1, ca[i][j], x));
                    }
                }
            }
            if cb != *b {
                out.push("tableau: b differs".into());
            }
            let fa = m.tableau.a_f64();
            let close = a.iter().flatten().zip(fa.iter().flatten()).all(|(x, y)| (x.to_f64() - y).abs() < 1e-12);
            if !close {
                out.push("tableau: computed approximation differs from the exact entries".into());
            }
        }
    }
}

fn check_report(fx: &ExampleFixture, m: &CollocationMethod, r: &StabilityReport, out: &mut Vec<String>) {
    if let Some((num, den)) = &fx.stability_function {
        let (n, d) = r.stability_function.integer_polys();
        let cross_ok = (&n * &ints(den)) == (&d * &ints(num));
        let deg_ok = n.degree() == ints(num).degree() && d.degree() == ints(den).degree();
        if !(cross_ok && deg_ok) {
            out.push(format!("stability function: got {}", r.stability_function.display()));
        }
    }
    if let Some(mult) = &fx.char_poly_multiple {
        if !same_up_to_constant(&r.char_poly, &ints(mult)) {
            out.push(format!("characteristic polynomial: got {}", r.char_poly));
        }
    }
    for &(re, im) in &fx.eigenvalues {
        let hit = r.spectrum.roots.iter().any(|z| (z.value() - Complex64::new(re, im)).norm() < EIGENVALUE_TOLERANCE);
        if !hit {
            out.push(format!("eigenvalue {re} {im:+}i not found"));
        }
    }
    if fx.resolvent.is_some() || fx.weighted_row.is_some() {
        match resolvent_entries(&m.tableau) {
            Ok(res) => {
                if let Some(exp) = &fx.resolvent {
                    for (i, row) in exp.iter().enumerate() {
                        for (j, e) in row.iter().enumerate() {
                            if res.entries[i][j] != rf(e) {
                                out.push(format!("resolvent: entry ({}, {}) is {}", i + 1, j + 1, res.entries[i][j]));
                            }
                        }
                    }
                }
                if let Some(exp) = &fx.weighted_row {
                    let row = res.weighted_row(&m.tableau);
                    for (j, e) in exp.iter().enumerate() {
                        if row[j] != rf(e) {
                            out.push(format!("weighted resolvent: entry {} is {}", j + 1, row[j]));
                        }
                    }
                }
            }
            Err(e) => out.push(format!("resolvent: {e}")),
        }
    }
    if let Some(factor) = &fx.shared_axis_factor {
        let tau = m.pi.tau();
        let shared = gcd_poly(&tau, &m.pi.shift(&Scalar::from_integer(1.into())).tau());
        let f = ints(factor);
        if axis_gcd(&tau) != f.monic() {
            out.push(format!("axis factor of tau(pi): got {}", axis_gcd(&tau)));
        }
        // a root x of the axis factor gives the pair of roots ±ix, i.e. X^2 + x^2
        let c0 = -f.coeff(0) / f.coeff(2);
        let expected = Poly::new(vec![c0, Scalar::from_integer(0.into()), Scalar::from_integer(1.into())]);
        if shared != expected {
            out.push(format!("common factor of tau(pi(X)) and tau(pi(X+1)): got {shared}"));
        }
    }
    for &(n, expected) in &fx.verdicts {
        if r.holds(n) != expected {
            out.push(format!("verdict {n}: got {} expected {expected}", r.holds(n)));
        }
    }
    for &(n, c) in &fx.criteria {
        if r.verdict(n).criterion() != c {
            out.push(format!("certificate {n}: got {} expected {c}", r.verdict(n).criterion()));
        }
    }
    for &n in &fx.uncertified {
        if r.verdict(n).is_exact() {
            out.push(format!("certificate {n}: expected a numerical certificate"));
        }
    }
}

/// Recomputes everything recorded in `fx` and lists the mismatches.
pub fn run_fixture(fx: &ExampleFixture) -> FixtureOutcome {
    let mut failures = Vec::new();
    match fx.input.build() {
        Err(e) => failures.push(format!("construction failed: {e}")),
        Ok(m) => {
            if let Some(t) = &fx.tableau {
                check_tableau(t, &m, &mut failures);
            }
            match classify(&m, &AnalysisOptions::default()) {
                Ok(r) => check_report(fx, &m, &r, &mut failures),
                Err(e) => failures.push(format!("classification failed: {e}")),
            }
            if char_poly(&m.pi, m.stages()).degree() != Some(m.stages()) {
                failures.push("characteristic polynomial has the wrong degree".into());
            }
        }
    }
    FixtureOutcome {
        name: fx.name,
        failures,
    }
}

pub fn run_all() -> Vec<FixtureOutcome> {
    fixtures().iter().map(run_fixture).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_pass() {
        for o in run_all() {
            assert!(o.passed(), "{}: {:?}", o.name, o.failures);
        }
    }

    #[test]
    fn perturbed_rational_entry_fails() {
        let mut f = four_stage();
        if let Some(TableauFixture::Rational { a, .. }) = &mut f.tableau {
            a[1][1] += rat(1, 72);
        }
        let o = run_fixture(&f);
        assert_eq!(o.failures.len(), 1, "{:?}", o.failures);
    }

    #[test]
    fn perturbed_surd_entry_fails() {
        let mut f = sqrt7_method();
        if let Some(TableauFixture::Surd { a, .. }) = &mut f.tableau {
            a[1][1] = a[1][1].clone() + QuadraticSurd::sqrt(7) * qr("1/315");
        }
        assert!(!run_fixture(&f).passed());
    }

    #[test]
    fn wrong_verdict_fails() {
        let mut f = quarter_third();
        f.verdicts.push((Notion::IHat, true));
        assert!(!run_fixture(&f).passed());
    }
}
