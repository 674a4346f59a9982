//! Full classification of a collocation method.

use std::fmt;

use crate::collocation::family::CollocationMethod;
use crate::collocation::nodes::StructureFlags;
use crate::error::{Error, Result};
use crate::exactmath::poly::Poly;
use crate::rootloc::numeric::{numeric_roots, SpectrumApprox, DEFAULT_DIGITS};
use crate::rootloc::{all_open_rhp, char_poly, imaginary_axis_roots};

use super::decide::{
    b_in_range_of_at, decide_a_full, decide_i, decide_i_full, decide_resolvent_exact,
    decide_resolvent_spectral, decide_weighted_exact, decide_weighted_numerical, Criterion,
    Region, Verdict,
};
use super::function::{boundary_deficit, stability_function, BoundaryDeficit, StabilityFunction};
use super::resolvent::{resolvent_entries, Resolvent};
use super::small_stage::{small_s_consistency, SMALL_STAGE_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Notion {
    A,
    I,
    AS,
    ASI,
    IS,
    ISI,
    AHat,
    IHat,
}

impl Notion {
    pub const ALL: [Notion; 8] = [
        Notion::A,
        Notion::I,
        Notion::AS,
        Notion::ASI,
        Notion::IS,
        Notion::ISI,
        Notion::AHat,
        Notion::IHat,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Notion::A => "A",
            Notion::I => "I",
            Notion::AS => "AS",
            Notion::ASI => "ASI",
            Notion::IS => "IS",
            Notion::ISI => "ISI",
            Notion::AHat => "A_hat",
            Notion::IHat => "I_hat",
        }
    }

    pub fn parse(s: &str) -> Option<Notion> {
        Notion::ALL.into_iter().find(|n| n.as_str() == s)
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Skip every structural shortcut and run the full decisions.
    pub force_full: bool,
    /// Working precision of the eigenvalue oracle.
    pub spectrum_digits: u32,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            force_full: false,
            spectrum_digits: DEFAULT_DIGITS,
        }
    }
}

#[derive(Clone, Debug)]
pub struct StabilityReport {
    verdicts: Vec<Verdict>,
    pub flags: StructureFlags,
    pub is_gauss: bool,
    pub stability_function: StabilityFunction,
    pub deficit: BoundaryDeficit,
    /// Characteristic polynomial of `A`.
    pub char_poly: Poly,
    pub spectrum: SpectrumApprox,
    /// The node polynomial was given exactly.
    pub exact_input: bool,
}

impl StabilityReport {
    pub fn verdict(&self, n: Notion) -> &Verdict {
        &self.verdicts[n.index()]
    }

    pub fn holds(&self, n: Notion) -> bool {
        self.verdict(n).holds
    }

    pub fn verdicts(&self) -> impl Iterator<Item = (Notion, &Verdict)> {
        Notion::ALL.into_iter().zip(&self.verdicts)
    }

    /// `A => I`, `AS => IS`, `ASI => ISI`, and the two hat conjunctions.
    pub fn check_lattice(&self) -> Result<()> {
        let h = |n| self.holds(n);
        let rules = [
            (!h(Notion::A) || h(Notion::I), "A without I"),
            (!h(Notion::AS) || h(Notion::IS), "AS without IS"),
            (!h(Notion::ASI) || h(Notion::ISI), "ASI without ISI"),
            (
                h(Notion::AHat) == (h(Notion::A) && h(Notion::AS) && h(Notion::ASI)),
                "A_hat differs from A ∧ AS ∧ ASI",
            ),
            (
                h(Notion::IHat) == (h(Notion::I) && h(Notion::IS) && h(Notion::ISI)),
                "I_hat differs from I ∧ IS ∧ ISI",
            ),
        ];
        match rules.iter().find(|(ok, _)| !ok) {
            Some((_, msg)) => Err(Error::InternalConsistency(format!("verdict lattice: {msg}"))),
            None => Ok(()),
        }
    }
}

struct Context<'a> {
    method: &'a CollocationMethod,
    sf: StabilityFunction,
    deficit: BoundaryDeficit,
    char_poly: Poly,
    exact: bool,
    resolvent: Option<Resolvent>,
}

impl Context<'_> {
    fn region_resolvent(&self, region: Region) -> Verdict {
        match &self.resolvent {
            Some(res) => decide_resolvent_exact(res, region, self.exact),
            None => decide_resolvent_spectral(&self.char_poly, region, self.exact),
        }
    }

    /// AS or IS; `bounded_resolvent` is the ASI or ISI verdict for the same
    /// region, if already known.
    fn region_weighted(&self, region: Region, bounded_resolvent: Option<&Verdict>) -> Verdict {
        let tab = &self.method.tableau;
        match &self.resolvent {
            Some(res) => {
                if bounded_resolvent.is_some_and(|v| v.holds) && b_in_range_of_at(tab) {
                    let which = if region == Region::ClosedLhp { "ASI" } else { "ISI" };
                    return Verdict::new(
                        true,
                        Criterion::BInRangeAt,
                        self.exact,
                        format!("b lies in the range of A^t and the method is {which}-stable"),
                    );
                }
                decide_weighted_exact(&res.weighted_row(tab), region, self.exact)
            }
            None => decide_weighted_numerical(tab, &self.char_poly, region, self.exact),
        }
    }
}

fn conjunction(parts: [&Verdict; 3], names: &str) -> Verdict {
    match parts.iter().find(|v| !v.holds) {
        Some(v) => Verdict::new(
            false,
            v.criterion(),
            v.is_exact(),
            format!("fails a component of {names}: {}", v.certificate.details),
        ),
        None => Verdict::new(
            true,
            Criterion::FullDecision,
            parts.iter().all(|v| v.is_exact()),
            format!("{names} all hold"),
        ),
    }
}

/// Decides all eight stability notions for `method`.
pub fn classify(method: &CollocationMethod, opts: &AnalysisOptions) -> Result<StabilityReport> {
    let s = method.stages();
    let sf = stability_function(&method.pi, s);
    let ctx = Context {
        method,
        deficit: boundary_deficit(&sf),
        sf,
        char_poly: char_poly(&method.pi, s),
        exact: method.pi_exact(),
        resolvent: resolvent_entries(&method.tableau).ok(),
    };
    let mut v: [Option<Verdict>; 8] = Default::default();
    let set = |v: &mut [Option<Verdict>; 8], n: Notion, x: Verdict| v[n.index()] = Some(x);

    if opts.force_full {
        set(&mut v, Notion::A, decide_a_full(&ctx.sf, &ctx.deficit, ctx.exact));
        set(&mut v, Notion::I, decide_i_full(&ctx.sf, &ctx.deficit, ctx.exact));
    } else if method.is_gauss {
        for n in Notion::ALL {
            set(
                &mut v,
                n,
                Verdict::new(
                    true,
                    Criterion::GaussTheorem,
                    true,
                    format!("Gauss nodes, s = {s}"),
                ),
            );
        }
    } else {
        shortcuts(&ctx, &mut v)?;
    }

    let get = |v: &[Option<Verdict>; 8], n: Notion| v[n.index()].clone();
    if get(&v, Notion::ASI).is_none() {
        set(&mut v, Notion::ASI, ctx.region_resolvent(Region::ClosedLhp));
    }
    if get(&v, Notion::ISI).is_none() {
        set(&mut v, Notion::ISI, ctx.region_resolvent(Region::Axis));
    }
    if get(&v, Notion::AS).is_none() {
        let asi = get(&v, Notion::ASI);
        set(&mut v, Notion::AS, ctx.region_weighted(Region::ClosedLhp, asi.as_ref()));
    }
    if get(&v, Notion::IS).is_none() {
        let isi = get(&v, Notion::ISI);
        set(&mut v, Notion::IS, ctx.region_weighted(Region::Axis, isi.as_ref()));
    }
    let verdicts: Vec<Verdict> = {
        let g = |n: Notion| v[n.index()].clone().expect("component decided");
        let (a, i, as_, asi, is, isi) = (
            g(Notion::A),
            g(Notion::I),
            g(Notion::AS),
            g(Notion::ASI),
            g(Notion::IS),
            g(Notion::ISI),
        );
        let a_hat = v[Notion::AHat.index()]
            .clone()
            .unwrap_or_else(|| conjunction([&a, &as_, &asi], "A, AS, ASI"));
        let i_hat = v[Notion::IHat.index()]
            .clone()
            .unwrap_or_else(|| conjunction([&i, &is, &isi], "I, IS, ISI"));
        vec![a, i, as_, asi, is, isi, a_hat, i_hat]
    };

    let report = StabilityReport {
        verdicts,
        flags: method.flags,
        is_gauss: method.is_gauss,
        spectrum: numeric_roots(&ctx.char_poly, opts.spectrum_digits),
        stability_function: ctx.sf,
        deficit: ctx.deficit,
        char_poly: ctx.char_poly,
        exact_input: ctx.exact,
    };
    report.check_lattice()?;
    if method.flags.forward && s <= SMALL_STAGE_LIMIT {
        small_s_consistency(
            &report.char_poly,
            report.holds(Notion::I),
            report.holds(Notion::A),
        )?;
    }
    Ok(report)
}

/// Structural shortcuts, in order; leaves undecided components as `None`.
fn shortcuts(ctx: &Context<'_>, v: &mut [Option<Verdict>; 8]) -> Result<()> {
    let method = ctx.method;
    let s = method.stages();
    let tau = method.pi.tau();
    let tau_no_closed_lhp = all_open_rhp(&tau);
    let tau_axis_free = imaginary_axis_roots(&tau).is_empty();
    let symmetric = method.flags.symmetric;
    let exact = ctx.exact;

    let i = decide_i(&ctx.sf, &ctx.deficit, symmetric, exact);
    let i_holds = i.holds;
    v[Notion::I.index()] = Some(i);

    if symmetric && tau_no_closed_lhp {
        let details = "symmetric nodes and no eigenvalue of A in the closed left half-plane";
        for n in [Notion::A, Notion::AS, Notion::ASI, Notion::AHat, Notion::IS, Notion::ISI] {
            v[n.index()] = Some(Verdict::new(true, Criterion::SymmetricFastpathA, exact, details));
        }
        return Ok(());
    }

    let a = if method.flags.forward && s <= SMALL_STAGE_LIMIT && i_holds {
        let full = decide_a_full(&ctx.sf, &ctx.deficit, exact);
        if !full.holds {
            return Err(Error::InternalConsistency(
                "I-stable forward method with s <= 4 failed the full A-stability decision".into(),
            ));
        }
        Verdict::new(
            true,
            Criterion::SmallSTheorem,
            exact,
            format!("forward method with s = {s} <= 4 and I-stable"),
        )
    } else {
        decide_a_full(&ctx.sf, &ctx.deficit, exact)
    };
    let a_holds = a.holds;
    v[Notion::A.index()] = Some(a);

    if a_holds && tau_no_closed_lhp {
        let details = "A-stable and no eigenvalue of A in the closed left half-plane";
        for n in [Notion::AS, Notion::ASI, Notion::AHat, Notion::IS, Notion::ISI] {
            v[n.index()] = Some(Verdict::new(true, Criterion::LemmaAHat, exact, details));
        }
        return Ok(());
    }
    if i_holds && tau_axis_free {
        let (criterion, details) = if symmetric {
            (Criterion::SymmetricFastpathI, "symmetric nodes and no eigenvalue of A on the imaginary axis")
        } else {
            (Criterion::LemmaIHat, "I-stable and no eigenvalue of A on the imaginary axis")
        };
        for n in [Notion::IS, Notion::ISI] {
            v[n.index()] = Some(Verdict::new(true, criterion, exact, details));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collocation::family::NodeFamily;
    use crate::collocation::nodes::parse_nodes;

    fn run(t: &str, force_full: bool) -> StabilityReport {
        let m = CollocationMethod::from_nodes(parse_nodes(t).unwrap()).unwrap();
        classify(
            &m,
            &AnalysisOptions {
                force_full,
                ..Default::default()
            },
        )
        .unwrap()
    }

    fn row(r: &StabilityReport) -> Vec<bool> {
        Notion::ALL.iter().map(|&n| r.holds(n)).collect()
    }

    #[test]
    fn lobatto_two_stage() {
        for ff in [false, true] {
            let r = run("0,1", ff);
            assert!(row(&r).iter().all(|&b| b), "force_full = {ff}");
        }
    }

    #[test]
    fn quarter_third_unstable() {
        let r = run("1/4,1/3", false);
        assert!(!r.holds(Notion::A) && !r.holds(Notion::I));
    }

    #[test]
    fn third_nodes_symmetric_fast_path() {
        let r = run("1/3,2/3", false);
        assert!(r.holds(Notion::AHat));
        assert_eq!(r.verdict(Notion::A).criterion(), Criterion::SymmetricFastpathA);
        assert_eq!(row(&r), row(&run("1/3,2/3", true)));
    }

    #[test]
    fn five_stage_rational() {
        let r = run("1/4,1/3,1/2,2/3,3/4", false);
        assert!(r.holds(Notion::IHat) && !r.holds(Notion::A));
        assert!(r.holds(Notion::I) && r.holds(Notion::IS) && r.holds(Notion::ISI));
        assert_eq!(row(&r), row(&run("1/4,1/3,1/2,2/3,3/4", true)));
    }

    #[test]
    fn gauss_family() {
        let m = CollocationMethod::from_family(NodeFamily::Gauss(3)).unwrap();
        let r = classify(&m, &AnalysisOptions::default()).unwrap();
        assert!(r.verdicts().all(|(_, v)| v.holds && v.criterion() == Criterion::GaussTheorem));
        let f = classify(&m, &AnalysisOptions { force_full: true, ..Default::default() }).unwrap();
        assert!(f.verdicts().all(|(_, v)| v.holds));
    }

    #[test]
    fn notion_names() {
        for n in Notion::ALL {
            assert_eq!(Notion::parse(n.as_str()), Some(n));
        }
    }
}
