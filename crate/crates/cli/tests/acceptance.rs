//! Acceptance criteria, each run at its stated tolerance and reported on
//! one line. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rkcolloc::collocation::{gauss_pi, pi_from_nodes, structure_flags, surd_tableau, NodeSet};
use rkcolloc::exactmath::scalar::{int, rat};
use rkcolloc::exactmath::{QuadraticSurd, RationalFunction};
use rkcolloc::reference::sqrt7_pi;
use rkcolloc::rootloc::closed_form::closed_form_rh;
use rkcolloc::rootloc::{all_open_rhp, numeric_roots, routh_all_open_lhp, routh_array, DEFAULT_DIGITS};
use rkcolloc::stability::{
    boundary_deficit, dahlquist_validate, laplace_cross_check, resolvent_entries, stability_function,
};
use rkcolloc::{char_poly, classify, AnalysisOptions, CollocationMethod, Criterion, NodeFamily, Notion, Poly, Scalar};
use rkcolloc_cli::document::TableauEcho;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, format!("took {elapsed:?}, limit {limit:?}"))
}

fn q(t: &str) -> Scalar {
    rkcolloc::exactmath::parse_scalar(t).unwrap().0
}

fn surd(a: &str, b: &str, d: i64) -> QuadraticSurd {
    QuadraticSurd::new(q(a), q(b), d.into())
}

fn method(text: &str) -> CollocationMethod {
    CollocationMethod::from_family(NodeFamily::Explicit(rkcolloc::collocation::parse_nodes(text).unwrap())).unwrap()
}

fn cli_tableau(nodes: &str) -> Result<TableauEcho, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_rkcolloc"))
        .args(["tableau", "--nodes", nodes, "--format", "json"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(o.status.success(), format!("tableau --nodes {nodes} failed"))?;
    serde_json::from_slice(&o.stdout).map_err(|e| e.to_string())
}

fn strings(rows: &[&[&str]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect()
}

fn criterion_1() -> Check {
    let t0 = Instant::now();
    let printed: [(&str, &[&[&str]], &[&str]); 4] = [
        ("1/3,2/3", &[&["1/2", "-1/6"], &["2/3", "0"]], &["1/2", "1/2"]),
        ("0,1", &[&["0", "0"], &["1/2", "1/2"]], &["1/2", "1/2"]),
        ("1/4,1/3", &[&["5/8", "-3/8"], &["2/3", "-1/3"]], &["-2", "3"]),
        (
            "0,1/3,2/3,1",
            &[&["0", "0", "0", "0"], &["1/8", "19/72", "-5/72", "1/72"], &["1/9", "4/9", "1/9", "0"], &["1/8", "3/8", "3/8", "1/8"]],
            &["1/8", "3/8", "3/8", "1/8"],
        ),
    ];
    for (nodes, a, b) in printed {
        let t = cli_tableau(nodes)?;
        ensure(t.exact_entries, format!("{nodes}: entries not exact"))?;
        ensure(t.a == strings(a), format!("{nodes}: A = {:?}", t.a))?;
        ensure(t.b == strings(&[b])[0], format!("{nodes}: b = {:?}", t.b))?;
    }
    let pi = gauss_pi(2);
    let m = CollocationMethod::from_family(NodeFamily::Gauss(2)).map_err(|e| e.to_string())?;
    let g = surd_tableau(&pi, &m.nodes).ok_or("Gauss-2 tableau not exact")?;
    let a = vec![
        vec![surd("1/4", "0", 3), surd("1/4", "-1/6", 3)],
        vec![surd("1/4", "1/6", 3), surd("1/4", "0", 3)],
    ];
    ensure(g.a == a, "Gauss-2 A differs")?;
    ensure(g.b == vec![surd("1/2", "0", 3); 2], "Gauss-2 b differs")?;
    ensure(g.c == vec![surd("1/2", "-1/6", 3), surd("1/2", "1/6", 3)], "Gauss-2 c differs")?;
    let el = t0.elapsed();
    within(el, Duration::from_secs(1))?;
    Ok(format!("5 tableaux exact, {el:.2?}"))
}

fn same_ratio(m: &CollocationMethod, num: &[i64], den: &[i64]) -> bool {
    let sf = stability_function(&m.pi, m.stages());
    let (n, d) = (Poly::from_i64(num), Poly::from_i64(den));
    &sf.n_red * &d == &sf.d_red * &n && sf.n_red.degree() == n.degree() && sf.d_red.degree() == d.degree()
}

fn criterion_2() -> Check {
    let t0 = Instant::now();
    ensure(same_ratio(&method("0,1"), &[-2, -1], &[-2, 1]), "Lobatto-2")?;
    ensure(same_ratio(&method("1/4,1/3"), &[24, 17, 6], &[24, -7, 1]), "(1/4,1/3)")?;
    ensure(
        same_ratio(&method("0,1/3,2/3,1"), &[-108, -54, -11, -1], &[-108, 54, -11, 1]),
        "4-stage uniform",
    )?;
    let el = t0.elapsed();
    within(el, Duration::from_secs(1))?;
    Ok(format!("3 stability functions exact, {el:.2?}"))
}

fn criterion_3() -> Check {
    let m = method("1/4,1/3,1/2,2/3,3/4");
    let chi = char_poly(&m.pi, 5);
    ensure(
        chi.scale(&int(34560)) == Poly::from_i64(&[-6, 71, -642, 4164, -17280, 34560]),
        format!("34560 chi_A = {}", chi.scale(&int(34560))),
    )?;
    let spec = numeric_roots(&chi, DEFAULT_DIGITS);
    let mut worst = 0.0f64;
    for target in [Complex64::new(-0.0008959474, 0.1432367668), Complex64::new(-0.0008959474, -0.1432367668)] {
        let d = spec.roots.iter().map(|r| (r.value() - target).norm()).fold(f64::INFINITY, f64::min);
        ensure(d < 1e-8, format!("no root within 1e-8 of {target}"))?;
        worst = worst.max(d);
    }
    Ok(format!("quintic exact, root distance {worst:.1e}"))
}

fn verdicts(m: &CollocationMethod, expect: &[(Notion, bool)], name: &str) -> Result<(), String> {
    let r = classify(m, &AnalysisOptions::default()).map_err(|e| e.to_string())?;
    for &(n, v) in expect {
        ensure(r.holds(n) == v, format!("{name}: {n} is {}", r.holds(n)))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    use Notion::*;
    let t0 = Instant::now();
    let gauss2 = CollocationMethod::from_family(NodeFamily::Gauss(2)).unwrap();
    verdicts(&gauss2, &[(AHat, true), (IHat, true)], "Gauss-2")?;
    verdicts(&method("1/3,2/3"), &[(AHat, true)], "(1/3,2/3)")?;
    verdicts(&method("0,1"), &[(A, true), (AS, true), (ASI, true), (AHat, true)], "Lobatto-2")?;
    verdicts(&method("1/4,1/3"), &[(A, false), (I, false)], "(1/4,1/3)")?;
    verdicts(&method("0,1/3,2/3,1"), &[(AHat, true)], "4-stage")?;
    verdicts(
        &method("1/4,1/3,1/2,2/3,3/4"),
        &[(IHat, true), (I, true), (IS, true), (ISI, true), (A, false), (AHat, false)],
        "5-stage rational",
    )?;
    let s7 = CollocationMethod::from_family(NodeFamily::PiCoefficients(sqrt7_pi())).unwrap();
    verdicts(&s7, &[(A, true), (ASI, false), (AS, true)], "sqrt(7) method")?;
    let r = classify(&s7, &AnalysisOptions::default()).unwrap();
    let v = r.verdict(AS);
    ensure(
        v.criterion() == Criterion::ResolventNumerical && !v.is_exact(),
        format!("sqrt(7) AS certificate is {}", v.criterion()),
    )?;
    let el = t0.elapsed();
    within(el, Duration::from_secs(10))?;
    Ok(format!("7 methods, {el:.2?}"))
}

fn criterion_5() -> Check {
    let t0 = Instant::now();
    let full = AnalysisOptions {
        force_full: true,
        ..AnalysisOptions::default()
    };
    for s in 1..=6 {
        ensure(all_open_rhp(&gauss_pi(s).tau()), format!("tau(pi) for s = {s}"))?;
        let m = CollocationMethod::from_family(NodeFamily::Gauss(s)).unwrap();
        for opts in [AnalysisOptions::default(), full.clone()] {
            let r = classify(&m, &opts).map_err(|e| e.to_string())?;
            ensure(r.holds(Notion::AHat) && r.holds(Notion::IHat), format!("s = {s}, force_full = {}", opts.force_full))?;
        }
    }
    let el = t0.elapsed();
    within(el, Duration::from_secs(30))?;
    Ok(format!("s = 1..6 both paths, {el:.2?}"))
}

fn random_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Scalar {
    let d = rng.random_range(1..=12);
    rat(rng.random_range(lo * d..=hi * d), d)
}

fn random_nodes(rng: &mut ChaCha8Rng, s: usize, lo: i64, hi: i64) -> NodeSet {
    let mut set = BTreeSet::new();
    while set.len() < s {
        set.insert(random_rational(rng, lo, hi));
    }
    NodeSet::exact(&set.into_iter().collect::<Vec<_>>()).unwrap()
}

fn random_symmetric(rng: &mut ChaCha8Rng, max_s: usize) -> NodeSet {
    let s = rng.random_range(1..=max_s);
    let mut half = BTreeSet::new();
    while half.len() < s / 2 {
        let d = rng.random_range(3..=24);
        let n = rng.random_range(0..(d + 1) / 2);
        if 2 * n < d {
            half.insert(rat(n, d));
        }
    }
    let mut v: Vec<Scalar> = half.iter().flat_map(|c| [c.clone(), rat(1, 1) - c]).collect();
    if s % 2 == 1 {
        v.push(rat(1, 2));
    }
    NodeSet::exact(&v).unwrap()
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let full = AnalysisOptions {
        force_full: true,
        ..AnalysisOptions::default()
    };
    for k in 0..500 {
        let s = rng.random_range(1..=4);
        let ns = random_nodes(&mut rng, s, 0, 2);
        let zero = structure_flags(&ns).contains_zero_node;
        let m = CollocationMethod::from_nodes(ns.clone()).unwrap();
        let chi = char_poly(&m.pi, s);
        ensure(
            chi.zero_root_multiplicity() == usize::from(zero) && all_open_rhp(&chi.strip_zero_roots()),
            format!("spectrum violation #{k}: {:?}", ns.values()),
        )?;
        let r = classify(&m, &full).map_err(|e| e.to_string())?;
        ensure(!(r.holds(Notion::I) && !r.holds(Notion::A)), format!("I without A #{k}"))?;
    }
    for k in 0..200 {
        let ns = random_symmetric(&mut rng, 6);
        let s = ns.stage_count();
        let pi = pi_from_nodes(&ns).unwrap();
        let lhs = pi.shift(&int(1)).tau();
        let rhs = pi.tau().compose_neg();
        let rhs = if s % 2 == 0 { rhs } else { -&rhs };
        ensure(lhs == rhs, format!("symmetry identity #{k}"))?;
        ensure(boundary_deficit(&stability_function(&pi, s)).is_identically_zero(), format!("E nonzero #{k}"))?;
    }
    for k in 0..200 {
        let s = rng.random_range(1..=5);
        let ns = random_nodes(&mut rng, s, -1, 2);
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let sf = stability_function(&m.pi, s);
        let res = resolvent_entries(&m.tableau).unwrap();
        let mut num = res.det.clone();
        for i in 0..s {
            for j in 0..s {
                num = &num + &(&res.adj.get(i, j).scale(&m.tableau.b[i]) * &Poly::x());
            }
        }
        ensure(
            RationalFunction::new(sf.n.clone(), sf.d.clone()) == RationalFunction::new(num, res.det),
            format!("tau form differs from tableau form #{k}"),
        )?;
    }
    Ok("500 + 200 + 200 cases, no violations".into())
}

/// `||M||_F ||M^{-1}||_F` for `M = I - zA`, an upper bound on the 2-norm
/// condition number.
fn stage_condition(a: &[Vec<f64>], z: Complex64) -> f64 {
    let s = a.len();
    let m: Vec<Vec<Complex64>> = (0..s)
        .map(|i| (0..s).map(|j| Complex64::new(f64::from(u8::from(i == j)), 0.0) - z * a[i][j]).collect())
        .collect();
    let fro = |x: &[Vec<Complex64>]| x.iter().flatten().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    invert(&m).map_or(f64::INFINITY, |inv| fro(&m) * fro(&inv))
}

fn invert(m: &[Vec<Complex64>]) -> Option<Vec<Vec<Complex64>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Complex64>> = m
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| Complex64::new(f64::from(u8::from(i == j)), 0.0)));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).max_by(|&x, &y| aug[x][c].norm().total_cmp(&aug[y][c].norm()))?;
        if aug[p][c].norm() < 1e-300 {
            return None;
        }
        aug.swap(c, p);
        let inv = Complex64::new(1.0, 0.0) / aug[c][c];
        for v in aug[c].iter_mut() {
            *v *= inv;
        }
        for r in 0..n {
            if r != c {
                let f = aug[r][c];
                for j in 0..2 * n {
                    let t = aug[c][j];
                    aug[r][j] -= f * t;
                }
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 50 {
        let s = rng.random_range(1..=5);
        let ns = random_nodes(&mut rng, s, 0, 1);
        let m = CollocationMethod::from_nodes(ns).unwrap();
        let z = Complex64::new(rng.random_range(-2.0..0.0), rng.random_range(-2.0..2.0));
        if stage_condition(&m.tableau.a_f64(), z) > 100.0 {
            continue;
        }
        let sf = stability_function(&m.pi, s);
        let dev = dahlquist_validate(&m.tableau, &sf, z, 1.0, 50).map_err(|e| e.to_string())?;
        ensure(dev < 1e-10, format!("deviation {dev:.2e} at z = {z}"))?;
        worst = worst.max(dev);
        done += 1;
    }
    Ok(format!("50 pairs, max deviation {worst:.1e}"))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let points = [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0), Complex64::new(1.0, 1.0)];
    let mut worst = 0.0f64;
    let mut done = 0;
    while done < 20 {
        let s = rng.random_range(1..=5);
        let pi = pi_from_nodes(&random_nodes(&mut rng, s, 0, 1)).unwrap();
        let sf = stability_function(&pi, s);
        // keep clear of poles of N/D at the test points
        if points.iter().any(|&l| sf.d.eval_complex(l).norm() < 1e-3 * sf.d.eval_complex(Complex64::new(0.0, 0.0)).norm()) {
            continue;
        }
        for l in points {
            let dev = laplace_cross_check(&pi, &sf, l);
            ensure(dev < 1e-12, format!("deviation {dev:.2e} at λ = {l}"))?;
            worst = worst.max(dev);
        }
        done += 1;
    }
    Ok(format!("20 polynomials x 3 points, max deviation {worst:.1e}"))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut done = 0;
    let mut skipped = 0;
    while done < 1000 {
        let deg = rng.random_range(3..=4);
        let mut c: Vec<Scalar> = (0..deg).map(|_| random_rational(&mut rng, -5, 5)).collect();
        c.push(int(1));
        let p = Poly::new(c);
        let arr = routh_array(&p);
        if !arr.complete || !arr.degeneracies.is_empty() {
            skipped += 1;
            continue;
        }
        let routh = routh_all_open_lhp(&p);
        for (crit, v) in closed_form_rh(&p) {
            ensure(v == routh, format!("{crit:?} disagrees on {p}"))?;
        }
        let spec = numeric_roots(&p, DEFAULT_DIGITS);
        let numeric = spec.roots.iter().all(|r| r.re + r.radius < 0.0);
        let undecided = spec.roots.iter().any(|r| r.re.abs() <= r.radius);
        ensure(!undecided, format!("numeric roots of {p} straddle the axis"))?;
        ensure(numeric == routh, format!("numeric sign disagrees on {p}"))?;
        done += 1;
    }
    Ok(format!("1000 polynomials, {skipped} degenerate skipped, 0 disagreements"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("1 tableau reproduction", criterion_1),
        ("2 stability functions", criterion_2),
        ("3 characteristic polynomial", criterion_3),
        ("4 verdict matrix", criterion_4),
        ("5 Gauss family", criterion_5),
        ("6 property suites", criterion_6),
        ("7 Dahlquist oracle", criterion_7),
        ("8 Laplace cross-check", criterion_8),
        ("9 Routh-Hurwitz parity", criterion_9),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match res {
            Ok(msg) => println!("criterion {name}: PASS ({msg})"),
            Err(msg) => {
                failed += 1;
                println!("criterion {name}: FAIL ({msg})");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
