//! Plain-text rendering of reports and tableaux.

use std::fmt::Write;

use rkcolloc::exactmath::parse_scalar;
use rkcolloc::exactmath::scalar::to_f64;
use rkcolloc::Poly;

use crate::document::{ReportDocument, TableauEcho};

fn poly_text(coeffs: &[String], var: &str) -> String {
    let parsed: Option<Vec<_>> = coeffs.iter().map(|c| parse_scalar(c).ok().map(|(q, _)| q)).collect();
    match parsed {
        Some(v) => Poly::new(v).display_with(var),
        None => coeffs.join(", "),
    }
}

/// Columns padded to a common width: `c | A` rows, a rule, then `| b`.
/// Approximate entries are shown as decimals unless exact surd forms exist.
pub fn tableau(t: &TableauEcho) -> String {
    let decimal = |v: &[String]| -> Vec<String> {
        v.iter()
            .map(|x| match parse_scalar(x) {
                Ok((q, _)) => format!("{:.15}", to_f64(&q)),
                Err(_) => x.clone(),
            })
            .collect()
    };
    let (c, a, b, note) = match (&t.surd, t.exact_entries) {
        (_, true) => (t.c.clone(), t.a.clone(), t.b.clone(), None),
        (Some(s), false) => (s.c.clone(), s.a.clone(), s.b.clone(), None),
        (None, false) => (
            decimal(&t.c),
            t.a.iter().map(|r| decimal(r)).collect(),
            decimal(&t.b),
            Some("(entries approximate irrational values)"),
        ),
    };
    let width = c
        .iter()
        .chain(a.iter().flatten())
        .chain(&b)
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(1);
    let cell = |s: &str| format!("{s:>width$}");
    let mut out = String::new();
    for (ci, row) in c.iter().zip(&a) {
        let cells: Vec<String> = row.iter().map(|x| cell(x)).collect();
        let _ = writeln!(out, "{} | {}", cell(ci), cells.join("  "));
    }
    let rule_len = width + 3 + b.len() * (width + 2) - 2;
    let _ = writeln!(out, "{}", "-".repeat(rule_len));
    let cells: Vec<String> = b.iter().map(|x| cell(x)).collect();
    let _ = writeln!(out, "{} | {}", " ".repeat(width), cells.join("  "));
    if let Some(n) = note {
        let _ = writeln!(out, "{n}");
    }
    out
}

pub fn report(d: &ReportDocument) -> String {
    let m = &d.method;
    let mut out = String::new();
    let _ = writeln!(out, "method: {}", m.family);
    let _ = writeln!(out, "stages: {}", m.stages);
    let node_note = if m.nodes_exact { "" } else { " (approximate)" };
    let _ = writeln!(out, "nodes: {}{}", m.nodes_approx.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "), node_note);
    let mut flags = Vec::new();
    if m.flags.forward {
        flags.push("forward");
    }
    if m.flags.symmetric {
        flags.push("symmetric");
    }
    if m.flags.contains_zero_node {
        flags.push("zero node");
    }
    if m.flags.gauss {
        flags.push("gauss");
    }
    let _ = writeln!(out, "flags: {}", if flags.is_empty() { "none".into() } else { flags.join(", ") });
    let _ = writeln!(out, "pi(X) = {}", poly_text(&m.pi, "X"));
    let _ = writeln!(out, "chi_A(X) = {}", poly_text(&m.char_poly, "X"));
    let _ = writeln!(out, "R(λ) = {}", d.stability_function.display);
    let _ = writeln!(out, "E(x) = {}", poly_text(&d.stability_function.boundary_deficit, "x"));
    let _ = writeln!(out, "\ntableau:");
    for line in tableau(&m.tableau).lines() {
        let _ = writeln!(out, "  {line}");
    }
    let conv = if d.spectrum.converged { "converged" } else { "not converged" };
    let _ = writeln!(out, "\neigenvalues of A ({} digits, {}):", d.spectrum.digits, conv);
    for e in &d.spectrum.eigenvalues {
        let radius = e.radius.map_or("unbounded".to_string(), |r| format!("{r:.1e}"));
        let _ = writeln!(out, "  {:+.12} {:+.12}i  radius {}", e.re, e.im, radius);
    }
    let _ = writeln!(out, "\nverdicts:");
    for v in &d.verdicts {
        let tag = if v.exact { "exact" } else { "uncertified" };
        let _ = writeln!(out, "  {:<6} {:<5}  {} ({})", v.notion, v.holds, v.criterion, tag);
    }
    if let Some(dq) = &d.dahlquist {
        let r = dq.request;
        let _ = write!(out, "\ndahlquist a = {}{:+}i, h = {}, n = {}: ", r.a_re, r.a_im, r.h, r.n);
        match (&dq.deviation, &dq.error) {
            (_, Some(e)) => {
                let _ = writeln!(out, "{e}");
            }
            (Some(dev), None) => {
                let _ = writeln!(out, "relative deviation {dev:.3e}");
            }
            (None, None) => {
                let _ = writeln!(out, "deviation not finite");
            }
        }
    }
    if let Some(lp) = &d.laplace {
        let _ = writeln!(out, "\nlaplace check:");
        for l in lp {
            let dev = l.deviation.map_or("pole".to_string(), |x| format!("{x:.3e}"));
            let _ = writeln!(out, "  λ = {}{:+}i  deviation {}", l.re, l.im, dev);
        }
    }
    if let Some(rows) = &d.samples {
        let _ = writeln!(out, "\n{}", crate::commands::csv_header());
        for r in rows {
            let _ = writeln!(out, "{}", crate::commands::csv_row(r));
        }
    }
    out
}

/// Parses the `verdicts:` block of [`report`] back into `(notion, holds)`.
pub fn parse_verdicts(text: &str) -> Vec<(String, bool)> {
    text.lines()
        .skip_while(|l| l.trim() != "verdicts:")
        .skip(1)
        .take_while(|l| l.starts_with("  "))
        .filter_map(|l| {
            let mut it = l.split_whitespace();
            Some((it.next()?.to_string(), it.next()?.parse().ok()?))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_text_skips_zeros() {
        let c: Vec<String> = ["0", "-1", "1"].iter().map(|s| s.to_string()).collect();
        assert_eq!(poly_text(&c, "X"), "X^2 - X");
        assert_eq!(poly_text(&["0".to_string()], "X"), "0");
    }

    #[test]
    fn tableau_layout() {
        let t = TableauEcho {
            c: vec!["1/2".into()],
            a: vec![vec!["1/2".into()]],
            b: vec!["1".into()],
            exact_entries: true,
            surd: None,
        };
        assert_eq!(tableau(&t), "1/2 | 1/2\n---------\n    |   1\n");
    }
}
