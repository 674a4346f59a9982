//! Subcommand implementations. Each writes to the given sink and reports
//! failures through [`CliError`].

use std::io::Write;
use std::path::Path;

use rayon::prelude::*;
use rkcolloc::reference::run_all;
use rkcolloc::{classify, AnalysisOptions};
use serde::{Deserialize, Serialize};

use crate::document::{run_dahlquist, run_laplace, sample_rows, method_echo, DahlquistRequest, ReportDocument, SampleRow, SCHEMA_VERSION};
use crate::error::{CliError, CliResult};
use crate::source::MethodSource;
use crate::text;
use crate::{Format, SampleArgs};

#[derive(Clone, Debug, Default)]
pub struct AnalyzeOptions {
    pub force_full: bool,
    pub dahlquist: Option<DahlquistRequest>,
    pub laplace_check: bool,
    pub samples: Option<SampleArgs>,
}

pub fn analyze_document(src: &MethodSource, opts: &AnalyzeOptions) -> CliResult<ReportDocument> {
    let m = src.build()?;
    let aopts = AnalysisOptions {
        force_full: opts.force_full,
        ..AnalysisOptions::default()
    };
    let r = classify(&m, &aopts)?;
    let mut doc = ReportDocument::new(&m, &r);
    if let Some(s) = &opts.samples {
        s.validate()?;
        doc.samples = Some(sample_rows(&r.stability_function, &r.deficit, s.xmin, s.xmax, s.num));
    }
    if let Some(req) = opts.dahlquist {
        doc.dahlquist = Some(run_dahlquist(&m, &r.stability_function, req));
    }
    if opts.laplace_check {
        doc.laplace = Some(run_laplace(&m, &r.stability_function));
    }
    Ok(doc)
}

fn json<T: Serialize>(out: &mut dyn Write, v: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

pub fn analyze(out: &mut dyn Write, src: &MethodSource, opts: &AnalyzeOptions, format: Format) -> CliResult<()> {
    let doc = analyze_document(src, opts)?;
    match format {
        Format::Json => json(out, &doc),
        Format::Text => Ok(write!(out, "{}", text::report(&doc))?),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchEntry {
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchDocument {
    pub schema_version: u32,
    pub results: Vec<BatchEntry>,
}

/// Analyzes one method per non-blank, non-`#` line, in parallel; results
/// keep the file's order.
pub fn batch_documents(contents: &str, opts: &AnalyzeOptions) -> BatchDocument {
    let lines: Vec<&str> = contents
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let results = lines
        .par_iter()
        .map(|line| {
            let r = MethodSource::parse_line(line).and_then(|src| analyze_document(&src, opts));
            match r {
                Ok(doc) => BatchEntry {
                    source: line.to_string(),
                    report: Some(doc),
                    error: None,
                    exit_code: 0,
                },
                Err(e) => BatchEntry {
                    source: line.to_string(),
                    report: None,
                    error: Some(e.to_string()),
                    exit_code: e.exit_code(),
                },
            }
        })
        .collect();
    BatchDocument {
        schema_version: SCHEMA_VERSION,
        results,
    }
}

pub fn batch(out: &mut dyn Write, path: &Path, opts: &AnalyzeOptions, format: Format) -> CliResult<()> {
    let contents = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let doc = batch_documents(&contents, opts);
    match format {
        Format::Json => json(out, &doc)?,
        Format::Text => {
            for (k, e) in doc.results.iter().enumerate() {
                if k > 0 {
                    writeln!(out, "\n{}", "=".repeat(60))?;
                }
                match (&e.report, &e.error) {
                    (Some(r), _) => write!(out, "{}", text::report(r))?,
                    (None, err) => writeln!(out, "{}: {}", e.source, err.as_deref().unwrap_or("failed"))?,
                }
            }
        }
    }
    match doc.results.iter().map(|e| e.exit_code).max().unwrap_or(0) {
        0 => Ok(()),
        2 => Err(CliError::Input("some batch entries could not be analyzed".into())),
        _ => Err(CliError::Verification("some batch entries failed".into())),
    }
}

pub fn tableau(out: &mut dyn Write, src: &MethodSource, format: Format) -> CliResult<()> {
    let m = src.build()?;
    let chi = rkcolloc::char_poly(&m.pi, m.stages());
    let echo = method_echo(&m, &chi);
    match format {
        Format::Json => json(out, &echo.tableau),
        Format::Text => Ok(write!(out, "{}", text::tableau(&echo.tableau))?),
    }
}

pub fn csv_header() -> &'static str {
    "x,abs_R,deficit"
}

pub fn csv_row(r: &SampleRow) -> String {
    let abs = r.abs_r.map_or("inf".to_string(), |v| v.to_string());
    format!("{},{},{}", r.x, abs, r.deficit)
}

pub fn sample_r(out: &mut dyn Write, src: &MethodSource, s: &SampleArgs) -> CliResult<()> {
    s.validate()?;
    let m = src.build()?;
    let sf = rkcolloc::stability::stability_function(&m.pi, m.stages());
    let e = rkcolloc::stability::boundary_deficit(&sf);
    writeln!(out, "{}", csv_header())?;
    for r in sample_rows(&sf, &e, s.xmin, s.xmax, s.num) {
        writeln!(out, "{}", csv_row(&r))?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FixtureResult {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

pub fn verify_paper(out: &mut dyn Write, format: Format) -> CliResult<()> {
    let results: Vec<FixtureResult> = run_all()
        .into_iter()
        .map(|o| FixtureResult {
            name: o.name.to_string(),
            passed: o.passed(),
            failures: o.failures,
        })
        .collect();
    match format {
        Format::Json => json(out, &results)?,
        Format::Text => {
            for r in &results {
                writeln!(out, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.name)?;
                for f in &r.failures {
                    writeln!(out, "    {f}")?;
                }
            }
        }
    }
    let failed: Vec<&str> = results.iter().filter(|r| !r.passed).map(|r| r.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(failed.join("; ")))
    }
}
