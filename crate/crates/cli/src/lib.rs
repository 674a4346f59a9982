//! Command-line front end for `rkcolloc`.

pub mod commands;
pub mod document;
pub mod error;
pub mod source;
pub mod text;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::AnalyzeOptions;
use document::DahlquistRequest;
pub use error::{CliError, CliResult};
use source::MethodArgs;

#[derive(Parser, Debug)]
#[command(name = "rkcolloc", version, about = "Stability analysis of collocation Runge-Kutta methods")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify a method against all eight stability notions.
    Analyze(AnalyzeArgs),
    /// Print the Butcher tableau.
    Tableau(TableauArgs),
    /// Write |R(ix)| and the boundary deficit on a grid as CSV.
    #[command(name = "sample-R", alias = "sample-r")]
    SampleR(SampleRArgs),
    /// Recompute the built-in worked examples.
    VerifyPaper(VerifyArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args, Clone, Debug)]
pub struct SampleArgs {
    #[arg(long, default_value_t = -10.0, allow_hyphen_values = true)]
    pub xmin: f64,
    #[arg(long, default_value_t = 10.0, allow_hyphen_values = true)]
    pub xmax: f64,
    #[arg(long, default_value_t = 201)]
    pub num: usize,
}

impl SampleArgs {
    pub fn validate(&self) -> CliResult<()> {
        if !(self.xmin.is_finite() && self.xmax.is_finite()) {
            return Err(CliError::Input("sampling range must be finite".into()));
        }
        if self.xmin > self.xmax {
            return Err(CliError::Input("--xmin exceeds --xmax".into()));
        }
        if self.num < 2 {
            return Err(CliError::Input("--num must be at least 2".into()));
        }
        Ok(())
    }
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub method: MethodArgs,
    /// One method per line (`nodes 0,1`, `gauss 3`, `pi -1/2,1`, ...).
    #[arg(long, value_name = "FILE", conflicts_with = "source")]
    pub batch: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Skip the structural shortcuts and run every full decision.
    #[arg(long)]
    pub force_full: bool,
    /// Integrate y' = ay and compare with R(ah)^n.
    #[arg(long, value_name = "A_REAL,A_IMAG,H,N", allow_hyphen_values = true)]
    pub dahlquist: Option<DahlquistRequest>,
    /// Compare N/D with the Laplace-integral form at λ = 1, 2, 1+i.
    #[arg(long)]
    pub laplace_check: bool,
    #[arg(long, allow_hyphen_values = true)]
    pub xmin: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub xmax: Option<f64>,
    /// Include a table of |R(ix)| samples in the report.
    #[arg(long)]
    pub num: Option<usize>,
}

#[derive(Args, Debug)]
pub struct TableauArgs {
    #[command(flatten)]
    pub method: MethodArgs,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct SampleRArgs {
    #[command(flatten)]
    pub method: MethodArgs,
    #[command(flatten)]
    pub sampling: SampleArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

fn required(m: &MethodArgs) -> CliResult<source::MethodSource> {
    m.source().ok_or_else(|| {
        CliError::Input("give one of --nodes, --gauss, --uniform-closed, --uniform-open, --pi".into())
    })
}

impl AnalyzeArgs {
    fn options(&self) -> AnalyzeOptions {
        let samples = (self.num.is_some() || self.xmin.is_some() || self.xmax.is_some()).then(|| SampleArgs {
            xmin: self.xmin.unwrap_or(-10.0),
            xmax: self.xmax.unwrap_or(10.0),
            num: self.num.unwrap_or(201),
        });
        AnalyzeOptions {
            force_full: self.force_full,
            dahlquist: self.dahlquist,
            laplace_check: self.laplace_check,
            samples,
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> CliResult<()> {
    match cli.command {
        Command::Analyze(a) => {
            let opts = a.options();
            match &a.batch {
                Some(path) => commands::batch(out, path, &opts, a.format),
                None => commands::analyze(out, &required(&a.method)?, &opts, a.format),
            }
        }
        Command::Tableau(t) => commands::tableau(out, &required(&t.method)?, t.format),
        Command::SampleR(s) => commands::sample_r(out, &required(&s.method)?, &s.sampling),
        Command::VerifyPaper(v) => commands::verify_paper(out, v.format),
    }
}
