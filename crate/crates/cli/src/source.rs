//! Method sources: command-line flags and batch-file lines.

use clap::Args;
use rkcolloc::collocation::parse_nodes;
use rkcolloc::exactmath::parse_scalar_list;
use rkcolloc::{CollocationMethod, NodeFamily, Poly};

use crate::error::{CliError, CliResult};

#[derive(Args, Clone, Debug, Default)]
#[group(id = "source", multiple = false)]
pub struct MethodArgs {
    /// Comma-separated nodes, each `n`, `p/q` or a decimal.
    #[arg(long, allow_hyphen_values = true)]
    pub nodes: Option<String>,
    /// Gauss-Legendre nodes with S stages.
    #[arg(long, value_name = "S")]
    pub gauss: Option<usize>,
    /// Equispaced nodes including both endpoints.
    #[arg(long, value_name = "S")]
    pub uniform_closed: Option<usize>,
    /// Equispaced interior nodes i/(S+1).
    #[arg(long, value_name = "S")]
    pub uniform_open: Option<usize>,
    /// Node polynomial coefficients, constant term first.
    #[arg(long, value_name = "COEFFS", allow_hyphen_values = true)]
    pub pi: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MethodSource {
    Nodes(String),
    Gauss(usize),
    UniformClosed(usize),
    UniformOpen(usize),
    Pi(String),
}

impl MethodArgs {
    pub fn source(&self) -> Option<MethodSource> {
        let m = self.clone();
        m.nodes
            .map(MethodSource::Nodes)
            .or(m.gauss.map(MethodSource::Gauss))
            .or(m.uniform_closed.map(MethodSource::UniformClosed))
            .or(m.uniform_open.map(MethodSource::UniformOpen))
            .or(m.pi.map(MethodSource::Pi))
    }
}

impl MethodSource {
    /// Parses a batch line: `nodes 0,1`, `gauss 3`, `uniform-closed 4`,
    /// `uniform-open 2` or `pi -1/2,1`.
    pub fn parse_line(line: &str) -> CliResult<MethodSource> {
        let line = line.trim();
        let (kind, arg) = line
            .split_once(char::is_whitespace)
            .ok_or_else(|| CliError::Input(format!("expected `<kind> <value>`, got `{line}`")))?;
        let arg = arg.trim();
        let count = || {
            arg.parse::<usize>()
                .map_err(|_| CliError::Input(format!("`{arg}` is not a stage count")))
        };
        Ok(match kind {
            "nodes" => MethodSource::Nodes(arg.to_string()),
            "gauss" => MethodSource::Gauss(count()?),
            "uniform-closed" => MethodSource::UniformClosed(count()?),
            "uniform-open" => MethodSource::UniformOpen(count()?),
            "pi" => MethodSource::Pi(arg.to_string()),
            _ => return Err(CliError::Input(format!("unknown method kind `{kind}`"))),
        })
    }

    pub fn family(&self) -> CliResult<NodeFamily> {
        Ok(match self {
            MethodSource::Nodes(t) => NodeFamily::Explicit(parse_nodes(t)?),
            MethodSource::Gauss(s) => NodeFamily::Gauss(*s),
            MethodSource::UniformClosed(s) => NodeFamily::UniformClosed(*s),
            MethodSource::UniformOpen(s) => NodeFamily::UniformOpen(*s),
            MethodSource::Pi(t) => {
                let raw = parse_scalar_list(t)?;
                if raw.iter().any(|(_, e)| !e.is_exact()) {
                    return Err(CliError::Input("pi coefficients must be exact rationals".into()));
                }
                NodeFamily::PiCoefficients(Poly::new(raw.into_iter().map(|(c, _)| c).collect()))
            }
        })
    }

    pub fn build(&self) -> CliResult<CollocationMethod> {
        Ok(CollocationMethod::from_family(self.family()?)?)
    }
}

impl std::fmt::Display for MethodSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MethodSource::Nodes(t) => write!(f, "nodes {t}"),
            MethodSource::Gauss(s) => write!(f, "gauss {s}"),
            MethodSource::UniformClosed(s) => write!(f, "uniform-closed {s}"),
            MethodSource::UniformOpen(s) => write!(f, "uniform-open {s}"),
            MethodSource::Pi(t) => write!(f, "pi {t}"),
        }
    }
}
