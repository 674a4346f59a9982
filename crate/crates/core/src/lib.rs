//! Exact stability analysis of collocation Runge-Kutta methods.
//!
//! A method is given by its nodes (or by the node polynomial `pi`). From it
//! the crate builds the Butcher tableau, the stability function `R`, the
//! characteristic polynomial of `A`, and decides A-, I-, and the stronger
//! resolvent-based stability notions with a certificate for each verdict.

pub mod error;
pub mod collocation;
pub mod exactmath;
pub mod reference;
pub mod rootloc;
pub mod stability;

pub use error::{Error, Result};

pub use collocation::{ButcherTableau, CollocationMethod, NodeFamily, NodeSet, StructureFlags};
pub use exactmath::{Exactness, Poly, RationalFunction, Scalar};
pub use rootloc::{char_poly, SpectrumApprox};
pub use stability::{
    classify, AnalysisOptions, Certificate, Criterion, Notion, StabilityFunction, StabilityReport,
    Verdict,
};
