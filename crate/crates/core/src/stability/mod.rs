//! Stability function, resolvent, and the eight stability decisions.

pub mod classify;
pub mod decide;
pub mod function;
pub mod resolvent;
pub mod small_stage;
pub mod validate;

pub use classify::{classify, AnalysisOptions, Notion, StabilityReport};
pub use decide::{Certificate, Criterion, Region, Verdict};
pub use function::{boundary_deficit, stability_function, BoundaryDeficit, StabilityFunction};
pub use resolvent::{resolvent_entries, weighted_resolvent_row, Resolvent};
pub use small_stage::small_s_consistency;
pub use validate::{dahlquist_validate, laplace_cross_check};
