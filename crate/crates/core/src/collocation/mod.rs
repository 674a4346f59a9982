//! Collocation nodes, node families and Butcher tableaux.

pub mod family;
pub mod nodes;
pub mod surd;
pub mod tableau;

pub use family::{gauss_pi, CollocationMethod, NodeFamily};
pub use nodes::{
    nodes_from_pi, parse_nodes, pi_from_nodes, structure_flags, validate_nodes, NodeSet,
    StructureFlags,
};
pub use surd::{surd_tableau, SurdTableau};
pub use tableau::{butcher_from_nodes, collocation_coefficients, ButcherTableau};
