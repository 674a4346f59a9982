//! Exact rational arithmetic, polynomials, root counting and polynomial
//! matrices.

pub mod field;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;
pub mod sturm;

pub use field::{Field, QuadraticSurd};
pub use matrix::{polymatrix_det_adj, PolyMatrix, RationalFunction};
pub use poly::{gcd_poly, radical, square_free_decomposition, square_free_part, Poly};
pub use scalar::{format_scalar, parse_scalar, parse_scalar_list, Exactness, Scalar};
pub use sturm::{
    default_isolation_width, isolate_real_roots, sturm_real_root_count, Bound, RootInterval,
    SturmSequence,
};
