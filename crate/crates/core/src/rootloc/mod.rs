//! Root localization: characteristic polynomial of `A`, Routh arrays,
//! imaginary-axis roots and a numerical root oracle.

pub mod axis;
pub mod closed_form;
pub mod numeric;
pub mod routh;

use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::{factorial, Scalar};

pub use axis::imaginary_axis_roots;
pub use closed_form::{closed_form_rh, RhCriterion};
pub use numeric::{numeric_roots, ApproxRoot, SpectrumApprox, DEFAULT_DIGITS};
pub use routh::{
    all_open_rhp, half_plane_verdict, routh_all_open_lhp, routh_array, HalfPlaneVerdict,
    RouthArray,
};

/// Characteristic polynomial of the collocation matrix: `tau(pi) / s!`.
pub fn char_poly(pi: &Poly, s: usize) -> Poly {
    assert_eq!(pi.degree(), Some(s), "node polynomial must have degree s");
    pi.monic()
        .tau()
        .scale(&Scalar::from_integer(factorial(s)).recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::{int, rat};

    #[test]
    fn two_node_formula() {
        let (c1, c2) = (rat(1, 4), rat(1, 3));
        let chi = char_poly(&Poly::from_roots(&[c1.clone(), c2.clone()]), 2);
        let expected = Poly::new(vec![&c1 * &c2 / int(2), -(&c1 + &c2) / int(2), int(1)]);
        assert_eq!(chi, expected);
    }

    #[test]
    fn quintic_integer_form() {
        let pi = Poly::from_roots(&[rat(1, 4), rat(1, 3), rat(1, 2), rat(2, 3), rat(3, 4)]);
        let chi = char_poly(&pi, 5);
        assert_eq!(chi.scale(&int(34560)), Poly::from_i64(&[-6, 71, -642, 4164, -17280, 34560]));
    }
}
