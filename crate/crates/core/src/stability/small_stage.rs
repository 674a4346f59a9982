//! Consistency checks specific to forward methods with at most four stages,
//! where I-stability already forces A-stability.

use crate::error::{Error, Result};
use crate::exactmath::poly::Poly;
use crate::rootloc::all_open_rhp;

/// Largest stage count covered by the small-stage theorem.
pub const SMALL_STAGE_LIMIT: usize = 4;

/// For a forward method with `s <= 4`: every eigenvalue of `A` is zero or
/// has positive real part, and the verdicts never read I-stable but not
/// A-stable.
pub fn small_s_consistency(char_poly: &Poly, i_stable: bool, a_stable: bool) -> Result<()> {
    if !all_open_rhp(&char_poly.strip_zero_roots()) {
        return Err(Error::InternalConsistency(
            "forward method with s <= 4 has an eigenvalue with non-positive real part".into(),
        ));
    }
    if i_stable && !a_stable {
        return Err(Error::InternalConsistency(
            "forward method with s <= 4 is I-stable but not A-stable".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collocation::{parse_nodes, pi_from_nodes};
    use crate::rootloc::char_poly;

    #[test]
    fn four_uniform_nodes() {
        let ns = parse_nodes("0,1/3,2/3,1").unwrap();
        let chi = char_poly(&pi_from_nodes(&ns).unwrap(), 4);
        assert!(small_s_consistency(&chi, true, true).is_ok());
        assert!(small_s_consistency(&chi, true, false).is_err());
    }

    #[test]
    fn one_stage_spectrum_is_the_node() {
        let ns = parse_nodes("3/7").unwrap();
        let chi = char_poly(&pi_from_nodes(&ns).unwrap(), 1);
        assert_eq!(chi, Poly::from_roots(ns.values()));
    }
}
