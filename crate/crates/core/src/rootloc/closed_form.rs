//! Closed-form Routh-Hurwitz inequalities for monic cubics and quartics.

use num_traits::{One, Signed};

use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhCriterion {
    /// `a2 > 0`, `a2 a1 - a0 > 0`, `a0 > 0`.
    Cubic,
    /// `a3 > 0`, `a3 a2 - a1 > 0`, `a3 a2 a1 - a1^2 - a3^2 a0 > 0`, `a0 > 0`.
    Quartic,
    /// `a3 > 0`, `a1 > 0`, `a3 a2 a1 - a1^2 - a3^2 a0 > 0`, `a0 > 0`.
    QuarticAlt,
}

/// Evaluates every closed-form criterion applicable to `p`. Each one holds
/// exactly when all roots of `p` lie in the open left half-plane.
///
/// Panics unless `p` is monic of degree 3 or 4.
pub fn closed_form_rh(p: &Poly) -> Vec<(RhCriterion, bool)> {
    assert!(
        p.leading_coeff().is_some_and(One::is_one),
        "closed-form criteria need a monic polynomial"
    );
    let a = |k: usize| p.coeff(k);
    let pos = |x: &Scalar| x.is_positive();
    match p.degree() {
        Some(3) => {
            let ok = pos(&a(2)) && pos(&(a(2) * a(1) - a(0))) && pos(&a(0));
            vec![(RhCriterion::Cubic, ok)]
        }
        Some(4) => {
            let (a0, a1, a2, a3) = (a(0), a(1), a(2), a(3));
            let det3 = &a3 * &a2 * &a1 - &a1 * &a1 - &a3 * &a3 * &a0;
            let common = pos(&a3) && pos(&det3) && pos(&a0);
            vec![
                (RhCriterion::Quartic, common && pos(&(&a3 * &a2 - &a1))),
                (RhCriterion::QuarticAlt, common && pos(&a1)),
            ]
        }
        d => panic!("closed-form criteria need degree 3 or 4, got {d:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::int;
    use crate::rootloc::routh::routh_all_open_lhp;

    #[test]
    fn cyclotomic_quartic_fails() {
        let p = Poly::from_i64(&[1, 1, 1, 1, 1]);
        assert!(closed_form_rh(&p).iter().all(|(_, ok)| !ok));
        assert!(!routh_all_open_lhp(&p));
    }

    #[test]
    fn stable_quartic_passes() {
        let p = Poly::from_roots(&[int(-1), int(-2), int(-3), int(-4)]);
        assert!(closed_form_rh(&p).iter().all(|(_, ok)| *ok));
    }

    #[test]
    #[should_panic(expected = "degree 3 or 4")]
    fn rejects_quadratic() {
        closed_form_rh(&Poly::from_i64(&[1, 1, 1]));
    }
}
