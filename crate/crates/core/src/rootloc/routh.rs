//! Routh array in exact arithmetic.

use num_traits::{Signed, Zero};

use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::Scalar;
use crate::exactmath::sturm::RootInterval;

use super::axis::imaginary_axis_roots;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degeneracy {
    /// A whole row vanished; it was replaced by the derivative of the
    /// auxiliary polynomial built from the row above.
    ZeroRow { row: usize },
    /// A leading entry vanished with the rest of its row nonzero; the array
    /// stops there.
    ZeroPivot { row: usize },
}

#[derive(Clone, Debug)]
pub struct RouthArray {
    pub rows: Vec<Vec<Scalar>>,
    pub degeneracies: Vec<Degeneracy>,
    pub complete: bool,
}

impl RouthArray {
    pub fn first_column(&self) -> Vec<Scalar> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    /// Every first-column entry nonzero and of one sign, and no degeneracy.
    pub fn all_open_lhp(&self) -> bool {
        if !self.complete || !self.degeneracies.is_empty() {
            return false;
        }
        let col = self.first_column();
        col.iter().all(Signed::is_positive) || col.iter().all(Signed::is_negative)
    }
}

/// Routh array of `p`. Panics on the zero polynomial.
pub fn routh_array(p: &Poly) -> RouthArray {
    let n = p.degree().expect("Routh array of the zero polynomial");
    let width = n / 2 + 1;
    let row_from = |start: usize| -> Vec<Scalar> {
        (0..width)
            .map(|j| {
                let k = start as isize - 2 * j as isize;
                if k >= 0 {
                    p.coeff(k as usize)
                } else {
                    Scalar::zero()
                }
            })
            .collect()
    };
    let mut rows = vec![row_from(n)];
    if n >= 1 {
        rows.push(row_from(n - 1));
    }
    let mut degeneracies = Vec::new();
    let mut complete = true;
    let mut k = 1;
    while k <= n {
        if rows[k].iter().all(Zero::is_zero) {
            // auxiliary polynomial of degree n - k + 1 from row k - 1
            let deg = n - k + 1;
            let prev = rows[k - 1].clone();
            rows[k] = (0..width)
                .map(|j| {
                    let power = deg as isize - 2 * j as isize;
                    if power > 0 {
                        &prev[j] * Scalar::from_integer(power.into())
                    } else {
                        Scalar::zero()
                    }
                })
                .collect();
            degeneracies.push(Degeneracy::ZeroRow { row: k });
        }
        if rows[k][0].is_zero() {
            degeneracies.push(Degeneracy::ZeroPivot { row: k });
            complete = k == n;
            break;
        }
        if k == n {
            break;
        }
        let (upper, cur) = (&rows[k - 1], &rows[k]);
        let next: Vec<Scalar> = (0..width)
            .map(|j| {
                let a = upper.get(j + 1).cloned().unwrap_or_else(Scalar::zero);
                let b = cur.get(j + 1).cloned().unwrap_or_else(Scalar::zero);
                (&cur[0] * a - &upper[0] * b) / &cur[0]
            })
            .collect();
        rows.push(next);
        k += 1;
    }
    RouthArray {
        rows,
        degeneracies,
        complete,
    }
}

/// All roots of `p` in the open left half-plane.
pub fn routh_all_open_lhp(p: &Poly) -> bool {
    routh_array(p).all_open_lhp()
}

/// Location of the roots of a real polynomial relative to the imaginary axis.
#[derive(Clone, Debug)]
pub struct HalfPlaneVerdict {
    pub all_open_rhp: bool,
    pub all_open_lhp: bool,
    /// Real `x` with `p(ix) = 0`, as isolating intervals.
    pub axis_root_parameters: Vec<RootInterval>,
    /// The Routh array of `p` or `p(-X)` hit a zero row or pivot.
    pub degenerate: bool,
}

impl HalfPlaneVerdict {
    /// No root with non-positive real part.
    pub fn no_root_in_closed_lhp(&self) -> bool {
        self.all_open_rhp
    }
}

/// Classifies the roots of `p`. Degree 0 is vacuously in both half-planes.
pub fn half_plane_verdict(p: &Poly) -> HalfPlaneVerdict {
    let lhp = routh_array(p);
    let rhp = routh_array(&p.compose_neg());
    HalfPlaneVerdict {
        all_open_lhp: lhp.all_open_lhp(),
        all_open_rhp: rhp.all_open_lhp(),
        axis_root_parameters: imaginary_axis_roots(p),
        degenerate: !lhp.degeneracies.is_empty() || !rhp.degeneracies.is_empty(),
    }
}

/// All roots of `p` in the open right half-plane.
pub fn all_open_rhp(p: &Poly) -> bool {
    routh_all_open_lhp(&p.compose_neg())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::{int, rat};

    #[test]
    fn stable_cubic() {
        let p = Poly::from_roots(&[int(-1), int(-2), int(-3)]);
        assert!(routh_all_open_lhp(&p));
        assert!(!all_open_rhp(&p));
    }

    #[test]
    fn axis_pair_is_degenerate() {
        let v = half_plane_verdict(&Poly::from_i64(&[1, 0, 1]));
        assert!(v.degenerate && !v.all_open_lhp && !v.all_open_rhp);
        let xs: Vec<f64> = v.axis_root_parameters.iter().map(|r| r.to_f64()).collect();
        assert_eq!(xs.len(), 2);
        assert!((xs[0] + 1.0).abs() < 1e-9 && (xs[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn char_poly_of_third_nodes_in_rhp() {
        let p = Poly::new(vec![rat(1, 9), rat(-1, 2), int(1)]);
        assert!(all_open_rhp(&p));
    }

    #[test]
    fn zero_row_mid_array() {
        // (X + 1)(X^2 + 4): auxiliary polynomial X^2 + 4 appears
        let p = &Poly::from_i64(&[1, 1]) * &Poly::from_i64(&[4, 0, 1]);
        let arr = routh_array(&p);
        assert!(matches!(arr.degeneracies[0], Degeneracy::ZeroRow { .. }));
        assert!(!arr.all_open_lhp());
    }

    #[test]
    fn zero_pivot() {
        // X^4 + X^3 + 2X^2 + 2X + 3: the third row starts with zero
        let p = Poly::from_i64(&[3, 2, 2, 1, 1]);
        let arr = routh_array(&p);
        assert!(!arr.degeneracies.is_empty());
        assert!(!arr.all_open_lhp());
    }

    #[test]
    fn constant_is_vacuous() {
        assert!(routh_all_open_lhp(&Poly::from_i64(&[3])));
        assert!(all_open_rhp(&Poly::from_i64(&[-3])));
    }

    #[test]
    fn root_at_zero_is_neither() {
        let p = Poly::from_i64(&[0, 1, 1]);
        let v = half_plane_verdict(&p);
        assert!(!v.all_open_lhp && !v.all_open_rhp);
    }
}
