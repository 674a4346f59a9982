//! Matrices of polynomials and reduced rational functions.

use std::fmt;

use num_traits::{One, Zero};

use super::poly::{gcd_poly, Poly};
use super::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    /// Row-major entries. Panics if the count does not match.
    pub fn new(rows: usize, cols: usize, entries: Vec<Poly>) -> Self {
        assert!(rows > 0 && cols > 0, "empty polynomial matrix");
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly) -> Self {
        let entries = (0..rows)
            .flat_map(|i| (0..cols).map(move |j| (i, j)))
            .map(|(i, j)| f(i, j))
            .collect();
        PolyMatrix::new(rows, cols, entries)
    }

    pub fn identity(n: usize) -> Self {
        PolyMatrix::from_fn(n, n, |i, j| if i == j { Poly::one() } else { Poly::zero() })
    }

    /// `I - lambda * A` for a constant matrix `A`.
    pub fn identity_minus_lambda(a: &[Vec<Scalar>]) -> Self {
        let n = a.len();
        PolyMatrix::from_fn(n, n, |i, j| {
            let delta = if i == j { Scalar::one() } else { Scalar::zero() };
            Poly::new(vec![delta, -a[i][j].clone()])
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(Poly::zero(), |acc, k| &acc + &(self.get(i, k) * rhs.get(k, j)))
        })
    }

    pub fn scale(&self, p: &Poly) -> PolyMatrix {
        PolyMatrix::new(
            self.rows,
            self.cols,
            self.entries.iter().map(|e| e * p).collect(),
        )
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> PolyMatrix {
        PolyMatrix::from_fn(self.rows - 1, self.cols - 1, |i, j| {
            let r = if i < skip_row { i } else { i + 1 };
            let c = if j < skip_col { j } else { j + 1 };
            self.get(r, c).clone()
        })
    }

    /// Determinant by fraction-free Bareiss elimination with row pivoting.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut prev = Poly::one();
        let mut negate = false;
        for k in 0..n.saturating_sub(1) {
            let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
                return Poly::zero();
            };
            if p != k {
                m.swap(p, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.exact_div(&prev);
                }
                m[i][k] = Poly::zero();
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate {
            -d
        } else {
            d
        }
    }

    /// Classical adjoint: transposed cofactor matrix.
    pub fn adjugate(&self) -> PolyMatrix {
        assert_eq!(self.rows, self.cols, "adjugate of a non-square matrix");
        let n = self.rows;
        if n == 1 {
            return PolyMatrix::identity(1);
        }
        PolyMatrix::from_fn(n, n, |i, j| {
            let c = self.minor(j, i).det();
            if (i + j) % 2 == 1 {
                -c
            } else {
                c
            }
        })
    }
}

/// Determinant and adjugate; `M * adj = det * I`.
pub fn polymatrix_det_adj(m: &PolyMatrix) -> (Poly, PolyMatrix) {
    (m.det(), m.adjugate())
}

/// Quotient of polynomials in lowest terms. The denominator is normalized to
/// `den(0) = 1` when `den(0) != 0`, and to monic otherwise.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    /// Panics if `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num,
                den: Poly::one(),
            };
        }
        let g = gcd_poly(&num, &den);
        let (num, den) = (num.exact_div(&g), den.exact_div(&g));
        let c0 = den.coeff(0);
        let norm = if c0.is_zero() {
            den.leading_coeff().unwrap().recip()
        } else {
            c0.recip()
        };
        RationalFunction {
            num: num.scale(&norm),
            den: den.scale(&norm),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Bounded at infinity: `deg num <= deg den`.
    pub fn is_proper(&self) -> bool {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => true,
            (Some(n), Some(d)) => n <= d,
            (Some(_), None) => unreachable!(),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Option<Scalar> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num.display_with("λ"))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.display_with("λ"),
                self.den.display_with("λ")
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::scalar::{int, rat};

    fn c(x: Scalar) -> Poly {
        Poly::constant(x)
    }

    #[test]
    fn lobatto_two_stage_resolvent() {
        let a = vec![vec![int(0), int(0)], vec![rat(1, 2), rat(1, 2)]];
        let m = PolyMatrix::identity_minus_lambda(&a);
        let (det, adj) = polymatrix_det_adj(&m);
        assert_eq!(det, Poly::new(vec![int(1), rat(-1, 2)]));
        let entry = |i, j| RationalFunction::new(adj.get(i, j).clone(), det.clone());
        let two_minus = Poly::from_i64(&[2, -1]);
        assert_eq!(entry(0, 0), RationalFunction::new(Poly::one(), Poly::one()));
        assert!(entry(0, 1).num().is_zero());
        assert_eq!(entry(1, 0), RationalFunction::new(Poly::x(), two_minus.clone()));
        assert_eq!(entry(1, 1), RationalFunction::new(c(int(2)), two_minus));
        assert_eq!(m.mul(&adj), PolyMatrix::identity(2).scale(&det));
    }

    #[test]
    fn one_by_one() {
        let m = PolyMatrix::new(1, 1, vec![Poly::new(vec![int(1), rat(-1, 2)])]);
        let (det, adj) = polymatrix_det_adj(&m);
        assert_eq!(det, *m.get(0, 0));
        assert_eq!(adj, PolyMatrix::identity(1));
    }

    #[test]
    fn identity_det_adj() {
        let (det, adj) = polymatrix_det_adj(&PolyMatrix::identity(2));
        assert_eq!(det, Poly::one());
        assert_eq!(adj, PolyMatrix::identity(2));
    }

    #[test]
    fn zero_leading_pivot_needs_swap() {
        let m = PolyMatrix::new(
            2,
            2,
            vec![Poly::zero(), Poly::one(), Poly::one(), Poly::x()],
        );
        assert_eq!(m.det(), -Poly::one());
    }

    #[test]
    fn rational_function_normalization() {
        let r = RationalFunction::new(Poly::from_i64(&[2, 1]), Poly::from_i64(&[4, -2]));
        assert_eq!(r.den(), &Poly::new(vec![int(1), rat(-1, 2)]));
        assert!(r.is_proper());
        assert!(!RationalFunction::new(Poly::from_i64(&[0, 0, 1]), Poly::from_i64(&[1, 1])).is_proper());
        assert_eq!(r.to_string(), "((1/4)λ + 1/2)/(-(1/2)λ + 1)");
    }
}
