//! Sturm sequences and real-root isolation in exact arithmetic.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{radical, Poly};
use super::scalar::{pow2, to_f64, Scalar};

/// Endpoint of a counting interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Scalar),
    PosInf,
}

/// Default isolating-interval width, `2^-40`.
pub fn default_isolation_width() -> Scalar {
    pow2(40).recip()
}

#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<Poly>,
}

impl SturmSequence {
    /// Builds `p, p', -rem(p, p'), ...`. Panics on the zero polynomial.
    pub fn new(p: &Poly) -> Self {
        assert!(!p.is_zero(), "Sturm sequence of the zero polynomial");
        let mut chain = vec![normalize(p.clone()), normalize(p.derivative())];
        if chain[1].is_zero() {
            chain.pop();
        }
        while chain.len() >= 2 {
            let n = chain.len();
            let r = chain[n - 2].rem(&chain[n - 1]);
            if r.is_zero() {
                break;
            }
            chain.push(normalize(-&r));
        }
        SturmSequence { chain }
    }

    fn variations_at(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().filter_map(|q| {
            let lc = q.leading_coeff()?;
            let deg = q.degree().unwrap_or(0);
            let s = match at {
                Bound::PosInf => sign(lc),
                Bound::NegInf => {
                    if deg % 2 == 0 {
                        sign(lc)
                    } else {
                        -sign(lc)
                    }
                }
                Bound::Finite(x) => sign(&q.eval(x)),
            };
            (s != 0).then_some(s)
        });
        let mut count = 0;
        let mut prev = 0;
        for s in signs {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    /// Number of distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> usize {
        self.variations_at(lo).saturating_sub(self.variations_at(hi))
    }
}

/// Keeps the sign of the leading coefficient, sets its magnitude to one.
fn normalize(p: Poly) -> Poly {
    match p.leading_coeff() {
        Some(lc) => {
            let m = lc.abs();
            if m.is_one() {
                p
            } else {
                p.scale(&m.recip())
            }
        }
        None => p,
    }
}

fn sign(x: &Scalar) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Number of distinct real roots of the square-free polynomial `p` in
/// `(lo, hi]`. Panics on the zero polynomial.
pub fn sturm_real_root_count(p: &Poly, lo: &Bound, hi: &Bound) -> usize {
    SturmSequence::new(p).count(lo, hi)
}

/// Half-open interval `(lo, hi]` holding exactly one real root, or the
/// degenerate `[r, r]` when the root `r` was hit exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Scalar,
    pub hi: Scalar,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Scalar {
        (&self.lo + &self.hi) / Scalar::from_integer(2.into())
    }

    pub fn width(&self) -> Scalar {
        &self.hi - &self.lo
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn contains(&self, x: &Scalar) -> bool {
        if self.is_exact() {
            x == &self.lo
        } else {
            &self.lo < x && x <= &self.hi
        }
    }
}

/// Strict bound on the modulus of every complex root: `1 + max |a_k / a_n|`.
pub fn cauchy_bound(p: &Poly) -> Scalar {
    let lc = p.leading_coeff().expect("root bound of the zero polynomial").abs();
    let n = p.degree().unwrap();
    p.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Scalar::zero(), |m, v| if v > m { v } else { m })
        + Scalar::one()
}

/// Disjoint isolating intervals, in ascending order, one per distinct real
/// root of `p`, each no wider than `max_width`.
pub fn isolate_real_roots(p: &Poly, max_width: &Scalar) -> Vec<RootInterval> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    assert!(max_width.is_positive(), "isolation width must be positive");
    let q = radical(p);
    if q.is_constant() {
        return Vec::new();
    }
    let seq = SturmSequence::new(&q);
    let b = cauchy_bound(&q);
    let total = seq.count(&Bound::NegInf, &Bound::PosInf);
    let two = BigRational::from_integer(2.into());

    let mut out = Vec::with_capacity(total);
    let mut stack = vec![(-b.clone(), b, total)];
    while let Some((lo, hi, n)) = stack.pop() {
        if n == 0 {
            continue;
        }
        if n == 1 {
            if q.eval(&hi).is_zero() {
                out.push(RootInterval { lo: hi.clone(), hi });
                continue;
            }
            if &(&hi - &lo) <= max_width {
                out.push(RootInterval { lo, hi });
                continue;
            }
        }
        let mid = (&lo + &hi) / &two;
        let left = seq.count(&Bound::Finite(lo.clone()), &Bound::Finite(mid.clone()));
        stack.push((mid.clone(), hi, n - left));
        stack.push((lo, mid, left));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::poly::square_free_part;
    use crate::exactmath::scalar::{int, rat};

    fn all(p: &Poly) -> usize {
        sturm_real_root_count(p, &Bound::NegInf, &Bound::PosInf)
    }

    #[test]
    fn counts_simple_cases() {
        assert_eq!(all(&Poly::from_i64(&[1, 0, 1])), 0);
        assert_eq!(all(&Poly::from_i64(&[0, -1, 1])), 2);
        assert_eq!(all(&Poly::from_i64(&[5])), 0);
    }

    #[test]
    fn half_open_interval_convention() {
        // roots 0 and 1
        let p = Poly::from_i64(&[0, -1, 1]);
        let f = |x: i64| Bound::Finite(int(x));
        assert_eq!(sturm_real_root_count(&p, &f(0), &f(1)), 1);
        assert_eq!(sturm_real_root_count(&p, &f(-1), &f(0)), 1);
        assert_eq!(sturm_real_root_count(&p, &f(-1), &f(1)), 2);
    }

    #[test]
    fn quintic_char_poly_has_one_real_root() {
        // numerical roots (numpy.roots): one real root near 0.2476 and two
        // complex pairs, one of them -0.000896 +- 0.143237i
        let p = Poly::from_i64(&[-6, 71, -642, 4164, -17280, 34560]);
        let (odd, _) = square_free_part(&p);
        assert_eq!(all(&odd), 1);
    }

    #[test]
    fn isolates_sqrt2() {
        let p = Poly::from_i64(&[-2, 0, 1]);
        let w = default_isolation_width();
        let roots = isolate_real_roots(&p, &w);
        assert_eq!(roots.len(), 2);
        assert!((roots[0].to_f64() + 2f64.sqrt()).abs() < 1e-11);
        assert!((roots[1].to_f64() - 2f64.sqrt()).abs() < 1e-11);
        assert!(roots.iter().all(|r| r.width() <= w));
    }

    #[test]
    fn isolates_rational_root() {
        let p = Poly::new(vec![rat(-1, 2), int(1)]);
        let roots = isolate_real_roots(&p, &default_isolation_width());
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&rat(1, 2)));
    }

    #[test]
    fn no_real_roots_for_complex_pair() {
        // char poly of the (1/3, 2/3) method: X^2 - X/2 + 1/9
        let p = Poly::new(vec![rat(1, 9), rat(-1, 2), int(1)]);
        assert!(isolate_real_roots(&p, &default_isolation_width()).is_empty());
    }

    #[test]
    fn repeated_roots_isolated_once() {
        let p = &Poly::from_i64(&[-1, 1]).pow(3) * &Poly::from_i64(&[2, 1]);
        let roots = isolate_real_roots(&p, &rat(1, 1024));
        assert_eq!(roots.len(), 2);
    }
}
