//! The linear stability function `R = N/D` and its boundary deficit.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::collocation::tableau::ButcherTableau;
use crate::exactmath::linalg::{identity, solve};
use crate::exactmath::poly::{gcd_poly, Poly};
use crate::exactmath::scalar::{rat, Scalar};

/// `R(l) = tau(pi(X+1))(1/l) / tau(pi)(1/l)`, as polynomials in `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityFunction {
    pub s: usize,
    /// `l^s tau(pi(X+1))(1/l)`.
    pub n: Poly,
    /// `l^s tau(pi)(1/l)`.
    pub d: Poly,
    /// Monic `gcd(n, d)`.
    pub g: Poly,
    /// `n / g`, scaled so that `d_red(0) = 1`.
    pub n_red: Poly,
    pub d_red: Poly,
}

pub fn stability_function(pi: &Poly, s: usize) -> StabilityFunction {
    assert_eq!(pi.degree(), Some(s), "node polynomial must have degree s");
    let pi = pi.monic();
    let n = pi.shift(&Scalar::one()).tau().reversal(s);
    let d = pi.tau().reversal(s);
    let g = gcd_poly(&n, &d);
    let (n_red, d_red) = (n.exact_div(&g), d.exact_div(&g));
    let norm = d_red.coeff(0).recip();
    StabilityFunction {
        s,
        n,
        d,
        g,
        n_red: n_red.scale(&norm),
        d_red: d_red.scale(&norm),
    }
}

impl StabilityFunction {
    /// `R(l)` exactly; `None` at a pole.
    pub fn eval(&self, l: &Scalar) -> Option<Scalar> {
        let den = self.d_red.eval(l);
        (!den.is_zero()).then(|| self.n_red.eval(l) / den)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.n_red.eval_complex(z) / self.d_red.eval_complex(z)
    }

    /// Common integer scaling of the reduced pair: integer coefficients
    /// with gcd one and a positive leading denominator coefficient.
    pub fn integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let all = self.n_red.coeffs().iter().chain(self.d_red.coeffs());
        let lcm = all.clone().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let to_int = |p: &Poly| -> Vec<BigInt> {
            p.coeffs()
                .iter()
                .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
                .collect()
        };
        let (mut num, mut den) = (to_int(&self.n_red), to_int(&self.d_red));
        let g = num.iter().chain(&den).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let flip = den.last().is_some_and(Signed::is_negative);
        for c in num.iter_mut().chain(den.iter_mut()) {
            *c /= &g;
            if flip {
                *c = -&*c;
            }
        }
        (num, den)
    }

    /// Reduced pair scaled to integer coefficients, as polynomials.
    pub fn integer_polys(&self) -> (Poly, Poly) {
        let (num, den) = self.integer_form();
        let lift = |v: Vec<BigInt>| Poly::new(v.into_iter().map(Scalar::from_integer).collect());
        (lift(num), lift(den))
    }

    /// E.g. `(6λ^2 + 17λ + 24)/(λ^2 - 7λ + 24)`.
    pub fn display(&self) -> String {
        let (num, den) = self.integer_polys();
        if den.is_constant() {
            return num.display_with("λ");
        }
        format!("({})/({})", num.display_with("λ"), den.display_with("λ"))
    }

    /// Checks `R(l) = 1 + l b^t (I - l A)^{-1} 1` at `l` in `{±1/2, ±1/3}`,
    /// skipping points where either side is singular.
    pub fn agrees_with_tableau(&self, tab: &ButcherTableau) -> bool {
        [rat(1, 2), rat(-1, 2), rat(1, 3), rat(-1, 3)]
            .iter()
            .all(|l| match (self.eval(l), direct_r(tab, l)) {
                (Some(a), Some(b)) => a == b,
                _ => true,
            })
    }
}

/// `1 + l b^t (I - l A)^{-1} 1`, `None` if `I - l A` is singular.
pub fn direct_r(tab: &ButcherTableau, l: &Scalar) -> Option<Scalar> {
    let s = tab.stages();
    let mut m = identity::<Scalar>(s);
    for i in 0..s {
        for j in 0..s {
            m[i][j] -= l * &tab.a[i][j];
        }
    }
    let y = solve(&m, &vec![Scalar::one(); s])?;
    let bty = tab.b.iter().zip(&y).fold(Scalar::zero(), |acc, (b, y)| acc + b * y);
    Some(Scalar::one() + l * bty)
}

/// `E(x) = |D_red(ix)|^2 - |N_red(ix)|^2`, an even real polynomial whose sign
/// is that of `1 - |R(ix)|^2` away from poles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryDeficit {
    pub e: Poly,
}

pub fn boundary_deficit(sf: &StabilityFunction) -> BoundaryDeficit {
    BoundaryDeficit {
        e: &sf.d_red.axis_modulus_squared() - &sf.n_red.axis_modulus_squared(),
    }
}

impl BoundaryDeficit {
    pub fn is_identically_zero(&self) -> bool {
        self.e.is_zero()
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.e.eval_complex(Complex64::new(x, 0.0)).re
    }
}
