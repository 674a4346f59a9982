//! Butcher coefficients of a collocation method.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::field::Field;
use crate::exactmath::linalg::{inverse, mat_mul, solve, transpose, Matrix};
use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::{to_f64, Exactness, Scalar};

use super::nodes::NodeSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ButcherTableau {
    pub a: Vec<Vec<Scalar>>,
    pub b: Vec<Scalar>,
    pub c: Vec<Scalar>,
    /// Whether the nodes were given exactly.
    pub exactness: Exactness,
    /// Entries were computed from rational approximations of irrational
    /// nodes, so they are themselves approximations.
    pub approximate: bool,
}

impl ButcherTableau {
    pub fn stages(&self) -> usize {
        self.c.len()
    }

    /// Entries are the true coefficients for the stated nodes.
    pub fn has_exact_entries(&self) -> bool {
        !self.approximate
    }

    pub fn a_f64(&self) -> Vec<Vec<f64>> {
        self.a.iter().map(|r| r.iter().map(to_f64).collect()).collect()
    }

    pub fn b_f64(&self) -> Vec<f64> {
        self.b.iter().map(to_f64).collect()
    }

    pub fn c_f64(&self) -> Vec<f64> {
        self.c.iter().map(to_f64).collect()
    }

    /// `sum_j a_ij c_j^(p-1) = c_i^p / p` and `sum_i b_i c_i^(p-1) = 1/p`
    /// for `p = 1..s`.
    pub fn satisfies_quadrature_identities(&self) -> bool {
        let s = self.stages();
        (1..=s).all(|p| {
            let pp = Scalar::from_integer(p.into());
            let row_ok = (0..s).all(|i| {
                let lhs = (0..s).fold(Scalar::zero(), |acc, j| {
                    acc + &self.a[i][j] * num_traits::pow(self.c[j].clone(), p - 1)
                });
                lhs == num_traits::pow(self.c[i].clone(), p) / &pp
            });
            let b_ok = (0..s).fold(Scalar::zero(), |acc, i| {
                acc + &self.b[i] * num_traits::pow(self.c[i].clone(), p - 1)
            }) == pp.recip();
            row_ok && b_ok
        })
    }
}

/// `W_ij = c_i^j / j`, `V_ij = c_i^(j-1)`, both 1-based.
fn vandermonde_pair<F: Field>(c: &[F]) -> (Matrix<F>, Matrix<F>) {
    let s = c.len();
    let mut w = vec![vec![F::zero_elem(); s]; s];
    let mut v = vec![vec![F::zero_elem(); s]; s];
    for (i, ci) in c.iter().enumerate() {
        let mut pow = F::one_elem();
        for j in 0..s {
            v[i][j] = pow.clone();
            pow = pow * ci.clone();
            w[i][j] = pow.clone() / F::from_rational(Scalar::from_integer((j + 1).into()));
        }
    }
    (w, v)
}

/// `A = W V^{-1}` and `b` from the moment equations `V^t b = (1, 1/2, ..., 1/s)`,
/// over any exact field. Panics on repeated nodes.
pub fn collocation_coefficients<F: Field>(c: &[F]) -> (Matrix<F>, Vec<F>) {
    let (w, v) = vandermonde_pair(c);
    let v_inv = inverse(&v).expect("distinct nodes give an invertible Vandermonde matrix");
    let moments: Vec<F> = (1..=c.len())
        .map(|k| F::from_rational(Scalar::new(1.into(), k.into())))
        .collect();
    let b = solve(&transpose(&v), &moments).expect("invertible");
    (mat_mul(&w, &v_inv), b)
}

/// Lagrange basis polynomials `l_j` with `l_j(c_i) = delta_ij`.
pub fn lagrange_basis(c: &[Scalar]) -> Vec<Poly> {
    (0..c.len())
        .map(|j| {
            let others: Vec<Scalar> = c
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != j)
                .map(|(_, v)| v.clone())
                .collect();
            let p = Poly::from_roots(&others);
            let scale = p.eval(&c[j]).recip();
            p.scale(&scale)
        })
        .collect()
}

/// `b_j = int_0^1 l_j`.
pub fn lagrange_weights(c: &[Scalar]) -> Vec<Scalar> {
    lagrange_basis(c)
        .iter()
        .map(|l| l.antiderivative().eval(&Scalar::one()))
        .collect()
}

/// `a_ij = int_0^{c_i} l_j`, computed directly.
pub fn lagrange_matrix(c: &[Scalar]) -> Vec<Vec<Scalar>> {
    let prims: Vec<Poly> = lagrange_basis(c).iter().map(Poly::antiderivative).collect();
    c.iter()
        .map(|ci| prims.iter().map(|p| p.eval(ci)).collect())
        .collect()
}

/// Builds the tableau for the given nodes: `A` through the Vandermonde
/// identity, `b` by integrating the Lagrange basis, then checks both against
/// the quadrature identities.
pub fn butcher_from_nodes(ns: &NodeSet) -> Result<ButcherTableau> {
    build(ns, false)
}

/// As [`butcher_from_nodes`], for nodes that approximate irrational values.
pub(crate) fn butcher_from_approximate_nodes(ns: &NodeSet) -> Result<ButcherTableau> {
    build(ns, true)
}

fn build(ns: &NodeSet, approximate: bool) -> Result<ButcherTableau> {
    let c = ns.values().to_vec();
    let (a, _) = collocation_coefficients::<Scalar>(&c);
    let b = lagrange_weights(&c);
    let tab = ButcherTableau {
        a,
        b,
        c,
        exactness: ns.exactness(),
        approximate,
    };
    if !tab.satisfies_quadrature_identities() {
        return Err(Error::InternalConsistency(
            "tableau fails the quadrature identities".into(),
        ));
    }
    Ok(tab)
}
