//! Named node families and the assembled collocation method.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactmath::poly::Poly;
use crate::exactmath::scalar::{format_scalar, pow2, Exactness, Scalar};

use super::nodes::{check_collocation_poly, nodes_from_pi, pi_from_nodes, NodeSet, StructureFlags};
use super::tableau::{butcher_from_approximate_nodes, butcher_from_nodes, ButcherTableau};

/// Isolation width used when irrational nodes feed a tableau.
pub fn tableau_isolation_width() -> Scalar {
    pow2(96).recip()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NodeFamily {
    Explicit(NodeSet),
    /// Roots of the shifted Legendre polynomial of degree `s`.
    Gauss(usize),
    /// `(i - 1)/(s - 1)` for `i = 1..s`; needs `s >= 2`.
    UniformClosed(usize),
    /// `i/(s + 1)` for `i = 1..s`.
    UniformOpen(usize),
    /// Node polynomial given by its coefficients, lowest degree first.
    PiCoefficients(Poly),
}

impl fmt::Display for NodeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeFamily::Explicit(ns) => {
                let v: Vec<String> = ns.input_order().iter().map(format_scalar).collect();
                write!(f, "nodes {}", v.join(","))
            }
            NodeFamily::Gauss(s) => write!(f, "gauss {s}"),
            NodeFamily::UniformClosed(s) => write!(f, "uniform-closed {s}"),
            NodeFamily::UniformOpen(s) => write!(f, "uniform-open {s}"),
            NodeFamily::PiCoefficients(p) => write!(f, "pi {}", p.display_with("X")),
        }
    }
}

/// `d^s/dX^s (X(X-1))^s`, made monic.
pub fn gauss_pi(s: usize) -> Poly {
    assert!(s >= 1, "Gauss family needs s >= 1");
    let mut p = Poly::from_i64(&[0, -1, 1]).pow(s as u32);
    for _ in 0..s {
        p = p.derivative();
    }
    p.monic()
}

fn check_stage_count(s: usize, min: usize, reason: &'static str) -> Result<()> {
    if s < min {
        Err(Error::StageCount { got: s, reason })
    } else {
        Ok(())
    }
}

fn uniform(s: usize, closed: bool) -> Vec<Scalar> {
    (1..=s)
        .map(|i| {
            if closed {
                Scalar::new((i - 1).into(), (s - 1).into())
            } else {
                Scalar::new(i.into(), (s + 1).into())
            }
        })
        .collect()
}

/// A fully constructed collocation method.
#[derive(Clone, Debug)]
pub struct CollocationMethod {
    pub family: NodeFamily,
    pub nodes: NodeSet,
    /// Exact node polynomial. For decimal node input this is the polynomial
    /// of the decimal values.
    pub pi: Poly,
    pub flags: StructureFlags,
    pub tableau: ButcherTableau,
    /// `pi` coincides with the Gauss polynomial of the same degree.
    pub is_gauss: bool,
}

impl CollocationMethod {
    pub fn from_family(family: NodeFamily) -> Result<CollocationMethod> {
        let (nodes, pi) = match &family {
            NodeFamily::Explicit(ns) => (ns.clone(), Poly::from_roots(ns.values())),
            NodeFamily::Gauss(s) => {
                check_stage_count(*s, 1, "Gauss family needs at least one stage")?;
                let pi = gauss_pi(*s);
                (nodes_from_pi(&pi, &tableau_isolation_width())?, pi)
            }
            NodeFamily::UniformClosed(s) => {
                check_stage_count(*s, 2, "uniform grid with both endpoints needs at least two stages")?;
                let ns = NodeSet::exact(&uniform(*s, true))?;
                let pi = pi_from_nodes(&ns)?;
                (ns, pi)
            }
            NodeFamily::UniformOpen(s) => {
                check_stage_count(*s, 1, "uniform open grid needs at least one stage")?;
                let ns = NodeSet::exact(&uniform(*s, false))?;
                let pi = pi_from_nodes(&ns)?;
                (ns, pi)
            }
            NodeFamily::PiCoefficients(p) => {
                let pi = check_collocation_poly(p)?;
                (nodes_from_pi(&pi, &tableau_isolation_width())?, pi)
            }
        };
        let from_pi = !matches!(family, NodeFamily::Explicit(_));
        let approximate = from_pi && !nodes.exactness().is_exact();
        let tableau = if approximate {
            butcher_from_approximate_nodes(&nodes)?
        } else {
            butcher_from_nodes(&nodes)?
        };
        let s = nodes.stage_count();
        Ok(CollocationMethod {
            flags: StructureFlags::from_pi(&pi),
            is_gauss: pi == gauss_pi(s),
            family,
            nodes,
            pi,
            tableau,
        })
    }

    pub fn from_nodes(ns: NodeSet) -> Result<CollocationMethod> {
        CollocationMethod::from_family(NodeFamily::Explicit(ns))
    }

    pub fn stages(&self) -> usize {
        self.nodes.stage_count()
    }

    /// The node polynomial is exactly the intended one: false only for
    /// decimal node input.
    pub fn pi_exact(&self) -> bool {
        match &self.family {
            NodeFamily::Explicit(ns) => ns.exactness().is_exact(),
            _ => true,
        }
    }

    pub fn input_exactness(&self) -> Exactness {
        if self.pi_exact() {
            Exactness::Exact
        } else {
            Exactness::Numerical
        }
    }

    /// The nodes are all rational and known exactly.
    pub fn has_rational_nodes(&self) -> bool {
        self.tableau.has_exact_entries() && self.pi_exact()
    }

    /// Symmetric, in the sense of the node flags; kept here for call sites
    /// that only hold the method.
    pub fn is_symmetric(&self) -> bool {
        self.flags.symmetric
    }

    pub fn sum_b_is_one(&self) -> bool {
        self.tableau
            .b
            .iter()
            .fold(Scalar::zero(), |acc, x| acc + x)
            .is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collocation::nodes::parse_nodes;
    use crate::exactmath::scalar::{factorial, int, rat};

    #[test]
    fn gauss_small() {
        assert_eq!(gauss_pi(1), Poly::new(vec![rat(-1, 2), int(1)]));
        assert_eq!(gauss_pi(2), Poly::new(vec![rat(1, 6), int(-1), int(1)]));
    }

    /// `tau(pi)` against the closed form `s! sum_k (s+k)!/(k!(s-k)!) (-X)^k`,
    /// up to a constant.
    #[test]
    fn gauss_tau_closed_form() {
        for s in 1..=6usize {
            let tau = gauss_pi(s).tau();
            let closed = Poly::new(
                (0..=s)
                    .map(|k| {
                        let v = Scalar::from_integer(
                            factorial(s + k) / (factorial(k) * factorial(s - k)),
                        );
                        if k % 2 == 1 { -v } else { v }
                    })
                    .collect(),
            );
            let ratio = tau.coeff(0) / closed.coeff(0);
            assert_eq!(closed.scale(&ratio), tau, "s = {s}");
        }
    }

    #[test]
    fn families_build() {
        let m = CollocationMethod::from_family(NodeFamily::UniformClosed(4)).unwrap();
        assert_eq!(m.nodes.values(), parse_nodes("0,1/3,2/3,1").unwrap().values());
        let m = CollocationMethod::from_family(NodeFamily::UniformOpen(2)).unwrap();
        assert_eq!(m.nodes.values(), parse_nodes("1/3,2/3").unwrap().values());
        assert!(m.has_rational_nodes());
        let g = CollocationMethod::from_family(NodeFamily::Gauss(3)).unwrap();
        assert!(g.is_gauss && g.flags.symmetric && g.tableau.approximate);
        assert!(!g.has_rational_nodes());
        assert!(matches!(
            CollocationMethod::from_family(NodeFamily::UniformClosed(1)),
            Err(Error::StageCount { .. })
        ));
        assert!(matches!(
            CollocationMethod::from_family(NodeFamily::Gauss(0)),
            Err(Error::StageCount { .. })
        ));
    }

    #[test]
    fn pi_mode_with_rational_roots_is_exact() {
        let m = CollocationMethod::from_family(NodeFamily::PiCoefficients(Poly::new(vec![
            rat(2, 9),
            int(-1),
            int(1),
        ])))
        .unwrap();
        assert!(m.has_rational_nodes());
        assert_eq!(m.tableau.b, vec![rat(1, 2), rat(1, 2)]);
    }

    #[test]
    fn pi_coefficients_are_normalized() {
        let m = CollocationMethod::from_family(NodeFamily::PiCoefficients(Poly::from_i64(&[0, -2, 2])))
            .unwrap();
        assert_eq!(m.pi, Poly::from_i64(&[0, -1, 1]));
    }

    #[test]
    fn gauss_one_is_midpoint() {
        let m = CollocationMethod::from_family(NodeFamily::Gauss(1)).unwrap();
        assert!(m.has_rational_nodes());
        assert_eq!(m.tableau.a, vec![vec![rat(1, 2)]]);
    }
}
