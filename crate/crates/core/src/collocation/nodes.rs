//! Node validation, the node polynomial and structural flags.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::poly::{gcd_poly, Poly};
use crate::exactmath::scalar::{format_scalar, parse_scalar_list, to_f64, Exactness, Scalar};
use crate::exactmath::sturm::{isolate_real_roots, sturm_real_root_count, Bound};

/// Distinct collocation nodes in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    values: Vec<Scalar>,
    exactness: Exactness,
    input_order: Vec<Scalar>,
}

impl NodeSet {
    /// Nodes known exactly, in any order.
    pub fn exact(values: &[Scalar]) -> Result<NodeSet> {
        let raw: Vec<_> = values.iter().map(|v| (v.clone(), Exactness::Exact)).collect();
        validate_nodes(&raw)
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }

    /// Nodes as given, before sorting.
    pub fn input_order(&self) -> &[Scalar] {
        &self.input_order
    }

    pub fn exactness(&self) -> Exactness {
        self.exactness
    }

    pub fn stage_count(&self) -> usize {
        self.values.len()
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.values.iter().map(to_f64).collect()
    }
}

/// Sorts and checks the nodes. Duplicates are reported with their 1-based
/// input positions.
pub fn validate_nodes(raw: &[(Scalar, Exactness)]) -> Result<NodeSet> {
    if raw.is_empty() {
        return Err(Error::EmptyNodes);
    }
    let mut idx: Vec<usize> = (0..raw.len()).collect();
    idx.sort_by(|&i, &j| raw[i].0.cmp(&raw[j].0).then(i.cmp(&j)));
    for w in idx.windows(2) {
        if raw[w[0]].0 == raw[w[1]].0 {
            return Err(Error::DuplicateNode {
                value: format_scalar(&raw[w[0]].0),
                first: w[0] + 1,
                second: w[1] + 1,
            });
        }
    }
    let exactness = raw
        .iter()
        .fold(Exactness::Exact, |acc, (_, e)| acc.and(*e));
    Ok(NodeSet {
        values: idx.iter().map(|&i| raw[i].0.clone()).collect(),
        exactness,
        input_order: raw.iter().map(|(v, _)| v.clone()).collect(),
    })
}

/// Parses and validates a comma-separated node list.
pub fn parse_nodes(text: &str) -> Result<NodeSet> {
    validate_nodes(&parse_scalar_list(text)?)
}

/// `(X - c_1)...(X - c_s)`. Refuses nodes that are only approximations.
pub fn pi_from_nodes(ns: &NodeSet) -> Result<Poly> {
    if !ns.exactness.is_exact() {
        return Err(Error::NotExact);
    }
    Ok(Poly::from_roots(&ns.values))
}

/// Checks that `p` has `deg p` distinct real roots and returns it monic.
pub fn check_collocation_poly(p: &Poly) -> Result<Poly> {
    let s = match p.degree() {
        None | Some(0) => {
            return Err(Error::InvalidPi(format!(
                "need degree at least 1, got {}",
                p.display_with("X")
            )))
        }
        Some(s) => s,
    };
    let p = p.monic();
    if !gcd_poly(&p, &p.derivative()).is_constant() {
        return Err(Error::InvalidPi("repeated roots".into()));
    }
    let real = sturm_real_root_count(&p, &Bound::NegInf, &Bound::PosInf);
    if real != s {
        return Err(Error::InvalidPi(format!(
            "only {real} of {s} roots are real"
        )));
    }
    Ok(p)
}

/// Node approximations from a node polynomial, each within `width` of a true
/// root. Roots that are simple rationals are recovered exactly; the set is
/// flagged exact only if all of them are.
pub fn nodes_from_pi(p: &Poly, width: &Scalar) -> Result<NodeSet> {
    let p = check_collocation_poly(p)?;
    let mut all_exact = true;
    let values: Vec<Scalar> = isolate_real_roots(&p, width)
        .into_iter()
        .map(|iv| {
            if iv.is_exact() {
                return iv.lo;
            }
            let guess = simplest_rational(&iv.lo, &iv.hi);
            if p.eval(&guess).is_zero() {
                guess
            } else {
                all_exact = false;
                iv.midpoint()
            }
        })
        .collect();
    let exactness = if all_exact {
        Exactness::Exact
    } else {
        Exactness::Numerical
    };
    let raw: Vec<_> = values.into_iter().map(|v| (v, exactness)).collect();
    validate_nodes(&raw)
}

/// The rational with smallest denominator in `[lo, hi]`.
pub fn simplest_rational(lo: &Scalar, hi: &Scalar) -> Scalar {
    assert!(lo <= hi, "empty interval");
    if !lo.is_positive() && !hi.is_negative() {
        return Scalar::zero();
    }
    if hi.is_negative() {
        return -simplest_rational(&-hi, &-lo);
    }
    // continued-fraction descent with 0 < lo <= hi
    let mut terms = Vec::new();
    let (mut x, mut y) = (lo.clone(), hi.clone());
    let last = loop {
        let fx = x.floor();
        if fx == x || fx.clone() + Scalar::one() <= y {
            break if fx == x { fx } else { fx + Scalar::one() };
        }
        terms.push(fx.clone());
        let (nx, ny) = ((&y - &fx).recip(), (&x - &fx).recip());
        x = nx;
        y = ny;
    };
    terms
        .into_iter()
        .rev()
        .fold(last, |acc, t| t + acc.recip())
}

/// Structural properties of a node set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StructureFlags {
    /// All nodes non-negative.
    pub forward: bool,
    /// `c_i + c_{s+1-i} = 1` for every `i`.
    pub symmetric: bool,
    pub contains_zero_node: bool,
}

pub fn structure_flags(ns: &NodeSet) -> StructureFlags {
    let v = &ns.values;
    let s = v.len();
    StructureFlags {
        forward: v.iter().all(|c| !c.is_negative()),
        symmetric: (0..s).all(|i| (&v[i] + &v[s - 1 - i]).is_one()),
        contains_zero_node: v.iter().any(Zero::is_zero),
    }
}

impl StructureFlags {
    /// Same flags, read off the node polynomial; exact even when the roots
    /// are irrational.
    pub fn from_pi(p: &Poly) -> StructureFlags {
        let s = p.degree().expect("node polynomial of positive degree");
        let sign = if s % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        // p(1 - X) = (-1)^s p(X)
        let mirrored = p.compose_neg().shift(&-Scalar::one());
        let negative = sturm_real_root_count(
            &p.monic(),
            &Bound::NegInf,
            &Bound::Finite(Scalar::zero()),
        );
        let zero = p.coeff(0).is_zero();
        StructureFlags {
            forward: negative == usize::from(zero),
            symmetric: mirrored == p.scale(&sign),
            contains_zero_node: zero,
        }
    }
}
