#![allow(dead_code)]

use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use rkcolloc::exactmath::scalar::rat;
use rkcolloc::{NodeSet, Poly, Scalar};

/// Rationals `n/d` with `d <= 12` inside `[lo, hi]`.
pub fn small_rational(lo: i64, hi: i64) -> impl Strategy<Value = Scalar> {
    (1i64..=12).prop_flat_map(move |d| (lo * d..=hi * d).prop_map(move |n| rat(n, d)))
}

pub fn poly_strategy(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(-4, 4), 1..=max_degree + 1).prop_map(Poly::new)
}

pub fn distinct_nodes(s: std::ops::RangeInclusive<usize>, lo: i64, hi: i64) -> impl Strategy<Value = NodeSet> {
    s.prop_flat_map(move |s| {
        prop::collection::btree_set(small_rational(lo, hi), s)
            .prop_map(|set| NodeSet::exact(&set.into_iter().collect::<Vec<_>>()).unwrap())
    })
}

/// Node sets closed under `c -> 1 - c`, at most `max_s` of them.
pub fn symmetric_nodes(max_s: usize) -> impl Strategy<Value = NodeSet> {
    let below_half = small_rational(0, 1).prop_filter("c < 1/2", |c| *c < rat(1, 2));
    (prop::collection::btree_set(below_half, 0..=max_s / 2), any::<bool>())
        .prop_filter("nonempty", |(h, m)| !h.is_empty() || *m)
        .prop_map(move |(half, middle)| {
            let mut v: Vec<Scalar> = Vec::new();
            for c in &half {
                v.push(c.clone());
                v.push(rat(1, 1) - c);
            }
            if middle && v.len() < max_s || v.is_empty() {
                v.push(rat(1, 2));
            }
            NodeSet::exact(&v).unwrap()
        })
}

/// Roots from eigenvalues of the companion matrix, independent of the
/// crate's own root finder.
pub fn companion_roots(p: &Poly) -> Vec<Complex64> {
    let c = p.monic().to_f64_coeffs();
    let n = c.len() - 1;
    if n == 0 {
        return Vec::new();
    }
    let m = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c[i]
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    m.complex_eigenvalues().iter().copied().collect()
}
