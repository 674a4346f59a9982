//! Roots on the imaginary axis.

use crate::exactmath::poly::{gcd_poly, Poly};
use crate::exactmath::sturm::{default_isolation_width, isolate_real_roots, RootInterval};

/// Real `x` with `p(ix) = 0`: the real roots of `gcd(Re p(ix), Im p(ix))`.
/// Panics on the zero polynomial.
pub fn imaginary_axis_roots(p: &Poly) -> Vec<RootInterval> {
    assert!(!p.is_zero(), "axis roots of the zero polynomial");
    let g = axis_gcd(p);
    if g.is_constant() {
        return Vec::new();
    }
    isolate_real_roots(&g, &default_isolation_width())
}

/// Real polynomial whose real roots are exactly the axis parameters of `p`.
pub fn axis_gcd(p: &Poly) -> Poly {
    let (re, im) = p.axis_parts();
    match (re.is_zero(), im.is_zero()) {
        (_, true) => re.monic(),
        (true, false) => im.monic(),
        _ => gcd_poly(&re, &im),
    }
}
