//! Exact resolvent `(I - lA)^{-1}` and weighted row `l b^t (I - lA)^{-1}`.

use crate::collocation::tableau::ButcherTableau;
use crate::error::{Error, Result};
use crate::exactmath::matrix::{polymatrix_det_adj, PolyMatrix, RationalFunction};
use crate::exactmath::poly::Poly;

#[derive(Clone, Debug)]
pub struct Resolvent {
    /// `det(I - lA)`.
    pub det: Poly,
    pub adj: PolyMatrix,
    /// Reduced entries of `adj / det`.
    pub entries: Vec<Vec<RationalFunction>>,
}

/// Refuses tableaux whose entries are approximations.
pub fn resolvent_entries(tab: &ButcherTableau) -> Result<Resolvent> {
    if !tab.has_exact_entries() {
        return Err(Error::NotExact);
    }
    let m = PolyMatrix::identity_minus_lambda(&tab.a);
    let (det, adj) = polymatrix_det_adj(&m);
    let s = tab.stages();
    let entries = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| RationalFunction::new(adj.get(i, j).clone(), det.clone()))
                .collect()
        })
        .collect();
    Ok(Resolvent { det, adj, entries })
}

impl Resolvent {
    /// Reduced entries of `l b^t adj / det`.
    pub fn weighted_row(&self, tab: &ButcherTableau) -> Vec<RationalFunction> {
        let s = tab.stages();
        (0..s)
            .map(|j| {
                let sum = (0..s).fold(Poly::zero(), |acc, i| {
                    &acc + &self.adj.get(i, j).scale(&tab.b[i])
                });
                RationalFunction::new(&sum * &Poly::x(), self.det.clone())
            })
            .collect()
    }
}

/// `l b^t (I - lA)^{-1}`, entrywise reduced.
pub fn weighted_resolvent_row(tab: &ButcherTableau) -> Result<Vec<RationalFunction>> {
    Ok(resolvent_entries(tab)?.weighted_row(tab))
}
