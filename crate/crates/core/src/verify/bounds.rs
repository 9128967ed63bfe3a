use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::graph::Digraph;
use crate::solve::validate::is_dominating;
use crate::solve::{domination_number, greedy_set_cover};

use super::CheckConfig;

/// Factor invariants that bound γ of a Cartesian product from below.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductBounds {
    pub gamma_g: usize,
    pub gamma_h: usize,
    pub rho_g: usize,
    pub rho_h: usize,
}

impl ProductBounds {
    /// `max{γ(G)ρ(H), γ(H)ρ(G)}`.
    pub fn packing_bound(&self) -> usize {
        (self.gamma_g * self.rho_h).max(self.gamma_h * self.rho_g)
    }

    /// `γ(G)γ(H) + max{γ(G), γ(H)}`, twice the half bound.
    pub fn twice_half_bound(&self) -> usize {
        self.gamma_g * self.gamma_h + self.gamma_g.max(self.gamma_h)
    }

    /// Smallest integer at least half of [`Self::twice_half_bound`].
    pub fn half_bound(&self) -> usize {
        self.twice_half_bound().div_ceil(2)
    }
}

/// γ of a product, either solved exactly or bracketed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductGamma {
    pub lower: usize,
    pub upper: usize,
    /// A dominating set of size `upper`.
    pub witness: VertexSet,
    pub exact: bool,
}

impl ProductGamma {
    pub fn value(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }

    /// Value known only because the bounds met.
    pub fn pinned_by_bounds(&self) -> bool {
        !self.exact && self.lower == self.upper
    }
}

/// γ of the product `p`. Up to `cfg.exact_threshold` vertices this is an exact
/// solve. Above it, the upper bound is the smallest of a greedy cover and the
/// valid `hints`, and the lower bound is the largest of the packing bound, the
/// half bound and `n / (Δ⁺ + 1)`.
pub fn product_domination(
    p: &Digraph,
    bounds: &ProductBounds,
    hints: &[VertexSet],
    cfg: &CheckConfig,
) -> Result<ProductGamma, SolveError> {
    if p.order() <= cfg.exact_threshold {
        let w = domination_number(p, &cfg.solve)?;
        return Ok(ProductGamma {
            lower: w.value,
            upper: w.value,
            witness: w.witness,
            exact: true,
        });
    }
    let n = p.order();
    let sets: Vec<VertexSet> = (0..n).map(|v| p.closed_out_neighborhood(v)).collect();
    let greedy = greedy_set_cover(n, &sets).expect("closed neighborhoods always cover");
    let mut witness = VertexSet::from_indices(n, greedy);
    for h in hints {
        if h.capacity() == n && h.len() < witness.len() && is_dominating(p, h) {
            witness = h.clone();
        }
    }
    let degree_bound = n.div_ceil(p.max_out_degree() + 1);
    let lower = bounds
        .packing_bound()
        .max(bounds.half_bound())
        .max(degree_bound);
    Ok(ProductGamma {
        lower,
        upper: witness.len(),
        witness,
        exact: false,
    })
}
