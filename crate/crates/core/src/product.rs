//! Cartesian and direct products of digraphs.
//!
//! Product vertex `(g, h)` has flat index `g * n_H + h`. This row-major layout
//! is stable so that witnesses can always be decoded back to pairs.

use crate::bitset::VertexSet;
use crate::error::GraphError;
use crate::graph::{Digraph, MAX_VERTICES};

/// Bijection between pairs `(g, h)` and flat product indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductVertexMap {
    pub n_g: usize,
    pub n_h: usize,
}

/// Which fiber to extract.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fiber {
    /// `G^h`: all `(g, h)` for the fixed `h`.
    G(usize),
    /// `ᵍH`: all `(g, h)` for the fixed `g`.
    H(usize),
}

impl ProductVertexMap {
    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    #[inline]
    pub fn pair(&self, idx: usize) -> (usize, usize) {
        (idx / self.n_h, idx % self.n_h)
    }

    pub fn order(&self) -> usize {
        self.n_g * self.n_h
    }

    pub fn fiber_vertices(&self, which: Fiber) -> Result<VertexSet, GraphError> {
        let n = self.order();
        match which {
            Fiber::G(h) => {
                if h >= self.n_h {
                    return Err(GraphError::FiberOutOfRange { index: h, len: self.n_h });
                }
                Ok(VertexSet::from_indices(n, (0..self.n_g).map(|g| self.index(g, h))))
            }
            Fiber::H(g) => {
                if g >= self.n_g {
                    return Err(GraphError::FiberOutOfRange { index: g, len: self.n_g });
                }
                Ok(VertexSet::from_indices(n, (0..self.n_h).map(|h| self.index(g, h))))
            }
        }
    }

    /// Projection of a product vertex set onto its first coordinate.
    pub fn project_g(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_indices(self.n_g, set.iter().map(|i| self.pair(i).0))
    }

    pub fn project_h(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_indices(self.n_h, set.iter().map(|i| self.pair(i).1))
    }

    /// `A × B` as a set of flat indices.
    pub fn set_product(&self, a: &VertexSet, b: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.order());
        for g in a.iter() {
            for h in b.iter() {
                out.insert(self.index(g, h));
            }
        }
        out
    }
}

fn product_map(g: &Digraph, h: &Digraph) -> Result<ProductVertexMap, GraphError> {
    if g.order() == 0 || h.order() == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let n = g
        .order()
        .checked_mul(h.order())
        .filter(|&n| n <= MAX_VERTICES)
        .ok_or(GraphError::Capacity(g.order().saturating_mul(h.order())))?;
    debug_assert!(n > 0);
    Ok(ProductVertexMap { n_g: g.order(), n_h: h.order() })
}

fn pair_labels(g: &Digraph, h: &Digraph, map: &ProductVertexMap) -> Vec<String> {
    (0..map.order())
        .map(|i| {
            let (a, b) = map.pair(i);
            format!("({},{})", g.label(a), h.label(b))
        })
        .collect()
}

/// `G □ H`: arcs move along exactly one coordinate.
pub fn cartesian_product(g: &Digraph, h: &Digraph) -> Result<(Digraph, ProductVertexMap), GraphError> {
    let map = product_map(g, h)?;
    let mut arcs = Vec::with_capacity(g.order() * h.arc_count() + h.order() * g.arc_count());
    for a in 0..g.order() {
        for (h1, h2) in h.arcs() {
            arcs.push((map.index(a, h1), map.index(a, h2)));
        }
    }
    for b in 0..h.order() {
        for (g1, g2) in g.arcs() {
            arcs.push((map.index(g1, b), map.index(g2, b)));
        }
    }
    let d = Digraph::from_arcs(map.order(), arcs)?.with_labels(pair_labels(g, h, &map))?;
    Ok((d, map))
}

/// `G × H`: arcs move along both coordinates at once.
pub fn direct_product(g: &Digraph, h: &Digraph) -> Result<(Digraph, ProductVertexMap), GraphError> {
    let map = product_map(g, h)?;
    let mut arcs = Vec::with_capacity(g.arc_count() * h.arc_count());
    for (g1, g2) in g.arcs() {
        for (h1, h2) in h.arcs() {
            arcs.push((map.index(g1, h1), map.index(g2, h2)));
        }
    }
    let d = Digraph::from_arcs(map.order(), arcs)?.with_labels(pair_labels(g, h, &map))?;
    Ok((d, map))
}
