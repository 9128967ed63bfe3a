//! Definition-level predicates, written directly from arc membership.
//!
//! Nothing here goes through auxiliary graphs or cover formulations, so these
//! checks are independent of the solvers whose witnesses they re-validate.

use crate::bitset::VertexSet;
use crate::graph::{Digraph, UndirectedGraph};

/// Every vertex outside `s` has an in-neighbor in `s`.
pub fn is_dominating(d: &Digraph, s: &VertexSet) -> bool {
    (0..d.order()).all(|x| s.contains(x) || s.iter().any(|v| d.has_arc(v, x)))
}

/// Every vertex has an in-neighbor in `s`.
pub fn is_total_dominating(d: &Digraph, s: &VertexSet) -> bool {
    (0..d.order()).all(|x| s.iter().any(|v| d.has_arc(v, x)))
}

fn pairs(s: &VertexSet) -> impl Iterator<Item = (usize, usize)> + '_ {
    s.iter().flat_map(move |x| s.iter().filter(move |&y| y > x).map(move |y| (x, y)))
}

/// No arcs inside `p`, and no vertex dominates two members of `p`.
fn packing_by_arcs(d: &Digraph, p: &VertexSet) -> bool {
    pairs(p).all(|(x, y)| {
        !d.has_arc(x, y) && !d.has_arc(y, x) && !(0..d.order()).any(|v| d.has_arc(v, x) && d.has_arc(v, y))
    })
}

/// Closed in-neighborhoods of members are pairwise disjoint.
fn packing_by_in_neighborhoods(d: &Digraph, p: &VertexSet) -> bool {
    let closed_in = |x: usize| -> Vec<usize> { (0..d.order()).filter(|&v| v == x || d.has_arc(v, x)).collect() };
    pairs(p).all(|(x, y)| {
        let ny = closed_in(y);
        closed_in(x).iter().all(|v| !ny.contains(v))
    })
}

/// Packing test. Both formulations of the definition are evaluated and must
/// agree; a disagreement is a bug and panics.
pub fn is_packing(d: &Digraph, p: &VertexSet) -> bool {
    let by_arcs = packing_by_arcs(d, p);
    let by_nbhd = packing_by_in_neighborhoods(d, p);
    assert_eq!(by_arcs, by_nbhd, "packing formulations disagree on {p:?}");
    by_arcs
}

/// Open in-neighborhoods of members are pairwise disjoint.
pub fn is_open_packing(d: &Digraph, b: &VertexSet) -> bool {
    pairs(b).all(|(x, y)| !(0..d.order()).any(|v| d.has_arc(v, x) && d.has_arc(v, y)))
}

pub fn is_dominating_undirected(g: &UndirectedGraph, s: &VertexSet) -> bool {
    (0..g.order()).all(|x| s.contains(x) || s.iter().any(|v| g.has_edge(v, x)))
}

/// Closed neighborhoods of members are pairwise disjoint.
pub fn is_two_packing(g: &UndirectedGraph, s: &VertexSet) -> bool {
    pairs(s).all(|(x, y)| {
        !g.has_edge(x, y) && !(0..g.order()).any(|w| g.has_edge(w, x) && g.has_edge(w, y))
    })
}

/// No two members share a neighbor.
pub fn is_open_packing_undirected(g: &UndirectedGraph, s: &VertexSet) -> bool {
    pairs(s).all(|(x, y)| !(0..g.order()).any(|w| g.has_edge(w, x) && g.has_edge(w, y)))
}

pub fn is_independent(g: &UndirectedGraph, s: &VertexSet) -> bool {
    pairs(s).all(|(x, y)| !g.has_edge(x, y))
}

pub fn is_clique(g: &UndirectedGraph, s: &VertexSet) -> bool {
    pairs(s).all(|(x, y)| g.has_edge(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_digraph;

    #[test]
    fn triangle_predicates() {
        let g = build_digraph(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let s = |v: &[usize]| VertexSet::from_indices(3, v.iter().copied());
        assert!(!is_dominating(&g, &s(&[0])));
        assert!(is_dominating(&g, &s(&[0, 1])));
        assert!(is_total_dominating(&g, &s(&[0, 1, 2])));
        assert!(!is_total_dominating(&g, &s(&[0, 1])));
        assert!(is_packing(&g, &s(&[2])));
        assert!(!is_packing(&g, &s(&[0, 2])));
        assert!(is_open_packing(&g, &s(&[0, 1, 2])));
    }

    #[test]
    fn common_dominator_breaks_packing() {
        let g = build_digraph(3, [(0, 1), (0, 2)]).unwrap();
        let p = VertexSet::from_indices(3, [1, 2]);
        assert!(!is_packing(&g, &p));
        assert!(!is_open_packing(&g, &p));
        assert!(is_independent(&g.underlying_graph(), &p));
    }
}
