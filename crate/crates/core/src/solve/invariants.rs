use crate::auxgraph::{closed_in_neighborhood_graph, closed_neighborhood_graph, open_in_neighborhood_graph};
use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::graph::{Digraph, UndirectedGraph};

use super::cover::min_set_cover;
use super::mis::max_independent_set;
use super::{SolveConfig, Witnessed};

fn cover_witness(n: usize, sets: &[VertexSet], cfg: &SolveConfig) -> Result<Option<Witnessed>, SolveError> {
    Ok(min_set_cover(n, sets, cfg)?
        .map(|sol| Witnessed::from_set(VertexSet::from_indices(n, sol.chosen))))
}

/// γ(D): minimum cover of V by closed out-neighborhoods.
pub fn domination_number(d: &Digraph, cfg: &SolveConfig) -> Result<Witnessed, SolveError> {
    let sets: Vec<VertexSet> = (0..d.order()).map(|v| d.closed_out_neighborhood(v)).collect();
    Ok(cover_witness(d.order(), &sets, cfg)?.expect("closed neighborhoods always cover"))
}

/// γ_t(D): minimum cover of V by open out-neighborhoods; `None` when some
/// vertex has no in-neighbor.
pub fn total_domination_number(d: &Digraph, cfg: &SolveConfig) -> Result<Option<Witnessed>, SolveError> {
    if d.order() > 0 && d.min_in_degree() == 0 {
        return Ok(None);
    }
    let sets: Vec<VertexSet> = (0..d.order()).map(|v| d.open_out_neighborhood(v)).collect();
    cover_witness(d.order(), &sets, cfg)
}

/// ρ(D) as the independence number of the closed in-neighborhood graph.
pub fn packing_number(d: &Digraph, cfg: &SolveConfig) -> Result<Witnessed, SolveError> {
    max_independent_set(&closed_in_neighborhood_graph(d), cfg)
}

/// ρ°(D) as the independence number of the open in-neighborhood graph.
pub fn open_packing_number(d: &Digraph, cfg: &SolveConfig) -> Result<Witnessed, SolveError> {
    max_independent_set(&open_in_neighborhood_graph(d), cfg)
}

pub fn undirected_domination_number(g: &UndirectedGraph, cfg: &SolveConfig) -> Result<Witnessed, SolveError> {
    let sets: Vec<VertexSet> = (0..g.order()).map(|v| g.closed_neighborhood(v)).collect();
    Ok(cover_witness(g.order(), &sets, cfg)?.expect("closed neighborhoods always cover"))
}

/// ρ₂(G) as the independence number of G².
pub fn two_packing_number(g: &UndirectedGraph, cfg: &SolveConfig) -> Result<Witnessed, SolveError> {
    max_independent_set(&closed_neighborhood_graph(g), cfg)
}

/// Largest set of vertices with pairwise disjoint open neighborhoods.
pub fn undirected_open_packing_number(g: &UndirectedGraph, cfg: &SolveConfig) -> Result<Witnessed, SolveError> {
    max_independent_set(&open_in_neighborhood_graph(&Digraph::bidirected(g)), cfg)
}
