//! Auxiliary undirected graphs and the structural checks run on them.

use std::collections::VecDeque;
use std::time::Instant;

use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::graph::{Digraph, UndirectedGraph};
use crate::record::{Claim, Verdict, VerificationRecord};

/// Default cap for [`maximal_cliques`].
pub const DEFAULT_CLIQUE_CAP: usize = 1_000_000;

/// `uv` is an edge iff `N⁻[u] ∩ N⁻[v] ≠ ∅`. Packings of D are exactly the
/// independent sets of this graph.
pub fn closed_in_neighborhood_graph(d: &Digraph) -> UndirectedGraph {
    let rows = (0..d.order())
        .map(|u| {
            let mut row = d.closed_out_neighborhood(u);
            for w in d.in_neighbors(u).iter() {
                row.union_with(&d.closed_out_neighborhood(w));
            }
            row
        })
        .collect();
    UndirectedGraph::from_rows(rows)
}

/// `uv` is an edge iff `N⁻(u) ∩ N⁻(v) ≠ ∅`.
pub fn open_in_neighborhood_graph(d: &Digraph) -> UndirectedGraph {
    let rows = (0..d.order())
        .map(|u| {
            let mut row = VertexSet::new(d.order());
            for w in d.in_neighbors(u).iter() {
                row.union_with(d.out_neighbors(w));
            }
            row
        })
        .collect();
    UndirectedGraph::from_rows(rows)
}

/// Vertices adjacent iff their closed neighborhoods meet; this is G².
pub fn closed_neighborhood_graph(g: &UndirectedGraph) -> UndirectedGraph {
    let rows = (0..g.order())
        .map(|u| {
            let mut row = g.closed_neighborhood(u);
            for w in g.neighbors(u).iter() {
                row.union_with(g.neighbors(w));
            }
            row
        })
        .collect();
    UndirectedGraph::from_rows(rows)
}

/// Chordality with a certificate either way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    /// Every vertex's later neighbors in `peo` form a clique.
    Chordal { peo: Vec<usize> },
    /// Vertices of an induced cycle of length at least 4, in cycle order.
    NotChordal { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Lexicographic BFS order (ties to the lowest index).
fn lex_bfs(g: &UndirectedGraph) -> Vec<usize> {
    let n = g.order();
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .fold(None::<usize>, |best, v| match best {
                Some(b) if labels[b] >= labels[v] => Some(b),
                _ => Some(v),
            })
            .expect("unvisited vertex remains");
        done[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !done[u] {
                labels[u].push(n - step);
            }
        }
    }
    order
}

/// Whether `order` is a perfect elimination ordering of `g`.
pub fn is_perfect_elimination_order(g: &UndirectedGraph, order: &[usize]) -> bool {
    let n = g.order();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&u| pos[u] > pos[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.has_edge(a, b)))
    })
}

/// Chordless cycle of length at least 4, if one exists.
fn find_chordless_cycle(g: &UndirectedGraph) -> Option<Vec<usize>> {
    let n = g.order();
    for v in 0..n {
        let closed = g.closed_neighborhood(v);
        for a in g.neighbors(v).iter() {
            // endpoints b: neighbors of v not adjacent to a
            let mut targets = g.neighbors(v).difference(&g.closed_neighborhood(a));
            targets.remove(a);
            if targets.is_empty() {
                continue;
            }
            let mut parent = vec![usize::MAX; n];
            let mut queue = VecDeque::new();
            for x in g.neighbors(a).iter() {
                if !closed.contains(x) {
                    parent[x] = a;
                    queue.push_back(x);
                }
            }
            while let Some(x) = queue.pop_front() {
                if let Some(b) = g.neighbors(x).intersection(&targets).first() {
                    let mut path = vec![b, x];
                    let mut cur = x;
                    while parent[cur] != a {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.push(a);
                    path.push(v);
                    path.reverse();
                    return Some(path);
                }
                for y in g.neighbors(x).iter() {
                    if !closed.contains(y) && parent[y] == usize::MAX {
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    None
}

/// LexBFS recognition. The reverse LexBFS order is a perfect elimination
/// ordering exactly when `g` is chordal; otherwise an induced cycle is found.
pub fn is_chordal(g: &UndirectedGraph) -> Chordality {
    let mut peo = lex_bfs(g);
    peo.reverse();
    if is_perfect_elimination_order(g, &peo) {
        return Chordality::Chordal { peo };
    }
    let cycle = find_chordless_cycle(g).expect("graph without a perfect elimination order has an induced cycle");
    Chordality::NotChordal { cycle }
}

/// All maximal cliques, each as a set, sorted by their member lists.
/// Bron–Kerbosch with pivoting; errors past `cap` cliques.
pub fn maximal_cliques(g: &UndirectedGraph, cap: usize) -> Result<Vec<VertexSet>, SolveError> {
    let n = g.order();
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, VertexSet::full(n), VertexSet::new(n), cap, &mut out)?;
    out.sort_by_cached_key(|s| s.to_vec());
    Ok(out)
}

fn bron_kerbosch(
    g: &UndirectedGraph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    cap: usize,
    out: &mut Vec<VertexSet>,
) -> Result<(), SolveError> {
    if p.is_empty() {
        if x.is_empty() {
            if out.len() >= cap {
                return Err(SolveError::CliqueLimit(cap));
            }
            out.push(VertexSet::from_indices(g.order(), r.iter().copied()));
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (g.neighbors(u).intersection_len(&p), std::cmp::Reverse(u)))
        .expect("p nonempty");
    for v in p.difference(g.neighbors(pivot)).iter() {
        r.push(v);
        bron_kerbosch(
            g,
            r,
            p.intersection(g.neighbors(v)),
            x.intersection(g.neighbors(v)),
            cap,
            out,
        )?;
        r.pop();
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

fn helly_check(
    d: &Digraph,
    claim: Claim,
    aux: UndirectedGraph,
    container: impl Fn(usize) -> VertexSet,
    extra_hypothesis: bool,
    clique_cap: usize,
) -> Result<VerificationRecord, SolveError> {
    let start = Instant::now();
    let girth = d.underlying_graph().girth();
    let girth_ok = girth.map_or(true, |g| g >= 7);
    let cliques = maximal_cliques(&aux, clique_cap)?;
    let containers: Vec<VertexSet> = (0..d.order()).map(container).collect();
    let failing = cliques
        .iter()
        .find(|k| !containers.iter().any(|c| k.is_subset(c)));
    let contained = cliques
        .iter()
        .filter(|k| containers.iter().any(|c| k.is_subset(c)))
        .count();

    let mut rec = VerificationRecord::new(claim, "").sides(contained, cliques.len());
    rec.hypotheses_met = girth_ok && extra_hypothesis;
    rec.value("maximal_cliques", cliques.len());
    if let Some(g) = girth {
        rec.value("girth", g);
    }
    if let Some(k) = failing {
        rec.witness("uncontained_clique", k);
    }
    rec.verdict = match (rec.hypotheses_met, failing.is_some()) {
        (false, _) => Verdict::HypothesisNotMet,
        (true, false) => Verdict::Holds,
        (true, true) => Verdict::Fails,
    };
    rec.value("conclusion_holds", i64::from(failing.is_none()));
    rec.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(rec)
}

/// Every maximal clique of the closed in-neighborhood graph lies inside some
/// closed out-neighborhood. The girth ≥ 7 hypothesis is recorded; the check
/// runs regardless.
pub fn check_closed_helly_lemma(d: &Digraph, clique_cap: usize) -> Result<VerificationRecord, SolveError> {
    helly_check(
        d,
        Claim::ClosedHelly,
        closed_in_neighborhood_graph(d),
        |w| d.closed_out_neighborhood(w),
        true,
        clique_cap,
    )
}

/// Open variant: cliques of the open in-neighborhood graph inside some open
/// out-neighborhood. A vertex without in-neighbors forms a clique no open
/// out-neighborhood contains, so δ⁻ ≥ 1 is recorded as a hypothesis too.
pub fn check_open_helly_lemma(d: &Digraph, clique_cap: usize) -> Result<VerificationRecord, SolveError> {
    helly_check(
        d,
        Claim::OpenHelly,
        open_in_neighborhood_graph(d),
        |w| d.open_out_neighborhood(w),
        d.order() == 0 || d.min_in_degree() >= 1,
        clique_cap,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_digraph;

    fn cycle_graph(n: usize) -> UndirectedGraph {
        UndirectedGraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn in_neighborhood_graphs_small() {
        let arc = build_digraph(2, [(0, 1)]).unwrap();
        assert!(closed_in_neighborhood_graph(&arc).has_edge(0, 1));
        assert_eq!(open_in_neighborhood_graph(&arc).edge_count(), 0);
        assert_eq!(closed_in_neighborhood_graph(&Digraph::arcless(2)).edge_count(), 0);
        let tri = build_digraph(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(closed_in_neighborhood_graph(&tri).edge_count(), 3);
        let fork = build_digraph(3, [(2, 0), (2, 1)]).unwrap();
        assert!(open_in_neighborhood_graph(&fork).has_edge(0, 1));
        let c5 = build_digraph(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(open_in_neighborhood_graph(&c5).edge_count(), 0);
    }

    #[test]
    fn square_of_small_graphs() {
        let p4 = UndirectedGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let sq = closed_neighborhood_graph(&p4);
        assert_eq!(sq.edge_count(), 5);
        assert!(sq.has_edge(0, 2) && sq.has_edge(1, 3) && !sq.has_edge(0, 3));
        let star = UndirectedGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(closed_neighborhood_graph(&star).edge_count(), 6);
        assert_eq!(closed_neighborhood_graph(&UndirectedGraph::edgeless(3)).edge_count(), 0);
    }

    #[test]
    fn chordality_certificates() {
        match is_chordal(&cycle_graph(4)) {
            Chordality::NotChordal { cycle } => assert_eq!(cycle.len(), 4),
            other => panic!("C4 reported chordal: {other:?}"),
        }
        let tri = UndirectedGraph::complete(3);
        let Chordality::Chordal { peo } = is_chordal(&tri) else {
            panic!("K3 is chordal")
        };
        assert!(is_perfect_elimination_order(&tri, &peo));
        match is_chordal(&cycle_graph(7)) {
            Chordality::NotChordal { cycle } => assert_eq!(cycle.len(), 7),
            other => panic!("{other:?}"),
        }
        assert!(is_chordal(&UndirectedGraph::edgeless(0)).is_chordal());
    }

    #[test]
    fn cliques_of_small_graphs() {
        let k4 = maximal_cliques(&UndirectedGraph::complete(4), 10).unwrap();
        assert_eq!(k4.len(), 1);
        assert_eq!(k4[0].len(), 4);
        let p3 = UndirectedGraph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let got: Vec<Vec<usize>> = maximal_cliques(&p3, 10).unwrap().iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 2]]);
        assert_eq!(maximal_cliques(&UndirectedGraph::edgeless(3), 2), Err(SolveError::CliqueLimit(2)));
    }

    #[test]
    fn helly_on_small_digraphs() {
        let single = Digraph::arcless(1);
        assert_eq!(check_closed_helly_lemma(&single, 10).unwrap().verdict, Verdict::Holds);
        let fork = build_digraph(3, [(2, 0), (2, 1)]).unwrap();
        let rec = check_open_helly_lemma(&fork, 10).unwrap();
        assert_eq!(rec.verdict, Verdict::HypothesisNotMet);
        assert_eq!(rec.values["conclusion_holds"], 0);
        let c4 = Digraph::bidirected(&cycle_graph(4));
        let rec = check_closed_helly_lemma(&c4, 10).unwrap();
        assert!(!rec.hypotheses_met);
        assert_eq!(rec.values["girth"], 4);
    }
}
