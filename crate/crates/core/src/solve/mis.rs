use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::graph::UndirectedGraph;

use super::{Deadline, SolveConfig, Witnessed};

/// Number of cliques in a greedy clique partition of `cand`; an upper bound
/// on the independence number of the induced subgraph.
fn clique_cover_bound(g: &UndirectedGraph, cand: &VertexSet) -> usize {
    // common[i] = vertices adjacent to every member of clique i
    let mut common: Vec<VertexSet> = Vec::new();
    for v in cand.iter() {
        match common.iter_mut().find(|c| c.contains(v)) {
            Some(c) => c.intersect_with(g.neighbors(v)),
            None => common.push(g.neighbors(v).intersection(cand)),
        }
    }
    common.len()
}

fn greedy_independent_set(g: &UndirectedGraph) -> Vec<usize> {
    let mut cand = VertexSet::full(g.order());
    let mut out = Vec::new();
    while !cand.is_empty() {
        let v = cand
            .iter()
            .min_by_key(|&v| (g.neighbors(v).intersection_len(&cand), v))
            .expect("nonempty");
        out.push(v);
        cand.remove(v);
        cand.difference_with(g.neighbors(v));
    }
    out
}

/// Exact independence number with a witness.
///
/// Branch and bound: vertices of degree at most one in the candidate set are
/// taken greedily; otherwise branch on a maximum-degree candidate (include /
/// exclude), pruning with a greedy clique-cover bound.
pub fn max_independent_set(g: &UndirectedGraph, cfg: &SolveConfig) -> Result<Witnessed, SolveError> {
    let mut search = MisSearch {
        g,
        best: greedy_independent_set(g),
        current: Vec::new(),
        deadline: Deadline::start(cfg, "independent set"),
    };
    search.run(VertexSet::full(g.order()))?;
    Ok(Witnessed::from_set(VertexSet::from_indices(g.order(), search.best)))
}

struct MisSearch<'a> {
    g: &'a UndirectedGraph,
    best: Vec<usize>,
    current: Vec<usize>,
    deadline: Deadline,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cand: VertexSet) -> Result<(), SolveError> {
        self.deadline.tick()?;
        let mark = self.current.len();
        let res = self.node(&mut cand);
        self.current.truncate(mark);
        res
    }

    fn node(&mut self, cand: &mut VertexSet) -> Result<(), SolveError> {
        let g = self.g;
        // Some maximum independent set contains any vertex of degree <= 1.
        loop {
            let low = cand.iter().find(|&v| g.neighbors(v).intersection_len(cand) <= 1);
            match low {
                Some(v) => {
                    self.current.push(v);
                    cand.remove(v);
                    cand.difference_with(g.neighbors(v));
                }
                None => break,
            }
        }
        if cand.is_empty() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        }
        if self.current.len() + clique_cover_bound(g, cand) <= self.best.len() {
            return Ok(());
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (g.neighbors(v).intersection_len(cand), std::cmp::Reverse(v)))
            .expect("nonempty");

        let mut with = cand.clone();
        with.remove(v);
        with.difference_with(g.neighbors(v));
        self.current.push(v);
        let res = self.run(with);
        self.current.pop();
        res?;

        let mut without = cand.clone();
        without.remove(v);
        self.run(without)
    }
}

/// Every maximum independent set, in lexicographic order of sorted members.
/// Fails with [`SolveError::EnumerationLimit`] past `cap` sets.
pub fn all_maximum_independent_sets(
    g: &UndirectedGraph,
    cap: usize,
    cfg: &SolveConfig,
) -> Result<Vec<VertexSet>, SolveError> {
    let alpha = max_independent_set(g, cfg)?.value;
    let mut state = Enumerate {
        g,
        alpha,
        cap,
        current: Vec::new(),
        found: Vec::new(),
        deadline: Deadline::start(cfg, "independent set enumeration"),
    };
    state.run(VertexSet::full(g.order()))?;
    Ok(state.found)
}

struct Enumerate<'a> {
    g: &'a UndirectedGraph,
    alpha: usize,
    cap: usize,
    current: Vec<usize>,
    found: Vec<VertexSet>,
    deadline: Deadline,
}

impl Enumerate<'_> {
    fn run(&mut self, cand: VertexSet) -> Result<(), SolveError> {
        self.deadline.tick()?;
        if self.current.len() == self.alpha {
            if self.found.len() >= self.cap {
                return Err(SolveError::EnumerationLimit(self.cap));
            }
            self.found
                .push(VertexSet::from_indices(self.g.order(), self.current.iter().copied()));
            return Ok(());
        }
        let Some(v) = cand.first() else {
            return Ok(());
        };
        if self.current.len() + clique_cover_bound(self.g, &cand) < self.alpha {
            return Ok(());
        }
        let mut with = cand.clone();
        with.remove(v);
        with.difference_with(self.g.neighbors(v));
        self.current.push(v);
        let res = self.run(with);
        self.current.pop();
        res?;
        let mut without = cand;
        without.remove(v);
        self.run(without)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn alpha_brute(g: &UndirectedGraph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|&m| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = vec![];
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                UndirectedGraph::from_edges(n, edges).unwrap()
            })
        })
    }

    #[test]
    fn basic_values() {
        let cfg = SolveConfig::default();
        assert_eq!(max_independent_set(&UndirectedGraph::edgeless(5), &cfg).unwrap().value, 5);
        assert_eq!(max_independent_set(&UndirectedGraph::complete(6), &cfg).unwrap().value, 1);
        let c5 = UndirectedGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(max_independent_set(&c5, &cfg).unwrap().value, 2);
        assert_eq!(max_independent_set(&UndirectedGraph::edgeless(0), &cfg).unwrap().value, 0);
    }

    #[test]
    fn enumerates_all_maximum_sets_of_c5() {
        let c5 = UndirectedGraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let all = all_maximum_independent_sets(&c5, 100, &SolveConfig::default()).unwrap();
        let got: Vec<Vec<usize>> = all.iter().map(|s| s.to_vec()).collect();
        assert_eq!(got, vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]);
        assert_eq!(
            all_maximum_independent_sets(&c5, 3, &SolveConfig::default()),
            Err(SolveError::EnumerationLimit(3))
        );
    }

    proptest! {
        #[test]
        fn matches_exhaustive_search(g in arb_graph(12)) {
            let w = max_independent_set(&g, &SolveConfig::default()).unwrap();
            prop_assert_eq!(w.value, alpha_brute(&g));
            for (u, v) in g.edges() {
                prop_assert!(!(w.witness.contains(u) && w.witness.contains(v)));
            }
        }

        #[test]
        fn enumeration_is_complete(g in arb_graph(8)) {
            let n = g.order();
            let alpha = alpha_brute(&g);
            let expect: Vec<Vec<usize>> = {
                let mut v: Vec<Vec<usize>> = (0u32..1 << n)
                    .filter(|&m| m.count_ones() as usize == alpha)
                    .filter(|&m| g.edges().all(|(u, v)| m >> u & 1 == 0 || m >> v & 1 == 0))
                    .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect())
                    .collect();
                v.sort();
                v
            };
            let got: Vec<Vec<usize>> = all_maximum_independent_sets(&g, 100_000, &SolveConfig::default())
                .unwrap()
                .iter()
                .map(|s| s.to_vec())
                .collect();
            prop_assert_eq!(got, expect);
        }
    }
}
