use crate::bitset::VertexSet;
use crate::error::SolveError;

use super::{Deadline, SolveConfig};

/// An optimal cover: indices into the input family, ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSolution {
    pub size: usize,
    pub chosen: Vec<usize>,
}

/// Largest-gain greedy cover followed by removal of redundant sets.
/// `None` when the family does not cover the universe.
pub fn greedy_set_cover(universe: usize, sets: &[VertexSet]) -> Option<Vec<usize>> {
    let mut uncovered = VertexSet::full(universe);
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let (best, gain) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.intersection_len(&uncovered)))
            .fold((usize::MAX, 0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if gain == 0 {
            return None;
        }
        uncovered.difference_with(&sets[best]);
        chosen.push(best);
    }
    // Drop sets made redundant by later picks, newest first.
    let mut i = chosen.len();
    while i > 0 {
        i -= 1;
        let mut rest = VertexSet::new(universe);
        for (j, &s) in chosen.iter().enumerate() {
            if j != i {
                rest.union_with(&sets[s]);
            }
        }
        if rest.len() == universe {
            chosen.remove(i);
        }
    }
    chosen.sort_unstable();
    Some(chosen)
}

/// Exact minimum set cover by branch and bound.
///
/// Branches on an uncovered element with the fewest admissible sets, trying
/// its sets in order of decreasing fresh coverage; sets tried in earlier
/// sibling branches are excluded from later ones. Nodes are pruned with the
/// larger of two lower bounds: a greedy family of elements that pairwise share
/// no admissible set, and the fractional bound `Σ_e 1 / max_{S ∋ e} |S ∩ U|`.
///
/// Returns `Ok(None)` when the union of `sets` misses an element.
pub fn min_set_cover(
    universe: usize,
    sets: &[VertexSet],
    cfg: &SolveConfig,
) -> Result<Option<CoverSolution>, SolveError> {
    for s in sets {
        assert_eq!(s.capacity(), universe, "set capacity must equal the universe size");
    }
    let Some(greedy) = greedy_set_cover(universe, sets) else {
        return Ok(None);
    };
    let mut containing = vec![Vec::new(); universe];
    for (i, s) in sets.iter().enumerate() {
        for e in s.iter() {
            containing[e].push(i);
        }
    }
    let mut search = Search {
        sets,
        containing,
        best: greedy,
        current: Vec::new(),
        forbidden: vec![false; sets.len()],
        deadline: Deadline::start(cfg, "set cover"),
    };
    search.run(&VertexSet::full(universe))?;
    let mut chosen = search.best;
    chosen.sort_unstable();
    Ok(Some(CoverSolution { size: chosen.len(), chosen }))
}

struct Search<'a> {
    sets: &'a [VertexSet],
    containing: Vec<Vec<usize>>,
    best: Vec<usize>,
    current: Vec<usize>,
    forbidden: Vec<bool>,
    deadline: Deadline,
}

impl Search<'_> {
    fn run(&mut self, uncovered: &VertexSet) -> Result<(), SolveError> {
        self.deadline.tick()?;
        if uncovered.is_empty() {
            if self.current.len() < self.best.len() {
                self.best = self.current.clone();
            }
            return Ok(());
        }
        if self.current.len() + 1 >= self.best.len() {
            return Ok(());
        }

        let gains: Vec<usize> = self
            .sets
            .iter()
            .enumerate()
            .map(|(i, s)| if self.forbidden[i] { 0 } else { s.intersection_len(uncovered) })
            .collect();

        // (candidate count, element)
        let mut order: Vec<(usize, usize)> = Vec::with_capacity(uncovered.len());
        let mut fractional = 0.0f64;
        for e in uncovered.iter() {
            let mut count = 0;
            let mut max_gain = 0;
            for &s in &self.containing[e] {
                if !self.forbidden[s] {
                    count += 1;
                    max_gain = max_gain.max(gains[s]);
                }
            }
            if count == 0 {
                return Ok(());
            }
            fractional += 1.0 / max_gain as f64;
            order.push((count, e));
        }
        order.sort_unstable();

        let mut used = vec![false; self.sets.len()];
        let mut disjoint = 0;
        for &(_, e) in &order {
            let admissible = self.containing[e].iter().filter(|&&s| !self.forbidden[s]);
            if admissible.clone().all(|&s| !used[s]) {
                disjoint += 1;
                for &s in admissible {
                    used[s] = true;
                }
            }
        }
        let lower = disjoint.max((fractional - 1e-9).ceil() as usize);
        if self.current.len() + lower >= self.best.len() {
            return Ok(());
        }

        let pivot = order[0].1;
        let mut candidates: Vec<usize> = self.containing[pivot]
            .iter()
            .copied()
            .filter(|&s| !self.forbidden[s])
            .collect();
        candidates.sort_by(|&a, &b| gains[b].cmp(&gains[a]).then(a.cmp(&b)));

        let mut excluded = Vec::with_capacity(candidates.len());
        for s in candidates {
            if self.current.len() + 1 >= self.best.len() {
                break;
            }
            self.current.push(s);
            let rest = uncovered.difference(&self.sets[s]);
            let res = self.run(&rest);
            self.current.pop();
            res?;
            self.forbidden[s] = true;
            excluded.push(s);
        }
        for s in excluded {
            self.forbidden[s] = false;
        }
        Ok(())
    }
}
