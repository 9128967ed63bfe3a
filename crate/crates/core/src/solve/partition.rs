use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::graph::Digraph;

use super::invariants::domination_number;
use super::{Deadline, SolveConfig};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    A,
    B,
}

/// Split V(D) into two disjoint dominating sets `(A, B)`.
///
/// With `require_minimum` both sides must have size γ(D), which forces
/// n(D) = 2γ(D). Backtracking over vertices in index order with vertex 0 fixed
/// in `A`; a branch dies as soon as some closed in-neighborhood is fully
/// assigned without meeting both sides. `Ok(None)` means no partition exists.
pub fn partition_two_dominating_sets(
    d: &Digraph,
    require_minimum: bool,
    cfg: &SolveConfig,
) -> Result<Option<(VertexSet, VertexSet)>, SolveError> {
    let n = d.order();
    if n == 0 || d.min_in_degree() == 0 {
        // a vertex with N⁻[x] = {x} cannot be dominated by both sides
        return Ok(None);
    }
    let cap = if require_minimum {
        let gamma = domination_number(d, cfg)?.value;
        if n != 2 * gamma {
            return Ok(None);
        }
        gamma
    } else {
        n
    };
    let mut search = Search {
        d,
        cap,
        side: vec![None; n],
        counts: (0..n).map(|x| [0, 0, d.in_degree(x) + 1]).collect(),
        sizes: [0, 0],
        deadline: Deadline::start(cfg, "dominating partition"),
    };
    if !search.run(0)? {
        return Ok(None);
    }
    let mut a = VertexSet::new(n);
    let mut b = VertexSet::new(n);
    for (v, s) in search.side.iter().enumerate() {
        match s {
            Some(Side::A) => a.insert(v),
            Some(Side::B) => b.insert(v),
            None => unreachable!("complete assignment"),
        };
    }
    Ok(Some((a, b)))
}

struct Search<'a> {
    d: &'a Digraph,
    cap: usize,
    side: Vec<Option<Side>>,
    // per vertex x: members of N⁻[x] in A, in B, unassigned
    counts: Vec<[usize; 3]>,
    sizes: [usize; 2],
    deadline: Deadline,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, s: Side) -> bool {
        let k = s as usize;
        self.side[v] = Some(s);
        self.sizes[k] += 1;
        let mut ok = true;
        for x in self.d.closed_out_neighborhood(v).iter() {
            let c = &mut self.counts[x];
            c[k] += 1;
            c[2] -= 1;
            if c[2] == 0 && (c[0] == 0 || c[1] == 0) {
                ok = false;
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize, s: Side) {
        let k = s as usize;
        self.side[v] = None;
        self.sizes[k] -= 1;
        for x in self.d.closed_out_neighborhood(v).iter() {
            let c = &mut self.counts[x];
            c[k] -= 1;
            c[2] += 1;
        }
    }

    fn run(&mut self, v: usize) -> Result<bool, SolveError> {
        self.deadline.tick()?;
        if v == self.side.len() {
            return Ok(true);
        }
        let choices: &[Side] = if v == 0 { &[Side::A] } else { &[Side::A, Side::B] };
        for &s in choices {
            if self.sizes[s as usize] == self.cap {
                continue;
            }
            let ok = self.assign(v, s);
            if ok && self.run(v + 1)? {
                return Ok(true);
            }
            self.unassign(v, s);
        }
        Ok(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_digraph;
    use crate::solve::validate::is_dominating;

    // u v w x y z with u->v, v->w, u<->x, v->y, w->z
    fn corona_d() -> Digraph {
        build_digraph(6, [(0, 1), (1, 2), (0, 3), (3, 0), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn corona_example_splits_into_minimum_halves() {
        let d = corona_d();
        let (a, b) = partition_two_dominating_sets(&d, true, &SolveConfig::default())
            .unwrap()
            .unwrap();
        assert!(is_dominating(&d, &a) && is_dominating(&d, &b));
        assert_eq!(a.to_vec(), vec![0, 2, 4]);
        assert_eq!(b.to_vec(), vec![1, 3, 5]);
    }

    #[test]
    fn source_vertex_blocks_partition() {
        let d = build_digraph(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(partition_two_dominating_sets(&d, false, &SolveConfig::default()).unwrap(), None);
        let iso = Digraph::arcless(1);
        assert_eq!(partition_two_dominating_sets(&iso, false, &SolveConfig::default()).unwrap(), None);
    }

    #[test]
    fn minimum_requirement_is_stricter() {
        // every dominating set of the directed triangle has two vertices
        let c3 = build_digraph(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(partition_two_dominating_sets(&c3, false, &SolveConfig::default()).unwrap(), None);
        let c4 = build_digraph(4, (0..4).map(|i| (i, (i + 1) % 4))).unwrap();
        let (a, b) = partition_two_dominating_sets(&c4, true, &SolveConfig::default()).unwrap().unwrap();
        assert_eq!((a.to_vec(), b.to_vec()), (vec![0, 2], vec![1, 3]));
    }
}
