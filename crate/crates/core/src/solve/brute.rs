//! Subset-enumeration oracle for the four digraph invariants.
//!
//! Works on `u32` masks built straight from the arc list; shares no code with
//! the cover and independent-set solvers.

use serde::Serialize;

use crate::error::SolveError;
use crate::graph::Digraph;

/// Largest order the oracle accepts.
pub const BRUTE_FORCE_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Invariant {
    Gamma,
    GammaT,
    Rho,
    RhoOpen,
}

/// Next subset of the same cardinality (Gosper's hack).
fn next_same_weight(x: u32) -> u32 {
    let c = x & x.wrapping_neg();
    let r = x + c;
    (((r ^ x) >> 2) / c) | r
}

fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << n;
    let mut cur = if k == 0 { Some(0u32) } else { Some(((1u64 << k) - 1) as u32) };
    std::iter::from_fn(move || {
        let x = cur?;
        if (x as u64) >= limit {
            return None;
        }
        cur = if x == 0 {
            None
        } else {
            let nx = next_same_weight(x) as u64;
            (nx < limit && nx.count_ones() == k as u32).then_some(nx as u32)
        };
        Some(x)
    })
}

/// Exact value of `which` by enumerating subsets: increasing size for the
/// domination numbers, decreasing size for the packing numbers.
///
/// `Ok(None)` only for `GammaT` on a digraph with a source vertex.
pub fn brute_force_invariant(d: &Digraph, which: Invariant) -> Result<Option<usize>, SolveError> {
    let n = d.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(SolveError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let mut out = vec![0u32; n];
    let mut inn = vec![0u32; n];
    for (u, v) in d.arcs() {
        out[u] |= 1 << v;
        inn[v] |= 1 << u;
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let members = |s: u32| (0..n).filter(move |&v| s >> v & 1 == 1);

    let covers = |s: u32, closed: bool| {
        let mut hit = 0u32;
        for v in members(s) {
            hit |= out[v];
            if closed {
                hit |= 1 << v;
            }
        }
        hit == full
    };
    let disjoint = |s: u32, closed: bool| {
        let mut seen = 0u32;
        for v in members(s) {
            let nb = if closed { inn[v] | 1 << v } else { inn[v] };
            if seen & nb != 0 {
                return false;
            }
            seen |= nb;
        }
        true
    };

    let value = match which {
        Invariant::Gamma => (0..=n).find(|&k| subsets_of_size(n, k).any(|s| covers(s, true))),
        Invariant::GammaT => (0..=n).find(|&k| subsets_of_size(n, k).any(|s| covers(s, false))),
        Invariant::Rho => (0..=n).rev().find(|&k| subsets_of_size(n, k).any(|s| disjoint(s, true))),
        Invariant::RhoOpen => (0..=n).rev().find(|&k| subsets_of_size(n, k).any(|s| disjoint(s, false))),
    };
    Ok(value)
}
