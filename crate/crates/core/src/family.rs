//! Named digraph constructions, random ditrees and exhaustive enumerations.
//!
//! Constructions indexed from 1 in their usual presentation are shifted to
//! 0-based indices, with the original names kept as vertex labels.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::FamilyError;
use crate::graph::{Digraph, UndirectedGraph};

/// Largest order `enumerate_ditrees` accepts without the override flag.
pub const ENUMERATION_LIMIT: usize = 6;

/// Orientation state of one tree edge `{u, v}` with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `u → v`
    Forward,
    /// `v → u`
    Backward,
    Both,
}

impl Orientation {
    pub const ALL: [Orientation; 3] = [Orientation::Forward, Orientation::Backward, Orientation::Both];

    fn arcs(self, u: usize, v: usize) -> impl Iterator<Item = (usize, usize)> {
        let (f, b) = match self {
            Orientation::Forward => (true, false),
            Orientation::Backward => (false, true),
            Orientation::Both => (true, true),
        };
        f.then_some((u, v)).into_iter().chain(b.then_some((v, u)))
    }
}

/// Direction of the arc joining a corona leaf to its base vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LeafArc {
    /// base → leaf
    In,
    /// leaf → base
    Out,
    Both,
}

/// The four orientations of the 4-cycle, named by their circular out-degree
/// sequences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum C4Variant {
    V0211,
    V0121,
    V0202,
    V1111,
}

impl C4Variant {
    pub const ALL: [C4Variant; 4] = [C4Variant::V0211, C4Variant::V0121, C4Variant::V0202, C4Variant::V1111];

    pub fn out_degrees(self) -> [usize; 4] {
        match self {
            C4Variant::V0211 => [0, 2, 1, 1],
            C4Variant::V0121 => [0, 1, 2, 1],
            C4Variant::V0202 => [0, 2, 0, 2],
            C4Variant::V1111 => [1, 1, 1, 1],
        }
    }

    fn code(self) -> &'static str {
        match self {
            C4Variant::V0211 => "0211",
            C4Variant::V0121 => "0121",
            C4Variant::V0202 => "0202",
            C4Variant::V1111 => "1111",
        }
    }
}

fn invalid(spec: &str, msg: impl Into<String>) -> FamilyError {
    FamilyError::Invalid {
        spec: spec.to_string(),
        msg: msg.into(),
    }
}

fn labelled(d: Digraph, labels: Vec<String>) -> Digraph {
    d.with_labels(labels).expect("label count matches order")
}

/// `C⃗_n`: arcs `i → i+1 (mod n)`.
pub fn gen_oriented_cycle(n: usize) -> Result<Digraph, FamilyError> {
    if n < 3 {
        return Err(invalid(&format!("cycle:{n}"), "needs n >= 3"));
    }
    Ok(Digraph::from_arcs(n, (0..n).map(|i| (i, (i + 1) % n)))?)
}

/// `G_m` on `v1..v_{2m+1}` (index `j-1`): `v1 → v_{2i} → v_{2i+1} → v1`.
pub fn gen_g_m(m: usize) -> Result<Digraph, FamilyError> {
    if m < 1 {
        return Err(invalid("Gm:0", "needs m >= 1"));
    }
    let arcs = (1..=m).flat_map(|i| [(0, 2 * i - 1), (2 * i - 1, 2 * i), (2 * i, 0)]);
    let d = Digraph::from_arcs(2 * m + 1, arcs)?;
    Ok(labelled(d, (1..=2 * m + 1).map(|j| format!("v{j}")).collect()))
}

/// Index helpers for `H_m`, 1-based as in the construction.
#[derive(Clone, Copy, Debug)]
pub struct HmIndex {
    pub m: usize,
}

impl HmIndex {
    pub fn a(&self, i: usize) -> usize {
        3 * (i - 1)
    }
    pub fn b(&self, i: usize) -> usize {
        3 * (i - 1) + 1
    }
    pub fn c(&self, i: usize) -> usize {
        3 * (i - 1) + 2
    }
    pub fn d(&self, i: usize) -> usize {
        3 * self.m + i - 1
    }
}

/// `H_m` for `m = 3k`: directed triangles `a_i b_i c_i`, each triple
/// `a_{3i-2}, b_{3i-1}, c_{3i}` pointing at all of `d_{3i-2}, d_{3i-1}, d_{3i}`,
/// and `d_i → a_{i+3}` with the index wrapping inside `1..=m`.
pub fn gen_h_m(k: usize) -> Result<Digraph, FamilyError> {
    if k < 3 {
        return Err(invalid(&format!("Hm:{k}"), "needs k >= 3"));
    }
    let m = 3 * k;
    let ix = HmIndex { m };
    let mut arcs = Vec::with_capacity(3 * m + 9 * k + m);
    for i in 1..=m {
        arcs.extend([(ix.a(i), ix.b(i)), (ix.b(i), ix.c(i)), (ix.c(i), ix.a(i))]);
    }
    for i in 1..=k {
        for src in [ix.a(3 * i - 2), ix.b(3 * i - 1), ix.c(3 * i)] {
            for j in [3 * i - 2, 3 * i - 1, 3 * i] {
                arcs.push((src, ix.d(j)));
            }
        }
    }
    for i in 1..=m {
        let target = (i + 3 - 1) % m + 1;
        arcs.push((ix.d(i), ix.a(target)));
    }
    let d = Digraph::from_arcs(4 * m, arcs)?;
    let mut labels: Vec<String> = (1..=m)
        .flat_map(|i| [format!("a{i}"), format!("b{i}"), format!("c{i}")])
        .collect();
    labels.extend((1..=m).map(|i| format!("d{i}")));
    Ok(labelled(d, labels))
}

/// Orientation of the 4-cycle `0-1-2-3` with the given circular out-degrees.
pub fn gen_c4_orientation(variant: C4Variant) -> Digraph {
    let arcs: &[(usize, usize)] = match variant {
        C4Variant::V0202 => &[(1, 0), (1, 2), (3, 2), (3, 0)],
        C4Variant::V0211 => &[(1, 0), (1, 2), (2, 3), (3, 0)],
        C4Variant::V0121 => &[(1, 0), (2, 1), (2, 3), (3, 0)],
        C4Variant::V1111 => &[(0, 1), (1, 2), (2, 3), (3, 0)],
    };
    Digraph::from_arcs(4, arcs.iter().copied()).expect("valid arcs")
}

/// Path `v1 … vn` with arcs in both directions between neighbors.
pub fn gen_bidirected_path(n: usize) -> Result<Digraph, FamilyError> {
    if n < 1 {
        return Err(invalid("path:0", "needs n >= 1"));
    }
    let d = Digraph::from_arcs(n, (1..n).flat_map(|i| [(i - 1, i), (i, i - 1)]))?;
    Ok(labelled(d, (1..=n).map(|j| format!("v{j}")).collect()))
}

const K1_STAR_LABELS: [&str; 7] = ["a", "b", "c", "x", "c'", "b'", "a'"];
const K1_STAR_ARCS: [(usize, usize); 8] = [(0, 1), (1, 2), (2, 1), (2, 3), (4, 3), (5, 4), (4, 5), (6, 5)];
/// Position of `x` inside a copy of `K₁*`.
pub const K1_STAR_X: usize = 3;

/// The 7-vertex ditree `a→b, b↔c, c→x, c'→x, b'↔c', a'→b'`.
pub fn gen_k1_star() -> Digraph {
    let d = Digraph::from_arcs(7, K1_STAR_ARCS).expect("valid arcs");
    labelled(d, K1_STAR_LABELS.iter().map(|s| s.to_string()).collect())
}

/// One copy of `K₁*` per vertex of `t`, with `t`'s arcs joining the `x`
/// vertices. Copy `i` occupies indices `7i..7i+7`.
pub fn gen_t_star(t: &Digraph) -> Result<Digraph, FamilyError> {
    if !t.is_ditree() {
        return Err(invalid("Tstar", "base digraph is not a ditree"));
    }
    let n = t.order();
    let mut arcs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| K1_STAR_ARCS.iter().map(move |&(u, v)| (7 * i + u, 7 * i + v)))
        .collect();
    arcs.extend(t.arcs().map(|(u, v)| (7 * u + K1_STAR_X, 7 * v + K1_STAR_X)));
    let d = Digraph::from_arcs(7 * n, arcs)?;
    let labels = (0..n)
        .flat_map(|i| K1_STAR_LABELS.iter().map(move |s| format!("{s}{i}")))
        .collect();
    Ok(labelled(d, labels))
}

/// Corona of a tree: base vertex `i` keeps index `i` and gets leaf `n + i`.
/// `orientation[j]` applies to the `j`-th edge of `base.edges()`.
pub fn gen_corona_digraph(
    base: &UndirectedGraph,
    orientation: &[Orientation],
    leaf_arcs: &[LeafArc],
) -> Result<Digraph, FamilyError> {
    let n = base.order();
    if !base.is_tree() {
        return Err(invalid("corona", "base graph is not a tree"));
    }
    let edges: Vec<(usize, usize)> = base.edges().collect();
    if orientation.len() != edges.len() || leaf_arcs.len() != n {
        return Err(invalid(
            "corona",
            format!(
                "expected {} edge orientations and {} leaf modes, got {} and {}",
                edges.len(),
                n,
                orientation.len(),
                leaf_arcs.len()
            ),
        ));
    }
    let mut arcs: Vec<(usize, usize)> = edges
        .iter()
        .zip(orientation)
        .flat_map(|(&(u, v), o)| o.arcs(u, v))
        .collect();
    for (i, mode) in leaf_arcs.iter().enumerate() {
        let leaf = n + i;
        match mode {
            LeafArc::In => arcs.push((i, leaf)),
            LeafArc::Out => arcs.push((leaf, i)),
            LeafArc::Both => arcs.extend([(i, leaf), (leaf, i)]),
        }
    }
    Ok(Digraph::from_arcs(2 * n, arcs)?)
}

/// Transitive tournament: `i → j` for all `i < j`.
pub fn gen_transitive_tournament(n: usize) -> Digraph {
    Digraph::from_arcs(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).expect("valid arcs")
}

/// Decode a Prüfer sequence over `0..n` into the tree's edge list.
pub fn prufer_decode(n: usize, seq: &[usize]) -> Vec<(usize, usize)> {
    debug_assert!(n >= 2 && seq.len() == n - 2);
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in seq {
        let Reverse(leaf) = leaves.pop().expect("a leaf exists");
        edges.push((leaf.min(s), leaf.max(s)));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.push(Reverse(s));
        }
    }
    let Reverse(u) = leaves.pop().expect("two leaves remain");
    let Reverse(v) = leaves.pop().expect("two leaves remain");
    edges.push((u.min(v), u.max(v)));
    edges.sort_unstable();
    edges
}

/// Uniform random labeled tree on `n` vertices.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> UndirectedGraph {
    let edges = match n {
        0 | 1 => vec![],
        2 => vec![(0, 1)],
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_decode(n, &seq)
        }
    };
    UndirectedGraph::from_edges(n, edges).expect("tree edges are valid")
}

fn orient_tree(tree: &UndirectedGraph, states: impl IntoIterator<Item = Orientation>) -> Digraph {
    let arcs: Vec<(usize, usize)> = tree
        .edges()
        .zip(states)
        .flat_map(|((u, v), o)| o.arcs(u, v))
        .collect();
    Digraph::from_arcs(tree.order(), arcs).expect("valid arcs")
}

/// Random ditree: uniform labeled tree, each edge independently
/// forward/backward/both with the given relative weights. Deterministic per
/// seed (ChaCha8 stream).
pub fn random_ditree(n: usize, seed: u64, weights: [u32; 3]) -> Result<Digraph, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_ditree_with(n, weights, &mut rng)
}

pub fn random_ditree_with<R: Rng>(n: usize, weights: [u32; 3], rng: &mut R) -> Result<Digraph, FamilyError> {
    if n < 1 {
        return Err(invalid("ditree", "needs n >= 1"));
    }
    let dist = WeightedIndex::new(weights).map_err(|e| invalid("ditree", format!("weights: {e}")))?;
    let tree = random_tree(n, rng);
    let states: Vec<Orientation> = (0..n - 1).map(|_| Orientation::ALL[dist.sample(rng)]).collect();
    Ok(orient_tree(&tree, states))
}

/// Every labeled ditree on `n` vertices: all `n^(n-2)` labeled trees times all
/// `3^(n-1)` orientation assignments. Isomorphic copies are not merged.
pub fn enumerate_ditrees(n: usize, allow_large: bool) -> Result<impl Iterator<Item = Digraph>, FamilyError> {
    if n < 1 {
        return Err(invalid("enum-ditrees:0", "needs n >= 1"));
    }
    if n > ENUMERATION_LIMIT && !allow_large {
        return Err(invalid(
            &format!("enum-ditrees:{n}"),
            format!("orders above {ENUMERATION_LIMIT} need the override flag"),
        ));
    }
    let trees: Vec<UndirectedGraph> = if n <= 2 {
        vec![UndirectedGraph::from_edges(n, (n == 2).then_some((0, 1)))?]
    } else {
        let len = n - 2;
        let count = n.pow(len as u32);
        (0..count)
            .map(|mut code| {
                let seq: Vec<usize> = (0..len)
                    .map(|_| {
                        let s = code % n;
                        code /= n;
                        s
                    })
                    .collect();
                UndirectedGraph::from_edges(n, prufer_decode(n, &seq)).expect("tree edges are valid")
            })
            .collect()
    };
    let per_tree = 3usize.pow((n - 1) as u32);
    Ok(trees.into_iter().flat_map(move |tree| {
        (0..per_tree).map(move |mut code| {
            let states: Vec<Orientation> = (0..n - 1)
                .map(|_| {
                    let s = Orientation::ALL[code % 3];
                    code /= 3;
                    s
                })
                .collect();
            orient_tree(&tree, states)
        })
    }))
}

/// Random digraph: each ordered pair an arc with probability `p`.
pub fn random_digraph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("valid arcs")
}

/// Random acyclic digraph: a random linear order, then each forward pair is
/// an arc with probability `p`.
pub fn random_dag<R: Rng>(n: usize, p: f64, rng: &mut R) -> Digraph {
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                arcs.push((order[i], order[j]));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("valid arcs")
}

/// All `2^(n(n-1))` digraphs on `0..n`, in order of their arc masks.
pub fn enumerate_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .filter(|(u, v)| u != v)
        .collect();
    assert!(pairs.len() < 64, "too many ordered pairs to enumerate");
    (0u64..1 << pairs.len()).map(move |mask| {
        let arcs = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &a)| a);
        Digraph::from_arcs(n, arcs).expect("valid arcs")
    })
}

/// All labeled acyclic digraphs on `0..n`.
pub fn enumerate_dags(n: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let total = 3u64.pow(pairs.len() as u32);
    (0..total).filter_map(move |mut code| {
        let mut arcs = Vec::new();
        for &(u, v) in &pairs {
            match code % 3 {
                1 => arcs.push((u, v)),
                2 => arcs.push((v, u)),
                _ => {}
            }
            code /= 3;
        }
        let d = Digraph::from_arcs(n, arcs).expect("valid arcs");
        d.is_acyclic().then_some(d)
    })
}

/// Compact textual name of a family member, e.g. `Gm:3`, `C4:0202`,
/// `ditree:n=6,seed=42,w=1/1/1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Gm(usize),
    Hm(usize),
    C4(C4Variant),
    Path(usize),
    K1Star,
    TStar(Box<FamilySpec>),
    ChordedPentagon,
    /// Corona over a path with the given edge orientations and leaf modes.
    Corona {
        edges: Vec<Orientation>,
        leaves: Vec<LeafArc>,
    },
    Arcless(usize),
    Transitive(usize),
    Ditree {
        n: usize,
        seed: u64,
        weights: [u32; 3],
    },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Digraph, FamilyError> {
        match self {
            FamilySpec::Cycle(n) => gen_oriented_cycle(*n),
            FamilySpec::Gm(m) => gen_g_m(*m),
            FamilySpec::Hm(k) => gen_h_m(*k),
            FamilySpec::C4(v) => Ok(gen_c4_orientation(*v)),
            FamilySpec::Path(n) => gen_bidirected_path(*n),
            FamilySpec::K1Star => Ok(gen_k1_star()),
            FamilySpec::TStar(inner) => gen_t_star(&inner.build()?),
            FamilySpec::ChordedPentagon => {
                let d = Digraph::from_arcs(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 2)])?;
                Ok(labelled(d, ["u", "v", "x", "y", "z"].iter().map(|s| s.to_string()).collect()))
            }
            FamilySpec::Corona { edges, leaves } => {
                let k = leaves.len();
                let base = UndirectedGraph::from_edges(k, (1..k).map(|i| (i - 1, i)))?;
                gen_corona_digraph(&base, edges, leaves)
            }
            FamilySpec::Arcless(n) => Ok(Digraph::arcless(*n)),
            FamilySpec::Transitive(n) => Ok(gen_transitive_tournament(*n)),
            FamilySpec::Ditree { n, seed, weights } => random_ditree(*n, *seed, *weights),
        }
    }
}

fn parse_count(spec: &str, s: &str) -> Result<usize, FamilyError> {
    s.trim().parse().map_err(|_| invalid(spec, format!("`{s}` is not a count")))
}

impl FromStr for FamilySpec {
    type Err = FamilyError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let spec = spec.trim();
        let (name, arg) = spec.split_once(':').unwrap_or((spec, ""));
        let out = match name {
            "cycle" => FamilySpec::Cycle(parse_count(spec, arg)?),
            "Gm" => FamilySpec::Gm(parse_count(spec, arg)?),
            "Hm" => FamilySpec::Hm(parse_count(spec, arg)?),
            "path" => FamilySpec::Path(parse_count(spec, arg)?),
            "arcless" => FamilySpec::Arcless(parse_count(spec, arg)?),
            "transitive" => FamilySpec::Transitive(parse_count(spec, arg)?),
            "K1star" => FamilySpec::K1Star,
            "chorded-pentagon" => FamilySpec::ChordedPentagon,
            "C4" => FamilySpec::C4(
                C4Variant::ALL
                    .into_iter()
                    .find(|v| v.code() == arg)
                    .ok_or_else(|| invalid(spec, "variant must be one of 0211, 0121, 0202, 1111"))?,
            ),
            "Tstar" => FamilySpec::TStar(Box::new(arg.parse()?)),
            "corona" => {
                let (e, l) = arg
                    .split_once('/')
                    .ok_or_else(|| invalid(spec, "expected corona:<edges>/<leaves>"))?;
                let edges = e
                    .chars()
                    .map(|c| match c {
                        'f' => Ok(Orientation::Forward),
                        'r' => Ok(Orientation::Backward),
                        'b' => Ok(Orientation::Both),
                        _ => Err(invalid(spec, format!("edge state `{c}` (use f, r, b)"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                let leaves = l
                    .chars()
                    .map(|c| match c {
                        'i' => Ok(LeafArc::In),
                        'o' => Ok(LeafArc::Out),
                        'b' => Ok(LeafArc::Both),
                        _ => Err(invalid(spec, format!("leaf mode `{c}` (use i, o, b)"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if leaves.is_empty() || edges.len() + 1 != leaves.len() {
                    return Err(invalid(spec, "need one more leaf mode than edge states"));
                }
                FamilySpec::Corona { edges, leaves }
            }
            "ditree" => {
                let (mut n, mut seed, mut weights) = (None, 0u64, [1u32, 1, 1]);
                for kv in arg.split(',').filter(|s| !s.is_empty()) {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| invalid(spec, format!("expected key=value, got `{kv}`")))?;
                    match k {
                        "n" => n = Some(parse_count(spec, v)?),
                        "seed" => seed = v.parse().map_err(|_| invalid(spec, "bad seed"))?,
                        "w" => {
                            let parts: Vec<u32> = v
                                .split('/')
                                .map(|p| p.parse().map_err(|_| invalid(spec, "bad weight")))
                                .collect::<Result<_, _>>()?;
                            weights = parts
                                .try_into()
                                .map_err(|_| invalid(spec, "weights need three parts f/b/both"))?;
                        }
                        _ => return Err(invalid(spec, format!("unknown key `{k}`"))),
                    }
                }
                FamilySpec::Ditree {
                    n: n.ok_or_else(|| invalid(spec, "missing n"))?,
                    seed,
                    weights,
                }
            }
            _ => return Err(FamilyError::Unknown(spec.to_string())),
        };
        Ok(out)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Gm(m) => write!(f, "Gm:{m}"),
            FamilySpec::Hm(k) => write!(f, "Hm:{k}"),
            FamilySpec::C4(v) => write!(f, "C4:{}", v.code()),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::K1Star => write!(f, "K1star"),
            FamilySpec::TStar(inner) => write!(f, "Tstar:{inner}"),
            FamilySpec::ChordedPentagon => write!(f, "chorded-pentagon"),
            FamilySpec::Corona { edges, leaves } => {
                let e: String = edges
                    .iter()
                    .map(|o| match o {
                        Orientation::Forward => 'f',
                        Orientation::Backward => 'r',
                        Orientation::Both => 'b',
                    })
                    .collect();
                let l: String = leaves
                    .iter()
                    .map(|m| match m {
                        LeafArc::In => 'i',
                        LeafArc::Out => 'o',
                        LeafArc::Both => 'b',
                    })
                    .collect();
                write!(f, "corona:{e}/{l}")
            }
            FamilySpec::Arcless(n) => write!(f, "arcless:{n}"),
            FamilySpec::Transitive(n) => write!(f, "transitive:{n}"),
            FamilySpec::Ditree { n, seed, weights: [a, b, c] } => write!(f, "ditree:n={n},seed={seed},w={a}/{b}/{c}"),
        }
    }
}
