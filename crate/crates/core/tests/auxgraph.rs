use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use vizdom::auxgraph::*;
use vizdom::family::{gen_oriented_cycle, random_digraph, random_ditree_with};
use vizdom::graph::{build_digraph, Digraph, UndirectedGraph};
use vizdom::record::Verdict;
use vizdom::solve::brute::{brute_force_invariant, Invariant};
use vizdom::solve::validate::{is_clique, is_independent};
use vizdom::solve::{max_independent_set, SolveConfig};
use vizdom::VertexSet;

fn ug(n: usize, edges: &[(usize, usize)]) -> UndirectedGraph {
    UndirectedGraph::from_edges(n, edges.iter().copied()).unwrap()
}

#[test]
fn auxiliary_graph_examples() {
    assert_eq!(closed_in_neighborhood_graph(&build_digraph(2, [(0, 1)]).unwrap()).edge_count(), 1);
    assert_eq!(closed_in_neighborhood_graph(&Digraph::arcless(2)).edge_count(), 0);
    assert_eq!(closed_in_neighborhood_graph(&gen_oriented_cycle(3).unwrap()), UndirectedGraph::complete(3));

    let fork = build_digraph(3, [(2, 0), (2, 1)]).unwrap();
    assert!(open_in_neighborhood_graph(&fork).has_edge(0, 1));
    assert_eq!(open_in_neighborhood_graph(&build_digraph(2, [(0, 1)]).unwrap()).edge_count(), 0);
    assert_eq!(open_in_neighborhood_graph(&gen_oriented_cycle(5).unwrap()).edge_count(), 0);

    let p4 = ug(4, &[(0, 1), (1, 2), (2, 3)]);
    assert_eq!(closed_neighborhood_graph(&p4).edge_count(), 5);
    assert_eq!(closed_neighborhood_graph(&UndirectedGraph::edgeless(3)).edge_count(), 0);
    let star = ug(4, &[(0, 1), (0, 2), (0, 3)]);
    assert_eq!(closed_neighborhood_graph(&star), UndirectedGraph::complete(4));
}

#[test]
fn chordality_certificates() {
    let c4 = ug(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
    match is_chordal(&c4) {
        Chordality::NotChordal { cycle } => {
            let mut c = cycle.clone();
            c.sort_unstable();
            assert_eq!(c, vec![0, 1, 2, 3]);
        }
        other => panic!("C4 reported chordal: {other:?}"),
    }
    match is_chordal(&UndirectedGraph::complete(5)) {
        Chordality::Chordal { peo } => assert!(is_perfect_elimination_order(&UndirectedGraph::complete(5), &peo)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn auxiliary_graphs_of_ditrees_are_chordal() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 1..=25 {
        for _ in 0..8 {
            let t = random_ditree_with(n, [1, 1, 1], &mut rng).unwrap();
            assert!(is_chordal(&closed_in_neighborhood_graph(&t)).is_chordal());
            if t.min_in_degree() >= 1 {
                assert!(is_chordal(&open_in_neighborhood_graph(&t)).is_chordal());
            }
        }
    }
}

#[test]
fn clique_examples_and_cap() {
    assert_eq!(maximal_cliques(&UndirectedGraph::complete(4), 10).unwrap().len(), 1);
    let p3 = ug(3, &[(0, 1), (1, 2)]);
    let cl = maximal_cliques(&p3, 10).unwrap();
    assert_eq!(cl.iter().map(|c| c.to_vec()).collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 2]]);
    let g1 = closed_in_neighborhood_graph(&gen_oriented_cycle(3).unwrap());
    assert_eq!(maximal_cliques(&g1, 10).unwrap()[0].to_vec(), vec![0, 1, 2]);
    assert!(maximal_cliques(&UndirectedGraph::edgeless(5), 3).is_err());
}

#[test]
fn helly_examples() {
    let t = build_digraph(4, [(0, 1), (1, 2), (2, 1), (3, 2)]).unwrap();
    let rec = check_closed_helly_lemma(&t, 1000).unwrap();
    assert_eq!(rec.verdict, Verdict::Holds);
    let rec = check_closed_helly_lemma(&Digraph::arcless(1), 1000).unwrap();
    assert_eq!(rec.verdict, Verdict::Holds);

    let c4 = build_digraph(4, [(0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2), (3, 0), (0, 3)]).unwrap();
    let rec = check_closed_helly_lemma(&c4, 1000).unwrap();
    assert_eq!(rec.verdict, Verdict::HypothesisNotMet);
    assert_eq!(rec.values["girth"], 4);
    assert!(rec.values.contains_key("conclusion_holds"));

    let fork = build_digraph(3, [(2, 0), (2, 1), (0, 2)]).unwrap();
    let rec = check_open_helly_lemma(&fork, 1000).unwrap();
    assert_eq!(rec.verdict, Verdict::Holds);
}

#[test]
fn helly_on_sparse_high_girth_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut tested = 0;
    while tested < 50 {
        let d = random_digraph(12, 0.12, &mut rng);
        if d.underlying_graph().girth().is_some_and(|g| g >= 7) {
            assert_eq!(check_closed_helly_lemma(&d, 10_000).unwrap().verdict, Verdict::Holds);
            let open = check_open_helly_lemma(&d, 10_000).unwrap();
            assert_ne!(open.verdict, Verdict::Fails);
            tested += 1;
        }
    }
}

fn brute_chordal(g: &UndirectedGraph) -> bool {
    // A graph is chordal iff it has no induced cycle of length >= 4; search
    // all vertex subsets inducing a 2-regular connected subgraph.
    let n = g.order();
    for mask in 0u32..1 << n {
        let verts: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
        if verts.len() < 4 {
            continue;
        }
        let s = VertexSet::from_indices(n, verts.iter().copied());
        if verts.iter().any(|&v| g.neighbors(v).intersection_len(&s) != 2) {
            continue;
        }
        let mut seen = VertexSet::new(n);
        let mut stack = vec![verts[0]];
        while let Some(v) = stack.pop() {
            if seen.insert(v) {
                stack.extend(g.neighbors(v).intersection(&s).iter());
            }
        }
        if seen.len() == verts.len() {
            return false;
        }
    }
    true
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = UndirectedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            UndirectedGraph::from_edges(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap()
        })
    })
}

fn arb_digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.3), n * n).prop_map(move |bits| {
            let arcs = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v && bits[u * n + v]);
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn chordality_matches_brute_force(g in arb_graph(8)) {
        let c = is_chordal(&g);
        prop_assert_eq!(c.is_chordal(), brute_chordal(&g));
        match c {
            Chordality::Chordal { peo } => prop_assert!(is_perfect_elimination_order(&g, &peo)),
            Chordality::NotChordal { cycle } => {
                prop_assert!(cycle.len() >= 4);
                let s = VertexSet::from_indices(g.order(), cycle.iter().copied());
                for (i, &v) in cycle.iter().enumerate() {
                    prop_assert!(g.has_edge(v, cycle[(i + 1) % cycle.len()]));
                    prop_assert_eq!(g.neighbors(v).intersection_len(&s), 2);
                }
            }
        }
    }

    #[test]
    fn cliques_are_maximal_and_complete(g in arb_graph(9)) {
        let cl = maximal_cliques(&g, 100_000).unwrap();
        for k in &cl {
            prop_assert!(is_clique(&g, k));
            for v in 0..g.order() {
                if !k.contains(v) {
                    let mut bigger = k.clone();
                    bigger.insert(v);
                    prop_assert!(!is_clique(&g, &bigger));
                }
            }
        }
        let mut sorted = cl.iter().map(|k| k.to_vec()).collect::<Vec<_>>();
        let before = sorted.clone();
        sorted.sort();
        sorted.dedup();
        prop_assert_eq!(sorted, before);
        for e in g.edges() {
            prop_assert!(cl.iter().any(|k| k.contains(e.0) && k.contains(e.1)));
        }
    }

    #[test]
    fn packing_reductions_match_the_oracle(d in arb_digraph(7)) {
        let s = SolveConfig::unbounded();
        let rho = max_independent_set(&closed_in_neighborhood_graph(&d), &s).unwrap();
        prop_assert!(is_independent(&closed_in_neighborhood_graph(&d), &rho.witness));
        prop_assert_eq!(Some(rho.value), brute_force_invariant(&d, Invariant::Rho).unwrap());
        let rho_o = max_independent_set(&open_in_neighborhood_graph(&d), &s).unwrap();
        prop_assert_eq!(Some(rho_o.value), brute_force_invariant(&d, Invariant::RhoOpen).unwrap());
    }
}
