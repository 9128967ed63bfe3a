use proptest::prelude::*;

use vizdom::error::GraphError;
use vizdom::family::{gen_bidirected_path, gen_c4_orientation, gen_g_m, gen_k1_star, gen_oriented_cycle, C4Variant, FamilySpec};
use vizdom::graph::{build_digraph, Digraph};
use vizdom::io::{parse_arc_list, write_arc_list};
use vizdom::product::{cartesian_product, direct_product, Fiber};
use vizdom::solve::{domination_number, SolveConfig};
use vizdom::VertexSet;

fn set(n: usize, items: &[usize]) -> VertexSet {
    VertexSet::from_indices(n, items.iter().copied())
}

#[test]
fn build_rejects_bad_arcs_and_collapses_duplicates() {
    assert_eq!(build_digraph(3, [(1, 1)]).unwrap_err(), GraphError::SelfLoop(1));
    assert!(matches!(build_digraph(3, [(0, 3)]), Err(GraphError::OutOfRange { u: 0, v: 3, n: 3 })));
    assert_eq!(build_digraph(2, [(0, 1), (0, 1)]).unwrap().arc_count(), 1);
    let k1 = build_digraph(1, []).unwrap();
    assert_eq!((k1.order(), k1.arc_count()), (1, 0));
}

#[test]
fn neighborhoods_on_small_examples() {
    let g1 = gen_oriented_cycle(3).unwrap();
    assert_eq!(g1.closed_out_neighborhood(0), set(3, &[0, 1]));
    assert_eq!(g1.closed_in_neighborhood(0), set(3, &[0, 2]));
    let iso = Digraph::arcless(2);
    assert_eq!(iso.closed_out_neighborhood(0), set(2, &[0]));
    assert!(iso.open_out_neighborhood(0).is_empty());
    let p4 = gen_bidirected_path(4).unwrap();
    assert_eq!(p4.closed_out_neighborhood(1), set(4, &[0, 1, 2]));
}

#[test]
fn degrees_girth_and_structure() {
    let c5 = gen_oriented_cycle(5).unwrap();
    assert_eq!((c5.min_in_degree(), c5.max_out_degree()), (1, 1));
    let g3 = gen_g_m(3).unwrap();
    assert_eq!((g3.min_in_degree(), g3.max_out_degree()), (1, 3));
    assert_eq!(g3.underlying_graph().edge_count(), 9);
    assert_eq!(Digraph::arcless(1).min_in_degree(), 0);

    let g1 = gen_oriented_cycle(3).unwrap();
    assert_eq!(g1.underlying_graph().girth(), Some(3));
    assert_eq!(g1.underlying_graph().edge_count(), 3);
    assert!(!g1.is_ditree() && !g1.is_acyclic());
    assert_eq!(gen_bidirected_path(4).unwrap().underlying_graph().girth(), None);
    assert!(gen_k1_star().is_ditree());
    assert!(gen_c4_orientation(C4Variant::V0202).is_acyclic());
    let two_way = build_digraph(2, [(0, 1), (1, 0)]).unwrap();
    assert_eq!(two_way.underlying_graph().edge_count(), 1);
}

#[test]
fn leaf_classes() {
    // K1*: a, a' are isolated leaves; b supports a.
    let k = gen_k1_star();
    let c = k.classify_leaves();
    assert!(c[0].is_isolated_leaf() && c[6].is_isolated_leaf());
    assert!(c[3].leaf.is_none());
    assert!(c[1].support);

    // Corona D: leaf 3 joined both ways, leaves 4 and 5 by an arc into the leaf.
    let d = FamilySpec::Corona {
        edges: vec![vizdom::family::Orientation::Forward; 2],
        leaves: vec![vizdom::family::LeafArc::Both, vizdom::family::LeafArc::In, vizdom::family::LeafArc::In],
    }
    .build()
    .unwrap();
    let c = d.classify_leaves();
    assert!((3..6).all(|v| c[v].is_non_isolated_leaf()));

    let arc = build_digraph(2, [(0, 1)]).unwrap();
    let c = arc.classify_leaves();
    assert!(c[0].is_isolated_leaf() && c[1].is_non_isolated_leaf());
    assert!(c[0].support && c[1].support);
}

#[test]
fn arc_list_round_trip_and_errors() {
    let g3 = gen_g_m(3).unwrap();
    let text = write_arc_list(&g3);
    let back = parse_arc_list(&text).unwrap();
    assert_eq!(back.arcs().collect::<Vec<_>>(), g3.arcs().collect::<Vec<_>>());
    let parsed = parse_arc_list("# triangle\n\nn 3\n0 1 # first\n1 2\n2 0\n").unwrap();
    assert_eq!(parsed, gen_oriented_cycle(3).unwrap());
    assert!(matches!(parse_arc_list("n 3\n0 0\n"), Err(GraphError::Parse { line: 2, .. })));
    assert!(matches!(parse_arc_list("0 1\n"), Err(GraphError::Parse { line: 1, .. })));
    assert!(parse_arc_list("").is_err());
}

#[test]
fn product_examples() {
    let k = gen_k1_star();
    let p4 = gen_bidirected_path(4).unwrap();
    let (kp, map) = cartesian_product(&k, &p4).unwrap();
    assert_eq!(kp.order(), 28);
    assert_eq!(kp.arc_count(), 7 * p4.arc_count() + 4 * k.arc_count());
    assert_eq!(map.pair(map.index(5, 2)), (5, 2));
    assert_eq!(map.index(5, 2), 5 * 4 + 2);

    let c3 = gen_oriented_cycle(3).unwrap();
    let (x, xmap) = direct_product(&c3, &c3).unwrap();
    assert_eq!((x.order(), x.arc_count()), (9, 9));
    for h in 0..3 {
        assert_eq!(x.induced_arc_count(&xmap.fiber_vertices(Fiber::G(h)).unwrap()), 0);
        assert_eq!(x.induced_arc_count(&xmap.fiber_vertices(Fiber::H(h)).unwrap()), 0);
    }
    assert!(matches!(xmap.fiber_vertices(Fiber::G(3)), Err(GraphError::FiberOutOfRange { .. })));
    let (none, _) = direct_product(&c3, &Digraph::arcless(4)).unwrap();
    assert_eq!(none.arc_count(), 0);
    assert!(cartesian_product(&Digraph::arcless(0), &c3).is_err());
}

#[test]
fn product_labels_use_factor_labels() {
    let (p, map) = cartesian_product(&gen_g_m(1).unwrap(), &gen_bidirected_path(2).unwrap()).unwrap();
    assert_eq!(p.label(map.index(0, 1)), "(v1,v2)");
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
    fn neighborhood_identities(d in arb_digraph(9)) {
        let un = d.underlying_graph();
        let outs: usize = (0..d.order()).map(|v| d.out_degree(v)).sum();
        let ins: usize = (0..d.order()).map(|v| d.in_degree(v)).sum();
        prop_assert_eq!(outs, d.arc_count());
        prop_assert_eq!(ins, d.arc_count());
        for v in 0..d.order() {
            prop_assert!(d.closed_out_neighborhood(v).intersection(&d.closed_in_neighborhood(v)).contains(v));
            prop_assert_eq!(un.closed_neighborhood(v), d.closed_out_neighborhood(v).union(&d.closed_in_neighborhood(v)));
            prop_assert!(!un.has_edge(v, v));
            for w in un.neighbors(v).iter() {
                prop_assert!(un.has_edge(w, v));
            }
        }
        if d.is_ditree() {
            prop_assert_eq!(un.girth(), None);
        }
    }

    #[test]
    fn product_arc_counts_and_commutativity(g in arb_digraph(4), h in arb_digraph(4)) {
        let (gh, _) = cartesian_product(&g, &h).unwrap();
        let (hg, _) = cartesian_product(&h, &g).unwrap();
        prop_assert_eq!(gh.arc_count(), g.order() * h.arc_count() + h.order() * g.arc_count());
        let s = SolveConfig::unbounded();
        prop_assert_eq!(domination_number(&gh, &s).unwrap().value, domination_number(&hg, &s).unwrap().value);
        let (x, _) = direct_product(&g, &h).unwrap();
        prop_assert_eq!(x.arc_count(), g.arc_count() * h.arc_count());
        if g.min_in_degree() >= 1 && h.min_in_degree() >= 1 {
            prop_assert!(x.min_in_degree() >= 1);
        }
    }
}
