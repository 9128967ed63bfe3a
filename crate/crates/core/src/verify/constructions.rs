//! Explicit dominating sets of specific products, in product indices.

use crate::bitset::VertexSet;
use crate::family::{FamilySpec, HmIndex, K1_STAR_X};
use crate::product::ProductVertexMap;

/// For `G_m □ G_m`: `{(v1, v_2i)} ∪ {(v_2i, v_2j+1)} ∪ {(v_2j+1, v1)}`,
/// of size `m² + 2m`.
pub fn gm_square_set(m: usize, map: &ProductVertexMap) -> VertexSet {
    let even = |i: usize| 2 * i - 1; // v_{2i}
    let odd = |j: usize| 2 * j; // v_{2j+1}
    let mut s = VertexSet::new(map.order());
    for i in 1..=m {
        s.insert(map.index(0, even(i)));
        s.insert(map.index(odd(i), 0));
        for j in 1..=m {
            s.insert(map.index(even(i), odd(j)));
        }
    }
    s
}

/// For `H_m □ C⃗₃` with `C⃗₃ = a→b→c→a` on `0, 1, 2`:
/// `{(a_i, a)} ∪ {(b_i, b)} ∪ {(c_i, c)}`, of size `3m`.
pub fn hm_triangle_set(k: usize, map: &ProductVertexMap) -> VertexSet {
    let m = 3 * k;
    let ix = HmIndex { m };
    let mut s = VertexSet::new(map.order());
    for i in 1..=m {
        s.insert(map.index(ix.a(i), 0));
        s.insert(map.index(ix.b(i), 1));
        s.insert(map.index(ix.c(i), 2));
    }
    s
}

/// For `T* □ P₄` where `T*` has `copies` copies of `K₁*`: in each copy
/// `(a,v2),(a,v3),(c,v1),(c,v4),(c',v2),(c',v3),(a',v1),(a',v4)`.
pub fn tstar_path_set(copies: usize, map: &ProductVertexMap) -> VertexSet {
    const PATTERN: [(usize, usize); 8] = [(0, 1), (0, 2), (2, 0), (2, 3), (4, 1), (4, 2), (6, 0), (6, 3)];
    debug_assert_eq!(K1_STAR_X, 3);
    let mut s = VertexSet::new(map.order());
    for c in 0..copies {
        for (g, h) in PATTERN {
            s.insert(map.index(7 * c + g, h));
        }
    }
    s
}

/// For `G □ C₄^(0,2,0,2)` given a partition of V(G) into dominating sets `A`,
/// `B`: `(A × {u}) ∪ (B × {v})` where `u = 1`, `v = 3` have out-degree 2.
pub fn c4_partition_set(a: &VertexSet, b: &VertexSet, map: &ProductVertexMap) -> VertexSet {
    let mut s = VertexSet::new(map.order());
    for g in a.iter() {
        s.insert(map.index(g, 1));
    }
    for g in b.iter() {
        s.insert(map.index(g, 3));
    }
    s
}

/// Re-index a set of `H □ G` (indexed by `from`) as a set of `G □ H`.
fn swap(set: &VertexSet, from: &ProductVertexMap) -> VertexSet {
    let to = ProductVertexMap {
        n_g: from.n_h,
        n_h: from.n_g,
    };
    VertexSet::from_indices(
        to.order(),
        set.iter().map(|i| {
            let (h, g) = from.pair(i);
            to.index(g, h)
        }),
    )
}

fn hint_ordered(g: &FamilySpec, h: &FamilySpec, map: &ProductVertexMap) -> Option<VertexSet> {
    match (g, h) {
        (FamilySpec::Gm(m), FamilySpec::Gm(m2)) if m == m2 => Some(gm_square_set(*m, map)),
        (FamilySpec::Hm(k), FamilySpec::Cycle(3)) => Some(hm_triangle_set(*k, map)),
        (FamilySpec::K1Star, FamilySpec::Path(4)) => Some(tstar_path_set(1, map)),
        (FamilySpec::TStar(_), FamilySpec::Path(4)) => Some(tstar_path_set(map.n_g / 7, map)),
        _ => None,
    }
}

/// Known dominating sets of `G □ H` for named factor pairs, in either order.
pub fn known_dominating_sets(g: Option<&FamilySpec>, h: Option<&FamilySpec>, map: &ProductVertexMap) -> Vec<VertexSet> {
    let (Some(g), Some(h)) = (g, h) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if let Some(s) = hint_ordered(g, h, map) {
        out.push(s);
    }
    let swapped = ProductVertexMap {
        n_g: map.n_h,
        n_h: map.n_g,
    };
    if let Some(s) = hint_ordered(h, g, &swapped) {
        out.push(swap(&s, &swapped));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{gen_g_m, gen_h_m, gen_k1_star, gen_bidirected_path, gen_oriented_cycle};
    use crate::product::cartesian_product;
    use crate::solve::validate::is_dominating;

    #[test]
    fn gm_square_sets_dominate() {
        for m in 1..=6 {
            let g = gen_g_m(m).unwrap();
            let (p, map) = cartesian_product(&g, &g).unwrap();
            let s = gm_square_set(m, &map);
            assert_eq!(s.len(), m * m + 2 * m);
            assert!(is_dominating(&p, &s), "m = {m}");
        }
    }

    #[test]
    fn hm_set_dominates_in_both_orders() {
        let h = gen_h_m(3).unwrap();
        let c = gen_oriented_cycle(3).unwrap();
        let (p, map) = cartesian_product(&h, &c).unwrap();
        let d = hm_triangle_set(3, &map);
        assert_eq!(d.len(), 27);
        assert!(is_dominating(&p, &d));
        let (q, qmap) = cartesian_product(&c, &h).unwrap();
        let hints = known_dominating_sets(Some(&FamilySpec::Cycle(3)), Some(&FamilySpec::Hm(3)), &qmap);
        assert_eq!(hints.len(), 1);
        assert!(is_dominating(&q, &hints[0]));
    }

    #[test]
    fn k1_star_path_set_dominates() {
        let (p, map) = cartesian_product(&gen_k1_star(), &gen_bidirected_path(4).unwrap()).unwrap();
        let s = tstar_path_set(1, &map);
        assert_eq!(s.len(), 8);
        assert!(is_dominating(&p, &s));
    }
}
