use std::time::Instant;

use crate::auxgraph::{check_closed_helly_lemma, check_open_helly_lemma, closed_in_neighborhood_graph};
use crate::bitset::VertexSet;
use crate::error::SolveError;
use crate::family::{gen_c4_orientation, gen_g_m, C4Variant};
use crate::graph::Digraph;
use crate::product::{cartesian_product, direct_product, ProductVertexMap};
use crate::record::{Claim, InlineDigraph, Verdict, VerificationRecord};
use crate::solve::validate::{is_dominating, is_dominating_undirected, is_total_dominating};
use crate::solve::{
    all_maximum_independent_sets, domination_number, open_packing_number, packing_number,
    partition_two_dominating_sets, total_domination_number, two_packing_number, undirected_domination_number,
    Witnessed,
};

use super::bounds::{product_domination, ProductBounds, ProductGamma};
use super::constructions::{c4_partition_set, gm_square_set, known_dominating_sets};
use super::{CheckConfig, Instance};

/// Run `body` on a fresh record; solver errors become `timeout` or
/// `inconclusive` verdicts.
fn run(
    claim: Claim,
    instance: String,
    cfg: &CheckConfig,
    body: impl FnOnce(&mut VerificationRecord) -> Result<(), SolveError>,
) -> VerificationRecord {
    let start = Instant::now();
    let mut rec = VerificationRecord::new(claim, instance);
    if let Err(e) = body(&mut rec) {
        rec.verdict = match e {
            SolveError::Timeout(_) => Verdict::Timeout,
            _ => Verdict::Inconclusive,
        };
        rec.lhs = None;
        rec.note(e.to_string());
    }
    rec.elapsed_ms = if cfg.timing { start.elapsed().as_millis() as u64 } else { 0 };
    rec
}

fn attach(rec: &mut VerificationRecord, inst: &Instance) {
    if rec.seed.is_none() {
        rec.seed = inst.seed;
    }
    if inst.inline && rec.digraph.is_none() {
        rec.digraph = Some(InlineDigraph::of(&inst.graph));
    }
}

fn unary(claim: Claim, inst: &Instance, cfg: &CheckConfig, body: impl FnOnce(&mut VerificationRecord) -> Result<(), SolveError>) -> VerificationRecord {
    let mut rec = run(claim, inst.name.clone(), cfg, body);
    attach(&mut rec, inst);
    rec
}

fn binary(
    claim: Claim,
    name: String,
    g: &Instance,
    h: &Instance,
    cfg: &CheckConfig,
    body: impl FnOnce(&mut VerificationRecord) -> Result<(), SolveError>,
) -> VerificationRecord {
    let mut rec = run(claim, name, cfg, body);
    rec.seed = g.seed.or(h.seed);
    rec
}

fn equality_verdict(hypotheses_met: bool, equal: bool) -> Verdict {
    match (hypotheses_met, equal) {
        (false, _) => Verdict::HypothesisNotMet,
        (true, true) => Verdict::Holds,
        (true, false) => Verdict::Fails,
    }
}

/// Verdict for `γ(product) ≥ rhs` given a bracket on γ(product). A
/// dominating set smaller than `rhs` refutes; a lower bound reaching `rhs`
/// confirms.
fn at_least_verdict(pg: &ProductGamma, rhs: usize) -> Verdict {
    if pg.upper < rhs {
        Verdict::Fails
    } else if pg.lower >= rhs {
        Verdict::Holds
    } else {
        Verdict::Inconclusive
    }
}

struct Factor {
    gamma: Witnessed,
    rho: Witnessed,
}

fn factor(d: &Digraph, cfg: &CheckConfig) -> Result<Factor, SolveError> {
    Ok(Factor {
        gamma: domination_number(d, &cfg.solve)?,
        rho: packing_number(d, &cfg.solve)?,
    })
}

struct CartesianSolve {
    gamma: ProductGamma,
    bounds: ProductBounds,
}

fn solve_cartesian(
    g: &Digraph,
    h: &Digraph,
    fg: &Factor,
    fh: &Factor,
    hints: impl FnOnce(&ProductVertexMap) -> Vec<VertexSet>,
    cfg: &CheckConfig,
) -> Result<CartesianSolve, SolveError> {
    let (p, map) = cartesian_product(g, h).expect("product of valid factors");
    let bounds = ProductBounds {
        gamma_g: fg.gamma.value,
        gamma_h: fh.gamma.value,
        rho_g: fg.rho.value,
        rho_h: fh.rho.value,
    };
    let gamma = product_domination(&p, &bounds, &hints(&map), cfg)?;
    debug_assert!(is_dominating(&p, &gamma.witness));
    Ok(CartesianSolve { gamma, bounds })
}

fn record_product(rec: &mut VerificationRecord, s: &CartesianSolve) {
    rec.value("gamma_g", s.bounds.gamma_g)
        .value("gamma_h", s.bounds.gamma_h)
        .value("rho_g", s.bounds.rho_g)
        .value("rho_h", s.bounds.rho_h)
        .value("product_lower", s.gamma.lower)
        .value("product_upper", s.gamma.upper)
        .value("exact", i64::from(s.gamma.exact))
        .witness("product_dominating_set", &s.gamma.witness);
    if s.gamma.pinned_by_bounds() {
        rec.value("pinned_by_bounds", 1);
    }
    rec.lhs = s.gamma.value().map(|v| v as i64);
}

fn pair_name(op: &str, g: &Instance, h: &Instance) -> String {
    format!("{} {op} {}", g.name, h.name)
}

/// ρ₂(T) = γ(T) on an undirected tree (the instance's underlying graph).
pub fn check_meir_moon(inst: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    unary(Claim::MeirMoon, inst, cfg, |rec| {
        let t = inst.graph.underlying_graph();
        rec.hypotheses_met = t.is_tree();
        let rho2 = two_packing_number(&t, &cfg.solve)?;
        let gamma = undirected_domination_number(&t, &cfg.solve)?;
        rec.lhs = Some(rho2.value as i64);
        rec.rhs = Some(gamma.value as i64);
        rec.witness("two_packing", &rho2.witness).witness("dominating_set", &gamma.witness);
        rec.verdict = equality_verdict(rec.hypotheses_met, rho2.value == gamma.value);
        Ok(())
    })
}

/// ρ(T) = γ(T) for a ditree.
pub fn check_packing_equals_domination(inst: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    unary(Claim::PackingEqualsDomination, inst, cfg, |rec| {
        let d = &inst.graph;
        rec.hypotheses_met = d.is_ditree();
        let rho = packing_number(d, &cfg.solve)?;
        let gamma = domination_number(d, &cfg.solve)?;
        rec.lhs = Some(rho.value as i64);
        rec.rhs = Some(gamma.value as i64);
        rec.witness("packing", &rho.witness).witness("dominating_set", &gamma.witness);
        rec.verdict = equality_verdict(rec.hypotheses_met, rho.value == gamma.value);
        Ok(())
    })
}

/// ρ°(T) = γ_t(T) for a ditree with δ⁻ ≥ 1.
pub fn check_open_packing_equals_total_domination(inst: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    unary(Claim::OpenPackingEqualsTotalDomination, inst, cfg, |rec| {
        let d = &inst.graph;
        rec.hypotheses_met = d.is_ditree() && d.min_in_degree() >= 1;
        rec.value("min_in_degree", d.min_in_degree());
        let rho_o = open_packing_number(d, &cfg.solve)?;
        rec.lhs = Some(rho_o.value as i64);
        rec.witness("open_packing", &rho_o.witness);
        match total_domination_number(d, &cfg.solve)? {
            Some(gt) => {
                rec.rhs = Some(gt.value as i64);
                rec.witness("total_dominating_set", &gt.witness);
                rec.verdict = equality_verdict(rec.hypotheses_met, rho_o.value == gt.value);
            }
            None => rec.verdict = Verdict::HypothesisNotMet,
        }
        Ok(())
    })
}

/// γ_t(G × H) = γ_t(G)γ_t(H) when ρ°(G) = γ_t(G) (or the same for H),
/// plus the unconditional sandwich
/// `max{ρ°(G)γ_t(H), ρ°(H)γ_t(G)} ≤ γ_t(G × H) ≤ γ_t(G)γ_t(H)`.
pub fn check_total_domination_direct_product(g: &Instance, h: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    binary(Claim::TotalDominationDirectProduct, pair_name("x", g, h), g, h, cfg, |rec| {
        let (gd, hd) = (&g.graph, &h.graph);
        if gd.min_in_degree() == 0 || hd.min_in_degree() == 0 {
            rec.hypotheses_met = false;
            rec.verdict = Verdict::HypothesisNotMet;
            rec.note("a factor has a vertex of in-degree 0");
            return Ok(());
        }
        let gt_g = total_domination_number(gd, &cfg.solve)?.expect("δ⁻ ≥ 1");
        let gt_h = total_domination_number(hd, &cfg.solve)?.expect("δ⁻ ≥ 1");
        let ro_g = open_packing_number(gd, &cfg.solve)?.value;
        let ro_h = open_packing_number(hd, &cfg.solve)?.value;
        rec.hypotheses_met = ro_g == gt_g.value || ro_h == gt_h.value;
        let lower = (ro_g * gt_h.value).max(ro_h * gt_g.value);
        let upper = gt_g.value * gt_h.value;
        rec.value("gamma_t_g", gt_g.value)
            .value("gamma_t_h", gt_h.value)
            .value("rho_open_g", ro_g)
            .value("rho_open_h", ro_h)
            .value("sandwich_lower", lower)
            .value("sandwich_upper", upper);
        rec.rhs = Some(upper as i64);

        let (p, map) = direct_product(gd, hd).expect("product of valid factors");
        let product_set = map.set_product(&gt_g.witness, &gt_h.witness);
        assert!(is_total_dominating(&p, &product_set), "product of total dominating sets must total dominate");
        rec.witness("product_of_factor_sets", &product_set);

        let value = if p.order() <= cfg.exact_threshold {
            let w = total_domination_number(&p, &cfg.solve)?.expect("δ⁻ ≥ 1 is preserved");
            rec.witness("product_total_dominating_set", &w.witness);
            rec.value("exact", 1);
            Some(w.value)
        } else {
            rec.value("exact", 0);
            (lower == upper).then(|| {
                rec.value("pinned_by_bounds", 1);
                upper
            })
        };
        rec.lhs = value.map(|v| v as i64);
        rec.verdict = match value {
            Some(v) if v < lower || v > upper => {
                rec.value("sandwich_holds", 0);
                Verdict::Fails
            }
            Some(v) => {
                rec.value("sandwich_holds", 1);
                equality_verdict(rec.hypotheses_met, v == upper)
            }
            None if rec.hypotheses_met => Verdict::Inconclusive,
            None => Verdict::HypothesisNotMet,
        };
        Ok(())
    })
}

fn cartesian_hints<'a>(g: &'a Instance, h: &'a Instance) -> impl FnOnce(&ProductVertexMap) -> Vec<VertexSet> + 'a {
    move |map| known_dominating_sets(g.spec.as_ref(), h.spec.as_ref(), map)
}

/// γ(G □ H) ≥ max{γ(G)ρ(H), γ(H)ρ(G)}.
pub fn check_packing_lower_bound(g: &Instance, h: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    binary(Claim::PackingLowerBound, pair_name("[]", g, h), g, h, cfg, |rec| {
        let fg = factor(&g.graph, cfg)?;
        let fh = factor(&h.graph, cfg)?;
        let s = solve_cartesian(&g.graph, &h.graph, &fg, &fh, cartesian_hints(g, h), cfg)?;
        record_product(rec, &s);
        let rhs = s.bounds.packing_bound();
        rec.rhs = Some(rhs as i64);
        rec.verdict = at_least_verdict(&s.gamma, rhs);
        Ok(())
    })
}

/// γ(G □ H) ≥ γ(G)γ(H). Failures are expected in general; with a ditree
/// factor the inequality is proven, which `values.ditree_factor` flags.
pub fn check_vizing_inequality(g: &Instance, h: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    binary(Claim::VizingInequality, pair_name("[]", g, h), g, h, cfg, |rec| {
        rec.value("ditree_factor", i64::from(g.graph.is_ditree() || h.graph.is_ditree()));
        let fg = factor(&g.graph, cfg)?;
        let fh = factor(&h.graph, cfg)?;
        let s = solve_cartesian(&g.graph, &h.graph, &fg, &fh, cartesian_hints(g, h), cfg)?;
        record_product(rec, &s);
        let rhs = fg.gamma.value * fh.gamma.value;
        rec.rhs = Some(rhs as i64);
        rec.verdict = at_least_verdict(&s.gamma, rhs);
        Ok(())
    })
}

/// γ(G □ H) ≥ ½γ(G)γ(H) + ½max{γ(G), γ(H)}, with the slack recorded.
pub fn check_half_vizing_bound(g: &Instance, h: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    binary(Claim::HalfVizingBound, pair_name("[]", g, h), g, h, cfg, |rec| {
        let fg = factor(&g.graph, cfg)?;
        let fh = factor(&h.graph, cfg)?;
        let s = solve_cartesian(&g.graph, &h.graph, &fg, &fh, cartesian_hints(g, h), cfg)?;
        record_product(rec, &s);
        let twice = s.bounds.twice_half_bound();
        rec.rhs = Some(s.bounds.half_bound() as i64);
        rec.value("twice_rhs", twice);
        if let Some(v) = s.gamma.value() {
            rec.value("twice_slack", 2 * v as i64 - twice as i64);
            rec.value("slack", v as i64 - s.bounds.half_bound() as i64);
        }
        rec.verdict = if 2 * s.gamma.upper < twice {
            Verdict::Fails
        } else if 2 * s.gamma.lower >= twice {
            Verdict::Holds
        } else {
            Verdict::Inconclusive
        };
        Ok(())
    })
}

/// The set S for `G_m □ G_m` dominates and has `m² + 2m < (m+1)²` vertices;
/// an exact γ is added when the product is under the exact threshold.
pub fn check_gm_vizing_failure(m: usize, cfg: &CheckConfig) -> VerificationRecord {
    run(Claim::GmVizingFailure, format!("Gm:{m}"), cfg, |rec| {
        let g = gen_g_m(m).expect("m >= 1");
        let gamma_g = domination_number(&g, &cfg.solve)?.value;
        let (p, map) = cartesian_product(&g, &g).expect("valid factors");
        let s = gm_square_set(m, &map);
        let dominates = is_dominating(&p, &s);
        let rhs = gamma_g * gamma_g;
        rec.lhs = Some(s.len() as i64);
        rec.rhs = Some(rhs as i64);
        rec.witness("construction", &s);
        rec.value("gamma_gm", gamma_g)
            .value("construction_dominates", i64::from(dominates))
            .value("m_squared_plus_2m", m * m + 2 * m);
        let mut ok = dominates && s.len() == m * m + 2 * m && s.len() < rhs;
        if p.order() <= cfg.exact_threshold {
            let exact = domination_number(&p, &cfg.solve)?;
            rec.value("exact_gamma", exact.value);
            rec.witness("minimum_dominating_set", &exact.witness);
            ok &= exact.value < rhs && exact.value <= s.len();
        }
        rec.verdict = if ok { Verdict::Holds } else { Verdict::Fails };
        Ok(())
    })
}

/// A partition of V(G) into two dominating sets gives the dominating set
/// `(A × {u}) ∪ (B × {v})` of `G □ C₄^(0,2,0,2)` of size n(G); when both parts
/// are minimum, γ(G □ C₄^(0,2,0,2)) = 2γ(G).
pub fn check_c4_equality(g: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    unary(Claim::C4Equality, g, cfg, |rec| {
        let d = &g.graph;
        let c4 = gen_c4_orientation(C4Variant::V0202);
        let Some((a, b)) = partition_two_dominating_sets(d, false, &cfg.solve)? else {
            rec.hypotheses_met = false;
            rec.verdict = Verdict::HypothesisNotMet;
            rec.note("no partition into two dominating sets");
            return Ok(());
        };
        let (p, map) = cartesian_product(d, &c4).expect("valid factors");
        let lemma_set = c4_partition_set(&a, &b, &map);
        let lemma_ok = lemma_set.len() == d.order() && is_dominating(&p, &lemma_set);
        rec.witness("partition_a", &a).witness("partition_b", &b).witness("lemma_set", &lemma_set);
        rec.value("lemma_bound_holds", i64::from(lemma_ok));

        let minimum = partition_two_dominating_sets(d, true, &cfg.solve)?;
        rec.hypotheses_met = minimum.is_some();
        if let Some((ma, mb)) = &minimum {
            rec.witness("minimum_partition_a", ma).witness("minimum_partition_b", mb);
        }
        if !lemma_ok {
            rec.verdict = Verdict::Fails;
            return Ok(());
        }
        if minimum.is_none() {
            rec.verdict = Verdict::HypothesisNotMet;
            rec.note("no partition into two minimum dominating sets");
            return Ok(());
        }
        let fg = factor(d, cfg)?;
        let fc = factor(&c4, cfg)?;
        let s = solve_cartesian(d, &c4, &fg, &fc, |_| vec![lemma_set.clone()], cfg)?;
        record_product(rec, &s);
        let rhs = fg.gamma.value * fc.gamma.value;
        rec.rhs = Some(rhs as i64);
        rec.verdict = match s.gamma.value() {
            Some(v) => equality_verdict(true, v == rhs),
            None => Verdict::Inconclusive,
        };
        Ok(())
    })
}

/// A vertex adjacent (in the underlying graph) to at least two leaves that
/// have an in-neighbor, with two such leaves.
pub fn has_strong_support_with_two_non_isolated_leaves(t: &Digraph) -> Option<(usize, usize, usize)> {
    let classes = t.classify_leaves();
    let un = t.underlying_graph();
    (0..t.order()).find_map(|v| {
        let leaves: Vec<usize> = un
            .neighbors(v)
            .iter()
            .filter(|&w| classes[w].is_non_isolated_leaf())
            .take(2)
            .collect();
        (leaves.len() == 2).then(|| (v, leaves[0], leaves[1]))
    })
}

/// Contrapositive of the strong-support condition: whenever
/// γ(T □ G) = γ(T)γ(G) with un(G) connected, T has no strong support vertex
/// adjacent to two non-isolated leaves.
pub fn check_strong_support_condition(t: &Instance, g: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    binary(Claim::StrongSupportCondition, pair_name("[]", t, g), t, g, cfg, |rec| {
        let bad = has_strong_support_with_two_non_isolated_leaves(&t.graph);
        rec.value("has_bad_support", i64::from(bad.is_some()));
        if let Some((v, l1, l2)) = bad {
            rec.witnesses.insert("bad_support".into(), vec![v, l1, l2]);
        }
        rec.hypotheses_met = t.graph.is_ditree() && g.graph.underlying_connected();
        if !rec.hypotheses_met {
            rec.verdict = Verdict::HypothesisNotMet;
            return Ok(());
        }
        let ft = factor(&t.graph, cfg)?;
        let fg = factor(&g.graph, cfg)?;
        let s = solve_cartesian(&t.graph, &g.graph, &ft, &fg, cartesian_hints(t, g), cfg)?;
        record_product(rec, &s);
        let rhs = ft.gamma.value * fg.gamma.value;
        rec.rhs = Some(rhs as i64);
        let equal = match s.gamma.value() {
            Some(v) => Some(v == rhs),
            None if s.gamma.lower > rhs || s.gamma.upper < rhs => Some(false),
            None => None,
        };
        rec.verdict = match equal {
            None => Verdict::Inconclusive,
            Some(eq) => {
                rec.value("equality", i64::from(eq));
                if eq && bad.is_some() {
                    Verdict::Fails
                } else {
                    Verdict::Holds
                }
            }
        };
        Ok(())
    })
}

/// Attaching an isolated leaf at `attach_at` that raises γ keeps
/// γ(T □ H) = γ(T)γ(H).
pub fn check_isolated_leaf_extension(t: &Instance, h: &Instance, attach_at: usize, cfg: &CheckConfig) -> VerificationRecord {
    let name = format!("{}+leaf@{attach_at} [] {}", t.name, h.name);
    binary(Claim::IsolatedLeafExtension, name, t, h, cfg, |rec| {
        let t2 = t.graph.with_isolated_leaf(attach_at).expect("attach point in range");
        let ft = factor(&t.graph, cfg)?;
        let ft2 = factor(&t2, cfg)?;
        let fh = factor(&h.graph, cfg)?;
        rec.value("gamma_t", ft.gamma.value).value("gamma_t_extended", ft2.gamma.value);
        let grows = ft2.gamma.value == ft.gamma.value + 1;
        let base = solve_cartesian(&t.graph, &h.graph, &ft, &fh, cartesian_hints(t, h), cfg)?;
        let base_rhs = ft.gamma.value * fh.gamma.value;
        rec.value("base_product_lower", base.gamma.lower)
            .value("base_product_upper", base.gamma.upper);
        let base_equal = match base.gamma.value() {
            Some(v) => Some(v == base_rhs),
            None if base.gamma.lower > base_rhs => Some(false),
            None => None,
        };
        let Some(base_equal) = base_equal else {
            rec.verdict = Verdict::Inconclusive;
            rec.note("base product value not determined");
            return Ok(());
        };
        rec.value("base_equality", i64::from(base_equal));
        rec.hypotheses_met = t.graph.is_ditree() && grows && base_equal;
        if !rec.hypotheses_met {
            rec.verdict = Verdict::HypothesisNotMet;
            return Ok(());
        }
        let ext = solve_cartesian(&t2, &h.graph, &ft2, &fh, |_| Vec::new(), cfg)?;
        record_product(rec, &ext);
        let rhs = ft2.gamma.value * fh.gamma.value;
        rec.rhs = Some(rhs as i64);
        rec.verdict = match ext.gamma.value() {
            Some(v) => equality_verdict(true, v == rhs),
            None => Verdict::Inconclusive,
        };
        Ok(())
    })
}

/// With γ(T₁ □ T₂) = γ(T₁)γ(T₂) and both orders ≥ 3: every maximum packing
/// of either factor dominates its underlying tree, and all maximum packings of
/// T₁ contain its isolated leaves or all of T₂'s do.
pub fn check_max_packing_dominates(t1: &Instance, t2: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    binary(Claim::MaxPackingDominates, pair_name("[]", t1, t2), t1, t2, cfg, |rec| {
        let (a, b) = (&t1.graph, &t2.graph);
        if a.order() < 3 || b.order() < 3 || !a.is_ditree() || !b.is_ditree() {
            rec.hypotheses_met = false;
            rec.verdict = Verdict::HypothesisNotMet;
            rec.note("factors must be ditrees of order at least 3");
            return Ok(());
        }
        let fa = factor(a, cfg)?;
        let fb = factor(b, cfg)?;
        let s = solve_cartesian(a, b, &fa, &fb, cartesian_hints(t1, t2), cfg)?;
        record_product(rec, &s);
        let rhs = fa.gamma.value * fb.gamma.value;
        rec.rhs = Some(rhs as i64);
        let equal = match s.gamma.value() {
            Some(v) => v == rhs,
            None if s.gamma.lower > rhs => false,
            None => {
                rec.verdict = Verdict::Inconclusive;
                return Ok(());
            }
        };
        rec.hypotheses_met = equal;
        if !equal {
            rec.verdict = Verdict::HypothesisNotMet;
            return Ok(());
        }

        let mut ok = true;
        let mut all_contain = [true, true];
        for (i, t) in [a, b].into_iter().enumerate() {
            let packings = all_maximum_independent_sets(&closed_in_neighborhood_graph(t), cfg.packing_cap, &cfg.solve)?;
            let un = t.underlying_graph();
            let classes = t.classify_leaves();
            let isolated = VertexSet::from_indices(t.order(), (0..t.order()).filter(|&v| classes[v].is_isolated_leaf()));
            rec.value(&format!("max_packings_{}", i + 1), packings.len())
                .value(&format!("isolated_leaves_{}", i + 1), isolated.len());
            if let Some(p) = packings.iter().find(|p| !is_dominating_undirected(&un, p)) {
                rec.witness(&format!("non_dominating_packing_{}", i + 1), p);
                ok = false;
            }
            if let Some(p) = packings.iter().find(|p| !isolated.is_subset(p)) {
                rec.witness(&format!("packing_missing_isolated_leaf_{}", i + 1), p);
                all_contain[i] = false;
            }
        }
        let disjunction = all_contain[0] || all_contain[1];
        rec.value("isolated_leaf_disjunction", i64::from(disjunction));
        rec.verdict = if ok && disjunction { Verdict::Holds } else { Verdict::Fails };
        Ok(())
    })
}

/// Closed-neighborhood clique containment, with the girth hypothesis recorded.
pub fn check_closed_helly(inst: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    helly(inst, cfg, Claim::ClosedHelly, check_closed_helly_lemma)
}

pub fn check_open_helly(inst: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    helly(inst, cfg, Claim::OpenHelly, check_open_helly_lemma)
}

fn helly(
    inst: &Instance,
    cfg: &CheckConfig,
    claim: Claim,
    f: fn(&Digraph, usize) -> Result<VerificationRecord, SolveError>,
) -> VerificationRecord {
    let mut out = None;
    let mut rec = unary(claim, inst, cfg, |_| {
        out = Some(f(&inst.graph, cfg.clique_cap)?);
        Ok(())
    });
    if let Some(mut r) = out {
        r.instance = rec.instance;
        r.seed = rec.seed;
        r.digraph = rec.digraph.take();
        if !cfg.timing {
            r.elapsed_ms = 0;
        }
        rec = r;
    }
    rec
}

/// One instance of the acyclic question: compare ρ and γ and keep both
/// witnesses. Nothing is asserted; `fails` marks ρ < γ.
pub fn run_acyclic_check(inst: &Instance, cfg: &CheckConfig) -> VerificationRecord {
    unary(Claim::AcyclicPackingDomination, inst, cfg, |rec| {
        let d = &inst.graph;
        rec.hypotheses_met = d.is_acyclic();
        let rho = packing_number(d, &cfg.solve)?;
        let gamma = domination_number(d, &cfg.solve)?;
        rec.lhs = Some(rho.value as i64);
        rec.rhs = Some(gamma.value as i64);
        rec.witness("packing", &rho.witness).witness("dominating_set", &gamma.witness);
        rec.verdict = equality_verdict(rec.hypotheses_met, rho.value == gamma.value);
        if rec.verdict == Verdict::Fails {
            rec.note("packing number below domination number");
            rec.digraph = Some(InlineDigraph::of(d));
        }
        Ok(())
    })
}
