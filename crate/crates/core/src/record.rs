//! Verification records: the outcome of checking one claim on one instance.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::graph::Digraph;

/// Every claim the harness can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    MeirMoon,
    PackingEqualsDomination,
    OpenPackingEqualsTotalDomination,
    TotalDominationDirectProduct,
    PackingLowerBound,
    VizingInequality,
    HalfVizingBound,
    GmVizingFailure,
    C4Equality,
    StrongSupportCondition,
    IsolatedLeafExtension,
    MaxPackingDominates,
    AcyclicPackingDomination,
    ClosedHelly,
    OpenHelly,
}

impl Claim {
    pub const ALL: [Claim; 15] = [
        Claim::MeirMoon,
        Claim::PackingEqualsDomination,
        Claim::OpenPackingEqualsTotalDomination,
        Claim::TotalDominationDirectProduct,
        Claim::PackingLowerBound,
        Claim::VizingInequality,
        Claim::HalfVizingBound,
        Claim::GmVizingFailure,
        Claim::C4Equality,
        Claim::StrongSupportCondition,
        Claim::IsolatedLeafExtension,
        Claim::MaxPackingDominates,
        Claim::AcyclicPackingDomination,
        Claim::ClosedHelly,
        Claim::OpenHelly,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::MeirMoon => "meir-moon",
            Claim::PackingEqualsDomination => "packing-equals-domination",
            Claim::OpenPackingEqualsTotalDomination => "open-packing-equals-total-domination",
            Claim::TotalDominationDirectProduct => "total-domination-direct-product",
            Claim::PackingLowerBound => "packing-lower-bound",
            Claim::VizingInequality => "vizing-inequality",
            Claim::HalfVizingBound => "half-vizing-bound",
            Claim::GmVizingFailure => "gm-vizing-failure",
            Claim::C4Equality => "c4-equality",
            Claim::StrongSupportCondition => "strong-support-condition",
            Claim::IsolatedLeafExtension => "isolated-leaf-extension",
            Claim::MaxPackingDominates => "max-packing-dominates",
            Claim::AcyclicPackingDomination => "acyclic-packing-domination",
            Claim::ClosedHelly => "closed-helly",
            Claim::OpenHelly => "open-helly",
        }
    }

    /// Claims taking a pair of instances.
    pub fn is_binary(self) -> bool {
        matches!(
            self,
            Claim::TotalDominationDirectProduct
                | Claim::PackingLowerBound
                | Claim::VizingInequality
                | Claim::HalfVizingBound
                | Claim::StrongSupportCondition
                | Claim::IsolatedLeafExtension
                | Claim::MaxPackingDominates
        )
    }

    /// Whether a `fails` verdict contradicts a proven statement. Vizing's
    /// inequality is expected to fail in general, and the acyclic question is
    /// open.
    pub fn is_theorem(self) -> bool {
        !matches!(self, Claim::VizingInequality | Claim::AcyclicPackingDomination)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| format!("unknown claim id `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
    HypothesisNotMet,
    Timeout,
    /// Exact solve skipped and the bound sandwich did not pin the value.
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::HypothesisNotMet => "hypothesis_not_met",
            Verdict::Timeout => "timeout",
            Verdict::Inconclusive => "inconclusive",
        };
        f.write_str(s)
    }
}

/// A digraph embedded in a record so it can be re-checked without
/// regenerating it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InlineDigraph {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl InlineDigraph {
    pub fn of(d: &Digraph) -> Self {
        InlineDigraph {
            n: d.order(),
            arcs: d.arcs().collect(),
        }
    }

    pub fn to_digraph(&self) -> Result<Digraph, crate::error::GraphError> {
        Digraph::from_arcs(self.n, self.arcs.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub claim: Claim,
    pub instance: String,
    pub hypotheses_met: bool,
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    pub verdict: Verdict,
    /// Named vertex sets, as sorted indices.
    pub witnesses: BTreeMap<String, Vec<usize>>,
    /// Auxiliary integers (factor invariants, bounds, slack).
    #[serde(default)]
    pub values: BTreeMap<String, i64>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub digraph: Option<InlineDigraph>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl VerificationRecord {
    pub fn new(claim: Claim, instance: impl Into<String>) -> Self {
        VerificationRecord {
            claim,
            instance: instance.into(),
            hypotheses_met: true,
            lhs: None,
            rhs: None,
            verdict: Verdict::Holds,
            witnesses: BTreeMap::new(),
            values: BTreeMap::new(),
            elapsed_ms: 0,
            seed: None,
            digraph: None,
            note: None,
        }
    }

    pub fn sides(mut self, lhs: impl TryInto<i64>, rhs: impl TryInto<i64>) -> Self {
        self.lhs = lhs.try_into().ok();
        self.rhs = rhs.try_into().ok();
        self
    }

    pub fn value(&mut self, key: &str, v: impl TryInto<i64>) -> &mut Self {
        if let Ok(v) = v.try_into() {
            self.values.insert(key.to_string(), v);
        }
        self
    }

    pub fn witness(&mut self, key: &str, set: &VertexSet) -> &mut Self {
        self.witnesses.insert(key.to_string(), set.to_vec());
        self
    }

    pub fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.note = Some(text.into());
        self
    }

    /// `fails` on a proven claim. A Vizing failure with a ditree factor is
    /// also a violation, since the inequality is proven in that case.
    pub fn violates_theorem(&self) -> bool {
        if self.verdict != Verdict::Fails {
            return false;
        }
        match self.claim {
            Claim::VizingInequality => self.values.get("ditree_factor") == Some(&1),
            c => c.is_theorem(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn claim_ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
            assert_eq!(serde_json::to_string(&c).unwrap(), format!("\"{}\"", c.id()));
        }
        assert!("nope".parse::<Claim>().is_err());
    }

    #[test]
    fn verdict_serialization() {
        assert_eq!(serde_json::to_string(&Verdict::HypothesisNotMet).unwrap(), "\"hypothesis_not_met\"");
        assert_eq!(Verdict::Inconclusive.to_string(), "inconclusive");
    }

    #[test]
    fn violation_rules() {
        let mut r = VerificationRecord::new(Claim::VizingInequality, "x");
        r.verdict = Verdict::Fails;
        assert!(!r.violates_theorem());
        r.value("ditree_factor", 1);
        assert!(r.violates_theorem());
        let mut p = VerificationRecord::new(Claim::PackingEqualsDomination, "y");
        assert!(!p.violates_theorem());
        p.verdict = Verdict::Fails;
        assert!(p.violates_theorem());
        let mut a = VerificationRecord::new(Claim::AcyclicPackingDomination, "z");
        a.verdict = Verdict::Fails;
        assert!(!a.violates_theorem());
    }

    #[test]
    fn json_round_trip() {
        let mut r = VerificationRecord::new(Claim::ClosedHelly, "cycle:3").sides(1, 1);
        r.witness("clique", &VertexSet::from_indices(3, [0, 2])).value("girth", 3);
        r.seed = Some(7);
        let s = serde_json::to_string(&r).unwrap();
        let back: VerificationRecord = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert!(s.starts_with(r#"{"claim":"closed-helly","instance":"cycle:3","hypotheses_met":true,"lhs":1,"rhs":1"#));
    }
}
