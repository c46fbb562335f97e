//! Hypothesis certificates.
//!
//! A [`Certificate`] records, for one generating set, a witness for every
//! hypothesis of the commutativity-graph theorems and the conclusions those
//! theorems then give. Conclusions are only emitted when every hypothesis
//! line holds. The tool checks hypotheses; the theorems themselves are
//! cited in `relied_upon`, not re-proved.
//!
//! JSON field names are fixed: `schema_version`, `engine`, `generators`,
//! `power_bound`, `truncation`, `graph`, `infinite_order`, `rank2`,
//! `hypotheses`, `proof_pattern`, `conclusions`, `relied_upon`, `caveats`,
//! `tool_version`.

mod verify;
mod witness;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::commgraph::{CommGraph, GeneratorSet, GraphEdge, GraphSummary, DEFAULT_POWER_BOUND};
use crate::engine::{commutes, ElementKey, EngineId, Group, GroupElement};
use crate::error::{Error, Result};
use crate::thompson::{generator_x, x0_after_x1_inverse};

pub use verify::{verify_certificate, verify_certificate_json, VerifyReport};
pub use witness::{
    check_infinite_order, infinite_order_witness, rank2_witness, sanity_relations, Homomorphism, ImageWitness,
    InfiniteOrderWitness, Rank2Witness, SANITY_BOUND,
};

pub const SCHEMA_VERSION: &str = "1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Label of `x_0 ∘ x_1^-1` in Thompson generator sets.
pub const THOMPSON_TAIL_LABEL: &str = "x0∘x1^-1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorEntry {
    pub label: String,
    pub key: ElementKey,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfiniteOrderEntry {
    pub label: String,
    #[serde(flatten)]
    pub witness: InfiniteOrderWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SanityCheck {
    pub relation_search_bound: u32,
    pub relations_found: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rank2Entry {
    pub edge: [String; 2],
    pub powers: [i64; 2],
    #[serde(flatten)]
    pub witness: Rank2Witness,
    pub justification: String,
    pub sanity: SanityCheck,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Hypothesis {
    Cardinality,
    InfiniteOrder,
    Connected,
    Rank2Edge,
    /// Derived from the rank-2 edge: a virtually cyclic group has no Z^2.
    NotVirtuallyCyclic,
    TailCommutes,
    ReducedGraphConnected,
    Rank2Tail,
    ConjugationRelations,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Hypothesis::Cardinality => "cardinality",
            Hypothesis::InfiniteOrder => "infinite-order",
            Hypothesis::Connected => "connected",
            Hypothesis::Rank2Edge => "rank2-edge",
            Hypothesis::NotVirtuallyCyclic => "not-virtually-cyclic",
            Hypothesis::TailCommutes => "tail-commutes",
            Hypothesis::ReducedGraphConnected => "reduced-graph-connected",
            Hypothesis::Rank2Tail => "rank2-tail",
            Hypothesis::ConjugationRelations => "conjugation-relations",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisLine {
    pub id: Hypothesis,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProofPattern {
    MainTheorem,
    ThompsonVariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Conclusion {
    NotStronglyRelativelyHyperbolic,
    OneEnd,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::NotStronglyRelativelyHyperbolic => "NOT_STRONGLY_RELATIVELY_HYPERBOLIC",
            Conclusion::OneEnd => "ONE_END",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Citation {
    pub id: String,
    pub statement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caveat {
    pub code: String,
    pub text: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema_version: String,
    pub engine: EngineId,
    pub generators: Vec<GeneratorEntry>,
    pub power_bound: u32,
    pub truncation: Option<u32>,
    pub graph: GraphSummary,
    pub infinite_order: Vec<InfiniteOrderEntry>,
    pub rank2: Option<Rank2Entry>,
    pub hypotheses: Vec<HypothesisLine>,
    pub proof_pattern: ProofPattern,
    pub conclusions: Vec<Conclusion>,
    pub relied_upon: Vec<Citation>,
    pub caveats: Vec<Caveat>,
    pub tool_version: String,
}

impl Certificate {
    pub fn has_conclusions(&self) -> bool {
        !self.conclusions.is_empty()
    }

    pub fn hypothesis(&self, id: Hypothesis) -> Option<&HypothesisLine> {
        self.hypotheses.iter().find(|h| h.id == id)
    }

    pub fn failed_hypotheses(&self) -> Vec<&HypothesisLine> {
        self.hypotheses.iter().filter(|h| !h.holds).collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

fn citation(id: &str, statement: &str) -> Citation {
    Citation { id: id.into(), statement: statement.into() }
}

fn relied_upon(pattern: ProofPattern) -> Vec<Citation> {
    let mut out = vec![
        citation(
            "relative-malnormality",
            "If G is strongly hyperbolic relative to proper finitely generated subgroups L_1..L_p, then \
             g1 L_j g1^-1 ∩ g2 L_k g2^-1 is finite for j != k, and L_j ∩ g L_j g^-1 is finite for g not in L_j \
             (Farb; Bowditch).",
        ),
        citation(
            "peripheral-abelian-subgroups",
            "In a group strongly hyperbolic relative to L_1..L_p, every abelian subgroup of rank at least 2 \
             lies in a conjugate of some L_j.",
        ),
        citation(
            "stallings-ends",
            "A finitely generated group that is not virtually Z has one end or infinitely many ends, and it has \
             infinitely many ends iff it splits non-trivially as an amalgamated free product or HNN extension \
             over a finite subgroup (Stallings).",
        ),
        citation(
            "splitting-malnormality",
            "For a non-trivial splitting over a finite subgroup C, conjugates of distinct vertex groups meet in \
             finite subgroups and A ∩ gAg^-1 is trivial for g outside a vertex group A.",
        ),
        citation(
            "splitting-abelian-subgroups",
            "For a non-trivial splitting over a finite subgroup, every abelian subgroup of rank at least 2 lies \
             in a conjugate of a vertex group.",
        ),
    ];
    match pattern {
        ProofPattern::MainTheorem => out.push(citation(
            "commutativity-graph-theorems",
            "If S generates G, |S| >= 2, every s in S has infinite order, K(G,S) is connected and some edge \
             s--t has <s^n_s, t^n_t> free abelian of rank 2, then G is not strongly hyperbolic relative to any \
             finite collection of proper finitely generated subgroups; if moreover G is not virtually Z, then \
             G has one end.",
        )),
        ProofPattern::ThompsonVariant => out.push(citation(
            "thompson-tail-argument",
            "For F with S' = {x_j} ∪ {x_0∘x_1^-1}: if x_0∘x_1^-1 has infinite order and commutes with every x_j \
             (j >= 2), <x_0∘x_1^-1, x_2> is free abelian of rank 2, and x_{j+1} = x_0 x_j x_0^-1 for j >= 2, \
             then malnormality confines x_0, x_1 and all x_j to one peripheral (or vertex) subgroup, which is \
             then all of F; so F is not strongly relatively hyperbolic and has one end.",
        )),
    }
    out
}

const NOT_VIRTUALLY_CYCLIC_ARGUMENT: &str =
    "a virtually cyclic group contains no free abelian subgroup of rank 2, and the rank-2 edge exhibits one";

fn line(id: Hypothesis, holds: bool, detail: impl Into<String>) -> HypothesisLine {
    HypothesisLine { id, holds, detail: detail.into() }
}

fn apply_forced_failure(lines: &mut [HypothesisLine], forced: Option<Hypothesis>) {
    if let Some(id) = forced {
        for l in lines.iter_mut().filter(|l| l.id == id) {
            l.holds = false;
            l.detail = format!("disabled on request; computed: {}", l.detail);
        }
    }
}

fn conclusions_for(lines: &[HypothesisLine]) -> Vec<Conclusion> {
    let holds = |id| lines.iter().any(|l| l.id == id && l.holds);
    let core_ok = lines.iter().filter(|l| l.id != Hypothesis::NotVirtuallyCyclic).all(|l| l.holds);
    let mut out = Vec::new();
    if core_ok {
        out.push(Conclusion::NotStronglyRelativelyHyperbolic);
        if holds(Hypothesis::NotVirtuallyCyclic) {
            out.push(Conclusion::OneEnd);
        }
    }
    out
}

fn generator_entries(gens: &GeneratorSet) -> Vec<GeneratorEntry> {
    gens.items().iter().map(|g| GeneratorEntry { label: g.label.clone(), key: g.element.key() }).collect()
}

/// Infinite-order witnesses for every generator, plus the labels that got none.
fn infinite_order_section(gens: &GeneratorSet) -> (Vec<InfiniteOrderEntry>, Vec<String>) {
    let mut entries = Vec::new();
    let mut missing = Vec::new();
    for g in gens.items() {
        match infinite_order_witness(&g.element) {
            Ok(witness) => entries.push(InfiniteOrderEntry { label: g.label.clone(), witness }),
            Err(e) => missing.push(format!("{}: {e}", g.label)),
        }
    }
    (entries, missing)
}

fn rank2_entry(gens: &GeneratorSet, edge: &GraphEdge) -> Result<Rank2Entry> {
    let s = gens.get(&edge.s).ok_or_else(|| Error::UnknownLabel(edge.s.clone()))?;
    let t = gens.get(&edge.t).ok_or_else(|| Error::UnknownLabel(edge.t.clone()))?;
    let powers = (edge.n_s, edge.n_t);
    let witness = rank2_witness(s, t, powers)?;
    let relations_found = sanity_relations(s, t, powers)?;
    if relations_found != 0 {
        return Err(Error::StrategyInapplicable(format!(
            "relation search found {relations_found} relations for a pair certified independent"
        )));
    }
    Ok(Rank2Entry {
        edge: [edge.s.clone(), edge.t.clone()],
        powers: [edge.n_s, edge.n_t],
        justification: witness.justification().into(),
        witness,
        sanity: SanityCheck { relation_search_bound: SANITY_BOUND, relations_found },
    })
}

/// Checks the hypotheses of both commutativity-graph theorems for `gens`.
pub fn check_main_theorem(gens: &GeneratorSet) -> Certificate {
    check_main_theorem_with(gens, None)
}

/// Like [`check_main_theorem`], but reports `forced_failure` as failed
/// regardless of what was computed. Used to test conclusion gating.
pub fn check_main_theorem_with(gens: &GeneratorSet, forced_failure: Option<Hypothesis>) -> Certificate {
    let mut lines = Vec::new();

    lines.push(line(Hypothesis::Cardinality, gens.len() >= 2, format!("|S| = {}", gens.len())));

    let (infinite_order, missing) = infinite_order_section(gens);
    lines.push(if missing.is_empty() {
        line(Hypothesis::InfiniteOrder, true, format!("{} witnesses", infinite_order.len()))
    } else {
        line(Hypothesis::InfiniteOrder, false, format!("no witness for {}", missing.join("; ")))
    });

    let graph = CommGraph::build(gens);
    let summary = graph.summary();
    let parts = summary.components.len();
    lines.push(line(
        Hypothesis::Connected,
        parts == 1,
        format!("{} vertices, {} edges, {} component(s)", graph.vertex_count(), graph.edge_count(), parts),
    ));

    let mut rank2 = None;
    let mut rejected = Vec::new();
    for edge in &summary.edges {
        match rank2_entry(gens, edge) {
            Ok(entry) => {
                rank2 = Some(entry);
                break;
            }
            Err(e) => rejected.push(format!("{}--{}: {e}", edge.s, edge.t)),
        }
    }
    lines.push(match &rank2 {
        Some(r) => {
            line(Hypothesis::Rank2Edge, true, format!("{}--{} via {}", r.edge[0], r.edge[1], r.witness.strategy_name()))
        }
        None if summary.edges.is_empty() => line(Hypothesis::Rank2Edge, false, "graph has no edges"),
        None => line(Hypothesis::Rank2Edge, false, format!("no edge certified ({} tried)", rejected.len())),
    });
    let rank2_ok = rank2.is_some() && forced_failure != Some(Hypothesis::Rank2Edge);
    lines.push(line(
        Hypothesis::NotVirtuallyCyclic,
        rank2_ok,
        if rank2_ok {
            NOT_VIRTUALLY_CYCLIC_ARGUMENT.to_string()
        } else {
            "derived from the rank-2 edge, which is missing".to_string()
        },
    ));

    apply_forced_failure(&mut lines, forced_failure);
    let conclusions = conclusions_for(&lines);

    Certificate {
        schema_version: SCHEMA_VERSION.into(),
        engine: gens.engine(),
        generators: generator_entries(gens),
        power_bound: gens.power_bound(),
        truncation: None,
        graph: summary,
        infinite_order,
        rank2,
        hypotheses: lines,
        proof_pattern: ProofPattern::MainTheorem,
        conclusions,
        relied_upon: relied_upon(ProofPattern::MainTheorem),
        caveats: Vec::new(),
        tool_version: TOOL_VERSION.into(),
    }
}

/// `S'_m = {x_0, ..., x_m, x_0∘x_1^-1}`.
pub fn thompson_generators(m: u32, power_bound: u32) -> Result<GeneratorSet> {
    let mut items = Vec::with_capacity(m as usize + 2);
    for j in 0..=i64::from(m) {
        items.push((format!("x{j}"), GroupElement::from(generator_x(j)?)));
    }
    items.push((THOMPSON_TAIL_LABEL.to_string(), x0_after_x1_inverse().into()));
    GeneratorSet::new(items, power_bound)
}

pub const MIN_THOMPSON_TRUNCATION: u32 = 4;

/// Checks, up to `x_m`, the facts the Thompson-variant argument consumes.
pub fn check_thompson_variant(m: u32) -> Result<Certificate> {
    check_thompson_variant_with(m, None)
}

pub fn check_thompson_variant_with(m: u32, forced_failure: Option<Hypothesis>) -> Result<Certificate> {
    if m < MIN_THOMPSON_TRUNCATION {
        return Err(Error::InvalidParameter(format!("truncation must be >= {MIN_THOMPSON_TRUNCATION}, got {m}")));
    }
    let gens = thompson_generators(m, DEFAULT_POWER_BOUND)?;
    let elem = |label: &str| gens.get(label).expect("label in S'_m").clone();
    let tail = elem(THOMPSON_TAIL_LABEL);
    let x0 = elem("x0");
    let mut lines = Vec::new();

    let (infinite_order, missing) = infinite_order_section(&gens);
    lines.push(if missing.is_empty() {
        line(Hypothesis::InfiniteOrder, true, format!("{} witnesses", infinite_order.len()))
    } else {
        line(Hypothesis::InfiniteOrder, false, format!("no witness for {}", missing.join("; ")))
    });

    let failing: Vec<String> = (2..=m)
        .filter(|j| !commutes(&tail, &elem(&format!("x{j}"))).expect("single engine"))
        .map(|j| format!("x{j}"))
        .collect();
    lines.push(line(
        Hypothesis::TailCommutes,
        failing.is_empty(),
        if failing.is_empty() {
            format!("{THOMPSON_TAIL_LABEL} commutes with x_j for 2 <= j <= {m}")
        } else {
            format!("{THOMPSON_TAIL_LABEL} fails to commute with {}", failing.join(", "))
        },
    ));

    let graph = CommGraph::build(&gens);
    let reduced = graph.remove_vertices(&["x0", "x1"])?;
    let reduced_comps = reduced.components();
    lines.push(line(
        Hypothesis::ReducedGraphConnected,
        reduced_comps.is_connected(),
        format!(
            "K(F, S'_{m}) minus {{x0, x1}}: {} vertices, {} component(s)",
            reduced.vertex_count(),
            reduced_comps.parts.len()
        ),
    ));

    let tail_edge = GraphEdge { s: THOMPSON_TAIL_LABEL.into(), t: "x2".into(), n_s: 1, n_t: 1 };
    let rank2 = rank2_entry(&gens, &tail_edge);
    lines.push(match &rank2 {
        Ok(r) => {
            line(Hypothesis::Rank2Tail, true, format!("<{THOMPSON_TAIL_LABEL}, x2> via {}", r.witness.strategy_name()))
        }
        Err(e) => line(Hypothesis::Rank2Tail, false, e.to_string()),
    });

    let broken: Vec<String> = (2..m)
        .filter(|&j| {
            let xj = elem(&format!("x{j}"));
            let conj = x0.try_mul(&xj).and_then(|g| g.try_mul(&x0.inverse())).expect("single engine");
            conj != elem(&format!("x{}", j + 1))
        })
        .map(|j| format!("j = {j}"))
        .collect();
    lines.push(line(
        Hypothesis::ConjugationRelations,
        broken.is_empty(),
        if broken.is_empty() {
            format!("x_(j+1) = x_0 x_j x_0^-1 for 2 <= j < {m}")
        } else {
            format!("relation fails at {}", broken.join(", "))
        },
    ));

    let rank2 = rank2.ok();
    let rank2_ok = rank2.is_some() && forced_failure != Some(Hypothesis::Rank2Tail);
    lines.push(line(
        Hypothesis::NotVirtuallyCyclic,
        rank2_ok,
        if rank2_ok {
            NOT_VIRTUALLY_CYCLIC_ARGUMENT.to_string()
        } else {
            "derived from the rank-2 edge, which is missing".to_string()
        },
    ));

    apply_forced_failure(&mut lines, forced_failure);
    let conclusions = conclusions_for(&lines);

    let mut summary = graph.summary();
    summary.removed = vec!["x0".into(), "x1".into()];
    summary.forest = reduced_comps.forest();
    summary.components = reduced_comps.vertex_sets();

    Ok(Certificate {
        schema_version: SCHEMA_VERSION.into(),
        engine: EngineId::Thompson,
        generators: generator_entries(&gens),
        power_bound: gens.power_bound(),
        truncation: Some(m),
        graph: summary,
        infinite_order,
        rank2,
        hypotheses: lines,
        proof_pattern: ProofPattern::ThompsonVariant,
        conclusions,
        relied_upon: relied_upon(ProofPattern::ThompsonVariant),
        caveats: vec![truncation_caveat(m)],
        tool_version: TOOL_VERSION.into(),
    })
}

pub fn truncation_caveat(m: u32) -> Caveat {
    Caveat {
        code: "TRUNCATION".into(),
        text: format!(
            "the argument uses the listed facts for every j >= 2; this certificate checks them only for j <= {m}"
        ),
        truncation: Some(m),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::{heisenberg_generators, IntMatrix};

    fn heisenberg() -> GeneratorSet {
        let (a, b, c) = heisenberg_generators();
        GeneratorSet::new(vec![("a".into(), a.into()), ("b".into(), b.into()), ("c".into(), c.into())], 1).unwrap()
    }

    #[test]
    fn heisenberg_certificate() {
        let cert = check_main_theorem(&heisenberg());
        assert_eq!(cert.conclusions, vec![Conclusion::NotStronglyRelativelyHyperbolic, Conclusion::OneEnd]);
        let r = cert.rank2.as_ref().unwrap();
        assert_eq!(r.edge, ["a".to_string(), "c".to_string()]);
        assert_eq!(r.witness.strategy_name(), "commuting-unipotent-logs");
        assert!(cert.failed_hypotheses().is_empty());
    }

    #[test]
    fn json_roundtrip_and_field_names() {
        let cert = check_main_theorem(&heisenberg());
        let json = cert.to_json();
        assert_eq!(Certificate::from_json(&json).unwrap(), cert);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        for field in [
            "engine",
            "generators",
            "power_bound",
            "truncation",
            "graph",
            "infinite_order",
            "rank2",
            "proof_pattern",
            "conclusions",
            "relied_upon",
            "caveats",
            "tool_version",
        ] {
            assert!(v.get(field).is_some(), "missing {field}");
        }
        for field in ["edge", "powers", "strategy", "payload"] {
            assert!(v["rank2"].get(field).is_some(), "missing rank2.{field}");
        }
        assert!(v["graph"].get("edges").is_some() && v["graph"].get("forest").is_some());
        assert_eq!(v["conclusions"][0], "NOT_STRONGLY_RELATIVELY_HYPERBOLIC");
        assert_eq!(v["infinite_order"][0]["strategy"], "nontrivial-unipotent");
    }

    #[test]
    fn single_generator_fails_cardinality() {
        let (a, _, _) = heisenberg_generators();
        let gens = GeneratorSet::new(vec![("a".into(), a.into())], 1).unwrap();
        let cert = check_main_theorem(&gens);
        assert!(!cert.hypothesis(Hypothesis::Cardinality).unwrap().holds);
        assert!(cert.conclusions.is_empty());
    }

    #[test]
    fn finite_order_generator_blocks_conclusions() {
        let rot = IntMatrix::from_rows(&[&[0, -1], &[1, 0]]).unwrap();
        let u = IntMatrix::elementary(2, 1, 2, 1).unwrap();
        let gens = GeneratorSet::new(vec![("r".into(), rot.into()), ("u".into(), u.into())], 1).unwrap();
        let cert = check_main_theorem(&gens);
        assert!(!cert.hypothesis(Hypothesis::InfiniteOrder).unwrap().holds);
        assert!(cert.conclusions.is_empty());
    }

    #[test]
    fn dependent_edge_is_not_rank2() {
        let (a, _, _) = heisenberg_generators();
        let a2 = crate::engine::power(&a, 2);
        let gens = GeneratorSet::new(vec![("a".into(), a.into()), ("a2".into(), a2.into())], 1).unwrap();
        let cert = check_main_theorem(&gens);
        assert!(cert.hypothesis(Hypothesis::Connected).unwrap().holds);
        assert!(!cert.hypothesis(Hypothesis::Rank2Edge).unwrap().holds);
        assert!(!cert.hypothesis(Hypothesis::NotVirtuallyCyclic).unwrap().holds);
        assert!(cert.rank2.is_none());
        assert!(cert.conclusions.is_empty());
    }

    #[test]
    fn forced_failures_gate_conclusions() {
        let gens = heisenberg();
        for h in [Hypothesis::Cardinality, Hypothesis::InfiniteOrder, Hypothesis::Connected, Hypothesis::Rank2Edge] {
            let cert = check_main_theorem_with(&gens, Some(h));
            assert!(cert.conclusions.is_empty(), "{h:?}");
        }
        let cert = check_main_theorem_with(&gens, Some(Hypothesis::NotVirtuallyCyclic));
        assert_eq!(cert.conclusions, vec![Conclusion::NotStronglyRelativelyHyperbolic]);
    }

    #[test]
    fn display_matches_serde() {
        for h in [Hypothesis::Cardinality, Hypothesis::Rank2Edge, Hypothesis::ReducedGraphConnected] {
            assert_eq!(serde_json::to_value(h).unwrap(), h.to_string());
        }
        for c in [Conclusion::NotStronglyRelativelyHyperbolic, Conclusion::OneEnd] {
            assert_eq!(serde_json::to_value(c).unwrap(), c.to_string());
        }
    }

    #[test]
    fn thompson_variant_small() {
        let cert = check_thompson_variant(4).unwrap();
        assert_eq!(cert.conclusions.len(), 2, "{:?}", cert.failed_hypotheses());
        assert_eq!(cert.truncation, Some(4));
        assert_eq!(cert.caveats[0].code, "TRUNCATION");
        assert!(check_thompson_variant(3).is_err());
    }
}
