//! Built-in case studies: Aut⁺(F_n) with its Nielsen maps, SL(n, Z) with
//! elementary matrices, the Heisenberg group, and Thompson's group F.
//!
//! Each case builds its generating set, runs the pipeline and checks a list
//! of named facts. Facts marked `asserted: false` are reported only.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::autfree::{NielsenLabel, SignedLetter};
use crate::certify::{
    check_main_theorem, check_thompson_variant, thompson_generators, verify_certificate, Certificate, Conclusion,
    Hypothesis, THOMPSON_TAIL_LABEL,
};
use crate::commgraph::{edge_witness, CommGraph, GeneratorSet, DEFAULT_POWER_BOUND};
use crate::engine::{EngineId, Group, GroupElement};
use crate::error::{Error, Result};
use crate::matrix::{heisenberg_generators, IntMatrix};

pub const DEFAULT_THOMPSON_TRUNCATION: u32 = 10;
/// Rank from which the Nielsen commutativity graph is known to be connected.
pub const CONNECTED_RANK: usize = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CaseKind {
    Heisenberg,
    Autfree {
        n: usize,
    },
    Sl {
        n: usize,
    },
    Thompson {
        m: u32,
    },
    /// Listed so the gap is visible; there is no engine behind it.
    Stub {
        topic: StubTopic,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StubTopic {
    Mcg,
    Torelli,
}

impl StubTopic {
    fn explanation(self) -> &'static str {
        match self {
            StubTopic::Mcg => {
                "mapping class groups: Dehn twists about disjoint curves commute, but deciding disjointness needs \
                 a curve-complex layer this tool does not have"
            }
            StubTopic::Torelli => {
                "Torelli groups: the generating bounding-pair maps and separating twists are geometric objects; \
                 without a curve-complex layer their commutation cannot be checked"
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseStudy {
    pub name: String,
    #[serde(flatten)]
    pub kind: CaseKind,
    pub description: String,
}

impl CaseStudy {
    pub fn heisenberg() -> Self {
        CaseStudy {
            name: "heisenberg".into(),
            kind: CaseKind::Heisenberg,
            description: "integer Heisenberg group, S = {a, b, c} with [a,b] = c central".into(),
        }
    }

    pub fn autfree(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("autfree needs rank >= 2, got {n}")));
        }
        Ok(CaseStudy {
            name: format!("autfree{n}"),
            kind: CaseKind::Autfree { n },
            description: format!("Aut+(F_{n}) with all {} Nielsen maps", 4 * n * (n - 1)),
        })
    }

    pub fn sl(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("sl needs dimension >= 2, got {n}")));
        }
        Ok(CaseStudy {
            name: format!("sl{n}"),
            kind: CaseKind::Sl { n },
            description: format!("SL({n}, Z) with the {} elementary matrices I ± e_ij", 2 * n * (n - 1)),
        })
    }

    pub fn thompson(m: u32) -> Result<Self> {
        if m < 4 {
            return Err(Error::InvalidParameter(format!("thompson needs truncation >= 4, got {m}")));
        }
        Ok(CaseStudy {
            name: format!("thompson{m}"),
            kind: CaseKind::Thompson { m },
            description: format!("Thompson's group F with S' = {{x0, ..., x{m}, {THOMPSON_TAIL_LABEL}}}"),
        })
    }

    pub fn stub(topic: StubTopic) -> Self {
        let name = match topic {
            StubTopic::Mcg => "mcg",
            StubTopic::Torelli => "torelli",
        };
        CaseStudy {
            name: name.into(),
            kind: CaseKind::Stub { topic },
            description: format!("documentation only: {}", topic.explanation()),
        }
    }

    pub fn is_stub(&self) -> bool {
        matches!(self.kind, CaseKind::Stub { .. })
    }

    pub fn engine(&self) -> Option<EngineId> {
        match self.kind {
            CaseKind::Heisenberg | CaseKind::Sl { .. } => Some(EngineId::Matrix),
            CaseKind::Autfree { .. } => Some(EngineId::Automorphism),
            CaseKind::Thompson { .. } => Some(EngineId::Thompson),
            CaseKind::Stub { .. } => None,
        }
    }

    /// The case's generating set. Stubs have none.
    pub fn generators(&self) -> Result<GeneratorSet> {
        match self.kind {
            CaseKind::Heisenberg => heisenberg_set(DEFAULT_POWER_BOUND),
            CaseKind::Autfree { n } => nielsen_set(n, DEFAULT_POWER_BOUND),
            CaseKind::Sl { n } => elementary_set(n, DEFAULT_POWER_BOUND),
            CaseKind::Thompson { m } => thompson_generators(m, DEFAULT_POWER_BOUND),
            CaseKind::Stub { topic } => Err(Error::InvalidParameter(topic.explanation().into())),
        }
    }

    /// Runs the pipeline and checks every expected fact.
    pub fn run(&self) -> Result<CaseRun> {
        match self.kind {
            CaseKind::Heisenberg => run_heisenberg(self),
            CaseKind::Autfree { n } => run_autfree(self, n),
            CaseKind::Sl { n } => run_sl(self, n),
            CaseKind::Thompson { m } => run_thompson(self, m),
            CaseKind::Stub { topic } => Err(Error::InvalidParameter(format!(
                "{} is a documentation-only entry: {}",
                self.name,
                topic.explanation()
            ))),
        }
    }
}

impl FromStr for CaseStudy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let param = |prefix: &str| -> Option<Result<u32>> {
            let rest = s.strip_prefix(prefix)?;
            Some(rest.parse::<u32>().map_err(|_| Error::InvalidParameter(format!("bad parameter in case name {s:?}"))))
        };
        match s {
            "heisenberg" => return Ok(CaseStudy::heisenberg()),
            "mcg" => return Ok(CaseStudy::stub(StubTopic::Mcg)),
            "torelli" => return Ok(CaseStudy::stub(StubTopic::Torelli)),
            _ => {}
        }
        if let Some(n) = param("autfree") {
            return CaseStudy::autfree(n? as usize);
        }
        if let Some(m) = param("thompson") {
            return CaseStudy::thompson(m?);
        }
        if let Some(n) = param("sl") {
            return CaseStudy::sl(n? as usize);
        }
        Err(Error::UnknownLabel(format!("no case study named {s:?}")))
    }
}

impl fmt::Display for CaseStudy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

/// The shipped catalog, in listing order.
pub fn catalog() -> Vec<CaseStudy> {
    vec![
        CaseStudy::heisenberg(),
        CaseStudy::autfree(CONNECTED_RANK).expect("valid rank"),
        CaseStudy::sl(CONNECTED_RANK).expect("valid dimension"),
        CaseStudy::thompson(DEFAULT_THOMPSON_TRUNCATION).expect("valid truncation"),
        CaseStudy::stub(StubTopic::Mcg),
        CaseStudy::stub(StubTopic::Torelli),
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub holds: bool,
    /// `false` for facts that are reported without any expectation.
    pub asserted: bool,
    pub detail: String,
}

impl Fact {
    fn asserted(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Fact { name: name.into(), holds, asserted: true, detail: detail.into() }
    }

    fn reported(name: &str, holds: bool, detail: impl Into<String>) -> Self {
        Fact { name: name.into(), holds, asserted: false, detail: detail.into() }
    }
}

#[derive(Debug, Clone)]
pub struct CaseRun {
    pub case: CaseStudy,
    pub graph: CommGraph,
    pub certificate: Certificate,
    pub facts: Vec<Fact>,
}

impl CaseRun {
    pub fn ok(&self) -> bool {
        self.facts.iter().all(|f| f.holds || !f.asserted)
    }

    pub fn failures(&self) -> Vec<&Fact> {
        self.facts.iter().filter(|f| f.asserted && !f.holds).collect()
    }
}

pub fn heisenberg_set(power_bound: u32) -> Result<GeneratorSet> {
    let (a, b, c) = heisenberg_generators();
    GeneratorSet::new(vec![("a".into(), a.into()), ("b".into(), b.into()), ("c".into(), c.into())], power_bound)
}

/// All `4n(n-1)` Nielsen maps, labelled `E(a,b)`.
pub fn nielsen_set(n: usize, power_bound: u32) -> Result<GeneratorSet> {
    let items = NielsenLabel::all(n)
        .into_iter()
        .map(|l| Ok((l.to_string(), l.automorphism(n)?.into())))
        .collect::<Result<Vec<_>>>()?;
    GeneratorSet::new(items, power_bound)
}

fn elementary_label(i: usize, j: usize, sign: i8) -> String {
    if sign > 0 {
        format!("e{i}{j}")
    } else {
        format!("e{i}{j}^-1")
    }
}

/// Abelianizations of the Nielsen maps, deduplicated in first-seen order
/// and labelled by the elementary matrix they equal.
pub fn elementary_set(n: usize, power_bound: u32) -> Result<GeneratorSet> {
    let mut by_key: HashMap<Vec<u8>, String> = HashMap::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for sign in [1i8, -1] {
                let m = IntMatrix::elementary(n, i, j, sign)?;
                by_key.insert(GroupElement::from(m).key().as_bytes().to_vec(), elementary_label(i, j, sign));
            }
        }
    }
    let mut seen = HashSet::new();
    let mut items = Vec::new();
    for l in NielsenLabel::all(n) {
        let image = GroupElement::from(l.automorphism(n)?.abelianization().matrix);
        let key = image.key().as_bytes().to_vec();
        let label = by_key
            .get(&key)
            .ok_or_else(|| Error::InvalidParameter(format!("abelianization of {l} is not elementary")))?;
        if seen.insert(key) {
            items.push((label.clone(), image));
        }
    }
    GeneratorSet::new(items, power_bound)
}

fn edge_set(graph: &CommGraph) -> BTreeSet<(String, String)> {
    graph.edges().into_iter().map(|e| if e.s <= e.t { (e.s, e.t) } else { (e.t, e.s) }).collect()
}

fn conclusions_fact(cert: &Certificate) -> Fact {
    let both = cert.conclusions == [Conclusion::NotStronglyRelativelyHyperbolic, Conclusion::OneEnd];
    let detail = if both {
        "NOT_STRONGLY_RELATIVELY_HYPERBOLIC, ONE_END".to_string()
    } else {
        let failed: Vec<String> =
            cert.failed_hypotheses().iter().map(|h| format!("{:?}: {}", h.id, h.detail)).collect();
        format!("conclusions {:?}; failed: {}", cert.conclusions, failed.join("; "))
    };
    Fact::asserted("both-conclusions", both, detail)
}

fn verifies_fact(cert: &Certificate) -> Fact {
    let report = verify_certificate(cert);
    let detail = if report.ok { "no discrepancies".to_string() } else { report.discrepancies.join("; ") };
    Fact::asserted("certificate-verifies", report.ok, detail)
}

fn connected_fact(graph: &CommGraph, asserted: bool) -> Fact {
    let parts = graph.components().parts.len();
    let detail = format!("{} vertices, {} edges, {parts} component(s)", graph.vertex_count(), graph.edge_count());
    if asserted {
        Fact::asserted("connected", parts == 1, detail)
    } else {
        Fact::reported("connected", parts == 1, detail)
    }
}

fn run_heisenberg(case: &CaseStudy) -> Result<CaseRun> {
    let gens = case.generators()?;
    let graph = CommGraph::build(&gens);
    let certificate = check_main_theorem(&gens);
    let mut facts = Vec::new();

    let expected: BTreeSet<(String, String)> =
        [("a", "c"), ("b", "c")].iter().map(|(s, t)| (s.to_string(), t.to_string())).collect();
    let edges = edge_set(&graph);
    facts.push(Fact::asserted("edges-a-c-and-b-c", edges == expected, format!("{edges:?}")));

    let a = gens.get("a").expect("a");
    let b = gens.get("b").expect("b");
    let ab = edge_witness(a, b, 5)?;
    facts.push(Fact::asserted(
        "no-a-b-witness-to-bound-5",
        ab.is_none(),
        match ab {
            Some(w) => format!("found ({}, {})", w.n_s, w.n_t),
            None => "none".into(),
        },
    ));

    let rank2_ac = certificate.rank2.as_ref().is_some_and(|r| r.edge == ["a".to_string(), "c".to_string()]);
    facts.push(Fact::asserted("rank2-edge-a-c", rank2_ac, "commuting unipotent logs"));
    facts.push(conclusions_fact(&certificate));
    facts.push(verifies_fact(&certificate));
    Ok(CaseRun { case: case.clone(), graph, certificate, facts })
}

fn run_autfree(case: &CaseStudy, n: usize) -> Result<CaseRun> {
    let gens = case.generators()?;
    let graph = CommGraph::build(&gens);
    let certificate = check_main_theorem(&gens);
    let connectivity_expected = n >= CONNECTED_RANK;
    let mut facts = Vec::new();

    let expected = 4 * n * (n - 1);
    facts.push(Fact::asserted("generator-count", gens.len() == expected, format!("{} of {expected}", gens.len())));
    facts.push(connected_fact(&graph, connectivity_expected));

    let all_transvections = certificate.infinite_order.len() == gens.len()
        && certificate.infinite_order.iter().all(|w| w.witness.strategy_name() == "unipotent-homomorphic-image");
    facts.push(Fact::asserted(
        "infinite-order-via-abelianization",
        all_transvections,
        format!("{} witnesses", certificate.infinite_order.len()),
    ));

    if connectivity_expected {
        facts.push(conclusions_fact(&certificate));
        facts.push(verifies_fact(&certificate));
    } else {
        facts.push(Fact::reported(
            "conclusions",
            certificate.has_conclusions(),
            format!("{:?}", certificate.conclusions),
        ));
    }
    Ok(CaseRun { case: case.clone(), graph, certificate, facts })
}

fn run_sl(case: &CaseStudy, n: usize) -> Result<CaseRun> {
    let gens = case.generators()?;
    let graph = CommGraph::build(&gens);
    let certificate = check_main_theorem(&gens);
    let connectivity_expected = n >= CONNECTED_RANK;
    let mut facts = Vec::new();

    let mut expected = BTreeSet::new();
    for i in 1..=n {
        for j in (1..=n).filter(|&j| j != i) {
            for sign in [1i8, -1] {
                expected.insert(GroupElement::from(IntMatrix::elementary(n, i, j, sign)?).key());
            }
        }
    }
    let got: BTreeSet<_> = gens.items().iter().map(|g| g.element.key()).collect();
    facts.push(Fact::asserted(
        "projection-is-elementary-set",
        got == expected && got.len() == gens.len(),
        format!("{} images, {} elementary matrices", got.len(), expected.len()),
    ));

    if n >= 4 {
        let w = graph.witness("e12", "e34");
        facts.push(Fact::asserted("edge-e12-e34", w.is_some_and(|w| (w.n_s, w.n_t) == (1, 1)), format!("{w:?}")));
    }
    facts.push(connected_fact(&graph, connectivity_expected));
    if connectivity_expected {
        facts.push(conclusions_fact(&certificate));
        facts.push(verifies_fact(&certificate));
    } else {
        facts.push(Fact::reported(
            "conclusions",
            certificate.has_conclusions(),
            format!("{:?}", certificate.conclusions),
        ));
    }
    Ok(CaseRun { case: case.clone(), graph, certificate, facts })
}

fn run_thompson(case: &CaseStudy, m: u32) -> Result<CaseRun> {
    let gens = case.generators()?;
    let graph = CommGraph::build(&gens);
    let certificate = check_thompson_variant(m)?;
    let mut facts = Vec::new();

    let isolated = graph.degree("x0") == Some(0) && graph.degree("x1") == Some(0);
    facts.push(Fact::asserted(
        "x0-x1-isolated",
        isolated,
        format!("deg x0 = {:?}, deg x1 = {:?}", graph.degree("x0"), graph.degree("x1")),
    ));
    let reduced = graph.remove_vertices(&["x0", "x1"])?;
    facts.push(Fact::asserted(
        "reduced-graph-connected",
        reduced.is_connected(),
        format!("{} component(s)", reduced.components().parts.len()),
    ));

    let rank2 = certificate.rank2.as_ref();
    let slope = rank2.is_some_and(|r| {
        r.edge == [THOMPSON_TAIL_LABEL.to_string(), "x2".to_string()]
            && r.witness.strategy_name() == "homomorphic-image"
    });
    facts.push(Fact::asserted("rank2-tail-x2-via-slopes", slope, format!("{:?}", rank2.map(|r| &r.witness))));

    let broken = conjugation_failures(&gens, m)?;
    facts.push(Fact::asserted(
        "relations-x_(j+1)=x_i x_j x_i^-1",
        broken.is_empty(),
        if broken.is_empty() { format!("all 0 <= i < j < {m}") } else { format!("fails at {}", broken.join(", ")) },
    ));

    let full = check_main_theorem(&gens);
    facts.push(Fact::asserted(
        "main-theorem-on-full-set-is-partial",
        !full.has_conclusions() && full.hypothesis(Hypothesis::Connected).is_some_and(|h| !h.holds),
        format!("{:?}", full.hypothesis(Hypothesis::Connected).map(|h| &h.detail)),
    ));

    facts.push(conclusions_fact(&certificate));
    let caveat = certificate.caveats.iter().any(|c| c.code == "TRUNCATION" && c.truncation == Some(m));
    facts.push(Fact::asserted("truncation-caveat", caveat, format!("truncation {m}")));
    facts.push(verifies_fact(&certificate));
    Ok(CaseRun { case: case.clone(), graph, certificate, facts })
}

/// Pairs `(i, j)`, `0 <= i < j < m`, where `x_(j+1) != x_i x_j x_i^-1`.
pub fn conjugation_failures(gens: &GeneratorSet, m: u32) -> Result<Vec<String>> {
    let x = |k: u32| gens.get(&format!("x{k}")).cloned().ok_or_else(|| Error::UnknownLabel(format!("x{k}")));
    let mut out = Vec::new();
    for j in 1..m {
        for i in 0..j {
            let xi = x(i)?;
            if xi.try_mul(&x(j)?)?.try_mul(&xi.inverse())? != x(j + 1)? {
                out.push(format!("(i, j) = ({i}, {j})"));
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PathMethod {
    Same,
    Direct,
    Explicit,
    BfsFallback,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NielsenPath {
    pub vertices: Vec<String>,
    pub method: PathMethod,
    /// Set when the path came from a graph search rather than a construction.
    pub fallback: bool,
}

/// Paths between Nielsen maps in the commutativity graph of Aut⁺(F_n).
///
/// Holds the graph for the BFS fallback, built on first use.
pub struct NielsenPaths {
    n: usize,
    graph: std::sync::OnceLock<CommGraph>,
}

impl NielsenPaths {
    pub fn new(n: usize) -> Result<Self> {
        if n < CONNECTED_RANK {
            return Err(Error::InvalidParameter(format!("path construction needs rank >= 5, got {n}")));
        }
        Ok(NielsenPaths { n, graph: std::sync::OnceLock::new() })
    }

    fn graph(&self) -> Result<&CommGraph> {
        if let Some(g) = self.graph.get() {
            return Ok(g);
        }
        let built = CommGraph::build(&nielsen_set(self.n, DEFAULT_POWER_BOUND)?);
        Ok(self.graph.get_or_init(|| built))
    }

    /// A validated path from `e1` to `e2`.
    ///
    /// Adjacent labels give the direct edge. For a shared first letter
    /// `a = c` with `d != b, b^-1` the path is `E_ab, E_ed, E_bf, E_ad`
    /// with `e`, `f` the two least positive letters outside
    /// `{a, b, d}^±`. Every other case falls back to BFS and is flagged.
    pub fn path(&self, e1: NielsenLabel, e2: NielsenLabel) -> Result<NielsenPath> {
        for l in [e1, e2] {
            NielsenLabel::new(l.a, l.b, self.n)?;
        }
        let (vertices, method) = if e1 == e2 {
            (vec![e1], PathMethod::Same)
        } else if e1.index_condition(&e2) {
            (vec![e1, e2], PathMethod::Direct)
        } else if e1.a == e2.a && e2.b.index() != e1.b.index() {
            let (a, b, d) = (e1.a, e1.b, e2.b);
            let used = [a.index(), b.index(), d.index()];
            let mut free = (1..=self.n).filter(|i| !used.contains(i)).map(SignedLetter::positive);
            let e = free.next().expect("rank >= 5 leaves two letters");
            let f = free.next().expect("rank >= 5 leaves two letters");
            let path = vec![
                e1,
                NielsenLabel::new(e, d, self.n)?,
                NielsenLabel::new(b, f, self.n)?,
                NielsenLabel::new(a, d, self.n)?,
            ];
            (path, PathMethod::Explicit)
        } else {
            (self.bfs(e1, e2)?, PathMethod::BfsFallback)
        };
        self.validate(&vertices)?;
        Ok(NielsenPath {
            vertices: vertices.iter().map(|l| l.to_string()).collect(),
            method,
            fallback: method == PathMethod::BfsFallback,
        })
    }

    fn bfs(&self, from: NielsenLabel, to: NielsenLabel) -> Result<Vec<NielsenLabel>> {
        let graph = self.graph()?;
        let (start, goal) = (from.to_string(), to.to_string());
        let mut prev: HashMap<String, String> = HashMap::new();
        let mut queue = VecDeque::from([start.clone()]);
        let mut seen = HashSet::from([start.clone()]);
        while let Some(v) = queue.pop_front() {
            if v == goal {
                let mut path = vec![v.clone()];
                let mut cur = v;
                while let Some(p) = prev.get(&cur) {
                    path.push(p.clone());
                    cur = p.clone();
                }
                path.reverse();
                return path.iter().map(|s| s.parse()).collect();
            }
            for w in graph.neighbors(&v).unwrap_or_default() {
                if seen.insert(w.to_string()) {
                    prev.insert(w.to_string(), v.clone());
                    queue.push_back(w.to_string());
                }
            }
        }
        Err(Error::InvalidParameter(format!("no path from {from} to {to}")))
    }

    /// Each consecutive pair must satisfy the index condition or commute.
    fn validate(&self, path: &[NielsenLabel]) -> Result<()> {
        for w in path.windows(2) {
            if w[0].index_condition(&w[1]) {
                continue;
            }
            let f = w[0].automorphism(self.n)?;
            let g = w[1].automorphism(self.n)?;
            if f.try_mul(&g)? != g.try_mul(&f)? {
                return Err(Error::NonCommuting(format!("path step {} -- {}", w[0], w[1])));
            }
        }
        Ok(())
    }
}

/// One-shot form of [`NielsenPaths::path`].
pub fn prop5_path(e1: NielsenLabel, e2: NielsenLabel, n: usize) -> Result<NielsenPath> {
    NielsenPaths::new(n)?.path(e1, e2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(s: &str) -> NielsenLabel {
        s.parse().unwrap()
    }

    #[test]
    fn names_parse() {
        for name in ["heisenberg", "autfree5", "sl3", "thompson10", "mcg", "torelli"] {
            assert_eq!(name.parse::<CaseStudy>().unwrap().name, name);
        }
        assert!("autfree1".parse::<CaseStudy>().is_err());
        assert!("thompson3".parse::<CaseStudy>().is_err());
        assert!("nope".parse::<CaseStudy>().is_err());
        assert!("slx".parse::<CaseStudy>().is_err());
    }

    #[test]
    fn heisenberg_case() {
        let run = CaseStudy::heisenberg().run().unwrap();
        assert!(run.ok(), "{:?}", run.failures());
    }

    #[test]
    fn sl_projection_small() {
        let gens = elementary_set(3, 1).unwrap();
        assert_eq!(gens.len(), 12);
        let run = CaseStudy::sl(4).unwrap().run().unwrap();
        assert!(run.ok(), "{:?}", run.failures());
    }

    #[test]
    fn small_autfree_reports_only() {
        let run = CaseStudy::autfree(3).unwrap().run().unwrap();
        assert!(run.ok());
        assert!(run.facts.iter().any(|f| f.name == "connected" && !f.asserted));
    }

    #[test]
    fn stubs_do_not_run() {
        assert!(CaseStudy::stub(StubTopic::Mcg).run().is_err());
        assert!(CaseStudy::stub(StubTopic::Torelli).generators().is_err());
    }

    #[test]
    fn explicit_path_example() {
        let p = prop5_path(label("E(x1,x2)"), label("E(x1,x3)"), 5).unwrap();
        assert_eq!(p.method, PathMethod::Explicit);
        assert_eq!(p.vertices, ["E(x1,x2)", "E(x4,x3)", "E(x2,x5)", "E(x1,x3)"]);
    }

    #[test]
    fn direct_and_fallback() {
        let paths = NielsenPaths::new(5).unwrap();
        let p = paths.path(label("E(x1,x2)"), label("E(x3,x4)")).unwrap();
        assert_eq!(p.method, PathMethod::Direct);
        let p = paths.path(label("E(x1,x2)"), label("E(x1,x2^-1)")).unwrap();
        assert_eq!(p.method, PathMethod::BfsFallback);
        assert!(p.fallback);
        assert_eq!(p.vertices.first().unwrap(), "E(x1,x2)");
        assert_eq!(p.vertices.last().unwrap(), "E(x1,x2^-1)");
        assert!(prop5_path(label("E(x1,x2)"), label("E(x1,x3)"), 4).is_err());
    }
}
