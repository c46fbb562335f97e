//! The commutativity graph K(G, S): one vertex per generator, and an edge
//! between `s` and `t` when some nonzero powers `s^n_s`, `t^n_t` commute.
//!
//! Witnesses are searched only up to a power bound, so a missing edge means
//! "no witness up to the bound", never a proof that no edge exists.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{commutes, power, EngineId, GroupElement};
use crate::error::{Error, Result};

pub const DEFAULT_POWER_BOUND: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub label: String,
    pub element: GroupElement,
}

/// A finite labeled generator list plus the power bound used for edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    engine: EngineId,
    items: Vec<Generator>,
    power_bound: u32,
}

impl GeneratorSet {
    pub fn new(items: Vec<(String, GroupElement)>, power_bound: u32) -> Result<Self> {
        let Some((_, first)) = items.first() else {
            return Err(Error::InvalidParameter("generator set is empty".into()));
        };
        if power_bound == 0 {
            return Err(Error::InvalidParameter("power bound must be >= 1".into()));
        }
        let engine = first.engine();
        let mut labels = HashSet::new();
        let mut keys = HashMap::new();
        for (label, element) in &items {
            if element.engine() != engine {
                return Err(Error::MixedEngines { left: engine, right: element.engine() });
            }
            if !labels.insert(label.as_str()) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
            if let Some(prev) = keys.insert(element.key(), label.as_str()) {
                return Err(Error::DuplicateElement(prev.to_string(), label.clone()));
            }
        }
        Ok(GeneratorSet {
            engine,
            items: items.into_iter().map(|(label, element)| Generator { label, element }).collect(),
            power_bound,
        })
    }

    pub fn with_power_bound(mut self, power_bound: u32) -> Result<Self> {
        if power_bound == 0 {
            return Err(Error::InvalidParameter("power bound must be >= 1".into()));
        }
        self.power_bound = power_bound;
        Ok(self)
    }

    pub fn engine(&self) -> EngineId {
        self.engine
    }

    pub fn items(&self) -> &[Generator] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn power_bound(&self) -> u32 {
        self.power_bound
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.items.iter().map(|g| g.label.as_str())
    }

    pub fn get(&self, label: &str) -> Option<&GroupElement> {
        self.items.iter().find(|g| g.label == label).map(|g| &g.element)
    }
}

/// Nonzero exponents with `s^n_s` and `t^n_t` commuting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeWitness {
    pub n_s: i64,
    pub n_t: i64,
}

impl EdgeWitness {
    pub fn verify(&self, s: &GroupElement, t: &GroupElement) -> Result<bool> {
        if self.n_s == 0 || self.n_t == 0 {
            return Ok(false);
        }
        commutes(&power(s, self.n_s), &power(t, self.n_t))
    }
}

/// The least witness in `(|n_s|, |n_t|)` order with both exponents at most
/// `power_bound`.
///
/// `x` commutes with `y` iff `x^-1` does, so positive exponents are always
/// the least choice of signs.
pub fn edge_witness(s: &GroupElement, t: &GroupElement, power_bound: u32) -> Result<Option<EdgeWitness>> {
    let bound = i64::from(power_bound);
    let t_powers: Vec<GroupElement> = (1..=bound).map(|k| power(t, k)).collect();
    let mut s_power = s.clone();
    for n_s in 1..=bound {
        if n_s > 1 {
            s_power = power(s, n_s);
        }
        for (k, tp) in t_powers.iter().enumerate() {
            if commutes(&s_power, tp)? {
                return Ok(Some(EdgeWitness { n_s, n_t: k as i64 + 1 }));
            }
        }
    }
    Ok(None)
}

/// One edge of a commutativity graph, as it appears in JSON exports.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphEdge {
    pub s: String,
    pub t: String,
    pub n_s: i64,
    pub n_t: i64,
}

impl GraphEdge {
    pub fn witness(&self) -> EdgeWitness {
        EdgeWitness { n_s: self.n_s, n_t: self.n_t }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommGraph {
    labels: Vec<String>,
    edges: BTreeMap<(usize, usize), EdgeWitness>,
    power_bound: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<String>,
    pub forest: Vec<GraphEdge>,
}

/// Connected components with a spanning tree of each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    pub parts: Vec<Component>,
}

impl Components {
    pub fn is_connected(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn forest(&self) -> Vec<GraphEdge> {
        self.parts.iter().flat_map(|p| p.forest.iter().cloned()).collect()
    }

    pub fn vertex_sets(&self) -> Vec<Vec<String>> {
        self.parts.iter().map(|p| p.vertices.clone()).collect()
    }
}

/// JSON form of a graph: vertex list, witnessed edges, spanning forest and
/// components.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub power_bound: u32,
    pub vertices: Vec<String>,
    pub edges: Vec<GraphEdge>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub removed: Vec<String>,
    pub forest: Vec<GraphEdge>,
    pub components: Vec<Vec<String>>,
}

impl CommGraph {
    /// Tests every unordered pair of generators; pairs run in parallel and
    /// the result does not depend on scheduling.
    pub fn build(gens: &GeneratorSet) -> CommGraph {
        let n = gens.len();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let bound = gens.power_bound();
        let found: Vec<Option<EdgeWitness>> = pairs
            .par_iter()
            .map(|&(i, j)| {
                edge_witness(&gens.items[i].element, &gens.items[j].element, bound)
                    .expect("generator set has a single engine")
            })
            .collect();
        let edges = pairs.into_iter().zip(found).filter_map(|(p, w)| w.map(|w| (p, w))).collect();
        CommGraph { labels: gens.labels().map(str::to_string).collect(), edges, power_bound: bound }
    }

    /// Reassembles a graph from exported edges.
    pub fn from_edges(labels: Vec<String>, edges: &[GraphEdge], power_bound: u32) -> Result<CommGraph> {
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        if index.len() != labels.len() {
            return Err(Error::InvalidParameter("duplicate vertex label".into()));
        }
        let mut map = BTreeMap::new();
        for e in edges {
            let i = *index.get(e.s.as_str()).ok_or_else(|| Error::UnknownLabel(e.s.clone()))?;
            let j = *index.get(e.t.as_str()).ok_or_else(|| Error::UnknownLabel(e.t.clone()))?;
            if i == j {
                return Err(Error::InvalidParameter(format!("loop at {}", e.s)));
            }
            let (key, w) = if i < j { ((i, j), e.witness()) } else { ((j, i), EdgeWitness { n_s: e.n_t, n_t: e.n_s }) };
            if map.insert(key, w).is_some() {
                return Err(Error::InvalidParameter(format!("repeated edge {}--{}", e.s, e.t)));
            }
        }
        Ok(CommGraph { labels, edges: map, power_bound })
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn power_bound(&self) -> u32 {
        self.power_bound
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    fn graph_edge(&self, (i, j): (usize, usize), w: &EdgeWitness) -> GraphEdge {
        GraphEdge { s: self.labels[i].clone(), t: self.labels[j].clone(), n_s: w.n_s, n_t: w.n_t }
    }

    /// Edges in generator order, `s` before `t`.
    pub fn edges(&self) -> Vec<GraphEdge> {
        self.edges.iter().map(|(&p, w)| self.graph_edge(p, w)).collect()
    }

    /// Witness oriented as `(a, b)`.
    pub fn witness(&self, a: &str, b: &str) -> Option<EdgeWitness> {
        let (i, j) = (self.index_of(a)?, self.index_of(b)?);
        if i < j {
            self.edges.get(&(i, j)).copied()
        } else {
            self.edges.get(&(j, i)).map(|w| EdgeWitness { n_s: w.n_t, n_t: w.n_s })
        }
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.witness(a, b).is_some()
    }

    pub fn degree(&self, label: &str) -> Option<usize> {
        let i = self.index_of(label)?;
        Some(self.edges.keys().filter(|&&(a, b)| a == i || b == i).count())
    }

    pub fn neighbors(&self, label: &str) -> Option<Vec<&str>> {
        let i = self.index_of(label)?;
        let mut out: Vec<usize> = self
            .edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        Some(out.into_iter().map(|k| self.labels[k].as_str()).collect())
    }

    /// Union-find over edges in generator order; a component's forest edges
    /// are the edges that merged two classes.
    pub fn components(&self) -> Components {
        let n = self.labels.len();
        let mut dsu = DisjointSets::new(n);
        let mut tree_edges = Vec::new();
        for (&(i, j), w) in &self.edges {
            if dsu.union(i, j) {
                tree_edges.push(((i, j), *w));
            }
        }
        let mut by_root: BTreeMap<usize, usize> = BTreeMap::new();
        let mut parts: Vec<Component> = Vec::new();
        for v in 0..n {
            let root = dsu.find(v);
            let idx = *by_root.entry(root).or_insert_with(|| {
                parts.push(Component { vertices: Vec::new(), forest: Vec::new() });
                parts.len() - 1
            });
            parts[idx].vertices.push(self.labels[v].clone());
        }
        for (p, w) in tree_edges {
            let idx = by_root[&dsu.find(p.0)];
            parts[idx].forest.push(self.graph_edge(p, &w));
        }
        Components { parts }
    }

    pub fn is_connected(&self) -> bool {
        self.components().is_connected()
    }

    /// Induced subgraph on the vertices not listed.
    pub fn remove_vertices(&self, labels: &[&str]) -> Result<CommGraph> {
        let mut drop = HashSet::new();
        for l in labels {
            drop.insert(self.index_of(l).ok_or_else(|| Error::UnknownLabel(l.to_string()))?);
        }
        let keep: Vec<usize> = (0..self.labels.len()).filter(|i| !drop.contains(i)).collect();
        let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let edges =
            self.edges.iter().filter_map(|(&(i, j), w)| Some(((*remap.get(&i)?, *remap.get(&j)?), *w))).collect();
        Ok(CommGraph {
            labels: keep.iter().map(|&i| self.labels[i].clone()).collect(),
            edges,
            power_bound: self.power_bound,
        })
    }

    pub fn summary(&self) -> GraphSummary {
        let comps = self.components();
        GraphSummary {
            power_bound: self.power_bound,
            vertices: self.labels.clone(),
            edges: self.edges(),
            removed: Vec::new(),
            forest: comps.forest(),
            components: comps.vertex_sets(),
        }
    }

    /// Graphviz export with vertices and edges in lexicographic label order;
    /// each edge is annotated `"n_s,n_t"` oriented along the printed edge.
    pub fn to_dot(&self) -> String {
        let mut vertices: Vec<&str> = self.labels.iter().map(String::as_str).collect();
        vertices.sort_unstable();
        let mut edges: Vec<(&str, &str, EdgeWitness)> = self
            .edges
            .iter()
            .map(|(&(i, j), w)| {
                let (a, b) = (self.labels[i].as_str(), self.labels[j].as_str());
                if a <= b {
                    (a, b, *w)
                } else {
                    (b, a, EdgeWitness { n_s: w.n_t, n_t: w.n_s })
                }
            })
            .collect();
        edges.sort_unstable_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        let mut out = String::from("graph K {\n");
        for v in vertices {
            let _ = writeln!(out, "  {};", dot_id(v));
        }
        for (a, b, w) in edges {
            let _ = writeln!(out, "  {} -- {} [label=\"{},{}\"];", dot_id(a), dot_id(b), w.n_s, w.n_t);
        }
        out.push_str("}\n");
        out
    }
}

fn dot_id(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Union-find with path halving and union by size.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), size: vec![1; n] }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns whether the two classes were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::GroupElement;
    use crate::matrix::heisenberg_generators;

    fn heisenberg(bound: u32) -> GeneratorSet {
        let (a, b, c) = heisenberg_generators();
        GeneratorSet::new(vec![("a".into(), a.into()), ("b".into(), b.into()), ("c".into(), c.into())], bound).unwrap()
    }

    #[test]
    fn heisenberg_witnesses() {
        let (a, b, c) = heisenberg_generators();
        let (a, b, c): (GroupElement, GroupElement, GroupElement) = (a.into(), b.into(), c.into());
        assert_eq!(edge_witness(&a, &c, 1).unwrap(), Some(EdgeWitness { n_s: 1, n_t: 1 }));
        assert_eq!(edge_witness(&a, &b, 5).unwrap(), None);
    }

    #[test]
    fn heisenberg_graph() {
        let g = CommGraph::build(&heisenberg(1));
        let edges: Vec<(String, String)> = g.edges().into_iter().map(|e| (e.s, e.t)).collect();
        assert_eq!(edges, vec![("a".into(), "c".into()), ("b".into(), "c".into())]);
        let comps = g.components();
        assert!(comps.is_connected());
        assert_eq!(comps.forest().len(), 2);
        assert_eq!(g.degree("c"), Some(2));
        assert_eq!(g.neighbors("c").unwrap(), vec!["a", "b"]);
    }

    #[test]
    fn remove_non_cut_vertex() {
        let g = CommGraph::build(&heisenberg(1));
        let h = g.remove_vertices(&["a"]).unwrap();
        assert_eq!(h.labels(), &["b".to_string(), "c".to_string()]);
        assert!(h.is_connected());
        let empty = g.remove_vertices(&["a", "b", "c"]).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert_eq!(empty.components().parts.len(), 0);
        assert!(matches!(g.remove_vertices(&["z"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn edgeless_graph_components() {
        let g = CommGraph::from_edges(vec!["p".into(), "q".into(), "r".into()], &[], 1).unwrap();
        let comps = g.components();
        assert_eq!(comps.parts.len(), 3);
        assert!(comps.forest().is_empty());
    }

    #[test]
    fn generator_set_validation() {
        let (a, _, _) = heisenberg_generators();
        let dup = GeneratorSet::new(vec![("a".into(), a.clone().into()), ("a2".into(), a.clone().into())], 1);
        assert!(matches!(dup, Err(Error::DuplicateElement(..))));
        let lab = GeneratorSet::new(
            vec![("a".into(), a.clone().into()), ("a".into(), crate::matrix::IntMatrix::identity(3).into())],
            1,
        );
        assert!(matches!(lab, Err(Error::DuplicateLabel(_))));
        let mixed = GeneratorSet::new(
            vec![("a".into(), a.into()), ("x0".into(), crate::thompson::generator_x(0).unwrap().into())],
            1,
        );
        assert!(matches!(mixed, Err(Error::MixedEngines { .. })));
        assert!(GeneratorSet::new(vec![], 1).is_err());
    }

    #[test]
    fn dot_export() {
        let dot = CommGraph::build(&heisenberg(1)).to_dot();
        assert_eq!(
            dot,
            "graph K {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"c\" [label=\"1,1\"];\n  \"b\" -- \"c\" [label=\"1,1\"];\n}\n"
        );
    }

    #[test]
    fn from_edges_roundtrip() {
        let g = CommGraph::build(&heisenberg(1));
        let h = CommGraph::from_edges(g.labels().to_vec(), &g.edges(), 1).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn dsu_basics() {
        let mut d = DisjointSets::new(4);
        assert!(d.union(0, 1));
        assert!(d.union(2, 3));
        assert!(!d.union(1, 0));
        assert!(d.union(1, 3));
        assert_eq!(d.find(0), d.find(2));
    }
}
