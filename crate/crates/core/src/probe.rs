//! Cayley-ball exploration.
//!
//! Counting components of an annulus inside a finite ball is evidence, not
//! proof: one end is a statement about the infinite complement of every
//! ball. Probe output never feeds a certificate.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::commgraph::{DisjointSets, GeneratorSet};
use crate::engine::{ElementKey, Group, GroupElement};
use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 1_000_000;
/// Environment variable the CLI reads the element cap from.
pub const CAP_ENV: &str = "COMMGRAPH_PROBE_CAP";

pub const PROBE_CAVEAT: &str = "annulus connectivity inside a finite ball neither proves nor refutes one-endedness; \
     the definition concerns the complement of each ball in the whole Cayley graph";

#[derive(Debug, Clone)]
pub struct BallNode {
    pub element: GroupElement,
    pub distance: u32,
    /// Parent key and the generator index that reaches this node from it.
    pub predecessor: Option<(ElementKey, usize)>,
}

/// Elements within distance `radius` of the identity, keyed canonically.
#[derive(Debug, Clone)]
pub struct BallMap {
    pub radius: u32,
    /// Symmetrized generator list with labels; `s^-1` for inverses.
    pub generators: Vec<(String, GroupElement)>,
    pub elements: HashMap<ElementKey, BallNode>,
}

impl BallMap {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `|B_0|, ..., |B_radius|`.
    pub fn growth(&self) -> Vec<usize> {
        let mut per = vec![0usize; self.radius as usize + 1];
        for node in self.elements.values() {
            per[node.distance as usize] += 1;
        }
        per.iter()
            .scan(0, |acc, &k| {
                *acc += k;
                Some(*acc)
            })
            .collect()
    }

    /// Generator indices spelling the recorded geodesic to `key`.
    pub fn word_to(&self, key: &ElementKey) -> Option<Vec<usize>> {
        let mut word = Vec::new();
        let mut cur = self.elements.get(key)?;
        while let Some((prev, g)) = &cur.predecessor {
            word.push(*g);
            cur = self.elements.get(prev)?;
        }
        word.reverse();
        Some(word)
    }

    /// Multiplies out a generator word, starting from the identity.
    pub fn replay(&self, word: &[usize]) -> Result<GroupElement> {
        let first = &self.generators.first().ok_or_else(|| Error::InvalidParameter("no generators".into()))?.1;
        let mut g = first.identity_like();
        for &i in word {
            let s = &self.generators.get(i).ok_or_else(|| Error::InvalidParameter(format!("generator {i}")))?.1;
            g = g.try_mul(s)?;
        }
        Ok(g)
    }
}

fn symmetrize(gens: &GeneratorSet) -> Vec<(String, GroupElement)> {
    let mut out: Vec<(String, GroupElement)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for g in gens.items() {
        for (label, e) in [(g.label.clone(), g.element.clone()), (format!("{}^-1", g.label), g.element.inverse())] {
            if !e.is_identity() && seen.insert(e.key()) {
                out.push((label, e));
            }
        }
    }
    out
}

/// Breadth-first enumeration of `B_r(e)` with right multiplication by the
/// symmetrized generators. Each layer is expanded in parallel and merged in
/// key order, so the result does not depend on scheduling.
pub fn ball(gens: &GeneratorSet, radius: u32, cap: usize) -> Result<BallMap> {
    let generators = symmetrize(gens);
    let identity = gens.items()[0].element.identity_like();
    let mut elements = HashMap::new();
    let id_key = identity.key();
    elements.insert(id_key.clone(), BallNode { element: identity, distance: 0, predecessor: None });
    if elements.len() > cap {
        return Err(Error::CapExceeded(cap));
    }
    let mut frontier = vec![id_key];
    for d in 1..=radius {
        frontier.sort_unstable();
        let products: Vec<Vec<(ElementKey, GroupElement, ElementKey, usize)>> = frontier
            .par_iter()
            .map(|k| {
                let g = &elements[k].element;
                generators
                    .iter()
                    .enumerate()
                    .map(|(i, (_, s))| {
                        let h = g.try_mul(s)?;
                        Ok((h.key(), h, k.clone(), i))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let mut next = BTreeMap::new();
        for (key, h, parent, i) in products.into_iter().flatten() {
            if !elements.contains_key(&key) {
                next.entry(key).or_insert((h, parent, i));
            }
        }
        frontier = Vec::with_capacity(next.len());
        for (key, (h, parent, i)) in next {
            elements.insert(key.clone(), BallNode { element: h, distance: d, predecessor: Some((parent, i)) });
            frontier.push(key);
            if elements.len() > cap {
                return Err(Error::CapExceeded(cap));
            }
        }
    }
    Ok(BallMap { radius, generators, elements })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeReport {
    pub inner: u32,
    pub outer: u32,
    pub annulus_size: usize,
    pub components: usize,
    /// Largest first.
    pub component_sizes: Vec<usize>,
    pub growth: Vec<usize>,
    pub caveat: String,
}

/// Components of the subgraph of `B_outer` induced on distances in
/// `(inner, outer]`.
pub fn ends_probe(gens: &GeneratorSet, inner: u32, outer: u32, cap: usize) -> Result<ProbeReport> {
    if inner > outer {
        return Err(Error::InvalidParameter(format!("inner radius {inner} exceeds outer radius {outer}")));
    }
    let b = ball(gens, outer, cap)?;
    let mut annulus: Vec<&ElementKey> = b.elements.iter().filter(|(_, n)| n.distance > inner).map(|(k, _)| k).collect();
    annulus.sort_unstable();
    let index: HashMap<&ElementKey, usize> = annulus.iter().enumerate().map(|(i, k)| (*k, i)).collect();

    let neighbours: Vec<Vec<usize>> = annulus
        .par_iter()
        .map(|k| {
            let g = &b.elements[*k].element;
            b.generators
                .iter()
                .filter_map(|(_, s)| {
                    let h = g.try_mul(s).expect("single engine");
                    index.get(&h.key()).copied()
                })
                .collect()
        })
        .collect();
    let mut dsu = DisjointSets::new(annulus.len());
    for (i, ns) in neighbours.iter().enumerate() {
        for &j in ns {
            dsu.union(i, j);
        }
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..annulus.len() {
        *sizes.entry(dsu.find(i)).or_default() += 1;
    }
    let mut component_sizes: Vec<usize> = sizes.into_values().collect();
    component_sizes.sort_unstable_by(|a, b| b.cmp(a));

    Ok(ProbeReport {
        inner,
        outer,
        annulus_size: annulus.len(),
        components: component_sizes.len(),
        component_sizes,
        growth: b.growth(),
        caveat: PROBE_CAVEAT.into(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::heisenberg_set;

    #[test]
    fn heisenberg_unit_ball() {
        let b = ball(&heisenberg_set(1).unwrap(), 1, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(b.len(), 7);
        assert_eq!(b.generators.len(), 6);
        assert_eq!(b.growth(), vec![1, 7]);
    }

    #[test]
    fn predecessor_chains_replay() {
        let b = ball(&heisenberg_set(1).unwrap(), 3, DEFAULT_ELEMENT_CAP).unwrap();
        for (k, node) in &b.elements {
            let w = b.word_to(k).unwrap();
            assert_eq!(w.len() as u32, node.distance);
            assert_eq!(&b.replay(&w).unwrap().key(), k);
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(ball(&heisenberg_set(1).unwrap(), 3, 10), Err(Error::CapExceeded(10))));
    }

    #[test]
    fn empty_annulus() {
        let r = ends_probe(&heisenberg_set(1).unwrap(), 2, 2, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!((r.annulus_size, r.components), (0, 0));
        assert!(ends_probe(&heisenberg_set(1).unwrap(), 3, 2, DEFAULT_ELEMENT_CAP).is_err());
    }

    #[test]
    fn sphere_of_radius_one() {
        // g^-1 g' is never a generator for distinct g, g' in {a, b, c}^±1,
        // so the six generators are pairwise non-adjacent
        let r = ends_probe(&heisenberg_set(1).unwrap(), 0, 1, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(r.annulus_size, 6);
        assert_eq!(r.components, 6);
    }

    #[test]
    fn heisenberg_annulus_is_connected() {
        let r = ends_probe(&heisenberg_set(1).unwrap(), 2, 6, DEFAULT_ELEMENT_CAP).unwrap();
        assert_eq!(r.components, 1);
        assert!(r.growth.windows(2).all(|w| w[0] <= w[1]));
    }
}
