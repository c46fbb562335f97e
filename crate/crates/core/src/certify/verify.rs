//! Independent re-verification of serialized certificates.

use serde::Serialize;

use crate::commgraph::GeneratorSet;
use crate::engine::{commutes, power, GroupElement};

use super::{
    check_infinite_order, check_main_theorem, check_thompson_variant, rank2_witness, sanity_relations, Certificate,
    Conclusion, Hypothesis, ProofPattern, SCHEMA_VERSION,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub discrepancies: Vec<String>,
}

impl VerifyReport {
    fn from(discrepancies: Vec<String>) -> Self {
        VerifyReport { ok: discrepancies.is_empty(), discrepancies }
    }
}

/// Parses and verifies a certificate; parse failures are discrepancies.
pub fn verify_certificate_json(json: &str) -> VerifyReport {
    match Certificate::from_json(json) {
        Ok(c) => verify_certificate(&c),
        Err(e) => VerifyReport::from(vec![format!("malformed certificate: {e}")]),
    }
}

/// Rebuilds every element from its key, re-runs every witness check and the
/// conclusion logic, then recomputes the certificate and compares it field
/// by field (all fields except `tool_version`).
pub fn verify_certificate(c: &Certificate) -> VerifyReport {
    let mut out = Vec::new();
    if c.schema_version != SCHEMA_VERSION {
        out.push(format!("unsupported schema_version {:?}", c.schema_version));
        return VerifyReport::from(out);
    }

    let mut items = Vec::with_capacity(c.generators.len());
    for g in &c.generators {
        match GroupElement::from_key(&g.key) {
            Ok(e) if e.engine() == c.engine => items.push((g.label.clone(), e)),
            Ok(e) => out.push(format!("generator {}: key engine {} differs from {}", g.label, e.engine(), c.engine)),
            Err(e) => out.push(format!("generator {}: {e}", g.label)),
        }
    }
    if !out.is_empty() {
        return VerifyReport::from(out);
    }
    let gens = match GeneratorSet::new(items, c.power_bound) {
        Ok(g) => g,
        Err(e) => return VerifyReport::from(vec![format!("generator set: {e}")]),
    };

    check_edges(c, &gens, &mut out);
    check_infinite_order_entries(c, &gens, &mut out);
    check_rank2(c, &gens, &mut out);
    check_conclusion_logic(c, &mut out);

    let fresh = match (c.proof_pattern, c.truncation) {
        (ProofPattern::MainTheorem, None) => Some(check_main_theorem(&gens)),
        (ProofPattern::ThompsonVariant, Some(m)) => match check_thompson_variant(m) {
            Ok(f) => Some(f),
            Err(e) => {
                out.push(format!("thompson variant: {e}"));
                None
            }
        },
        (p, t) => {
            out.push(format!("proof_pattern {p:?} is inconsistent with truncation {t:?}"));
            None
        }
    };
    if let Some(fresh) = fresh {
        compare(c, &fresh, &mut out);
    }
    VerifyReport::from(out)
}

fn check_edges(c: &Certificate, gens: &GeneratorSet, out: &mut Vec<String>) {
    for e in &c.graph.edges {
        let name = format!("edge {}--{}", e.s, e.t);
        match (gens.get(&e.s), gens.get(&e.t)) {
            (Some(s), Some(t)) => match e.witness().verify(s, t) {
                Ok(true)
                    if e.n_s.unsigned_abs() <= u64::from(c.power_bound)
                        && e.n_t.unsigned_abs() <= u64::from(c.power_bound) => {}
                Ok(true) => out.push(format!("{name}: witness ({}, {}) exceeds power_bound", e.n_s, e.n_t)),
                Ok(false) if e.n_s == 0 || e.n_t == 0 => out.push(format!("{name}: zero exponent in witness")),
                Ok(false) => out.push(format!("{name}: s^{} and t^{} do not commute", e.n_s, e.n_t)),
                Err(err) => out.push(format!("{name}: {err}")),
            },
            _ => out.push(format!("{name}: unknown label")),
        }
    }
    for f in &c.graph.forest {
        if !c.graph.edges.contains(f) {
            out.push(format!("forest edge {}--{} is not a graph edge", f.s, f.t));
        }
    }
}

fn check_infinite_order_entries(c: &Certificate, gens: &GeneratorSet, out: &mut Vec<String>) {
    for entry in &c.infinite_order {
        match gens.get(&entry.label) {
            Some(g) => {
                if let Err(e) = check_infinite_order(g, &entry.witness) {
                    out.push(format!("infinite order of {}: {e}", entry.label));
                }
            }
            None => out.push(format!("infinite order: unknown label {}", entry.label)),
        }
    }
}

fn check_rank2(c: &Certificate, gens: &GeneratorSet, out: &mut Vec<String>) {
    let Some(r) = &c.rank2 else { return };
    let name = format!("rank-2 edge {}--{}", r.edge[0], r.edge[1]);
    let (Some(s), Some(t)) = (gens.get(&r.edge[0]), gens.get(&r.edge[1])) else {
        out.push(format!("{name}: unknown label"));
        return;
    };
    let powers = (r.powers[0], r.powers[1]);
    match commutes(&power(s, powers.0), &power(t, powers.1)) {
        Ok(true) => {}
        Ok(false) => out.push(format!("{name}: powers {powers:?} do not commute")),
        Err(e) => out.push(format!("{name}: {e}")),
    }
    match rank2_witness(s, t, powers) {
        Ok(w) if w == r.witness => {}
        Ok(_) => out.push(format!("{name}: witness payload does not match the elements")),
        Err(e) => out.push(format!("{name}: {e}")),
    }
    if r.justification != r.witness.justification() {
        out.push(format!("{name}: justification does not match strategy"));
    }
    match sanity_relations(s, t, powers) {
        Ok(n) if n == r.sanity.relations_found && n == 0 => {}
        Ok(n) => out.push(format!("{name}: relation search finds {n} relations")),
        Err(e) => out.push(format!("{name}: {e}")),
    }
}

fn check_conclusion_logic(c: &Certificate, out: &mut Vec<String>) {
    if c.conclusions.is_empty() {
        return;
    }
    for h in c.hypotheses.iter().filter(|h| !h.holds) {
        if !(h.id == Hypothesis::NotVirtuallyCyclic && c.conclusions == [Conclusion::NotStronglyRelativelyHyperbolic]) {
            out.push(format!("conclusions present although {} fails", h.id));
        }
    }
    if c.rank2.is_none() {
        out.push("conclusions present but no rank-2 edge".into());
    }
    if c.proof_pattern == ProofPattern::MainTheorem && c.graph.components.len() != 1 {
        out.push("conclusions present but the graph is disconnected".into());
    }
    if c.generators.len() != c.infinite_order.len() {
        out.push("conclusions present but some generator lacks an infinite-order witness".into());
    }
}

fn compare(c: &Certificate, fresh: &Certificate, out: &mut Vec<String>) {
    macro_rules! field {
        ($f:ident) => {
            if c.$f != fresh.$f {
                out.push(format!("field {} differs from recomputation", stringify!($f)));
            }
        };
    }
    field!(engine);
    field!(generators);
    field!(power_bound);
    field!(truncation);
    field!(graph);
    field!(infinite_order);
    field!(rank2);
    field!(hypotheses);
    field!(proof_pattern);
    field!(conclusions);
    field!(relied_upon);
    field!(caveats);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::heisenberg_generators;

    fn heisenberg_cert() -> Certificate {
        let (a, b, c) = heisenberg_generators();
        let gens =
            GeneratorSet::new(vec![("a".into(), a.into()), ("b".into(), b.into()), ("c".into(), c.into())], 1).unwrap();
        check_main_theorem(&gens)
    }

    #[test]
    fn round_trip_verifies() {
        let cert = heisenberg_cert();
        let report = verify_certificate_json(&cert.to_json());
        assert!(report.ok, "{:?}", report.discrepancies);
    }

    #[test]
    fn corrupted_edge_is_named() {
        let mut cert = heisenberg_cert();
        // a--c commutes for any power, so move the witness onto a--b
        let e = &mut cert.graph.edges[0];
        e.t = "b".into();
        let report = verify_certificate(&cert);
        assert!(!report.ok);
        assert!(report.discrepancies.iter().any(|d| d.contains("edge a--b")), "{:?}", report.discrepancies);
    }

    #[test]
    fn zero_power_is_rejected() {
        let mut cert = heisenberg_cert();
        cert.graph.edges[0].n_s = 0;
        assert!(!verify_certificate(&cert).ok);
    }

    #[test]
    fn conclusions_without_rank2_rejected() {
        let mut cert = heisenberg_cert();
        cert.rank2 = None;
        let report = verify_certificate(&cert);
        assert!(report.discrepancies.iter().any(|d| d.contains("no rank-2 edge")));
    }

    #[test]
    fn malformed_json_rejected() {
        assert!(!verify_certificate_json("{").ok);
    }
}
