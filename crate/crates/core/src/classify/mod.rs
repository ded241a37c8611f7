//! From rings to genus classes, plus the verification campaigns over the catalog.

mod catalog;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use crate::finring::{realize_text, FiniteRing, RingElement, RingError, RingInvariants};
use crate::genus::{genus_capped, GenusResult, LowerWitness, Method};
use crate::presparse::Polynomial;
use crate::zdg::{is_isomorphic, reduce, zero_divisor_graph, Graph, NamedGraph, WitnessKind, TABLE_LABELS};

pub use catalog::{builtin_catalog, exclusions, family_entries, CatalogEntry, Exclusion, FAMILY_FIELD_SIZES};

/// Graphs above this size are not compared against named labels.
const LABEL_LIMIT: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GenusClass {
    Planar,
    Toroidal,
    GenusAtLeastTwo,
}

#[derive(Debug, Clone, Serialize)]
pub struct Classification {
    pub invariants: RingInvariants,
    pub vertex_count: usize,
    pub genus_class: GenusClass,
    pub evidence: GenusResult,
    pub graph_label_match: Option<String>,
}

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("budget exhausted with genus between {lower} and {upper:?}")]
    Inconclusive { lower: u32, upper: Option<u32> },
}

/// Whether `graph` carries the label `name`. G5 is compared after pruning leaves.
pub fn matches_label(graph: &Graph, name: NamedGraph) -> bool {
    let reference = name.graph();
    let result = if name == NamedGraph::G(5) {
        is_isomorphic(&reduce(graph), &reduce(&reference))
    } else {
        is_isomorphic(graph, &reference)
    };
    result.unwrap_or(false)
}

fn find_label(graph: &Graph) -> Option<String> {
    if graph.vertex_count() > LABEL_LIMIT {
        return None;
    }
    TABLE_LABELS
        .iter()
        .find(|name| matches_label(graph, name.parse().expect("table label")))
        .map(|s| s.to_string())
}

/// Decides planar, toroidal or genus at least two for `Γ(ring)`.
pub fn classify_ring(ring: &FiniteRing, budget: u64) -> Result<Classification, ClassifyError> {
    let graph = zero_divisor_graph(ring);
    let evidence = genus_capped(&graph, budget, Some(1));
    let genus_class = match (evidence.exact(), evidence.lower) {
        (Some(0), _) => GenusClass::Planar,
        (Some(1), _) => GenusClass::Toroidal,
        (_, l) if l >= 2 => GenusClass::GenusAtLeastTwo,
        _ => return Err(ClassifyError::Inconclusive { lower: evidence.lower, upper: evidence.upper }),
    };
    Ok(Classification {
        invariants: ring.invariants(),
        vertex_count: graph.vertex_count(),
        genus_class,
        graph_label_match: find_label(&graph),
        evidence,
    })
}

/// One line of a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct EntryReport {
    pub spec: String,
    pub table: Option<u8>,
    pub field_diffs: BTreeMap<String, Value>,
    pub genus_class: Option<GenusClass>,
    pub methods: Vec<Method>,
    pub elapsed_ms: u64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub summary: bool,
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub pass: bool,
}

pub fn summarize(reports: &[EntryReport]) -> Summary {
    let passed = reports.iter().filter(|r| r.pass).count();
    Summary {
        summary: true,
        entries: reports.len(),
        passed,
        failed: reports.len() - passed,
        pass: passed == reports.len(),
    }
}

fn diff<T: Serialize + PartialEq>(diffs: &mut BTreeMap<String, Value>, field: &str, expected: T, actual: T) {
    if expected != actual {
        diffs.insert(field.to_string(), json!({ "expected": expected, "actual": actual }));
    }
}

fn check_entry(entry: &CatalogEntry, budget: u64) -> EntryReport {
    let start = Instant::now();
    let mut diffs = BTreeMap::new();
    let mut genus_class = None;
    let mut methods = Vec::new();
    match realize_text(&entry.spec_text) {
        Err(e) => {
            diffs.insert("realize".into(), json!(e.to_string()));
        }
        Ok(ring) => {
            let inv = ring.invariants();
            let graph = zero_divisor_graph(&ring);
            diff(&mut diffs, "order", entry.expected_order, inv.order);
            diff(&mut diffs, "characteristic", entry.expected_char, inv.characteristic);
            let residue_or_spec = if entry.table <= 2 {
                inv.factors.first().map_or(0, |f| f.residue_field_size)
            } else {
                inv.spec_count
            };
            let field = if entry.table <= 2 { "residue_field_size" } else { "spec_count" };
            diff(&mut diffs, field, entry.expected_residue_or_spec, residue_or_spec);
            diff(&mut diffs, "vertex_count", entry.expected_vertex_count, graph.vertex_count());
            if let Some(label) = entry.expected_graph_label {
                if !matches_label(&graph, label) {
                    diffs.insert("graph_label".into(), json!({ "expected": label.to_string(), "actual": null }));
                }
            }
            let evidence = genus_capped(&graph, budget, Some(entry.expected_genus));
            methods = evidence.methods.clone();
            genus_class = match (evidence.exact(), evidence.lower) {
                (Some(0), _) => Some(GenusClass::Planar),
                (Some(1), _) => Some(GenusClass::Toroidal),
                (_, l) if l >= 2 => Some(GenusClass::GenusAtLeastTwo),
                _ => None,
            };
            if evidence.exact() != Some(entry.expected_genus) {
                diffs.insert(
                    "genus".into(),
                    json!({
                        "expected": entry.expected_genus,
                        "lower": evidence.lower,
                        "upper": evidence.upper,
                        "budget_exhausted": evidence.budget_exhausted,
                    }),
                );
            }
        }
    }
    EntryReport {
        spec: entry.spec_text.clone(),
        table: Some(entry.table),
        pass: diffs.is_empty(),
        field_diffs: diffs,
        genus_class,
        methods,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Checks every listed invariant of each entry, in catalog order.
pub fn verify_entries(entries: &[CatalogEntry], budget: u64) -> Vec<EntryReport> {
    entries.par_iter().map(|e| check_entry(e, budget)).collect()
}

pub fn verify_catalog(budget: u64) -> Vec<EntryReport> {
    verify_entries(&builtin_catalog(), budget)
}

fn has_named_witness(evidence: &GenusResult) -> bool {
    match &evidence.lower_witness {
        Some(LowerWitness::Subgraph(w)) => {
            let bound = match w.kind {
                WitnessKind::Clique(n) => crate::genus::genus_formula_complete(n),
                WitnessKind::Biclique(m, n) => crate::genus::genus_formula_bipartite(m, n),
            };
            bound >= 2
        }
        _ => false,
    }
}

fn check_exclusion(ex: &Exclusion, budget: u64) -> EntryReport {
    let start = Instant::now();
    let mut diffs = BTreeMap::new();
    let mut genus_class = None;
    let mut methods = Vec::new();
    match realize_text(&ex.spec_text) {
        Err(e) => {
            diffs.insert("realize".into(), json!(e.to_string()));
        }
        Ok(ring) => match classify_ring(&ring, budget) {
            Ok(c) => {
                genus_class = Some(c.genus_class);
                methods = c.evidence.methods.clone();
                let refuted = c.evidence.methods.contains(&Method::Refutation);
                if c.genus_class != GenusClass::GenusAtLeastTwo {
                    diff(&mut diffs, "genus_class", GenusClass::GenusAtLeastTwo, c.genus_class);
                } else if !has_named_witness(&c.evidence) && !refuted {
                    diffs.insert("evidence".into(), json!("neither a subgraph witness nor a refutation"));
                }
            }
            Err(e) => {
                diffs.insert("genus_class".into(), json!({ "expected": "GenusAtLeastTwo", "actual": e.to_string() }));
            }
        },
    }
    EntryReport {
        spec: ex.spec_text.clone(),
        table: None,
        pass: diffs.is_empty(),
        field_diffs: diffs,
        genus_class,
        methods,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Confirms genus at least two for each excluded ring.
pub fn verify_exclusions(budget: u64) -> Vec<EntryReport> {
    exclusions().par_iter().map(|ex| check_exclusion(ex, budget)).collect()
}

fn univariate(text: &str, modulus: u64) -> Polynomial {
    Polynomial::parse(text, &['x'], modulus).expect("built-in polynomial")
}

/// The element `Σ c_i x^i` of a ring presented over one variable `x`.
fn polynomial_element(ring: &FiniteRing, coeffs: &[u64]) -> RingElement {
    let x = {
        let k = ring.basis().iter().position(|b| b == "x").expect("ring has a basis element x");
        let mut v = vec![0; ring.basis().len()];
        v[k] = 1;
        RingElement(v)
    };
    let mut acc = ring.zero();
    for (i, &c) in coeffs.iter().enumerate() {
        acc = ring.add(&acc, &ring.scale(c, &ring.pow(&x, i as u64)));
    }
    acc
}

fn report(spec: &str, diffs: BTreeMap<String, Value>, start: Instant) -> EntryReport {
    EntryReport {
        spec: spec.to_string(),
        table: None,
        pass: diffs.is_empty(),
        field_diffs: diffs,
        genus_class: None,
        methods: Vec::new(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Root-generator certificates for the quadratic and cubic presentations over `Z4`.
pub fn verify_presentation_isomorphisms() -> Vec<EntryReport> {
    let mut out = Vec::new();
    let target = univariate("x^2+x+1", 4);
    for g in ["x^2+x+1", "x^2+x+3", "x^2+3*x+1", "x^2+3*x+3"] {
        let start = Instant::now();
        let spec = format!("Z4[x]/({g})");
        let mut diffs = BTreeMap::new();
        match realize_text(&spec).map_err(|e| e.to_string()).and_then(|r| {
            r.find_root_generator(2, &target).map_err(|e| e.to_string())
        }) {
            Ok(Some(_)) => {}
            Ok(None) => {
                diffs.insert("isomorphic_to".into(), json!({ "expected": "Z4[x]/(x^2+x+1)", "actual": null }));
            }
            Err(e) => {
                diffs.insert("error".into(), json!(e));
            }
        }
        out.push(report(&spec, diffs, start));
    }

    // x ↦ y + 2y^2 carries Z4[x]/(x^3+x+1) onto Z4[y]/(y^3-y+1).
    let start = Instant::now();
    let spec = "Z4[x]/(x^3-x+1)";
    let mut diffs = BTreeMap::new();
    match realize_text(spec) {
        Ok(ring) => {
            let u = polynomial_element(&ring, &[0, 1, 2]);
            let f = univariate("x^3+x+1", 4);
            if ring.evaluate_at(&f, &u) != ring.zero() {
                diffs.insert("root".into(), json!("x + 2x^2 is not a root of x^3+x+1"));
            }
            let powers: Vec<usize> = (0..3).map(|e| ring.index(&ring.pow(&u, e))).collect();
            if !ring.additive_span(&powers).iter().all(|&b| b) {
                diffs.insert("generates".into(), json!("powers of x + 2x^2 do not span the ring"));
            }
            match ring.find_root_generator(2, &f) {
                Ok(Some(_)) => {}
                other => {
                    diffs.insert("root_generator".into(), json!(format!("{other:?}")));
                }
            }
        }
        Err(e) => {
            diffs.insert("error".into(), json!(e.to_string()));
        }
    }
    out.push(report(spec, diffs, start));
    out
}

/// Checks that `(a, b) ↦ (a, ψ(b))` sends every edge of `Γ(R × GF(q))` to an edge
/// of `Γ(R × Z_q)`, where `ψ` matches elements by their index and fixes 0.
pub fn verify_field_embedding(ring_spec: &str, q: u64) -> Result<bool, RingError> {
    let field = realize_text(&format!("{ring_spec} * GF({q})"))?;
    let cyclic = realize_text(&format!("{ring_spec} * Z{q}"))?;
    if field.order() != cyclic.order() {
        return Ok(false);
    }
    let n = field.order();
    for a in 1..n {
        for b in a + 1..n {
            if field.mul_idx(a, b) == 0 && cyclic.mul_idx(a, b) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genus::DEFAULT_BUDGET;

    #[test]
    fn classifies_examples() {
        let c = classify_ring(&realize_text("Z4[x]/(x^3, 2*x)").unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(c.genus_class, GenusClass::Toroidal);
        assert_eq!(c.graph_label_match.as_deref(), Some("K1114"));
        let c = classify_ring(&realize_text("Z2 * Z2 * Z2").unwrap(), DEFAULT_BUDGET).unwrap();
        assert_eq!(c.genus_class, GenusClass::Planar);
    }

    #[test]
    fn field_embedding() {
        assert!(verify_field_embedding("Z2 * Z2", 4).unwrap());
        assert!(verify_field_embedding("Z2", 2).unwrap());
        assert!(verify_field_embedding("Z3", 4).unwrap());
    }

    #[test]
    fn presentations() {
        let reports = verify_presentation_isomorphisms();
        assert_eq!(reports.len(), 5);
        for r in reports {
            assert!(r.pass, "{r:?}");
        }
    }
}
