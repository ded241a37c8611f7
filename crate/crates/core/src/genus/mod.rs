//! Graph genus: planarity, closed formulas, embedding search and certificates.

mod brute;
mod cert;
mod embedding;
mod planarity;
mod rotation;
mod search;

use serde::Serialize;
use thiserror::Error;

use crate::zdg::{clique_number, max_biclique, Graph, SubgraphWitness, WitnessKind};

pub use brute::{brute_force_genus, rotation_count, BRUTE_FORCE_LIMIT};
pub use cert::{CertError, Certificate, Verdict};
pub use planarity::is_planar;
pub use rotation::{faces_of, genus_of_embedding, Faces, RotationSystem};
pub use search::{search_embedding, SearchOutcome, SearchReport};

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const REFUTATION_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenusError {
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("too many rotation systems for exhaustive enumeration")]
    TooLarge,
}

/// Genus of `K_n`.
pub fn genus_formula_complete(n: usize) -> u32 {
    if n < 5 {
        return 0;
    }
    ((n - 3) * (n - 4)).div_ceil(12) as u32
}

/// Genus of `K_{m,n}`.
pub fn genus_formula_bipartite(m: usize, n: usize) -> u32 {
    if m < 2 || n < 2 {
        return 0;
    }
    ((m - 2) * (n - 2)).div_ceil(4) as u32
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LowerWitness {
    Nonplanar,
    Subgraph(SubgraphWitness),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Planarity,
    Nonplanarity,
    CliqueBound,
    BicliqueBound,
    EmbeddingSearch,
    Refutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusResult {
    pub lower: u32,
    pub upper: Option<u32>,
    pub certificate: Option<RotationSystem>,
    pub lower_witness: Option<LowerWitness>,
    pub methods: Vec<Method>,
    pub budget_exhausted: bool,
    pub expansions: u64,
}

impl GenusResult {
    pub fn exact(&self) -> Option<u32> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }
}

/// Best lower bound from nonplanarity and complete (bipartite) subgraphs.
pub fn genus_lower_bound(graph: &Graph) -> (u32, Option<LowerWitness>) {
    if is_planar(graph).is_some() {
        return (0, None);
    }
    let mut best = (1, Some(LowerWitness::Nonplanar));
    let (k, clique) = clique_number(graph);
    if genus_formula_complete(k) > best.0 {
        best = (genus_formula_complete(k), clique.map(LowerWitness::Subgraph));
    }
    for m in 1..=4 {
        if let Ok(Some(w)) = max_biclique(graph, m) {
            if let WitnessKind::Biclique(a, b) = w.kind {
                let g = genus_formula_bipartite(a, b);
                if g > best.0 {
                    best = (g, Some(LowerWitness::Subgraph(w)));
                }
            }
        }
    }
    best
}

fn bound_method(witness: &Option<LowerWitness>) -> Option<Method> {
    match witness {
        Some(LowerWitness::Nonplanar) => Some(Method::Nonplanarity),
        Some(LowerWitness::Subgraph(w)) => Some(match w.kind {
            WitnessKind::Clique(_) => Method::CliqueBound,
            WitnessKind::Biclique(..) => Method::BicliqueBound,
        }),
        None => None,
    }
}

/// Genus with a node-expansion budget. Disconnected graphs sum their components.
pub fn genus(graph: &Graph, budget: u64) -> GenusResult {
    genus_capped(graph, budget, None)
}

/// Like [`genus`], but stops as soon as the lower bound exceeds `cap`.
pub fn genus_capped(graph: &Graph, budget: u64, cap: Option<u32>) -> GenusResult {
    if let Some(rot) = is_planar(graph) {
        return GenusResult {
            lower: 0,
            upper: Some(0),
            certificate: Some(rot),
            lower_witness: None,
            methods: vec![Method::Planarity],
            budget_exhausted: false,
            expansions: 0,
        };
    }
    let (lb, witness) = genus_lower_bound(graph);
    let mut methods: Vec<Method> = bound_method(&witness).into_iter().collect();
    let parts = planarity::block_graphs(graph);
    let mut rotations: Vec<Option<RotationSystem>> = Vec::with_capacity(parts.len());
    let mut block_lower = vec![0u32; parts.len()];
    for (i, (block, _)) in parts.iter().enumerate() {
        let rot = is_planar(block);
        if rot.is_none() {
            block_lower[i] = genus_lower_bound(block).0;
        }
        rotations.push(rot);
    }
    let mut expansions = 0u64;
    let mut budget_exhausted = false;
    let exceeds_cap = |block_lower: &[u32]| cap.is_some_and(|c| lb.max(block_lower.iter().sum()) > c);
    'blocks: for i in 0..parts.len() {
        if rotations[i].is_some() {
            continue;
        }
        loop {
            if exceeds_cap(&block_lower) {
                break 'blocks;
            }
            let report = search::search_connected(&parts[i].0, block_lower[i], budget.saturating_sub(expansions));
            expansions += report.expansions;
            match report.outcome {
                SearchOutcome::Found(rot) => {
                    rotations[i] = Some(rot);
                    break;
                }
                SearchOutcome::Absent => {
                    block_lower[i] += 1;
                    if !methods.contains(&Method::Refutation) {
                        methods.push(Method::Refutation);
                    }
                }
                SearchOutcome::BudgetExhausted => {
                    budget_exhausted = true;
                    break 'blocks;
                }
            }
        }
    }
    let lower = lb.max(block_lower.iter().sum());
    let (upper, certificate) = if rotations.iter().all(Option::is_some) {
        methods.push(Method::EmbeddingSearch);
        let parts: Vec<(RotationSystem, Vec<usize>)> =
            rotations.into_iter().zip(parts).map(|(r, (_, verts))| (r.unwrap(), verts)).collect();
        (Some(block_lower.iter().sum()), Some(planarity::combine(graph.vertex_count(), &parts)))
    } else {
        (None, None)
    };
    let lower_witness = if lower == lb { witness } else { None };
    GenusResult { lower, upper, certificate, lower_witness, methods, budget_exhausted, expansions }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zdg::{named_graph, NamedGraph};

    #[test]
    fn formulas() {
        assert_eq!(genus_formula_complete(7), 1);
        assert_eq!(genus_formula_complete(8), 2);
        assert_eq!(genus_formula_complete(4), 0);
        assert_eq!(genus_formula_complete(1), 0);
        assert_eq!(genus_formula_bipartite(3, 6), 1);
        assert_eq!(genus_formula_bipartite(3, 7), 2);
        assert_eq!(genus_formula_bipartite(2, 99), 0);
        assert_eq!(genus_formula_bipartite(7, 7), 7);
    }

    #[test]
    fn k7_is_toroidal() {
        let k7 = NamedGraph::Complete(7).graph();
        let r = genus(&k7, DEFAULT_BUDGET);
        assert_eq!(r.exact(), Some(1));
        assert_eq!(genus_of_embedding(&k7, r.certificate.as_ref().unwrap()).unwrap(), 1);
    }

    #[test]
    fn g6_embeds_on_torus() {
        let g6 = named_graph("G6").unwrap();
        let report = search_embedding(&g6, 1, DEFAULT_BUDGET).unwrap();
        let SearchOutcome::Found(rot) = report.outcome else { panic!("{report:?}") };
        assert!(genus_of_embedding(&g6, &rot).unwrap() <= 1);
    }

    #[test]
    fn k33_is_not_planar() {
        let k33 = NamedGraph::CompleteBipartite(3, 3).graph();
        let report = search_embedding(&k33, 0, DEFAULT_BUDGET).unwrap();
        assert_eq!(report.outcome, SearchOutcome::Absent);
    }

    #[test]
    fn brute_force_small() {
        assert_eq!(brute_force_genus(&NamedGraph::Complete(5).graph()).unwrap(), 1);
        assert_eq!(brute_force_genus(&NamedGraph::Complete(4).graph()).unwrap(), 0);
        assert_eq!(brute_force_genus(&NamedGraph::CompleteBipartite(3, 4).graph()).unwrap(), 1);
    }

    #[test]
    fn lower_bounds() {
        let k37 = NamedGraph::CompleteBipartite(3, 7).graph();
        assert_eq!(genus_lower_bound(&k37).0, 2);
        let tree = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert_eq!(genus_lower_bound(&tree), (0, None));
    }
}
