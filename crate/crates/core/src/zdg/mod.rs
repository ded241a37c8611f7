//! Zero-divisor graphs and the graph toolkit around them.

mod canon;
mod export;
mod named;
mod subgraph;

use serde::Serialize;
use thiserror::Error;

use crate::finring::FiniteRing;

pub use canon::{canonical_form, is_isomorphic, isomorphism, CanonicalForm};
pub use export::{decode_graph6, encode_graph6, export_dot, export_graph6, export_json};
pub use named::{named_graph, NamedGraph, TABLE_LABELS};
pub use subgraph::{clique_number, find_biclique, find_clique, max_biclique, SubgraphWitness, WitnessKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("isomorphism testing is limited to 64 vertices, got {0}")]
    SizeLimit(usize),
    #[error("graph6 short form holds at most 62 vertices, got {0}")]
    TooLarge(usize),
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("biclique small side is limited to 4, got {0}")]
    MSideTooLarge(usize),
    #[error("malformed graph6: {0}")]
    Graph6(String),
}

/// Simple undirected graph with labeled vertices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on vertices labeled `0..n`.
    pub fn empty(n: usize) -> Self {
        Graph { labels: (0..n).map(|i| i.to_string()).collect(), adj: vec![Vec::new(); n] }
    }

    pub fn with_labels(labels: Vec<String>) -> Self {
        let n = labels.len();
        Graph { labels, adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Adds edge `{u, v}`; repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "loops are not allowed");
        if let Err(pos) = self.adj[u].binary_search(&v) {
            self.adj[u].insert(pos, v);
            let pos = self.adj[v].binary_search(&u).unwrap_err();
            self.adj[v].insert(pos, u);
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, u: usize) -> &str {
        &self.labels[u]
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Subgraph induced on `keep`, vertices renumbered in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph::with_labels(keep.iter().map(|&v| self.labels[v].clone()).collect());
        for (i, &v) in keep.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX && i < pos[w] {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        g
    }

    /// Same graph with vertex `v` moved to position `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        for v in 0..n {
            labels[perm[v]] = self.labels[v].clone();
        }
        let mut g = Graph::with_labels(labels);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &w in &self.adj[comp[i]] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Smallest cycle length, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// Γ(R): nonzero zero-divisors, adjacent when distinct with product zero.
pub fn zero_divisor_graph(ring: &FiniteRing) -> Graph {
    let verts = ring.zero_divisors();
    let mut g = Graph::with_labels(verts.iter().map(|&a| ring.label_idx(a)).collect());
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            if ring.mul_idx(verts[i], verts[j]) == 0 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Removes, in a single pass, every vertex whose degree is exactly 1.
pub fn reduce(graph: &Graph) -> Graph {
    let keep: Vec<usize> = (0..graph.vertex_count()).filter(|&v| graph.degree(v) != 1).collect();
    graph.induced(&keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::realize_text;

    #[test]
    fn gamma_z8_is_a_path() {
        let g = zero_divisor_graph(&realize_text("Z8").unwrap());
        assert_eq!(g.labels(), &["2", "4", "6"]);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn gamma_of_fields_is_empty() {
        assert_eq!(zero_divisor_graph(&realize_text("GF(8)").unwrap()).vertex_count(), 0);
    }

    #[test]
    fn gamma_z49_is_k6() {
        let g = zero_divisor_graph(&realize_text("Z49").unwrap());
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 15));
    }

    #[test]
    fn reduction_is_single_pass() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let r = reduce(&p3);
        assert_eq!((r.vertex_count(), r.edge_count()), (1, 0));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(reduce(&p4).edge_count(), 1);
    }

    #[test]
    fn girth_values() {
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 2)]).girth(), None);
        assert_eq!(Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).girth(), Some(3));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(c5.girth(), Some(5));
    }
}
