//! Rotation systems and face tracing.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::GenusError;
use crate::zdg::Graph;

/// Cyclic neighbor order at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RotationSystem {
    pub rotations: Vec<Vec<usize>>,
}

impl RotationSystem {
    pub fn new(rotations: Vec<Vec<usize>>) -> Self {
        RotationSystem { rotations }
    }

    /// Each vertex's neighbors in ascending order.
    pub fn ascending(graph: &Graph) -> Self {
        RotationSystem::new((0..graph.vertex_count()).map(|v| graph.neighbors(v).to_vec()).collect())
    }

    pub fn validate(&self, graph: &Graph) -> Result<(), GenusError> {
        if self.rotations.len() != graph.vertex_count() {
            return Err(GenusError::InvalidRotation(format!(
                "{} rotations for {} vertices",
                self.rotations.len(),
                graph.vertex_count()
            )));
        }
        for (v, rot) in self.rotations.iter().enumerate() {
            let mut sorted = rot.clone();
            sorted.sort_unstable();
            if sorted != graph.neighbors(v) {
                return Err(GenusError::InvalidRotation(format!(
                    "rotation at vertex {v} is not a permutation of its neighbors"
                )));
            }
        }
        Ok(())
    }
}

/// Boundary walks of a cellular embedding, each listed by the tails of its darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    pub walks: Vec<Vec<usize>>,
}

impl Faces {
    pub fn count(&self) -> usize {
        self.walks.len()
    }
}

/// Traces faces without requiring connectivity.
pub(crate) fn trace(graph: &Graph, rotation: &RotationSystem) -> Result<Faces, GenusError> {
    rotation.validate(graph)?;
    let n = graph.vertex_count();
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + rotation.rotations[v].len();
    }
    let mut position: HashMap<(usize, usize), usize> = HashMap::with_capacity(offset[n]);
    for (v, rot) in rotation.rotations.iter().enumerate() {
        for (i, &w) in rot.iter().enumerate() {
            position.insert((v, w), i);
        }
    }
    let mut used = vec![false; offset[n]];
    let mut walks = Vec::new();
    for v in 0..n {
        if rotation.rotations[v].is_empty() {
            walks.push(vec![v]);
        }
        for i in 0..rotation.rotations[v].len() {
            if used[offset[v] + i] {
                continue;
            }
            let mut walk = Vec::new();
            let (mut u, mut j) = (v, i);
            while !used[offset[u] + j] {
                used[offset[u] + j] = true;
                walk.push(u);
                let w = rotation.rotations[u][j];
                let back = position[&(w, u)];
                let len = rotation.rotations[w].len();
                (u, j) = (w, (back + 1) % len);
            }
            walks.push(walk);
        }
    }
    Ok(Faces { walks })
}

/// Faces of the embedding of a connected graph given by `rotation`.
pub fn faces_of(graph: &Graph, rotation: &RotationSystem) -> Result<Faces, GenusError> {
    if !graph.is_connected() {
        return Err(GenusError::Disconnected);
    }
    trace(graph, rotation)
}

pub fn genus_of_embedding(graph: &Graph, rotation: &RotationSystem) -> Result<u32, GenusError> {
    let faces = faces_of(graph, rotation)?;
    let euler = 2 - graph.vertex_count() as i64 + graph.edge_count() as i64 - faces.count() as i64;
    debug_assert!(euler >= 0 && euler % 2 == 0);
    Ok((euler / 2) as u32)
}

/// Sum of component genera, for graphs that may be disconnected.
pub(crate) fn total_genus(graph: &Graph, rotation: &RotationSystem) -> Result<u32, GenusError> {
    let faces = trace(graph, rotation)?;
    let c = graph.components().len() as i64;
    let euler = 2 * c - graph.vertex_count() as i64 + graph.edge_count() as i64 - faces.count() as i64;
    Ok((euler / 2) as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let faces = faces_of(&g, &RotationSystem::ascending(&g)).unwrap();
        assert_eq!(faces.walks, vec![vec![0, 1]]);
        assert_eq!(genus_of_embedding(&g, &RotationSystem::ascending(&g)).unwrap(), 0);
    }

    #[test]
    fn isolated_vertex_has_one_face() {
        let g = Graph::empty(1);
        assert_eq!(genus_of_embedding(&g, &RotationSystem::ascending(&g)).unwrap(), 0);
    }

    #[test]
    fn k4_ascending_parity() {
        let mut edges = Vec::new();
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((i, j));
            }
        }
        let g = Graph::from_edges(4, &edges);
        let faces = faces_of(&g, &RotationSystem::ascending(&g)).unwrap();
        assert_eq!(faces.walks.iter().map(Vec::len).sum::<usize>(), 12);
        assert_eq!((4 - 6 + faces.count() as i64).rem_euclid(2), 0);
    }

    #[test]
    fn rejects_bad_rotations() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let bad = RotationSystem::new(vec![vec![1], vec![0], vec![0]]);
        assert!(matches!(faces_of(&g, &bad), Err(GenusError::InvalidRotation(_))));
        let short = RotationSystem::new(vec![vec![1]]);
        assert!(matches!(faces_of(&g, &short), Err(GenusError::InvalidRotation(_))));
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]);
        assert_eq!(faces_of(&split, &RotationSystem::ascending(&split)), Err(GenusError::Disconnected));
    }
}
