//! Portable genus certificates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::rotation::{total_genus, RotationSystem};
use super::GenusError;
use crate::zdg::{decode_graph6, encode_graph6, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Certificate {
    pub graph6: String,
    pub rotations: Vec<Vec<usize>>,
    pub claimed_genus: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject { computed: u32 },
}

#[derive(Debug, Error)]
pub enum CertError {
    #[error("malformed certificate: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Rotation(#[from] GenusError),
}

impl Certificate {
    pub fn new(graph: &Graph, rotation: &RotationSystem, claimed_genus: u32) -> Result<Self, GraphError> {
        Ok(Certificate { graph6: encode_graph6(graph)?, rotations: rotation.rotations.clone(), claimed_genus })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, CertError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Recomputes the genus of the stored embedding and compares it with the claim.
    pub fn verify(&self) -> Result<Verdict, CertError> {
        let graph = decode_graph6(&self.graph6)?;
        let computed = total_genus(&graph, &RotationSystem::new(self.rotations.clone()))?;
        Ok(if computed == self.claimed_genus { Verdict::Accept } else { Verdict::Reject { computed } })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_tamper() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let cert = Certificate::new(&g, &RotationSystem::ascending(&g), 0).unwrap();
        let back = Certificate::from_json(&cert.to_json()).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), cert.to_json());
        assert_eq!(back.verify().unwrap(), Verdict::Accept);
        let lie = Certificate { claimed_genus: 1, ..cert };
        assert_eq!(lie.verify().unwrap(), Verdict::Reject { computed: 0 });
    }

    #[test]
    fn malformed() {
        assert!(matches!(Certificate::from_json("{\"graph6\": 3}"), Err(CertError::Json(_))));
        let bad = Certificate { graph6: "Bw".into(), rotations: vec![vec![1], vec![0], vec![]], claimed_genus: 0 };
        assert!(matches!(bad.verify(), Err(CertError::Rotation(_))));
    }
}
