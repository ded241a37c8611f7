//! Reference graphs used as table labels.

use std::fmt;
use std::str::FromStr;

use super::{reduce, zero_divisor_graph, Graph, GraphError};
use crate::finring::realize_text;

/// Labels that appear in the local-ring tables.
pub const TABLE_LABELS: [&str; 13] =
    ["Point", "K2", "P3", "K3", "K4", "K6", "K7", "K1114", "G1", "G2", "G3", "G4", "G5"];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Path(usize),
    K1114,
    /// G1 through G6.
    G(u8),
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedGraph::Complete(1) => write!(f, "Point"),
            NamedGraph::Complete(n) => write!(f, "K{n}"),
            NamedGraph::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            NamedGraph::Path(n) => write!(f, "P{n}"),
            NamedGraph::K1114 => write!(f, "K1114"),
            NamedGraph::G(i) => write!(f, "G{i}"),
        }
    }
}

impl FromStr for NamedGraph {
    type Err = GraphError;

    /// Accepts `K(7)`, `K7`, `K(3,4)`, `K3,4`, `P(3)`, `P3`, `Point`, `K1114`, `G1`..`G6`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || GraphError::UnknownName(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "Point" {
            return Ok(NamedGraph::Complete(1));
        }
        if t == "K1114" {
            return Ok(NamedGraph::K1114);
        }
        let (head, rest) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
        let args = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest);
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.parse::<usize>().map_err(|_| unknown()))
            .collect::<Result<_, _>>()?;
        match (head, nums.as_slice()) {
            ("K", [n]) if *n >= 1 => Ok(NamedGraph::Complete(*n)),
            ("K", [m, n]) if *m >= 1 && *n >= 1 => Ok(NamedGraph::CompleteBipartite(*m, *n)),
            ("P", [n]) if *n >= 1 => Ok(NamedGraph::Path(*n)),
            ("G", [i]) if (1..=6).contains(i) => Ok(NamedGraph::G(*i as u8)),
            _ => Err(unknown()),
        }
    }
}

fn labeled(names: Vec<String>, edges: &[(usize, usize)]) -> Graph {
    let mut g = Graph::with_labels(names);
    for &(u, v) in edges {
        g.add_edge(u, v);
    }
    g
}

fn ring_graph(text: &str) -> Graph {
    zero_divisor_graph(&realize_text(text).expect("reference ring realizes"))
}

impl NamedGraph {
    pub fn graph(&self) -> Graph {
        match *self {
            NamedGraph::Complete(n) => {
                let mut g = Graph::empty(n);
                for i in 0..n {
                    for j in i + 1..n {
                        g.add_edge(i, j);
                    }
                }
                g
            }
            NamedGraph::CompleteBipartite(m, n) => {
                let mut g = Graph::empty(m + n);
                for i in 0..m {
                    for j in 0..n {
                        g.add_edge(i, m + j);
                    }
                }
                g
            }
            NamedGraph::Path(n) => {
                Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>())
            }
            NamedGraph::K1114 => {
                let mut edges = vec![(0, 1), (0, 2), (1, 2)];
                for hub in 0..3 {
                    edges.extend((3..7).map(|w| (hub, w)));
                }
                Graph::from_edges(7, &edges)
            }
            NamedGraph::G(1) => {
                let names = ["v1", "v2", "u1", "u2", "u3", "u4", "u5", "u6"];
                let mut edges = vec![(0, 1)];
                for hub in 0..2 {
                    edges.extend((2..8).map(|u| (hub, u)));
                }
                labeled(names.iter().map(|s| s.to_string()).collect(), &edges)
            }
            NamedGraph::G(2) => {
                let names = ["u", "v1", "v2", "v3", "v4", "v5", "v6"];
                let mut edges: Vec<(usize, usize)> = (1..7).map(|v| (0, v)).collect();
                edges.push((3, 4));
                labeled(names.iter().map(|s| s.to_string()).collect(), &edges)
            }
            NamedGraph::G(3) => ring_graph("Z2[x,y]/(x^3, x*y, y^2-x^2)"),
            NamedGraph::G(4) => ring_graph("Z4[x]/(x^2)"),
            NamedGraph::G(5) => ring_graph("Z32"),
            NamedGraph::G(6) => reduce(&ring_graph("Z2 * Z3 * GF(4)")),
            NamedGraph::G(i) => unreachable!("no graph G{i}"),
        }
    }
}

pub fn named_graph(name: &str) -> Result<Graph, GraphError> {
    Ok(name.parse::<NamedGraph>()?.graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let size = |n: &str| {
            let g = named_graph(n).unwrap();
            (g.vertex_count(), g.edge_count())
        };
        assert_eq!(size("G1"), (8, 13));
        assert_eq!(size("G2"), (7, 7));
        assert_eq!(size("K1114"), (7, 15));
        assert_eq!(size("K(3,4)"), (7, 12));
        assert_eq!(size("K7"), (7, 21));
        assert_eq!(size("P(3)"), (3, 2));
        assert_eq!(size("Point"), (1, 0));
        assert_eq!(size("G5").0, 15);
        assert_eq!(size("G6").0, 11);
    }

    #[test]
    fn unknown_names() {
        for bad in ["G7", "Q3", "K", "K(0)", "P(a)"] {
            assert!(matches!(named_graph(bad), Err(GraphError::UnknownName(_))), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for name in TABLE_LABELS {
            let parsed: NamedGraph = name.parse().unwrap();
            assert_eq!(parsed.to_string(), name);
        }
    }
}
