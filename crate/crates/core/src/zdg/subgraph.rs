//! Clique and biclique subgraphs (not necessarily induced).

use serde::Serialize;

use super::{Graph, GraphError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum WitnessKind {
    Clique(usize),
    Biclique(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubgraphWitness {
    pub kind: WitnessKind,
    /// One list for a clique, two disjoint sides for a biclique.
    pub sides: Vec<Vec<usize>>,
}

impl SubgraphWitness {
    /// Checks that every required edge is present in `graph`.
    pub fn holds_in(&self, graph: &Graph) -> bool {
        match self.kind {
            WitnessKind::Clique(n) => {
                let c = &self.sides[0];
                c.len() == n
                    && c.iter().enumerate().all(|(i, &u)| c[i + 1..].iter().all(|&v| graph.has_edge(u, v)))
            }
            WitnessKind::Biclique(m, n) => {
                let (a, b) = (&self.sides[0], &self.sides[1]);
                a.len() == m
                    && b.len() == n
                    && a.iter().all(|x| !b.contains(x))
                    && a.iter().all(|&u| b.iter().all(|&v| graph.has_edge(u, v)))
            }
        }
    }
}

fn extend_clique(graph: &Graph, chosen: &mut Vec<usize>, cand: &[usize], n: usize) -> bool {
    if chosen.len() == n {
        return true;
    }
    for (i, &v) in cand.iter().enumerate() {
        if chosen.len() + cand.len() - i < n {
            return false;
        }
        if graph.degree(v) + 1 < n {
            continue;
        }
        let next: Vec<usize> =
            cand[i + 1..].iter().copied().filter(|&w| graph.has_edge(v, w)).collect();
        chosen.push(v);
        if extend_clique(graph, chosen, &next, n) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Lexicographically least `n`-clique, if any.
pub fn find_clique(graph: &Graph, n: usize) -> Option<SubgraphWitness> {
    let all: Vec<usize> = (0..graph.vertex_count()).collect();
    let mut chosen = Vec::new();
    extend_clique(graph, &mut chosen, &all, n)
        .then(|| SubgraphWitness { kind: WitnessKind::Clique(n), sides: vec![chosen] })
}

/// Largest clique size (0 for the empty graph) and a witness.
pub fn clique_number(graph: &Graph) -> (usize, Option<SubgraphWitness>) {
    let mut best = (0, None);
    let mut n = 1;
    while let Some(w) = find_clique(graph, n) {
        best = (n, Some(w));
        n += 1;
    }
    best
}

fn subsets(n: usize, m: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if m > n {
        return;
    }
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let Some(i) = (0..m).rev().find(|&i| idx[i] < n - m + i) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..m {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn common_neighbors(graph: &Graph, side: &[usize]) -> Vec<usize> {
    let mut common: Vec<usize> = graph.neighbors(side[0]).to_vec();
    for &a in &side[1..] {
        common.retain(|&w| graph.has_edge(a, w));
    }
    common
}

/// Lexicographically least `K_{m,n}` subgraph with the `m` side enumerated.
pub fn find_biclique(graph: &Graph, m: usize, n: usize) -> Result<Option<SubgraphWitness>, GraphError> {
    if m > 4 {
        return Err(GraphError::MSideTooLarge(m));
    }
    if m == 0 {
        let b: Vec<usize> = (0..graph.vertex_count()).take(n).collect();
        return Ok((b.len() == n)
            .then(|| SubgraphWitness { kind: WitnessKind::Biclique(0, n), sides: vec![vec![], b] }));
    }
    let eligible: Vec<usize> = (0..graph.vertex_count()).filter(|&v| graph.degree(v) >= n).collect();
    let mut found = None;
    subsets(eligible.len(), m, |idx| {
        let a: Vec<usize> = idx.iter().map(|&i| eligible[i]).collect();
        let common = common_neighbors(graph, &a);
        if common.len() >= n {
            found = Some(SubgraphWitness {
                kind: WitnessKind::Biclique(m, n),
                sides: vec![a, common[..n].to_vec()],
            });
            return true;
        }
        false
    });
    Ok(found)
}

/// For a fixed small side `m`, the largest `n` with `K_{m,n}` present.
pub fn max_biclique(graph: &Graph, m: usize) -> Result<Option<SubgraphWitness>, GraphError> {
    if m > 4 {
        return Err(GraphError::MSideTooLarge(m));
    }
    let mut best: Option<SubgraphWitness> = None;
    let verts: Vec<usize> = (0..graph.vertex_count()).collect();
    subsets(verts.len(), m, |a| {
        if m == 0 {
            return true;
        }
        let common = common_neighbors(graph, a);
        let better = match &best {
            None => !common.is_empty(),
            Some(SubgraphWitness { kind: WitnessKind::Biclique(_, n), .. }) => common.len() > *n,
            _ => false,
        };
        if better {
            best = Some(SubgraphWitness {
                kind: WitnessKind::Biclique(m, common.len()),
                sides: vec![a.to_vec(), common],
            });
        }
        false
    });
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    fn complete_bipartite(m: usize, n: usize) -> Graph {
        let mut g = Graph::empty(m + n);
        for i in 0..m {
            for j in 0..n {
                g.add_edge(i, m + j);
            }
        }
        g
    }

    #[test]
    fn subset_enumeration() {
        let mut seen = Vec::new();
        subsets(4, 2, |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        subsets(5, 5, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }

    #[test]
    fn cliques() {
        assert!(find_clique(&complete(6), 6).is_some());
        assert!(find_clique(&complete(6), 7).is_none());
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        assert!(find_clique(&p3, 3).is_none());
        assert!(find_clique(&Graph::empty(1), 1).is_some());
        assert!(find_clique(&Graph::empty(0), 1).is_none());
        assert_eq!(clique_number(&complete(5)).0, 5);
    }

    #[test]
    fn bicliques() {
        let g = complete_bipartite(3, 7);
        let w = find_biclique(&g, 3, 7).unwrap().unwrap();
        assert!(w.holds_in(&g));
        assert!(find_biclique(&g, 3, 8).unwrap().is_none());
        assert_eq!(find_biclique(&g, 5, 5), Err(GraphError::MSideTooLarge(5)));
        let best = max_biclique(&g, 2).unwrap().unwrap();
        assert_eq!(best.kind, WitnessKind::Biclique(2, 7));
    }
}
