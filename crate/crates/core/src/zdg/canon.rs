//! Canonical labeling by partition refinement and individualization.
//!
//! Leaves of the search tree are compared by their upper-triangle adjacency
//! code and the largest one is kept. Twins (vertices with the same
//! neighbourhood apart from each other) sharing a cell are explored once,
//! since swapping them is an automorphism fixing the current partition.

use super::{Graph, GraphError};

const LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Upper-triangle bits in graph6 column order, packed into words.
    pub code: Vec<u64>,
}

struct Search {
    n: usize,
    adj: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
}

impl Search {
    fn code(&self, order: &[usize]) -> Vec<u64> {
        let bits = self.n * self.n.saturating_sub(1) / 2;
        let mut code = vec![0u64; bits.div_ceil(64).max(1)];
        let mut k = 0;
        for j in 1..self.n {
            for i in 0..j {
                if self.adj[order[i]] >> order[j] & 1 == 1 {
                    code[k / 64] |= 1 << (63 - k % 64);
                }
                k += 1;
            }
        }
        code
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        'outer: loop {
            for w in 0..cells.len() {
                let mask = cells[w].iter().fold(0u64, |m, &v| m | 1 << v);
                for x in 0..cells.len() {
                    if cells[x].len() < 2 {
                        continue;
                    }
                    let count = |v: usize| (self.adj[v] & mask).count_ones();
                    let first = count(cells[x][0]);
                    if cells[x].iter().all(|&v| count(v) == first) {
                        continue;
                    }
                    let mut members = cells[x].clone();
                    members.sort_by_key(|&v| (std::cmp::Reverse(count(v)), v));
                    let mut groups: Vec<Vec<usize>> = Vec::new();
                    let mut last = None;
                    for v in members {
                        let c = count(v);
                        if last != Some(c) {
                            groups.push(Vec::new());
                            last = Some(c);
                        }
                        groups.last_mut().unwrap().push(v);
                    }
                    cells.splice(x..=x, groups);
                    continue 'outer;
                }
            }
            return cells;
        }
    }

    fn twins(&self, u: usize, v: usize) -> bool {
        let mu = self.adj[u] & !(1 << v);
        let mv = self.adj[v] & !(1 << u);
        mu == mv
    }

    fn run(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(t) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().flatten().collect();
            let code = self.code(&order);
            if self.best.as_ref().is_none_or(|(b, _)| code > *b) {
                self.best = Some((code, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[t] {
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cells[t].iter().copied().filter(|&w| w != v).collect();
            next.splice(t..=t, [vec![v], rest]);
            self.run(next);
        }
    }
}

pub fn canonical_form(graph: &Graph) -> Result<CanonicalForm, GraphError> {
    let n = graph.vertex_count();
    if n > LIMIT {
        return Err(GraphError::SizeLimit(n));
    }
    let adj: Vec<u64> =
        (0..n).map(|v| graph.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let mut search = Search { n, adj, best: None };
    if n == 0 {
        return Ok(CanonicalForm { order: vec![], code: vec![0] });
    }
    search.run(vec![(0..n).collect()]);
    let (code, order) = search.best.expect("at least one leaf");
    Ok(CanonicalForm { order, code })
}

/// A bijection `f` with `{u,v}` an edge of `g1` iff `{f(u),f(v)}` is one of `g2`.
pub fn isomorphism(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>, GraphError> {
    for g in [g1, g2] {
        if g.vertex_count() > LIMIT {
            return Err(GraphError::SizeLimit(g.vertex_count()));
        }
    }
    if g1.vertex_count() != g2.vertex_count()
        || g1.edge_count() != g2.edge_count()
        || g1.degree_sequence() != g2.degree_sequence()
    {
        return Ok(None);
    }
    let (c1, c2) = (canonical_form(g1)?, canonical_form(g2)?);
    if c1.code != c2.code {
        return Ok(None);
    }
    let mut map = vec![0; g1.vertex_count()];
    for (i, &v) in c1.order.iter().enumerate() {
        map[v] = c2.order[i];
    }
    Ok(Some(map))
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    Ok(isomorphism(g1, g2)?.is_some())
}
