//! Backtracking search for an embedding of bounded genus.
//!
//! Edges are inserted one at a time into a growing cellular embedding.
//! Vertices enter in a connectivity-driven order: each new vertex is joined
//! by one edge into a corner of an existing vertex, then its edges back to
//! earlier vertices are closed either inside a common face (a split, genus
//! unchanged) or across two faces (a merge, genus + 1). The genus of the
//! partial embedding never decreases, so branches above the target are
//! never generated. At the target genus every later edge must be a split,
//! which requires all earlier neighbors of each pending vertex to share a
//! face; branches failing that are cut.

use super::embedding::{Change, Embedding};
use super::planarity::{block_graphs, combine, is_planar};
use super::rotation::RotationSystem;
use super::GenusError;
use crate::zdg::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(RotationSystem),
    /// The search space was exhausted: no embedding of genus at most the target.
    Absent,
    BudgetExhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub outcome: SearchOutcome,
    pub expansions: u64,
}

#[derive(Debug, Clone, Copy)]
struct Step {
    edge: usize,
    /// Endpoint placed earlier.
    p: usize,
    /// Endpoint being connected.
    w: usize,
    attach: bool,
}

fn plan(graph: &Graph, ends: &[(usize, usize)]) -> Vec<Step> {
    let n = graph.vertex_count();
    let edge_id = |u: usize, v: usize| ends.binary_search(&(u.min(v), u.max(v))).unwrap();
    let mut rank = vec![usize::MAX; n];
    let mut placed_nbrs = vec![0usize; n];
    let mut inserted = vec![0usize; n];
    let root = (0..n).max_by_key(|&v| (graph.degree(v), std::cmp::Reverse(v))).unwrap();
    rank[root] = 0;
    for &x in graph.neighbors(root) {
        placed_nbrs[x] += 1;
    }
    let mut steps = Vec::with_capacity(ends.len());
    for r in 1..n {
        let w = (0..n)
            .filter(|&v| rank[v] == usize::MAX)
            .max_by_key(|&v| (placed_nbrs[v], graph.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut earlier: Vec<usize> = graph.neighbors(w).iter().copied().filter(|&p| rank[p] != usize::MAX).collect();
        earlier.sort_by_key(|&p| rank[p]);
        let attach = *earlier.iter().min_by_key(|&&p| (inserted[p], rank[p])).expect("connected graph");
        rank[w] = r;
        steps.push(Step { edge: edge_id(attach, w), p: attach, w, attach: true });
        for &p in earlier.iter().filter(|&&p| p != attach) {
            steps.push(Step { edge: edge_id(p, w), p, w, attach: false });
        }
        for &p in &earlier {
            inserted[p] += 1;
        }
        inserted[w] += earlier.len();
        for &x in graph.neighbors(w) {
            placed_nbrs[x] += 1;
        }
    }
    steps
}

struct Exhausted;

struct Searcher<'a> {
    graph: &'a Graph,
    ends: Vec<(usize, usize)>,
    steps: Vec<Step>,
    emb: Embedding,
    target: i64,
    budget: u64,
    expansions: u64,
    mirror_free: bool,
}

impl Searcher<'_> {
    fn faces_at(&self, v: usize) -> Vec<u32> {
        let mut f: Vec<u32> = self.emb.darts_at(v).into_iter().map(|d| self.emb.face_of(d)).collect();
        f.sort_unstable();
        f.dedup();
        f
    }

    fn share_face(&self, vs: &[usize]) -> bool {
        let mut common = self.faces_at(vs[0]);
        for &v in &vs[1..] {
            let f = self.faces_at(v);
            common.retain(|x| f.binary_search(x).is_ok());
            if common.is_empty() {
                return false;
            }
        }
        true
    }

    /// Necessary condition for completing without further merges.
    fn lookahead(&self, s: usize) -> bool {
        let mut t = s;
        while t < self.steps.len() && !self.steps[t].attach {
            let st = self.steps[t];
            if !self.share_face(&[st.p, st.w]) {
                return false;
            }
            t += 1;
        }
        let mut group = Vec::new();
        for u in 0..self.graph.vertex_count() {
            if self.emb.is_placed(u) {
                continue;
            }
            group.clear();
            group.extend(self.graph.neighbors(u).iter().copied().filter(|&x| self.emb.is_placed(x)));
            if group.len() >= 2 && !self.share_face(&group) {
                return false;
            }
        }
        true
    }

    fn corners(&self, v: usize, restrict: bool) -> Vec<Option<u32>> {
        let darts = self.emb.darts_at(v);
        if darts.is_empty() {
            return vec![None];
        }
        if restrict {
            return vec![darts.into_iter().min()];
        }
        darts.into_iter().map(Some).collect()
    }

    fn go(&mut self, s: usize) -> Result<bool, Exhausted> {
        if s == self.steps.len() {
            return Ok(true);
        }
        let st = self.steps[s];
        if st.attach {
            self.emb.place(st.w);
        }
        let (dp, dw) = (self.emb.degree(st.p), self.emb.degree(st.w));
        let restrict_p = self.mirror_free && dp == 2;
        let restrict_w = self.mirror_free && !restrict_p && dw == 2;
        let saved_mirror = self.mirror_free;
        if restrict_p || restrict_w {
            self.mirror_free = false;
        }
        let cp = self.corners(st.p, restrict_p);
        let cw = self.corners(st.w, restrict_w);
        let mut options = Vec::with_capacity(cp.len() * cw.len());
        let face = |c: Option<u32>| c.map(|d| self.emb.face_of(d));
        for &x in &cp {
            for &y in &cw {
                if st.attach || face(x) == face(y) {
                    options.push((x, y));
                }
            }
        }
        if !st.attach && self.emb.genus() < self.target {
            for &x in &cp {
                for &y in &cw {
                    if face(x) != face(y) {
                        options.push((x, y));
                    }
                }
            }
        }
        let (u, _) = self.ends[st.edge];
        for (x, y) in options {
            self.expansions += 1;
            if self.expansions > self.budget {
                return Err(Exhausted);
            }
            let change: Change = if u == st.p {
                self.emb.insert(st.edge, x, y)
            } else {
                self.emb.insert(st.edge, y, x)
            };
            let viable = self.emb.genus() < self.target || self.lookahead(s + 1);
            if viable && self.go(s + 1)? {
                return Ok(true);
            }
            self.emb.undo(st.edge, change);
        }
        self.mirror_free = saved_mirror;
        if st.attach {
            self.emb.unplace(st.w);
        }
        Ok(false)
    }
}

/// Searches one connected graph directly, without splitting into blocks.
pub(crate) fn search_connected(graph: &Graph, target: u32, budget: u64) -> SearchReport {
    let n = graph.vertex_count();
    if n <= 1 {
        return SearchReport { outcome: SearchOutcome::Found(RotationSystem::new(vec![vec![]; n])), expansions: 0 };
    }
    let ends = graph.edges();
    let steps = plan(graph, &ends);
    let mut emb = Embedding::new(n, &ends);
    emb.place(steps[0].p);
    let mut searcher = Searcher {
        graph,
        ends,
        steps,
        emb,
        target: target as i64,
        budget,
        expansions: 0,
        mirror_free: true,
    };
    let outcome = match searcher.go(0) {
        Ok(true) => SearchOutcome::Found(RotationSystem::new(searcher.emb.rotations())),
        Ok(false) => SearchOutcome::Absent,
        Err(Exhausted) => SearchOutcome::BudgetExhausted,
    };
    SearchReport { outcome, expansions: searcher.expansions }
}

/// Looks for an embedding of genus at most `target`.
///
/// Genus is additive over blocks, so each nonplanar block is searched on its
/// own, at the smallest genus it still admits within what is left of the
/// target.
pub fn search_embedding(graph: &Graph, target: u32, budget: u64) -> Result<SearchReport, GenusError> {
    if !graph.is_connected() {
        return Err(GenusError::Disconnected);
    }
    let parts = block_graphs(graph);
    let mut rotations = Vec::with_capacity(parts.len());
    let mut hard = Vec::new();
    for (i, (block, verts)) in parts.iter().enumerate() {
        match is_planar(block) {
            Some(rot) => rotations.push(Some((rot, verts.clone()))),
            None => {
                rotations.push(None);
                hard.push(i);
            }
        }
    }
    let mut lower: Vec<u32> = vec![1; hard.len()];
    let mut expansions = 0;
    let absent = |expansions| Ok(SearchReport { outcome: SearchOutcome::Absent, expansions });
    if hard.len() as u32 > target {
        return absent(0);
    }
    for (k, &i) in hard.iter().enumerate() {
        loop {
            let others: u32 = lower.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &l)| l).sum();
            if lower[k] + others > target {
                return absent(expansions);
            }
            let report = search_connected(&parts[i].0, lower[k], budget.saturating_sub(expansions));
            expansions += report.expansions;
            match report.outcome {
                SearchOutcome::Found(rot) => {
                    rotations[i] = Some((rot, parts[i].1.clone()));
                    break;
                }
                SearchOutcome::Absent => lower[k] += 1,
                SearchOutcome::BudgetExhausted => {
                    return Ok(SearchReport { outcome: SearchOutcome::BudgetExhausted, expansions });
                }
            }
        }
    }
    let parts: Vec<(RotationSystem, Vec<usize>)> = rotations.into_iter().map(Option::unwrap).collect();
    let rot = combine(graph.vertex_count(), &parts);
    Ok(SearchReport { outcome: SearchOutcome::Found(rot), expansions })
}
