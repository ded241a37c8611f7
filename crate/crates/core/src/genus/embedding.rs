//! Incrementally built cellular embeddings.
//!
//! Edge `e = (u, v)` owns darts `2e` (u→v) and `2e + 1` (v→u). Each vertex
//! keeps its darts in a circular doubly linked list (the rotation) and every
//! inserted dart carries the id of the face it bounds. Inserting an edge
//! between two corners of one face splits it; corners in different faces
//! merge them and raise the genus by one. Every change can be undone.

pub(crate) const NONE: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Change {
    /// One endpoint had no darts yet.
    Attach,
    Split { old: u32 },
    Merge { removed: u32 },
}

#[derive(Debug, Clone)]
pub(crate) struct Embedding {
    ends: Vec<(usize, usize)>,
    next: Vec<u32>,
    prev: Vec<u32>,
    face: Vec<u32>,
    first: Vec<u32>,
    degree: Vec<u32>,
    placed: Vec<bool>,
    vertices: i64,
    edges: i64,
    faces: i64,
    next_face_id: u32,
}

impl Embedding {
    pub fn new(n: usize, ends: &[(usize, usize)]) -> Self {
        let darts = 2 * ends.len();
        Embedding {
            ends: ends.to_vec(),
            next: vec![NONE; darts],
            prev: vec![NONE; darts],
            face: vec![NONE; darts],
            first: vec![NONE; n],
            degree: vec![0; n],
            placed: vec![false; n],
            vertices: 0,
            edges: 0,
            faces: 1,
            next_face_id: 1,
        }
    }

    /// Marks a vertex as present. The first vertex sits in face 0.
    pub fn place(&mut self, v: usize) {
        debug_assert!(!self.placed[v]);
        self.placed[v] = true;
        self.vertices += 1;
    }

    pub fn unplace(&mut self, v: usize) {
        debug_assert!(self.placed[v] && self.degree[v] == 0);
        self.placed[v] = false;
        self.vertices -= 1;
    }

    pub fn is_placed(&self, v: usize) -> bool {
        self.placed[v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.degree[v]
    }

    pub fn face_of(&self, dart: u32) -> u32 {
        self.face[dart as usize]
    }

    #[cfg(test)]
    pub fn face_count(&self) -> i64 {
        self.faces
    }

    /// Euler genus of the placed, connected partial embedding.
    pub fn genus(&self) -> i64 {
        (2 - self.vertices + self.edges - self.faces) / 2
    }

    pub fn tail(&self, dart: u32) -> usize {
        let (u, v) = self.ends[dart as usize / 2];
        if dart.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn head(&self, dart: u32) -> usize {
        self.tail(dart ^ 1)
    }

    /// Darts leaving `v` in rotation order.
    pub fn darts_at(&self, v: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.degree[v] as usize);
        let start = self.first[v];
        if start == NONE {
            return out;
        }
        let mut d = start;
        loop {
            out.push(d);
            d = self.next[d as usize];
            if d == start {
                return out;
            }
        }
    }

    /// Any dart at `v` bounding `face`.
    pub fn corner_in_face(&self, v: usize, face: u32) -> Option<u32> {
        self.darts_at(v).into_iter().find(|&d| self.face[d as usize] == face)
    }

    fn successor(&self, dart: u32) -> u32 {
        self.next[(dart ^ 1) as usize]
    }

    fn relabel(&mut self, start: u32, id: u32) {
        let mut d = start;
        loop {
            self.face[d as usize] = id;
            d = self.successor(d);
            if d == start {
                return;
            }
        }
    }

    fn link(&mut self, dart: u32, v: usize, before: Option<u32>) {
        let d = dart as usize;
        match before {
            Some(x) => {
                let p = self.prev[x as usize];
                self.prev[d] = p;
                self.next[d] = x;
                self.next[p as usize] = dart;
                self.prev[x as usize] = dart;
            }
            None => {
                debug_assert_eq!(self.first[v], NONE);
                self.next[d] = dart;
                self.prev[d] = dart;
                self.first[v] = dart;
            }
        }
        self.degree[v] += 1;
    }

    fn unlink(&mut self, dart: u32, v: usize) {
        let d = dart as usize;
        if self.next[d] == dart {
            self.first[v] = NONE;
        } else {
            let (p, n) = (self.prev[d], self.next[d]);
            self.next[p as usize] = n;
            self.prev[n as usize] = p;
            if self.first[v] == dart {
                self.first[v] = n;
            }
        }
        self.next[d] = NONE;
        self.prev[d] = NONE;
        self.face[d] = NONE;
        self.degree[v] -= 1;
    }

    /// Inserts edge `e`, placing its u→v dart before `at_u` in the rotation at
    /// `u` and its v→u dart before `at_v` at `v`. `None` means the endpoint has
    /// no darts yet. Both endpoints must already be placed.
    pub fn insert(&mut self, e: usize, at_u: Option<u32>, at_v: Option<u32>) -> Change {
        let (u, v) = self.ends[e];
        let (a, b) = (2 * e as u32, 2 * e as u32 + 1);
        let fu = at_u.map(|x| self.face[x as usize]);
        let fv = at_v.map(|y| self.face[y as usize]);
        self.link(a, u, at_u);
        self.link(b, v, at_v);
        self.edges += 1;
        match (fu, fv) {
            (Some(f), Some(g)) if f == g => {
                let id = self.next_face_id;
                self.next_face_id += 1;
                self.faces += 1;
                self.relabel(a, f);
                self.relabel(b, id);
                Change::Split { old: f }
            }
            (Some(f), Some(g)) => {
                self.faces -= 1;
                self.relabel(a, f);
                Change::Merge { removed: g }
            }
            (Some(f), None) | (None, Some(f)) => {
                self.face[a as usize] = f;
                self.face[b as usize] = f;
                Change::Attach
            }
            (None, None) => {
                self.face[a as usize] = 0;
                self.face[b as usize] = 0;
                Change::Attach
            }
        }
    }

    /// Reverts the most recent `insert` of edge `e`.
    pub fn undo(&mut self, e: usize, change: Change) {
        let (u, v) = self.ends[e];
        let (a, b) = (2 * e as u32, 2 * e as u32 + 1);
        let (at_u, at_v) = (self.next[a as usize], self.next[b as usize]);
        let at_u = (at_u != a).then_some(at_u);
        let at_v = (at_v != b).then_some(at_v);
        self.unlink(a, u);
        self.unlink(b, v);
        self.edges -= 1;
        match change {
            Change::Attach => {}
            Change::Split { old } => {
                self.faces -= 1;
                self.next_face_id -= 1;
                self.relabel(at_u.expect("split edge had a corner at u"), old);
            }
            Change::Merge { removed } => {
                self.faces += 1;
                self.relabel(at_v.expect("merge edge had a corner at v"), removed);
            }
        }
    }

    /// Neighbor order at every vertex.
    pub fn rotations(&self) -> Vec<Vec<usize>> {
        (0..self.first.len())
            .map(|v| self.darts_at(v).into_iter().map(|d| self.head(d)).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_splits_once() {
        let mut emb = Embedding::new(3, &[(0, 1), (1, 2), (0, 2)]);
        emb.place(0);
        emb.place(1);
        emb.insert(0, None, None);
        emb.place(2);
        let at1 = emb.darts_at(1)[0];
        emb.insert(1, Some(at1), None);
        assert_eq!(emb.face_count(), 1);
        let at0 = emb.darts_at(0)[0];
        let at2 = emb.darts_at(2)[0];
        let c = emb.insert(2, Some(at0), Some(at2));
        assert!(matches!(c, Change::Split { .. }));
        assert_eq!((emb.face_count(), emb.genus()), (2, 0));
        emb.undo(2, c);
        assert_eq!((emb.face_count(), emb.genus()), (1, 0));
    }

    #[test]
    fn merge_raises_genus() {
        // Two disjoint-face corners joined by an edge: a 4-cycle embedded
        // planarly, then a chord whose ends sit in different faces.
        let ends = [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)];
        let mut emb = Embedding::new(4, &ends);
        emb.place(0);
        emb.place(1);
        emb.insert(0, None, None);
        emb.place(2);
        emb.insert(1, Some(emb.darts_at(1)[0]), None);
        emb.place(3);
        emb.insert(2, Some(emb.darts_at(2)[0]), None);
        emb.insert(3, Some(emb.darts_at(0)[0]), Some(emb.darts_at(3)[0]));
        assert_eq!(emb.face_count(), 2);
        let x = emb.darts_at(0)[0];
        let fx = emb.face_of(x);
        let y = emb.darts_at(2).into_iter().find(|&d| emb.face_of(d) != fx).unwrap();
        let c = emb.insert(4, Some(x), Some(y));
        assert!(matches!(c, Change::Merge { .. }));
        assert_eq!(emb.genus(), 1);
        emb.undo(4, c);
        assert_eq!((emb.face_count(), emb.genus()), (2, 0));
    }
}
