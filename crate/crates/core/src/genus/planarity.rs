//! Planarity by path addition over biconnected blocks.
//!
//! Each block is embedded by starting from a cycle and repeatedly adding a
//! path through a fragment (a chord or a component of unembedded vertices
//! together with its attachment edges) into a face holding all of the
//! fragment's attachments. Fragments with a single admissible face go
//! first; a fragment with none proves the block nonplanar.

use super::embedding::Embedding;
use super::rotation::RotationSystem;
use crate::zdg::Graph;

/// Edge sets of the biconnected components. Bridges form their own blocks.
pub(crate) fn blocks(graph: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = graph.vertex_count();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut frames = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut i)) = frames.last_mut() {
            if let Some(&w) = graph.neighbors(v).get(*i) {
                *i += 1;
                if w == parent {
                    continue;
                }
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] >= disc[parent] {
                        let mut block = Vec::new();
                        while let Some(e) = stack.pop() {
                            block.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (parent, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// Splits a graph into blocks as standalone graphs with their original vertex ids.
pub(crate) fn block_graphs(graph: &Graph) -> Vec<(Graph, Vec<usize>)> {
    blocks(graph)
        .into_iter()
        .map(|edges| {
            let mut verts: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            verts.sort_unstable();
            verts.dedup();
            let local = |x: usize| verts.binary_search(&x).unwrap();
            let local_edges: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (local(u), local(v))).collect();
            (Graph::from_edges(verts.len(), &local_edges), verts)
        })
        .collect()
}

/// Concatenates block rotations at shared vertices.
pub(crate) fn combine(n: usize, parts: &[(RotationSystem, Vec<usize>)]) -> RotationSystem {
    let mut rotations = vec![Vec::new(); n];
    for (rot, verts) in parts {
        for (i, r) in rot.rotations.iter().enumerate() {
            rotations[verts[i]].extend(r.iter().map(|&w| verts[w]));
        }
    }
    RotationSystem::new(rotations)
}

fn find_cycle(graph: &Graph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![usize::MAX; n];
    depth[0] = 0;
    let mut frames = vec![(0usize, 0usize)];
    while let Some(&mut (v, ref mut i)) = frames.last_mut() {
        let Some(&w) = graph.neighbors(v).get(*i) else {
            frames.pop();
            continue;
        };
        *i += 1;
        if depth[w] == usize::MAX {
            depth[w] = depth[v] + 1;
            parent[w] = v;
            frames.push((w, 0));
        } else if w != parent[v] && depth[w] < depth[v] {
            let mut cycle = vec![v];
            let mut x = v;
            while x != w {
                x = parent[x];
                cycle.push(x);
            }
            cycle.reverse();
            return cycle;
        }
    }
    unreachable!("a biconnected block with three or more vertices has a cycle")
}

struct Fragment {
    attachments: Vec<usize>,
    /// Unembedded vertices, empty for a chord.
    interior: Vec<usize>,
}

/// Planar embedding of a biconnected graph with at least three vertices.
fn embed_block(graph: &Graph) -> Option<RotationSystem> {
    let n = graph.vertex_count();
    let ends = graph.edges();
    let edge_id = |u: usize, v: usize| ends.binary_search(&(u.min(v), u.max(v))).unwrap();
    let mut emb = Embedding::new(n, &ends);
    let mut edge_done = vec![false; ends.len()];

    let add_edge = |emb: &mut Embedding, edge_done: &mut [bool], u: usize, v: usize, face: u32| {
        let e = edge_id(u, v);
        let (a, b) = ends[e];
        let corner = |emb: &Embedding, x: usize| {
            if emb.degree(x) == 0 {
                None
            } else {
                Some(emb.corner_in_face(x, face).expect("endpoint lies on the target face"))
            }
        };
        let (ca, cb) = (corner(emb, a), corner(emb, b));
        for x in [a, b] {
            if !emb.is_placed(x) {
                emb.place(x);
            }
        }
        emb.insert(e, ca, cb);
        edge_done[e] = true;
    };

    let cycle = find_cycle(graph);
    for i in 0..cycle.len() {
        add_edge(&mut emb, &mut edge_done, cycle[i], cycle[(i + 1) % cycle.len()], 0);
    }

    loop {
        let fragments = fragments(graph, &emb, &ends, &edge_done);
        if fragments.is_empty() {
            return Some(RotationSystem::new(emb.rotations()));
        }
        let faces_at = |v: usize| -> Vec<u32> {
            let mut f: Vec<u32> = emb.darts_at(v).into_iter().map(|d| emb.face_of(d)).collect();
            f.sort_unstable();
            f
        };
        let mut choice: Option<(usize, u32)> = None;
        for (k, frag) in fragments.iter().enumerate() {
            let mut admissible = faces_at(frag.attachments[0]);
            for &a in &frag.attachments[1..] {
                let fa = faces_at(a);
                admissible.retain(|f| fa.binary_search(f).is_ok());
            }
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((k, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((k, admissible[0]));
                    }
                }
            }
        }
        let (k, face) = choice.expect("nonempty fragment list");
        let path = fragment_path(graph, &fragments[k], &emb);
        for w in path.windows(2) {
            add_edge(&mut emb, &mut edge_done, w[0], w[1], face);
        }
    }
}

fn fragments(graph: &Graph, emb: &Embedding, ends: &[(usize, usize)], edge_done: &[bool]) -> Vec<Fragment> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    for (e, &(u, v)) in ends.iter().enumerate() {
        if !edge_done[e] && emb.is_placed(u) && emb.is_placed(v) {
            out.push(Fragment { attachments: vec![u, v], interior: vec![] });
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if emb.is_placed(s) || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut interior = vec![s];
        let mut attachments = Vec::new();
        let mut i = 0;
        while i < interior.len() {
            for &w in graph.neighbors(interior[i]) {
                if emb.is_placed(w) {
                    attachments.push(w);
                } else if !seen[w] {
                    seen[w] = true;
                    interior.push(w);
                }
            }
            i += 1;
        }
        attachments.sort_unstable();
        attachments.dedup();
        out.push(Fragment { attachments, interior });
    }
    out
}

/// A path between two distinct attachments running through the fragment.
fn fragment_path(graph: &Graph, frag: &Fragment, emb: &Embedding) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.clone();
    }
    let start = frag.attachments[0];
    let n = graph.vertex_count();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for &w in graph.neighbors(start) {
        if !emb.is_placed(w) && frag.interior.contains(&w) && parent[w] == usize::MAX {
            parent[w] = start;
            queue.push_back(w);
        }
    }
    while let Some(v) = queue.pop_front() {
        if let Some(&end) = graph.neighbors(v).iter().find(|&&w| emb.is_placed(w) && w != start) {
            let mut path = vec![end, v];
            let mut x = v;
            while parent[x] != start {
                x = parent[x];
                path.push(x);
            }
            path.push(start);
            path.reverse();
            return path;
        }
        for &w in graph.neighbors(v) {
            if !emb.is_placed(w) && parent[w] == usize::MAX {
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragments of a biconnected graph have two attachments")
}

/// A planar rotation system if the graph is planar.
pub fn is_planar(graph: &Graph) -> Option<RotationSystem> {
    let mut parts = Vec::new();
    for (block, verts) in block_graphs(graph) {
        let rot = if block.vertex_count() <= 3 {
            RotationSystem::ascending(&block)
        } else {
            embed_block(&block)?
        };
        parts.push((rot, verts));
    }
    Some(combine(graph.vertex_count(), &parts))
}
