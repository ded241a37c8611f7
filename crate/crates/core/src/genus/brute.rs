//! Exhaustive minimum genus for tiny graphs.

use super::GenusError;
use crate::zdg::Graph;

pub const BRUTE_FORCE_LIMIT: u64 = 10_000_000;

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Number of rotation systems, or `None` past the limit.
pub fn rotation_count(graph: &Graph) -> Option<u64> {
    let mut total: u64 = 1;
    for v in 0..graph.vertex_count() {
        for k in 2..graph.degree(v) as u64 {
            total = total.checked_mul(k).filter(|&t| t <= BRUTE_FORCE_LIMIT)?;
        }
    }
    Some(total)
}

fn connected_minimum(graph: &Graph) -> u32 {
    let n = graph.vertex_count();
    let e = graph.edge_count();
    if e == 0 {
        return 0;
    }
    // Darts are (v, i) flattened; rev[d] is the opposite dart.
    let mut offset = vec![0; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + graph.degree(v);
    }
    let mut rev = vec![0; 2 * e];
    for v in 0..n {
        for (i, &w) in graph.neighbors(v).iter().enumerate() {
            let j = graph.neighbors(w).binary_search(&v).unwrap();
            rev[offset[v] + i] = offset[w] + j;
        }
    }
    let choices: Vec<Vec<Vec<usize>>> = (0..n)
        .map(|v| {
            let d = graph.degree(v);
            if d == 0 {
                return vec![vec![]];
            }
            let rest: Vec<usize> = (1..d).collect();
            permutations(&rest)
                .into_iter()
                .map(|p| std::iter::once(0).chain(p).collect())
                .collect()
        })
        .collect();
    // next_of[d] is the dart following d in the rotation at its tail.
    let mut next_of = vec![0; 2 * e];
    let mut pick = vec![0usize; n];
    let mut seen = vec![0u32; 2 * e];
    let mut stamp = 0u32;
    let mut best_faces = 0usize;
    let max_faces = 2 - n as i64 + e as i64;
    loop {
        for v in 0..n {
            let order = &choices[v][pick[v]];
            for k in 0..order.len() {
                next_of[offset[v] + order[k]] = offset[v] + order[(k + 1) % order.len()];
            }
        }
        stamp += 1;
        let mut faces = 0;
        for s in 0..2 * e {
            if seen[s] == stamp {
                continue;
            }
            faces += 1;
            let mut d = s;
            while seen[d] != stamp {
                seen[d] = stamp;
                d = next_of[rev[d]];
            }
        }
        best_faces = best_faces.max(faces);
        if best_faces as i64 == max_faces {
            break;
        }
        let Some(v) = (0..n).find(|&v| pick[v] + 1 < choices[v].len()) else {
            break;
        };
        pick[v] += 1;
        for p in pick.iter_mut().take(v) {
            *p = 0;
        }
    }
    ((2 - n as i64 + e as i64 - best_faces as i64) / 2) as u32
}

/// Minimum genus over every rotation system, summed over components.
pub fn brute_force_genus(graph: &Graph) -> Result<u32, GenusError> {
    if rotation_count(graph).is_none() {
        return Err(GenusError::TooLarge);
    }
    Ok(graph.components().iter().map(|c| connected_minimum(&graph.induced(c))).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]);
        assert_eq!(rotation_count(&g), Some(2));
        let mut k8 = Graph::empty(8);
        for i in 0..8 {
            for j in i + 1..8 {
                k8.add_edge(i, j);
            }
        }
        assert_eq!(rotation_count(&k8), None);
        assert_eq!(brute_force_genus(&k8), Err(GenusError::TooLarge));
    }
}
