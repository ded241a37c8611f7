//! graph6, DOT and JSON output.

use super::{canonical_form, Graph, GraphError};

const SHORT_FORM_LIMIT: usize = 62;

/// graph6 of the graph in its current vertex order.
pub fn encode_graph6(graph: &Graph) -> Result<String, GraphError> {
    let n = graph.vertex_count();
    if n > SHORT_FORM_LIMIT {
        return Err(GraphError::TooLarge(n));
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(graph.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut v = 0u8;
        for k in 0..6 {
            v = (v << 1) | u8::from(chunk.get(k).copied().unwrap_or(false));
        }
        out.push((v + 63) as char);
    }
    Ok(out)
}

/// graph6 after canonical relabeling, so isomorphic graphs export identically.
pub fn export_graph6(graph: &Graph) -> Result<String, GraphError> {
    let n = graph.vertex_count();
    if n > SHORT_FORM_LIMIT {
        return Err(GraphError::TooLarge(n));
    }
    let form = canonical_form(graph)?;
    let mut perm = vec![0; n];
    for (pos, &v) in form.order.iter().enumerate() {
        perm[v] = pos;
    }
    encode_graph6(&graph.permuted(&perm))
}

pub fn decode_graph6(text: &str) -> Result<Graph, GraphError> {
    let bad = |m: &str| GraphError::Graph6(m.to_string());
    let bytes = text.trim().as_bytes();
    let (&first, rest) = bytes.split_first().ok_or_else(|| bad("empty input"))?;
    if first == b'~' {
        return Err(bad("only the short form (at most 62 vertices) is supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(bad("invalid size byte"));
    }
    let n = (first - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    if rest.len() != nbits.div_ceil(6) {
        return Err(bad("wrong number of data bytes"));
    }
    let mut bits = Vec::with_capacity(rest.len() * 6);
    for &b in rest {
        if !(63..=126).contains(&b) {
            return Err(bad("invalid data byte"));
        }
        let v = b - 63;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[nbits..].iter().any(|&b| b) {
        return Err(bad("nonzero padding bits"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn export_dot(graph: &Graph) -> String {
    let mut out = String::from("graph Γ {\n");
    for label in graph.labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for (u, v) in graph.edges() {
        out.push_str(&format!("  {} -- {};\n", quote(graph.label(u)), quote(graph.label(v))));
    }
    out.push_str("}\n");
    out
}

pub fn export_json(graph: &Graph) -> serde_json::Value {
    serde_json::json!({
        "vertices": graph.labels(),
        "edges": graph.edges().iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(encode_graph6(&k3).unwrap(), "Bw");
        assert_eq!(export_graph6(&k3).unwrap(), "Bw");
    }

    #[test]
    fn single_vertex() {
        assert_eq!(export_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(decode_graph6("@").unwrap().vertex_count(), 1);
    }

    #[test]
    fn path_is_labeling_independent() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]);
        let b = Graph::from_edges(3, &[(0, 1), (0, 2)]);
        assert_eq!(encode_graph6(&a).unwrap(), "Bg");
        assert_eq!(encode_graph6(&b).unwrap(), "Bo");
        let ca = export_graph6(&a).unwrap();
        assert_eq!(ca, export_graph6(&b).unwrap());
        assert!(ca == "Bg" || ca == "Bo");
    }

    #[test]
    fn decode_round_trip() {
        let g = Graph::from_edges(7, &[(0, 6), (1, 2), (3, 5), (4, 6), (2, 6)]);
        let text = encode_graph6(&g).unwrap();
        let h = decode_graph6(&text).unwrap();
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn limits_and_garbage() {
        assert_eq!(encode_graph6(&Graph::empty(63)), Err(GraphError::TooLarge(63)));
        assert!(decode_graph6("").is_err());
        assert!(decode_graph6("Bw?").is_err());
        assert!(decode_graph6("B\u{7f}").is_err());
    }

    #[test]
    fn dot_output() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let dot = export_dot(&g);
        assert!(dot.starts_with("graph Γ {\n"));
        assert!(dot.contains("  \"0\" -- \"1\";\n"));
    }
}
