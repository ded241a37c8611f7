use proptest::prelude::*;
use zdgenus::genus::*;
use zdgenus::zdg::{Graph, NamedGraph};

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n);
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits[k] {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn small_graph(max_n: usize, max_edges: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = graph_from_bits(n, &bits);
            while g.edge_count() > max_edges {
                let edges = g.edges();
                let keep = &edges[..max_edges];
                g = Graph::from_edges(n, keep);
            }
            g
        })
    })
}

fn check_certificate(graph: &Graph, result: &GenusResult) {
    let rot = result.certificate.as_ref().expect("certificate");
    let cert = Certificate::new(graph, rot, result.upper.unwrap()).unwrap();
    assert_eq!(cert.verify().unwrap(), Verdict::Accept);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn search_matches_brute_force(g in small_graph(8, 12)) {
        let exact = brute_force_genus(&g).unwrap();
        let r = genus(&g, DEFAULT_BUDGET);
        prop_assert_eq!(r.exact(), Some(exact));
        check_certificate(&g, &r);
    }

    #[test]
    fn dense_graphs_match_brute_force(g in small_graph(7, 16)) {
        prop_assume!(rotation_count(&g).is_some());
        let exact = brute_force_genus(&g).unwrap();
        let r = genus(&g, DEFAULT_BUDGET);
        prop_assert_eq!(r.exact(), Some(exact));
        check_certificate(&g, &r);
    }

    #[test]
    fn planarity_agrees_with_brute_force(g in small_graph(8, 14)) {
        prop_assume!(rotation_count(&g).is_some());
        let planar = is_planar(&g);
        prop_assert_eq!(planar.is_some(), brute_force_genus(&g).unwrap() == 0);
    }
}

#[test]
fn named_small_graphs_match_brute_force() {
    let mut cases = vec![NamedGraph::Complete(5), NamedGraph::CompleteBipartite(3, 3), NamedGraph::CompleteBipartite(3, 4)];
    cases.extend((1..=5).map(|n| NamedGraph::CompleteBipartite(2, n)));
    for name in cases {
        let g = name.graph();
        let r = genus(&g, DEFAULT_BUDGET);
        assert_eq!(r.exact(), Some(brute_force_genus(&g).unwrap()), "{name}");
        check_certificate(&g, &r);
    }
}

#[test]
fn k6_is_beyond_brute_force_but_matches_formula() {
    let g = NamedGraph::Complete(6).graph();
    assert_eq!(brute_force_genus(&g), Err(GenusError::TooLarge));
    let r = genus(&g, DEFAULT_BUDGET);
    assert_eq!(r.exact(), Some(genus_formula_complete(6)));
    check_certificate(&g, &r);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn every_target_below_the_genus_is_refuted(g in small_graph(8, 20)) {
        prop_assume!(g.is_connected() && rotation_count(&g).is_some());
        let exact = brute_force_genus(&g).unwrap();
        for t in 0..=exact {
            let report = search_embedding(&g, t, DEFAULT_BUDGET).unwrap();
            match report.outcome {
                SearchOutcome::Found(rot) => {
                    prop_assert_eq!(t, exact);
                    prop_assert_eq!(genus_of_embedding(&g, &rot).unwrap(), exact);
                }
                SearchOutcome::Absent => prop_assert!(t < exact),
                SearchOutcome::BudgetExhausted => prop_assert!(false, "budget"),
            }
        }
    }
}

#[test]
fn exact_genus_matches_closed_formulas() {
    for n in 3..=9 {
        let g = NamedGraph::Complete(n).graph();
        let r = genus(&g, REFUTATION_BUDGET);
        assert_eq!(r.exact(), Some(genus_formula_complete(n)), "K{n}");
        check_certificate(&g, &r);
    }
    for m in 2..=5 {
        let widest = if m == 5 { 6 } else { 8 };
        for n in m..=widest {
            let g = NamedGraph::CompleteBipartite(m, n).graph();
            let r = genus(&g, REFUTATION_BUDGET);
            assert_eq!(r.exact(), Some(genus_formula_bipartite(m, n)), "K{m},{n}");
            check_certificate(&g, &r);
        }
    }
}

#[test]
fn search_refutes_one_below_the_formula() {
    let cases = [(NamedGraph::Complete(8), 2), (NamedGraph::CompleteBipartite(3, 7), 2), (NamedGraph::CompleteBipartite(4, 5), 2), (NamedGraph::CompleteBipartite(5, 5), 3), (NamedGraph::CompleteBipartite(3, 11), 3)];
    for (name, g0) in cases {
        let g = name.graph();
        for t in 0..g0 {
            assert_eq!(search_embedding(&g, t, REFUTATION_BUDGET).unwrap().outcome, SearchOutcome::Absent, "{name} at {t}");
        }
        assert!(matches!(search_embedding(&g, g0, REFUTATION_BUDGET).unwrap().outcome, SearchOutcome::Found(_)), "{name}");
    }
}
