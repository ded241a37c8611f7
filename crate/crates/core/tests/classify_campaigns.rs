use std::collections::HashSet;

use zdgenus::classify::{
    builtin_catalog, classify_ring, exclusions, verify_entries, verify_exclusions, verify_field_embedding,
    GenusClass,
};
use zdgenus::finring::{realize_text, FiniteRing};
use zdgenus::genus::{genus, DEFAULT_BUDGET};
use zdgenus::presparse::prime_power;
use zdgenus::zdg::{is_isomorphic, reduce, zero_divisor_graph};

fn class_of(spec: &str) -> GenusClass {
    let ring = realize_text(spec).unwrap();
    classify_ring(&ring, DEFAULT_BUDGET).unwrap().genus_class
}

#[test]
fn classification_examples() {
    let ring = realize_text("Z4[x]/(x^3,2*x)").unwrap();
    let c = classify_ring(&ring, DEFAULT_BUDGET).unwrap();
    assert_eq!(c.genus_class, GenusClass::Toroidal);
    assert_eq!(c.graph_label_match.as_deref(), Some("K1114"));
    assert_eq!(class_of("Z2 * Z2 * Z2"), GenusClass::Planar);
    assert_eq!(class_of("Z2 * Z3 * Z4"), GenusClass::GenusAtLeastTwo);
}

#[test]
fn five_local_factors_force_genus_two() {
    let ring = realize_text("Z2 * Z2 * Z2 * Z2 * Z2").unwrap();
    let c = classify_ring(&ring, DEFAULT_BUDGET).unwrap();
    assert_eq!(c.invariants.spec_count, 5);
    assert_eq!(c.genus_class, GenusClass::GenusAtLeastTwo);
}

#[test]
fn flipped_genus_gives_exactly_one_failure() {
    let mut catalog = builtin_catalog();
    let z49 = catalog.iter_mut().find(|e| e.spec_text == "Z49").expect("Z49 is catalogued");
    assert_eq!(z49.expected_genus, 1);
    z49.expected_genus = 0;
    let reports = verify_entries(&catalog, DEFAULT_BUDGET);
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].spec, "Z49");
    assert!(failed[0].field_diffs.contains_key("genus"));
}

#[test]
fn field_family_row_is_planar() {
    let ring = realize_text("Z3 * GF(9)").unwrap();
    let c = classify_ring(&ring, DEFAULT_BUDGET).unwrap();
    assert_eq!(c.genus_class, GenusClass::Planar);
    assert_eq!(c.vertex_count, 2 + 8);
}

/// Maximal ideal of a local ring as the set of non-units.
fn maximal_ideal(ring: &FiniteRing) -> Vec<usize> {
    (0..ring.order()).filter(|&a| !ring.is_unit_idx(a)).collect()
}

fn is_principal(ring: &FiniteRing, ideal: &[usize]) -> bool {
    ideal.iter().any(|&a| {
        let multiples: HashSet<usize> = (0..ring.order()).map(|r| ring.mul_idx(a, r)).collect();
        multiples.len() == ideal.len()
    })
}

#[test]
fn chain_rings_share_the_graph_of_integers_mod_prime_power() {
    let mut checked = 0;
    for entry in builtin_catalog().iter().filter(|e| e.table <= 2) {
        let ring = realize_text(&entry.spec_text).unwrap();
        let (p, n) = prime_power(ring.order() as u64).unwrap();
        let data = ring.local_data().unwrap();
        if data.nilpotency_index != n as usize {
            continue;
        }
        assert!(is_principal(&ring, &maximal_ideal(&ring)), "{}", entry.spec_text);
        let model = realize_text(&format!("Z{}", p.pow(n))).unwrap();
        let g = zero_divisor_graph(&ring);
        assert!(is_isomorphic(&g, &zero_divisor_graph(&model)).unwrap(), "{}", entry.spec_text);
        if g.vertex_count() <= 15 {
            let with = realize_text(&format!("Z2 * {}", entry.spec_text)).unwrap();
            let with_model = realize_text(&format!("Z2 * Z{}", p.pow(n))).unwrap();
            assert!(
                is_isomorphic(&zero_divisor_graph(&with), &zero_divisor_graph(&with_model)).unwrap(),
                "Z2 * {}",
                entry.spec_text
            );
        }
        checked += 1;
    }
    assert!(checked >= 8, "only {checked} chain rings in the local tables");
}

#[test]
fn square_zero_ideal_of_size_four_gives_torus_after_doubling() {
    for spec in ["Z2[x,y]/(x^2,x*y,y^2)", "Z4[x]/(2*x,x^2)", "Z4[x]/(x^2+x+1)", "GF(4)[x]/(x^2)"] {
        let ring = realize_text(spec).unwrap();
        let m = maximal_ideal(&ring);
        assert_eq!(m.len(), 4, "{spec}");
        assert!(m.iter().all(|&a| m.iter().all(|&b| ring.mul_idx(a, b) == 0)), "{spec}");
        assert_eq!(class_of(&format!("Z2 * {spec}")), GenusClass::Toroidal, "{spec}");
    }
}

#[test]
fn reduction_preserves_genus_on_catalog() {
    for entry in builtin_catalog() {
        let g = zero_divisor_graph(&realize_text(&entry.spec_text).unwrap());
        let full = genus(&g, DEFAULT_BUDGET).exact();
        let reduced = genus(&reduce(&g), DEFAULT_BUDGET).exact();
        assert_eq!(full, Some(entry.expected_genus), "{}", entry.spec_text);
        assert_eq!(full, reduced, "{}", entry.spec_text);
    }
}

#[test]
fn trichotomy_covers_catalog_and_exclusions() {
    for entry in builtin_catalog() {
        let ring = realize_text(&entry.spec_text).unwrap();
        let c = classify_ring(&ring, DEFAULT_BUDGET).unwrap();
        let expected = if entry.expected_genus == 0 { GenusClass::Planar } else { GenusClass::Toroidal };
        assert_eq!(c.genus_class, expected, "{}", entry.spec_text);
    }
    let reports = verify_exclusions(DEFAULT_BUDGET);
    assert_eq!(reports.len(), exclusions().len());
    for r in reports {
        assert_eq!(r.genus_class, Some(GenusClass::GenusAtLeastTwo), "{}", r.spec);
        assert!(r.pass, "{}", r.spec);
    }
}

#[test]
fn field_embeddings() {
    assert!(verify_field_embedding("Z2 * Z2", 4).unwrap());
    assert!(verify_field_embedding("Z2", 2).unwrap());
    assert!(verify_field_embedding("Z3", 4).unwrap());
}
