//! Rings with planar or toroidal zero-divisor graphs, and rings known to be excluded.

use serde::Serialize;

use crate::zdg::NamedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub spec_text: String,
    /// 1: local planar, 2: local toroidal, 3: non-local planar, 4: non-local toroidal.
    pub table: u8,
    pub expected_order: usize,
    /// `|R/m|` for local tables, number of prime ideals otherwise.
    pub expected_residue_or_spec: usize,
    pub expected_char: u64,
    pub expected_vertex_count: usize,
    #[serde(serialize_with = "label_name")]
    pub expected_graph_label: Option<NamedGraph>,
    pub expected_genus: u32,
    /// Field size for instances of the `Z2 × F_q` and `Z3 × F_q` rows.
    pub family_param: Option<u64>,
}

fn label_name<S: serde::Serializer>(label: &Option<NamedGraph>, s: S) -> Result<S::Ok, S::Error> {
    match label {
        Some(g) => s.serialize_some(&g.to_string()),
        None => s.serialize_none(),
    }
}

type Row = (&'static str, usize, usize, u64, &'static str, usize);

const LOCAL_PLANAR: [Row; 29] = [
    ("Z4", 4, 2, 4, "Point", 1),
    ("Z2[x]/(x^2)", 4, 2, 2, "Point", 1),
    ("Z9", 9, 3, 9, "K2", 2),
    ("Z3[x]/(x^2)", 9, 3, 3, "K2", 2),
    ("Z8", 8, 2, 8, "P3", 3),
    ("Z2[x]/(x^3)", 8, 2, 2, "P3", 3),
    ("Z4[x]/(x^2-2, x^3)", 8, 2, 4, "P3", 3),
    ("Z2[x,y]/(x^2, x*y, y^2)", 8, 2, 2, "K3", 3),
    ("Z4[x]/(2*x, x^2)", 8, 2, 4, "K3", 3),
    ("GF(4)[x]/(x^2)", 16, 4, 2, "K3", 3),
    ("Z4[x]/(x^2+x+1)", 16, 4, 4, "K3", 3),
    ("Z25", 25, 5, 25, "K4", 4),
    ("Z5[x]/(x^2)", 25, 5, 5, "K4", 4),
    ("Z16", 16, 2, 16, "G2", 7),
    ("Z2[x]/(x^4)", 16, 2, 2, "G2", 7),
    ("Z4[x]/(x^2-2, x^4)", 16, 2, 4, "G2", 7),
    ("Z4[x]/(x^3-2, x^4)", 16, 2, 4, "G2", 7),
    ("Z4[x]/(x^3+x^2-2, x^4)", 16, 2, 4, "G2", 7),
    ("Z2[x,y]/(x^3, x*y, y^2-x^2)", 16, 2, 2, "G3", 7),
    ("Z4[x]/(x^3, x^2-2*x)", 16, 2, 4, "G3", 7),
    ("Z8[x]/(x^2-4, 2*x)", 16, 2, 8, "G3", 7),
    ("Z4[x,y]/(x^3, x^2-2, x*y, y^2-2, y^3)", 16, 2, 4, "G3", 7),
    ("Z4[x]/(x^2)", 16, 2, 4, "G4", 7),
    ("Z4[x,y]/(x^2, y^2, x*y-2)", 16, 2, 4, "G4", 7),
    ("Z2[x,y]/(x^2, y^2)", 16, 2, 2, "G4", 7),
    ("Z27", 27, 3, 27, "G1", 8),
    ("Z3[x]/(x^3)", 27, 3, 3, "G1", 8),
    ("Z9[x]/(x^2-3, x^3)", 27, 3, 9, "G1", 8),
    ("Z9[x]/(x^2+3, x^3)", 27, 3, 9, "G1", 8),
];

const LOCAL_TOROIDAL: [Row; 17] = [
    ("Z49", 49, 7, 49, "K6", 6),
    ("Z7[x]/(x^2)", 49, 7, 7, "K6", 6),
    ("Z2[x,y]/(x^3, x*y, y^2)", 16, 2, 2, "K1114", 7),
    ("Z4[x]/(x^3, 2*x)", 16, 2, 4, "K1114", 7),
    ("Z4[x,y]/(x^3, x^2-2, x*y, y^2)", 16, 2, 4, "K1114", 7),
    ("Z8[x]/(x^2, 2*x)", 16, 2, 8, "K1114", 7),
    ("GF(8)[x]/(x^2)", 64, 8, 2, "K7", 7),
    ("Z4[x]/(x^3+x+1)", 64, 8, 4, "K7", 7),
    ("Z4[x,y]/(2*x, 2*y, x^2, x*y, y^2)", 16, 2, 4, "K7", 7),
    // (x, y, z)^2 written out
    ("Z2[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^2)", 16, 2, 2, "K7", 7),
    ("Z32", 32, 2, 32, "G5", 15),
    ("Z2[x]/(x^5)", 32, 2, 2, "G5", 15),
    ("Z4[x]/(x^3-2, x^5)", 32, 2, 4, "G5", 15),
    ("Z4[x]/(x^4-2, x^5)", 32, 2, 4, "G5", 15),
    ("Z8[x]/(x^2-2, x^5)", 32, 2, 8, "G5", 15),
    ("Z8[x]/(x^2-2*x+2, x^5)", 32, 2, 8, "G5", 15),
    ("Z8[x]/(x^2+2*x-2, x^5)", 32, 2, 8, "G5", 15),
];

const NONLOCAL_PLANAR: [Row; 18] = [
    ("Z2 * Z2", 4, 2, 2, "", 2),
    ("Z2 * Z3", 6, 2, 6, "", 3),
    ("Z2 * GF(4)", 8, 2, 2, "", 4),
    ("Z3 * Z3", 9, 2, 3, "", 4),
    ("Z2 * Z4", 8, 2, 4, "", 5),
    ("Z2 * Z2[x]/(x^2)", 8, 2, 2, "", 5),
    ("Z3 * GF(4)", 12, 2, 6, "", 5),
    ("Z3 * Z4", 12, 2, 12, "", 7),
    ("Z3 * Z2[x]/(x^2)", 12, 2, 6, "", 7),
    ("Z2 * Z8", 16, 2, 8, "", 11),
    ("Z2 * Z2[x]/(x^3)", 16, 2, 2, "", 11),
    ("Z2 * Z4[x]/(x^2-2, x^3)", 16, 2, 4, "", 11),
    ("Z2 * Z9", 18, 2, 18, "", 11),
    ("Z2 * Z3[x]/(x^2)", 18, 2, 6, "", 11),
    ("Z3 * Z9", 27, 2, 9, "", 14),
    ("Z3 * Z3[x]/(x^2)", 27, 2, 3, "", 14),
    ("Z2 * Z2 * Z2", 8, 3, 2, "", 6),
    ("Z2 * Z2 * Z3", 12, 3, 6, "", 9),
];

const NONLOCAL_TOROIDAL: [Row; 29] = [
    ("GF(4) * GF(4)", 16, 2, 2, "", 6),
    ("GF(4) * Z5", 20, 2, 10, "", 7),
    ("Z5 * Z5", 25, 2, 5, "", 8),
    ("Z4 * GF(4)", 16, 2, 4, "", 9),
    ("GF(4) * Z2[x]/(x^2)", 16, 2, 2, "", 9),
    ("GF(4) * Z7", 28, 2, 14, "", 9),
    ("Z4 * Z4", 16, 2, 4, "", 11),
    ("Z4 * Z2[x]/(x^2)", 16, 2, 4, "", 11),
    ("Z2[x]/(x^2) * Z2[x]/(x^2)", 16, 2, 2, "", 11),
    ("Z2 * Z2[x,y]/(x^2, x*y, y^2)", 16, 2, 2, "", 11),
    ("Z2 * Z4[x]/(2*x, x^2)", 16, 2, 4, "", 11),
    ("Z4 * Z5", 20, 2, 20, "", 11),
    ("Z5 * Z2[x]/(x^2)", 20, 2, 10, "", 11),
    ("Z3 * Z8", 24, 2, 24, "", 15),
    ("Z3 * Z2[x]/(x^3)", 24, 2, 6, "", 15),
    ("Z3 * Z4[x]/(x^2-2, x^3)", 24, 2, 12, "", 15),
    ("Z4 * Z7", 28, 2, 28, "", 15),
    ("Z7 * Z2[x]/(x^2)", 28, 2, 14, "", 15),
    ("Z2 * GF(4)[x]/(x^2)", 32, 2, 2, "", 19),
    ("Z2 * Z4[x]/(x^2+x+1)", 32, 2, 4, "", 19),
    ("Z2 * Z2 * GF(4)", 16, 3, 2, "", 12),
    ("Z2 * Z2 * Z4", 16, 3, 4, "", 13),
    ("Z2 * Z2 * Z2[x]/(x^2)", 16, 3, 2, "", 13),
    ("Z2 * Z3 * Z3", 18, 3, 6, "", 13),
    ("Z2 * Z2 * Z5", 20, 3, 10, "", 15),
    ("Z2 * Z3 * GF(4)", 24, 3, 6, "", 17),
    ("Z3 * Z3 * Z3", 27, 3, 3, "", 18),
    ("Z2 * Z2 * Z7", 28, 3, 14, "", 21),
    ("Z2 * Z2 * Z2 * Z2", 16, 4, 2, "", 14),
];

/// Field sizes at which the two infinite planar families are instantiated.
pub const FAMILY_FIELD_SIZES: [u64; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

fn entry(row: &Row, table: u8, genus: u32) -> CatalogEntry {
    let &(spec, order, residue_or_spec, char, label, vertices) = row;
    CatalogEntry {
        spec_text: spec.to_string(),
        table,
        expected_order: order,
        expected_residue_or_spec: residue_or_spec,
        expected_char: char,
        expected_vertex_count: vertices,
        expected_graph_label: (!label.is_empty()).then(|| label.parse().expect("catalog label")),
        expected_genus: genus,
        family_param: None,
    }
}

fn prime_of(q: u64) -> u64 {
    (2..=q).find(|d| q.is_multiple_of(*d)).unwrap()
}

fn field_text(q: u64) -> String {
    if prime_of(q) == q {
        format!("Z{q}")
    } else {
        format!("GF({q})")
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / crate::finring::howell::gcd(a, b) * b
}

/// Instances of `Z2 × F_q` and `Z3 × F_q`.
pub fn family_entries() -> Vec<CatalogEntry> {
    let mut out = Vec::new();
    for small in [2u64, 3] {
        for q in FAMILY_FIELD_SIZES {
            out.push(CatalogEntry {
                spec_text: format!("Z{small} * {}", field_text(q)),
                table: 3,
                expected_order: (small * q) as usize,
                expected_residue_or_spec: 2,
                expected_char: lcm(small, prime_of(q)),
                expected_vertex_count: (q + small - 2) as usize,
                expected_graph_label: None,
                expected_genus: 0,
                family_param: Some(q),
            });
        }
    }
    out
}

/// Factor texts of a product spec, sorted, so `Z3 * Z2` and `Z2 * Z3` agree.
fn factor_key(spec: &str) -> Vec<String> {
    let mut parts: Vec<String> = spec.split(" * ").map(|s| s.replace(' ', "")).collect();
    parts.sort();
    parts
}

/// All four tables, with family rows instantiated and duplicates dropped.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = Vec::new();
    out.extend(LOCAL_PLANAR.iter().map(|r| entry(r, 1, 0)));
    out.extend(LOCAL_TOROIDAL.iter().map(|r| entry(r, 2, 1)));
    out.extend(NONLOCAL_PLANAR.iter().map(|r| entry(r, 3, 0)));
    for fam in family_entries() {
        let key = factor_key(&fam.spec_text);
        if !out.iter().any(|e| factor_key(&e.spec_text) == key) {
            out.push(fam);
        }
    }
    out.extend(NONLOCAL_TOROIDAL.iter().map(|r| entry(r, 4, 1)));
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Exclusion {
    pub spec_text: String,
    /// Why the ring is expected to have genus at least two.
    pub source: &'static str,
    pub long_running: bool,
}

const EXCLUSIONS: [(&str, &str, bool); 20] = [
    ("Z2 * Z27", "two factors, |R2| = 27", false),
    ("Z2 * Z16", "two factors, |R2| = 16", true),
    ("Z2 * Z32", "two factors, |R2| = 32", false),
    ("Z3 * Z27", "two factors, |R2| = 27", false),
    ("Z4 * Z8", "two factors with |R2| >= 8 contain K3,7", false),
    ("Z2 * Z3 * Z4", "three factors", true),
    ("Z2 * Z2 * Z8", "three factors", false),
    ("Z2 * Z2 * Z2 * Z3", "four factors", true),
    ("Z2 * Z2 * Z2 * Z2 * Z2", "five or more prime ideals", false),
    ("Z2[x,y]/(x^4, x*y, y^2)", "32-element local ring, |m^2| = 4, y^2 = 0", true),
    ("Z2[x,y]/(x^4, x*y, y^2-x^3)", "32-element local ring, |m^2| = 4, y^2 = x^3", true),
    ("Z2[x,y,z]/(x^2, x*y, x*z, y*z, y^2-z^2, y^3)", "32-element local ring, |m^2| = 2", true),
    ("Z2[x,y,z]/(x*y, x*z, y*z, x^2-y^2, x^2-z^2, x^3)", "32-element local ring, |m^2| = 2", true),
    ("Z2[x,y,z]/(x*y, x*z, y^2, z^2, x^2-y*z, x^3)", "32-element local ring, |m^2| = 2", true),
    ("Z2 * Z2[x,y]/(x^2, y^2)", "Z2 times a 16-element local ring with m^3 = 0", false),
    ("Z2 * Z2[x,y]/(x^3, x*y, y^2)", "Z2 times a 16-element local ring with m^3 = 0", false),
    ("Z2 * Z2[x,y]/(x^3, x*y, y^2-x^2)", "Z2 times a 16-element local ring with m^3 = 0", false),
    ("Z2 * Z4[x]/(x^3, 2*x)", "Z2 times a 16-element local ring with m^3 = 0", false),
    ("Z2 * Z2[x,y,z]/(x^2, x*y, x*z, y^2, y*z, z^2)", "Z2 times a 16-element local ring with m^3 = 0", false),
    ("Z2 * Z4[x]/(x^2)", "Z2 times a 16-element local ring with m^3 = 0", false),
];

pub fn exclusions() -> Vec<Exclusion> {
    EXCLUSIONS
        .iter()
        .map(|&(spec, source, long_running)| Exclusion { spec_text: spec.to_string(), source, long_running })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presparse::parse_ring_spec;

    #[test]
    fn table_sizes() {
        let cat = builtin_catalog();
        let count = |t| cat.iter().filter(|e| e.table == t).count();
        assert_eq!((count(1), count(2), count(4)), (29, 17, 29));
        assert_eq!(count(3), 18 + 10);
    }

    #[test]
    fn every_spec_parses() {
        for e in builtin_catalog() {
            parse_ring_spec(&e.spec_text).unwrap_or_else(|err| panic!("{}: {err}", e.spec_text));
        }
        for x in exclusions() {
            parse_ring_spec(&x.spec_text).unwrap_or_else(|err| panic!("{}: {err}", x.spec_text));
        }
    }

    #[test]
    fn family_dedup() {
        let cat = builtin_catalog();
        assert!(!cat.iter().any(|e| e.spec_text == "Z3 * Z2"));
        let z3f9 = cat.iter().find(|e| e.spec_text == "Z3 * GF(9)").unwrap();
        assert_eq!((z3f9.expected_char, z3f9.expected_vertex_count), (3, 10));
    }
}
