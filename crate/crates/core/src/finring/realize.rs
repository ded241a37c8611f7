//! Turning presentations into explicit rings.
//!
//! A quotient `Z_N[v_1..v_k]/(r_1..r_s)` is computed by truncating the
//! polynomial ring at total degree `B`, spanning `μ·r` for every monomial `μ`
//! with `deg(μ·r) ≤ B`, and taking the Howell form of that span. The
//! surviving columns give a candidate ring `C`. The candidate is accepted only
//! after checking that it is a ring, that the relations vanish in it and
//! that the variable images generate it; together with the span lying in the
//! ideal this forces `C` to be the quotient itself.

use super::howell::HowellForm;
use super::{product, FiniteRing, RingError};
use crate::presparse::{format_ring_spec, parse_ring_spec, prime_power, Monomial, Polynomial, RingSpec};

const FIRST_BOUND: u32 = 6;
const LAST_BOUND: u32 = 10;

/// Irreducible polynomials used for GF(q), lowest coefficient first.
pub const GF_POLYNOMIALS: [(u64, &[u64]); 6] = [
    (4, &[1, 1, 1]),
    (8, &[1, 1, 0, 1]),
    (9, &[1, 0, 1]),
    (25, &[2, 4, 1]),
    (27, &[1, 2, 0, 1]),
    (49, &[3, 6, 1]),
];

/// Name of the generator of GF(q) over its prime field.
const FIELD_GENERATOR: char = 'a';

pub fn realize_text(text: &str) -> Result<FiniteRing, RingError> {
    realize(&parse_ring_spec(text)?)
}

pub fn realize(spec: &RingSpec) -> Result<FiniteRing, RingError> {
    let ring = match spec {
        RingSpec::ZMod(n) => integers_mod(*n)?,
        RingSpec::GaloisField { q, poly } => {
            let (p, d) = field_data(*q)?;
            if d == 1 {
                integers_mod(p)?
            } else {
                let f = field_polynomial(*q, poly.as_ref(), 1, 0)?;
                polynomial_quotient(p, &[FIELD_GENERATOR], &[f])?
            }
        }
        RingSpec::Quotient { base, vars, relations } => match base.as_ref() {
            RingSpec::ZMod(n) => polynomial_quotient(*n, vars, relations)?,
            RingSpec::GaloisField { q, poly } => {
                let (p, d) = field_data(*q)?;
                if d == 1 {
                    polynomial_quotient(p, vars, relations)?
                } else {
                    let k = vars.len();
                    let mut all_vars = vec![FIELD_GENERATOR];
                    all_vars.extend(vars.iter().copied());
                    let mut rels = vec![field_polynomial(*q, poly.as_ref(), k + 1, 0)?];
                    for r in relations {
                        rels.push(Polynomial::from_terms(
                            k + 1,
                            p,
                            r.terms().map(|(m, c)| {
                                let mut e = vec![0];
                                e.extend(m.iter().copied());
                                (e, c as i64)
                            }),
                        ));
                    }
                    polynomial_quotient(p, &all_vars, &rels)?
                }
            }
            other => {
                return Err(RingError::Unsupported(format!(
                    "quotient over {}",
                    format_ring_spec(other)
                )))
            }
        },
        RingSpec::Product(factors) => {
            let rings = factors.iter().map(realize).collect::<Result<Vec<_>, _>>()?;
            product(&rings)?
        }
    };
    Ok(ring.with_spec(format_ring_spec(spec)))
}

fn field_data(q: u64) -> Result<(u64, u32), RingError> {
    prime_power(q).ok_or_else(|| RingError::Unsupported(format!("GF({q})")))
}

/// The defining polynomial of GF(q) placed in variable `slot` of `nvars`.
fn field_polynomial(
    q: u64,
    given: Option<&Polynomial>,
    nvars: usize,
    slot: usize,
) -> Result<Polynomial, RingError> {
    let (p, _) = field_data(q)?;
    let coeffs: Vec<u64> = match given {
        Some(f) => {
            let mut c = vec![0; f.degree() as usize + 1];
            for (m, v) in f.terms() {
                c[m[0] as usize] = v;
            }
            c
        }
        None => GF_POLYNOMIALS
            .iter()
            .find(|(qq, _)| *qq == q)
            .map(|(_, c)| c.to_vec())
            .ok_or_else(|| RingError::Unsupported(format!("no built-in polynomial for GF({q})")))?,
    };
    Ok(Polynomial::from_terms(
        nvars,
        p,
        coeffs.iter().enumerate().map(|(i, &c)| {
            let mut e = vec![0; nvars];
            e[slot] = i as u32;
            (e, c as i64)
        }),
    ))
}

fn integers_mod(n: u64) -> Result<FiniteRing, RingError> {
    FiniteRing::from_parts(vec!["1".into()], vec![n], vec![vec![vec![1]]], vec![1], vec![1])
}

/// Monomials of total degree ≤ `bound`, highest degree first.
fn monomials(nvars: usize, bound: u32) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = vec![vec![]];
    for _ in 0..nvars {
        out = out
            .into_iter()
            .flat_map(|m| {
                let used: u32 = m.iter().sum();
                (0..=bound - used).map(move |e| {
                    let mut n = m.clone();
                    n.push(e);
                    n
                })
            })
            .collect();
    }
    out.sort_by(|a, b| {
        let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    out
}

fn monomial_name(m: &Monomial, vars: &[char]) -> String {
    let s: String = m
        .iter()
        .zip(vars)
        .filter(|(&e, _)| e > 0)
        .map(|(&e, v)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

fn polynomial_quotient(
    n: u64,
    vars: &[char],
    relations: &[Polynomial],
) -> Result<FiniteRing, RingError> {
    let max_rel = relations.iter().map(|r| r.degree()).max().unwrap_or(0);
    let first = FIRST_BOUND.max(max_rel);
    let last = LAST_BOUND.max(max_rel);
    for bound in first..=last {
        if let Some(ring) = try_bound(n, vars, relations, bound)? {
            return Ok(ring);
        }
    }
    Err(RingError::NotClosed)
}

fn try_bound(
    n: u64,
    vars: &[char],
    relations: &[Polynomial],
    bound: u32,
) -> Result<Option<FiniteRing>, RingError> {
    let k = vars.len();
    let monos = monomials(k, bound);
    let col = |m: &Monomial| monos.binary_search_by(|x| {
        let (dx, dm): (u32, u32) = (x.iter().sum(), m.iter().sum());
        dm.cmp(&dx).then_with(|| m.cmp(x))
    });
    let ncols = monos.len();
    let mut rows = Vec::new();
    for r in relations {
        let dr = r.degree();
        for mu in monos.iter().filter(|m| m.iter().sum::<u32>() + dr <= bound) {
            let mut row = vec![0u64; ncols];
            for (m, c) in r.terms() {
                let prod: Monomial = m.iter().zip(mu).map(|(a, b)| a + b).collect();
                row[col(&prod).expect("degree within bound")] = c;
            }
            rows.push(row);
        }
    }
    let mut h = HowellForm::new(n, ncols, rows);
    // Close the truncated span under multiplication by variables while degrees fit.
    loop {
        let mut extra = Vec::new();
        for row in h.rows() {
            let top = (0..ncols).filter(|&c| row[c] != 0).map(|c| monos[c].iter().sum::<u32>()).max();
            if top.is_none_or(|d| d + 1 > bound) {
                continue;
            }
            for i in 0..k {
                let mut shifted = vec![0u64; ncols];
                for c in (0..ncols).filter(|&c| row[c] != 0) {
                    let mut m = monos[c].clone();
                    m[i] += 1;
                    shifted[col(&m).expect("degree within bound")] = row[c];
                }
                if !h.contains(&shifted) {
                    extra.push(shifted);
                }
            }
        }
        if extra.is_empty() {
            break;
        }
        let mut all = h.rows().to_vec();
        all.extend(extra);
        h = HowellForm::new(n, ncols, all);
    }
    let const_col = ncols - 1;
    let unit = |c: usize| {
        let mut v = vec![0u64; ncols];
        v[c] = 1;
        v
    };
    if h.contains(&unit(const_col)) {
        return Err(RingError::ZeroRing);
    }
    let kept: Vec<usize> = (0..ncols).filter(|&c| h.column_modulus(c) > 1).collect();
    let max_deg = kept.iter().map(|&c| monos[c].iter().sum::<u32>()).max().unwrap_or(0);
    if 2 * max_deg > bound || max_deg + 1 > bound {
        return Ok(None);
    }
    let moduli: Vec<u64> = kept.iter().map(|&c| h.column_modulus(c)).collect();
    let project = |mut v: Vec<u64>| -> Vec<u64> {
        h.reduce(&mut v);
        kept.iter().map(|&c| v[c]).collect()
    };
    for (i, &c) in kept.iter().enumerate() {
        let mut v = vec![0u64; ncols];
        v[c] = moduli[i];
        if project(v).iter().any(|&x| x != 0) {
            return Err(RingError::Unsupported(
                "additive group of the quotient is not split by monomials".into(),
            ));
        }
    }
    let structure: Vec<Vec<Vec<u64>>> = kept
        .iter()
        .map(|&a| {
            kept.iter()
                .map(|&b| {
                    let prod: Monomial = monos[a].iter().zip(&monos[b]).map(|(x, y)| x + y).collect();
                    project(unit(col(&prod).expect("degree within bound")))
                })
                .collect()
        })
        .collect();
    for (i, row) in structure.iter().enumerate() {
        for t in row {
            if t.iter().zip(&moduli).any(|(&x, &m)| !(x * moduli[i]).is_multiple_of(m)) {
                return Ok(None);
            }
        }
    }
    let one = project(unit(const_col));
    let basis: Vec<String> = kept.iter().map(|&c| monomial_name(&monos[c], vars)).collect();
    let len = kept.len();
    let ring = FiniteRing::from_parts(basis, moduli, structure, one, vec![len])?;
    let var_images: Vec<Vec<u64>> = (0..k)
        .map(|i| {
            let mut m = vec![0u32; k];
            m[i] = 1;
            project(unit(col(&m).unwrap()))
        })
        .collect();
    if !is_ring(&ring) || !relations_vanish(&ring, relations, &var_images) {
        return Ok(None);
    }
    if !generated_by(&ring, &var_images) {
        return Ok(None);
    }
    Ok(Some(ring))
}

fn basis_vector(k: usize, i: usize) -> Vec<u64> {
    let mut v = vec![0u64; k];
    v[i] = 1;
    v
}

/// Associativity on basis triples and the identity law on basis vectors.
fn is_ring(ring: &FiniteRing) -> bool {
    let k = ring.coord_moduli().len();
    let one = ring.one().0;
    for i in 0..k {
        let bi = basis_vector(k, i);
        if ring.mul_coords(&one, &bi) != bi {
            return false;
        }
        for j in 0..k {
            let bj = basis_vector(k, j);
            if ring.mul_coords(&bi, &bj) != ring.mul_coords(&bj, &bi) {
                return false;
            }
            let bij = ring.mul_coords(&bi, &bj);
            for l in 0..k {
                let bl = basis_vector(k, l);
                let left = ring.mul_coords(&bij, &bl);
                let right = ring.mul_coords(&bi, &ring.mul_coords(&bj, &bl));
                if left != right {
                    return false;
                }
            }
        }
    }
    true
}

fn evaluate(ring: &FiniteRing, poly: &Polynomial, images: &[Vec<u64>]) -> Vec<u64> {
    let k = ring.coord_moduli().len();
    let mut acc = vec![0u64; k];
    for (mono, c) in poly.terms() {
        let mut term = ring.one().0;
        for (v, &e) in mono.iter().enumerate() {
            for _ in 0..e {
                term = ring.mul_coords(&term, &images[v]);
            }
        }
        for (i, m) in ring.coord_moduli().iter().enumerate() {
            acc[i] = (acc[i] + c % m * term[i]) % m;
        }
    }
    acc
}

fn relations_vanish(ring: &FiniteRing, relations: &[Polynomial], images: &[Vec<u64>]) -> bool {
    relations.iter().all(|r| evaluate(ring, r, images).iter().all(|&x| x == 0))
}

/// True when 1 and the variable images generate the whole ring.
fn generated_by(ring: &FiniteRing, images: &[Vec<u64>]) -> bool {
    let idx = |v: &Vec<u64>| ring.index(&super::RingElement(v.clone()));
    let mut gens = vec![idx(&ring.one().0)];
    let mut span = ring.additive_span(&gens);
    let mut frontier = vec![ring.one().0];
    while let Some(f) = frontier.pop() {
        for img in images {
            let p = ring.mul_coords(&f, img);
            let i = idx(&p);
            if !span[i] {
                gens.push(i);
                span = ring.additive_span(&gens);
                frontier.push(p);
            }
        }
    }
    span.iter().all(|&b| b)
}
