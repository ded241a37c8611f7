//! Explicit finite commutative rings.
//!
//! A ring is stored as an additive group `⊕ Z_{m_i}` with bilinear structure
//! constants. Elements are dense coordinate vectors; every element also has
//! a mixed-radix index in `0..order`, which the graph code works with.

pub mod howell;
mod local;
mod realize;

use serde::Serialize;
use thiserror::Error;

pub use local::{FactorInvariants, LocalData, RingDescription, RingInvariants};
pub use realize::{realize, realize_text, GF_POLYNOMIALS};

use howell::{lcm, HowellForm};

/// Orders above this are refused.
pub const MAX_ORDER: usize = 1 << 14;
/// Rings up to this order get a precomputed multiplication table.
const TABLE_LIMIT: usize = 1024;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("presentation does not close to a finite ring within the degree bound")]
    NotClosed,
    #[error("1 lies in the ideal; the quotient is the zero ring")]
    ZeroRing,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ring is not local")]
    NotLocal,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Spec(#[from] crate::presparse::SpecError),
}

/// Coordinates of an element over the ring's coordinate moduli.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingElement(pub Vec<u64>);

impl RingElement {
    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

#[derive(Debug, Clone)]
pub struct FiniteRing {
    spec: Option<String>,
    basis: Vec<String>,
    moduli: Vec<u64>,
    structure: Vec<Vec<Vec<u64>>>,
    one: Vec<u64>,
    blocks: Vec<usize>,
    radix: Vec<usize>,
    order: usize,
    table: Option<Vec<u32>>,
    units: Vec<bool>,
    characteristic: u64,
}

impl FiniteRing {
    /// Assembles a ring from raw data. Callers must supply a consistent
    /// structure; `realize` verifies its candidates before returning them.
    pub(crate) fn from_parts(
        basis: Vec<String>,
        moduli: Vec<u64>,
        structure: Vec<Vec<Vec<u64>>>,
        one: Vec<u64>,
        blocks: Vec<usize>,
    ) -> Result<Self, RingError> {
        let mut order: usize = 1;
        for &m in &moduli {
            order = order
                .checked_mul(m as usize)
                .filter(|&o| o <= MAX_ORDER)
                .ok_or_else(|| RingError::Unsupported(format!("order exceeds {MAX_ORDER}")))?;
        }
        let k = moduli.len();
        let mut radix = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            radix[i] = radix[i + 1] * moduli[i + 1] as usize;
        }
        let characteristic = one
            .iter()
            .zip(&moduli)
            .map(|(&v, &m)| m / howell::gcd(v, m))
            .fold(1, lcm);
        let mut ring = FiniteRing {
            spec: None,
            basis,
            moduli,
            structure,
            one,
            blocks,
            radix,
            order,
            table: None,
            units: Vec::new(),
            characteristic,
        };
        if order <= TABLE_LIMIT {
            let mut table = vec![0u32; order * order];
            for i in 0..order {
                let a = ring.element(i);
                for j in i..order {
                    let p = ring.index(&RingElement(ring.mul_coords(&a.0, &ring.element(j).0))) as u32;
                    table[i * order + j] = p;
                    table[j * order + i] = p;
                }
            }
            ring.table = Some(table);
        }
        ring.units = (0..order).map(|i| ring.generates_everything(i)).collect();
        Ok(ring)
    }

    pub(crate) fn with_spec(mut self, spec: String) -> Self {
        self.spec = Some(spec);
        self
    }

    /// Canonical presentation text, when realized from one.
    pub fn spec(&self) -> Option<&str> {
        self.spec.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn coord_moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Coordinates of `basis[i] * basis[j]`.
    pub fn structure_constant(&self, i: usize, j: usize) -> &[u64] {
        &self.structure[i][j]
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn zero(&self) -> RingElement {
        RingElement(vec![0; self.moduli.len()])
    }

    pub fn one(&self) -> RingElement {
        RingElement(self.one.clone())
    }

    pub fn element(&self, index: usize) -> RingElement {
        assert!(index < self.order, "element index out of range");
        RingElement(
            self.radix
                .iter()
                .zip(&self.moduli)
                .map(|(&r, &m)| ((index / r) % m as usize) as u64)
                .collect(),
        )
    }

    pub fn index(&self, a: &RingElement) -> usize {
        a.0.iter().zip(&self.radix).map(|(&c, &r)| c as usize * r).sum()
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + '_ {
        (0..self.order).map(|i| self.element(i))
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement(
            a.0.iter().zip(&b.0).zip(&self.moduli).map(|((&x, &y), &m)| (x + y) % m).collect(),
        )
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement(a.0.iter().zip(&self.moduli).map(|(&x, &m)| (m - x) % m).collect())
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    /// `k * a` for an integer `k`.
    pub fn scale(&self, k: u64, a: &RingElement) -> RingElement {
        RingElement(a.0.iter().zip(&self.moduli).map(|(&x, &m)| (k % m) * x % m).collect())
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        if let Some(t) = &self.table {
            let p = t[self.index(a) * self.order + self.index(b)];
            return self.element(p as usize);
        }
        RingElement(self.mul_coords(&a.0, &b.0))
    }

    pub(crate) fn mul_coords(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let k = self.moduli.len();
        let mut acc = vec![0u64; k];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                let xy = x * y;
                for (c, &t) in self.structure[i][j].iter().enumerate() {
                    if t != 0 {
                        acc[c] = (acc[c] + xy % self.moduli[c] * t) % self.moduli[c];
                    }
                }
            }
        }
        acc
    }

    pub fn pow(&self, a: &RingElement, mut e: u64) -> RingElement {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn add_idx(&self, a: usize, b: usize) -> usize {
        self.index(&self.add(&self.element(a), &self.element(b)))
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order + b] as usize,
            None => self.index(&RingElement(self.mul_coords(&self.element(a).0, &self.element(b).0))),
        }
    }

    pub fn is_unit_idx(&self, a: usize) -> bool {
        self.units[a]
    }

    pub fn is_unit(&self, a: &RingElement) -> bool {
        self.units[self.index(a)]
    }

    /// True when the multiples of element `a` exhaust the ring, i.e. `aR = R`.
    fn generates_everything(&self, a: usize) -> bool {
        let a = self.element(a);
        let k = self.moduli.len();
        let l = self.moduli.iter().copied().fold(1, lcm);
        let mut rows: Vec<Vec<u64>> = Vec::with_capacity(2 * k);
        for i in 0..k {
            let mut e = vec![0; k];
            e[i] = 1;
            rows.push(self.mul_coords(&a.0, &e));
            let mut r = vec![0; k];
            r[i] = self.moduli[i];
            rows.push(r);
        }
        let h = HowellForm::new(l, k, rows);
        (0..k).all(|c| h.column_modulus(c) == 1)
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.order).filter(|&i| self.units[i]).collect()
    }

    /// Nonzero zero-divisors, by scanning products with early exit.
    pub fn zero_divisors(&self) -> Vec<usize> {
        (1..self.order)
            .filter(|&a| (1..self.order).any(|b| self.mul_idx(a, b) == 0))
            .collect()
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.order).filter(|&e| self.mul_idx(e, e) == e).collect()
    }

    /// Additive subgroup generated by the given elements, as a membership mask.
    pub fn additive_span(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[0] = true;
        let mut elems = vec![0usize];
        for &g in gens {
            if member[g] {
                continue;
            }
            let mut coset_shift = g;
            let base = elems.clone();
            while !member[coset_shift] {
                for &s in &base {
                    let t = self.add_idx(s, coset_shift);
                    if !member[t] {
                        member[t] = true;
                        elems.push(t);
                    }
                }
                coset_shift = self.add_idx(coset_shift, g);
            }
        }
        member
    }

    /// Canonical string for an element, e.g. `3x+1` or `(1,x+2)`.
    pub fn label(&self, a: &RingElement) -> String {
        let mut parts = Vec::new();
        let mut start = 0;
        for &len in &self.blocks {
            parts.push(render_poly(&a.0[start..start + len], &self.basis[start..start + len]));
            start += len;
        }
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            format!("({})", parts.join(","))
        }
    }

    pub fn label_idx(&self, a: usize) -> String {
        self.label(&self.element(a))
    }
}

fn render_poly(coords: &[u64], names: &[String]) -> String {
    let mut terms = Vec::new();
    for (&c, name) in coords.iter().zip(names) {
        if c == 0 {
            continue;
        }
        terms.push(match (c, name.as_str()) {
            (_, "1") => c.to_string(),
            (1, _) => name.clone(),
            _ => format!("{c}{name}"),
        });
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Direct product of rings, coordinates concatenated.
pub fn product(factors: &[FiniteRing]) -> Result<FiniteRing, RingError> {
    let k: usize = factors.iter().map(|f| f.moduli.len()).sum();
    let mut basis = Vec::with_capacity(k);
    let mut moduli = Vec::with_capacity(k);
    let mut one = Vec::with_capacity(k);
    let mut blocks = Vec::new();
    let mut structure = vec![vec![vec![0u64; k]; k]; k];
    let mut offset = 0;
    for f in factors {
        let n = f.moduli.len();
        basis.extend(f.basis.iter().cloned());
        moduli.extend(f.moduli.iter().copied());
        one.extend(f.one.iter().copied());
        blocks.extend(f.blocks.iter().copied());
        for i in 0..n {
            for j in 0..n {
                for (c, &t) in f.structure[i][j].iter().enumerate() {
                    structure[offset + i][offset + j][offset + c] = t;
                }
            }
        }
        offset += n;
    }
    let mut ring = FiniteRing::from_parts(basis, moduli, structure, one, blocks)?;
    if factors.iter().all(|f| f.spec.is_some()) {
        let text = factors.iter().map(|f| f.spec.clone().unwrap()).collect::<Vec<_>>().join(" * ");
        ring = ring.with_spec(text);
    }
    Ok(ring)
}

/// Quotient of `ring` by the additive subgroup generated by `gens`, which
/// the caller guarantees is an ideal.
pub(crate) fn quotient_by_ideal(
    ring: &FiniteRing,
    gens: &[RingElement],
) -> Result<FiniteRing, RingError> {
    let k = ring.moduli.len();
    let l = ring.moduli.iter().copied().fold(1, lcm);
    let mut rows: Vec<Vec<u64>> = gens.iter().map(|g| g.0.clone()).collect();
    for i in 0..k {
        let mut r = vec![0; k];
        r[i] = ring.moduli[i];
        rows.push(r);
    }
    let h = HowellForm::new(l, k, rows);
    let kept: Vec<usize> = (0..k).filter(|&c| h.column_modulus(c) > 1).collect();
    if kept.is_empty() {
        return Err(RingError::ZeroRing);
    }
    let moduli: Vec<u64> = kept.iter().map(|&c| h.column_modulus(c)).collect();
    let project = |v: &[u64]| -> Vec<u64> {
        let mut w = v.to_vec();
        h.reduce(&mut w);
        kept.iter().map(|&c| w[c]).collect()
    };
    for (i, &c) in kept.iter().enumerate() {
        let mut v = vec![0; k];
        v[c] = moduli[i];
        if project(&v).iter().any(|&x| x != 0) {
            return Err(RingError::Unsupported("quotient group is not split by coordinates".into()));
        }
    }
    let unit = |c: usize| {
        let mut v = vec![0; k];
        v[c] = 1;
        v
    };
    let structure: Vec<Vec<Vec<u64>>> = kept
        .iter()
        .map(|&a| kept.iter().map(|&b| project(&ring.mul_coords(&unit(a), &unit(b)))).collect())
        .collect();
    let one = project(&ring.one);
    let basis: Vec<String> = kept.iter().map(|&c| ring.basis[c].clone()).collect();
    let mut blocks = Vec::new();
    let mut start = 0;
    for &len in &ring.blocks {
        let n = kept.iter().filter(|&&c| c >= start && c < start + len).count();
        if n > 0 {
            blocks.push(n);
        }
        start += len;
    }
    FiniteRing::from_parts(basis, moduli, structure, one, blocks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(text: &str) -> FiniteRing {
        realize_text(text).unwrap()
    }

    #[test]
    fn integers_mod_n() {
        let z8 = ring("Z8");
        assert_eq!(z8.order(), 8);
        assert_eq!(z8.mul_idx(2, 4), 0);
        assert_eq!(z8.characteristic(), 8);
        assert_eq!(z8.label_idx(5), "5");
    }

    #[test]
    fn zero_divisors_of_z6() {
        let z6 = ring("Z6");
        let zd: Vec<usize> = (1..6).filter(|&a| (1..6).any(|b| a * b % 6 == 0)).collect();
        assert_eq!(z6.zero_divisors(), zd);
        assert_eq!(zd, vec![2, 3, 4]);
    }

    #[test]
    fn product_arithmetic() {
        let r = ring("Z2 * Z3");
        let a = RingElement(vec![1, 2]);
        assert_eq!(r.add(&a, &a), RingElement(vec![0, 1]));
        assert_eq!(r.label(&a), "(1,2)");
        assert_eq!(r.characteristic(), 6);
    }

    #[test]
    fn units_agree_with_inverse_scan() {
        for text in ["Z12", "Z4[x]/(x^2+x+1)", "Z2 * Z2[x]/(x^2)", "GF(9)", "Z8[x]/(x^2-4, 2*x)"] {
            let r = ring(text);
            for a in 0..r.order() {
                let has_inverse = (0..r.order()).any(|b| r.mul_idx(a, b) == r.index(&r.one()));
                assert_eq!(r.is_unit_idx(a), has_inverse, "{text} element {a}");
            }
        }
    }

    #[test]
    fn spans() {
        let r = ring("Z12");
        let span = r.additive_span(&[8]);
        let members: Vec<usize> = (0..12).filter(|&i| span[i]).collect();
        assert_eq!(members, vec![0, 4, 8]);
        let span = r.additive_span(&[4, 6]);
        assert_eq!(span.iter().filter(|&&b| b).count(), 6);
    }
}
