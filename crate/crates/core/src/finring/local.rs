//! Local structure: idempotent splitting, maximal ideals and their powers.

use serde::Serialize;

use super::{quotient_by_ideal, FiniteRing, RingElement, RingError};
use crate::presparse::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalData {
    pub maximal_ideal: Vec<usize>,
    pub residue_field_size: usize,
    /// `m^1, m^2, …`, ending with `{0}`.
    pub ideal_powers: Vec<Vec<usize>>,
    pub nilpotency_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorInvariants {
    pub order: usize,
    pub residue_field_size: usize,
    pub nilpotency_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingInvariants {
    pub order: usize,
    pub characteristic: u64,
    pub spec_count: usize,
    pub factors: Vec<FactorInvariants>,
}

/// JSON description of a realized ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingDescription {
    pub spec: Option<String>,
    pub order: usize,
    pub characteristic: u64,
    pub spec_count: usize,
    pub factors: Vec<FactorInvariants>,
    pub zero_divisor_count: usize,
}

impl FiniteRing {
    /// Minimal nonzero idempotents.
    pub fn primitive_idempotents(&self) -> Vec<usize> {
        let idem: Vec<usize> = self.idempotents().into_iter().filter(|&e| e != 0).collect();
        idem.iter()
            .copied()
            .filter(|&e| idem.iter().all(|&f| f == e || self.mul_idx(e, f) != f))
            .collect()
    }

    /// Splits the ring into local factors `Re ≅ R/(1-e)R`, one per primitive idempotent.
    pub fn local_decomposition(&self) -> Vec<FiniteRing> {
        let prims = self.primitive_idempotents();
        if prims.len() <= 1 {
            return vec![self.clone()];
        }
        let k = self.coord_moduli().len();
        prims
            .iter()
            .map(|&e| {
                let co = self.sub(&self.one(), &self.element(e));
                let gens: Vec<RingElement> = (0..k)
                    .map(|i| {
                        let mut b = vec![0; k];
                        b[i] = 1;
                        self.mul(&co, &RingElement(b))
                    })
                    .collect();
                quotient_by_ideal(self, &gens).expect("corner ring of an idempotent splits")
            })
            .collect()
    }

    pub fn is_local(&self) -> bool {
        let nonunits: Vec<usize> = (0..self.order()).filter(|&a| !self.is_unit_idx(a)).collect();
        nonunits
            .iter()
            .all(|&a| nonunits.iter().all(|&b| !self.is_unit_idx(self.add_idx(a, b))))
    }

    pub fn local_data(&self) -> Result<LocalData, RingError> {
        if !self.is_local() {
            return Err(RingError::NotLocal);
        }
        let maximal_ideal: Vec<usize> =
            (0..self.order()).filter(|&a| !self.is_unit_idx(a)).collect();
        let residue_field_size = self.order() / maximal_ideal.len();
        let mut ideal_powers = vec![maximal_ideal.clone()];
        while ideal_powers.last().unwrap().len() > 1 {
            let prev = ideal_powers.last().unwrap();
            let mut products: Vec<usize> = Vec::new();
            for &a in prev {
                for &b in &maximal_ideal {
                    products.push(self.mul_idx(a, b));
                }
            }
            products.sort_unstable();
            products.dedup();
            let span = self.additive_span(&products);
            let next: Vec<usize> = (0..self.order()).filter(|&i| span[i]).collect();
            assert!(next.len() < prev.len(), "powers of a nilpotent ideal must shrink");
            ideal_powers.push(next);
        }
        let nilpotency_index = ideal_powers.len();
        Ok(LocalData { maximal_ideal, residue_field_size, ideal_powers, nilpotency_index })
    }

    pub fn invariants(&self) -> RingInvariants {
        let factors: Vec<FactorInvariants> = self
            .local_decomposition()
            .iter()
            .map(|f| {
                let d = f.local_data().expect("decomposition factors are local");
                FactorInvariants {
                    order: f.order(),
                    residue_field_size: d.residue_field_size,
                    nilpotency_index: d.nilpotency_index,
                }
            })
            .collect();
        RingInvariants {
            order: self.order(),
            characteristic: self.characteristic(),
            spec_count: factors.len(),
            factors,
        }
    }

    pub fn describe(&self) -> RingDescription {
        let inv = self.invariants();
        RingDescription {
            spec: self.spec().map(str::to_string),
            order: inv.order,
            characteristic: inv.characteristic,
            spec_count: inv.spec_count,
            factors: inv.factors,
            zero_divisor_count: self.zero_divisors().len(),
        }
    }

    /// Evaluates a one-variable polynomial at `u`.
    pub fn evaluate_at(&self, f: &Polynomial, u: &RingElement) -> RingElement {
        let mut acc = self.zero();
        for (m, c) in f.terms() {
            acc = self.add(&acc, &self.scale(c, &self.pow(u, m[0] as u64)));
        }
        acc
    }

    /// Searches for a root `u` of the monic `f` whose powers span the ring
    /// over `Z_{p^2}`. A hit certifies `R ≅ Z_{p^2}[x]/(f)`.
    pub fn find_root_generator(
        &self,
        p: u64,
        f: &Polynomial,
    ) -> Result<Option<RingElement>, RingError> {
        let q2 = p * p;
        if self.characteristic() != q2 {
            return Err(RingError::PreconditionViolated(format!(
                "characteristic is {}, expected {q2}",
                self.characteristic()
            )));
        }
        if f.nvars() != 1 {
            return Err(RingError::PreconditionViolated("polynomial must be univariate".into()));
        }
        let d = f.degree();
        let leading = f.terms().find(|(m, _)| m[0] == d).map(|(_, c)| c);
        if leading.map(|c| c % q2) != Some(1) {
            return Err(RingError::PreconditionViolated("polynomial must be monic".into()));
        }
        if (q2 as usize).checked_pow(d) != Some(self.order()) {
            return Err(RingError::PreconditionViolated(format!(
                "order {} differs from {q2}^{d}",
                self.order()
            )));
        }
        for u in self.elements() {
            if self.evaluate_at(f, &u).0.iter().any(|&x| x != 0) {
                continue;
            }
            let powers: Vec<usize> = (0..d).map(|e| self.index(&self.pow(&u, e as u64))).collect();
            if self.additive_span(&powers).iter().all(|&b| b) {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use crate::finring::realize_text;

    #[test]
    fn crt_split() {
        let r = realize_text("Z6").unwrap();
        let mut orders: Vec<usize> = r.local_decomposition().iter().map(|f| f.order()).collect();
        orders.sort();
        assert_eq!(orders, vec![2, 3]);
    }

    #[test]
    fn local_rings_stay_whole() {
        let r = realize_text("Z4[x]/(x^2+x+1)").unwrap();
        assert_eq!(r.local_decomposition().len(), 1);
        let r = realize_text("Z2 * Z2 * Z5").unwrap();
        assert_eq!(r.invariants().spec_count, 3);
    }

    #[test]
    fn maximal_ideal_powers() {
        let d = realize_text("Z27").unwrap().local_data().unwrap();
        assert_eq!(d.residue_field_size, 3);
        assert_eq!(d.nilpotency_index, 3);
        assert_eq!(d.ideal_powers[1].len(), 3);
        let d = realize_text("Z2[x]/(x^5)").unwrap().local_data().unwrap();
        assert_eq!((d.residue_field_size, d.nilpotency_index), (2, 5));
        let d = realize_text("GF(4)[x]/(x^2)").unwrap().local_data().unwrap();
        assert_eq!((d.residue_field_size, d.nilpotency_index), (4, 2));
        let d = realize_text("GF(8)").unwrap().local_data().unwrap();
        assert_eq!((d.residue_field_size, d.nilpotency_index), (8, 1));
    }

    #[test]
    fn not_local() {
        assert!(realize_text("Z2 * Z2").unwrap().local_data().is_err());
    }

    #[test]
    fn description_fields() {
        let d = realize_text("Z27").unwrap().describe();
        assert_eq!((d.order, d.characteristic, d.zero_divisor_count), (27, 27, 8));
        let d = realize_text("GF(8)").unwrap().describe();
        assert_eq!(d.zero_divisor_count, 0);
        let d = realize_text("Z4[x]/(x^3+x+1)").unwrap().describe();
        assert_eq!((d.order, d.factors[0].residue_field_size), (64, 8));
    }
}
