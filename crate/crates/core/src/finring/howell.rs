//! Howell normal form of row spans over Z_n.
//!
//! After reduction every vector has a unique representative: at each pivot
//! column `c` the entry lies in `[0, d_c)` where `d_c | n` is the pivot.

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b).
fn xgcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i64, 0i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

/// A unit u of Z_n with u*a = gcd(a, n) (mod n).
fn normalizing_unit(a: u64, n: u64) -> u64 {
    let g = gcd(a, n);
    let (a1, n1) = (a / g, n / g);
    let u0 = if n1 == 1 {
        1
    } else {
        let (_, s, _) = xgcd(a1 as i64, n1 as i64);
        s.rem_euclid(n1 as i64) as u64
    };
    let mut u = u0;
    while gcd(u, n) != 1 {
        u += n1;
    }
    u % n
}

#[derive(Debug, Clone)]
pub struct HowellForm {
    modulus: u64,
    ncols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl HowellForm {
    pub fn new<I>(modulus: u64, ncols: usize, rows: I) -> Self
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let n = modulus;
        let mut a: Vec<Vec<u64>> = rows
            .into_iter()
            .map(|r| {
                assert_eq!(r.len(), ncols);
                r.into_iter().map(|v| v % n).collect::<Vec<u64>>()
            })
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..ncols {
            if r >= a.len() {
                break;
            }
            for i in r + 1..a.len() {
                if a[i][c] == 0 {
                    continue;
                }
                let (ar, ai) = (a[r][c] as i64, a[i][c] as i64);
                let (g, s, t) = xgcd(ar, ai);
                let (p, q) = ((ai / g).rem_euclid(n as i64), (ar / g).rem_euclid(n as i64));
                let (s, t) = (s.rem_euclid(n as i64), t.rem_euclid(n as i64));
                for k in c..ncols {
                    let (x, y) = (a[r][k] as i64, a[i][k] as i64);
                    a[r][k] = ((s * x + t * y).rem_euclid(n as i64)) as u64;
                    a[i][k] = ((q * y - p * x).rem_euclid(n as i64)) as u64;
                }
            }
            if a[r][c] == 0 {
                continue;
            }
            let u = normalizing_unit(a[r][c], n);
            for k in c..ncols {
                a[r][k] = a[r][k] * u % n;
            }
            let d = a[r][c];
            let pivot_row = a[r].clone();
            for row in a.iter_mut().take(r) {
                let q = row[c] / d;
                if q != 0 {
                    for k in c..ncols {
                        row[k] = (row[k] + (n - q) * pivot_row[k]) % n;
                    }
                }
            }
            let ann: Vec<u64> = pivot_row.iter().map(|&v| v * (n / d) % n).collect();
            if ann.iter().any(|&v| v != 0) {
                a.push(ann);
            }
            pivots.push(c);
            r += 1;
        }
        a.truncate(r);
        HowellForm { modulus, ncols, rows: a, pivots }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Pivot value of column `c`, or the modulus when `c` has no pivot.
    pub fn column_modulus(&self, c: usize) -> u64 {
        match self.pivots.iter().position(|&p| p == c) {
            Some(i) => self.rows[i][c],
            None => self.modulus,
        }
    }

    /// Reduces `v` in place to the canonical representative of its coset.
    pub fn reduce(&self, v: &mut [u64]) {
        let n = self.modulus;
        for x in v.iter_mut() {
            *x %= n;
        }
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let q = v[c] / row[c];
            if q != 0 {
                for k in c..self.ncols {
                    v[k] = (v[k] + (n - q) * row[k]) % n;
                }
            }
        }
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn span(n: u64, ncols: usize, gens: &[Vec<u64>]) -> HashSet<Vec<u64>> {
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let mut stack = vec![vec![0; ncols]];
        seen.insert(vec![0; ncols]);
        while let Some(v) = stack.pop() {
            for g in gens {
                let w: Vec<u64> = v.iter().zip(g).map(|(a, b)| (a + b) % n).collect();
                if seen.insert(w.clone()) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    fn all_vectors(n: u64, ncols: usize) -> Vec<Vec<u64>> {
        let mut out = vec![vec![]];
        for _ in 0..ncols {
            out = out
                .into_iter()
                .flat_map(|v| (0..n).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                }))
                .collect();
        }
        out
    }

    fn check(n: u64, ncols: usize, gens: Vec<Vec<u64>>) {
        let h = HowellForm::new(n, ncols, gens.clone());
        let s = span(n, ncols, &gens);
        for v in &s {
            assert!(h.contains(v), "span vector {v:?} not reduced to 0 for {gens:?} mod {n}");
        }
        let mut reps = HashSet::new();
        for v in all_vectors(n, ncols) {
            let mut w = v.clone();
            h.reduce(&mut w);
            let diff: Vec<u64> = v.iter().zip(&w).map(|(a, b)| (a + n - b) % n).collect();
            assert!(s.contains(&diff));
            for c in 0..ncols {
                assert!(w[c] < h.column_modulus(c));
            }
            reps.insert(w);
        }
        let classes = (n as usize).pow(ncols as u32) / s.len();
        assert_eq!(reps.len(), classes);
        let product: u64 = (0..ncols).map(|c| h.column_modulus(c)).product();
        assert_eq!(product as usize, classes);
    }

    #[test]
    fn unit_normalization() {
        for n in 2..40u64 {
            for a in 1..n {
                let u = normalizing_unit(a, n);
                assert_eq!(gcd(u, n), 1);
                assert_eq!(u * a % n, gcd(a, n));
            }
        }
    }

    #[test]
    fn carry_example() {
        check(4, 2, vec![vec![2, 1]]);
    }

    #[test]
    fn matches_brute_force_spans() {
        let mut state = 12345u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for n in [4u64, 6, 8, 9, 12] {
            for ncols in 1..=3usize {
                for _ in 0..25 {
                    let k = (next() % 4) as usize;
                    let gens: Vec<Vec<u64>> =
                        (0..k).map(|_| (0..ncols).map(|_| next() % n).collect()).collect();
                    check(n, ncols, gens);
                }
            }
        }
    }
}
