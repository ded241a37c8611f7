//! Text presentations of finite commutative rings.
//!
//! A presentation is a product of atoms separated by `*`. Each atom is
//! `Z<n>`, `GF(<q>)`, or a quotient such as `Z4[x,y]/(x^2, x*y-2)`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// Variables a quotient may declare.
pub const VARIABLES: [char; 3] = ['x', 'y', 'z'];

/// Exponent vector over the declared variables.
pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("syntax error at byte {offset}: expected one of {}", expected.join(", "))]
    Syntax { offset: usize, expected: Vec<String> },
    #[error("{0}")]
    Semantic(String),
}

/// A polynomial with coefficients already reduced modulo the base modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, reducing mod `modulus`.
    pub fn from_terms<I>(nvars: usize, modulus: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut p = Polynomial::zero(nvars);
        for (mono, c) in terms {
            assert_eq!(mono.len(), nvars, "monomial arity mismatch");
            p.add_term(mono, c.rem_euclid(modulus as i64) as u64, modulus);
        }
        p
    }

    fn add_term(&mut self, mono: Monomial, c: u64, modulus: u64) {
        let c = (self.terms.get(&mono).copied().unwrap_or(0) + c) % modulus;
        if c == 0 {
            self.terms.remove(&mono);
        } else {
            self.terms.insert(mono, c);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    /// Parses a bare polynomial over the given variables.
    pub fn parse(text: &str, vars: &[char], modulus: u64) -> Result<Self, SpecError> {
        let mut p = Parser::new(text);
        let poly = p.poly(vars, modulus)?;
        p.skip_ws();
        if !p.at_end() {
            return Err(p.expected(&["'+'", "'-'", "end of input"]));
        }
        Ok(poly)
    }

    /// Canonical text using the given variable names.
    pub fn format_with(&self, vars: &[char]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, u64)> = self.terms().collect();
        terms.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        let mut out = String::new();
        for (i, (mono, c)) in terms.iter().enumerate() {
            if i > 0 {
                out.push('+');
            }
            let factors: Vec<String> = mono
                .iter()
                .zip(vars)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                out.push_str(&c.to_string());
            } else {
                if *c != 1 {
                    out.push_str(&format!("{c}*"));
                }
                out.push_str(&factors.join("*"));
            }
        }
        out
    }
}

/// Parsed ring presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RingSpec {
    ZMod(u64),
    /// The defining polynomial, when present, is over Z_p in one variable.
    GaloisField { q: u64, poly: Option<Polynomial> },
    Quotient { base: Box<RingSpec>, vars: Vec<char>, relations: Vec<Polynomial> },
    Product(Vec<RingSpec>),
}

impl RingSpec {
    /// Modulus that coefficients over this base are reduced by.
    pub fn coefficient_modulus(&self) -> Option<u64> {
        match self {
            RingSpec::ZMod(n) => Some(*n),
            RingSpec::GaloisField { q, .. } => prime_power(*q).map(|(p, _)| p),
            _ => None,
        }
    }

    /// Factors of a product, or the single atom itself.
    pub fn factors(&self) -> Vec<&RingSpec> {
        match self {
            RingSpec::Product(fs) => fs.iter().collect(),
            other => vec![other],
        }
    }

    /// Product of the given atoms with nested products flattened.
    pub fn product(parts: Vec<RingSpec>) -> RingSpec {
        let mut flat = Vec::new();
        for p in parts {
            match p {
                RingSpec::Product(fs) => flat.extend(fs),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            RingSpec::Product(flat)
        }
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_ring_spec(self))
    }
}

impl std::str::FromStr for RingSpec {
    type Err = SpecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ring_spec(s)
    }
}

/// Returns (p, d) with q = p^d when q is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut d = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        d += 1;
    }
    (rest == 1).then_some((p, d))
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec, SpecError> {
    let mut p = Parser::new(text);
    p.skip_ws();
    if p.at_end() {
        return Err(p.expected(&["'Z'", "'GF'"]));
    }
    let mut atoms = vec![p.atom()?];
    loop {
        p.skip_ws();
        if p.at_end() {
            break;
        }
        if !p.eat('*') {
            return Err(p.expected(&["'*'", "end of input"]));
        }
        atoms.push(p.atom()?);
    }
    Ok(RingSpec::product(atoms))
}

pub fn format_ring_spec(spec: &RingSpec) -> String {
    match spec {
        RingSpec::ZMod(n) => format!("Z{n}"),
        RingSpec::GaloisField { q, .. } => format!("GF({q})"),
        RingSpec::Quotient { base, vars, relations } => {
            let vs: Vec<String> = vars.iter().map(|v| v.to_string()).collect();
            let rs: Vec<String> = relations.iter().map(|r| r.format_with(vars)).collect();
            format!("{}[{}]/({})", format_ring_spec(base), vs.join(","), rs.join(", "))
        }
        RingSpec::Product(fs) => {
            fs.iter().map(format_ring_spec).collect::<Vec<_>>().join(" * ")
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser { src: text.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c as u8) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expected(&self, what: &[&str]) -> SpecError {
        SpecError::Syntax { offset: self.pos, expected: what.iter().map(|s| s.to_string()).collect() }
    }

    fn expect(&mut self, c: char) -> Result<(), SpecError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.expected(&[&format!("'{c}'")]))
        }
    }

    fn int(&mut self) -> Result<u64, SpecError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.expected(&["integer"]));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        digits
            .parse::<u64>()
            .map_err(|_| SpecError::Semantic(format!("integer {digits} is too large")))
    }

    fn base(&mut self) -> Result<RingSpec, SpecError> {
        match self.peek() {
            Some(b'Z') => {
                self.pos += 1;
                let n = self.int()?;
                if n < 2 {
                    return Err(SpecError::Semantic(format!("modulus must be at least 2, got {n}")));
                }
                Ok(RingSpec::ZMod(n))
            }
            Some(b'G') if self.src.get(self.pos + 1) == Some(&b'F') => {
                self.pos += 2;
                self.expect('(')?;
                let q = self.int()?;
                self.expect(')')?;
                if prime_power(q).is_none() {
                    return Err(SpecError::Semantic(format!("GF({q}): {q} is not a prime power")));
                }
                Ok(RingSpec::GaloisField { q, poly: None })
            }
            _ => Err(self.expected(&["'Z'", "'GF'"])),
        }
    }

    fn atom(&mut self) -> Result<RingSpec, SpecError> {
        let base = self.base()?;
        if !self.eat('[') {
            return Ok(base);
        }
        let mut vars = vec![self.var_decl()?];
        while self.eat(',') {
            vars.push(self.var_decl()?);
        }
        self.expect(']')?;
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(SpecError::Semantic(format!("variable {v} declared twice")));
            }
        }
        self.expect('/')?;
        self.expect('(')?;
        let modulus = base.coefficient_modulus().expect("base is ZMod or GF");
        let mut relations = vec![self.poly(&vars, modulus)?];
        while self.eat(',') {
            relations.push(self.poly(&vars, modulus)?);
        }
        self.expect(')')?;
        Ok(RingSpec::Quotient { base: Box::new(base), vars, relations })
    }

    fn var_decl(&mut self) -> Result<char, SpecError> {
        match self.peek() {
            Some(c) if VARIABLES.contains(&(c as char)) => {
                self.pos += 1;
                Ok(c as char)
            }
            _ => Err(self.expected(&["variable"])),
        }
    }

    fn poly(&mut self, vars: &[char], modulus: u64) -> Result<Polynomial, SpecError> {
        let mut poly = Polynomial::zero(vars.len());
        let mut sign = 1i64;
        if self.eat('-') {
            sign = -1;
        }
        loop {
            let (mono, c) = self.term(vars, modulus)?;
            let c = if sign < 0 { (modulus - c) % modulus } else { c };
            poly.add_term(mono, c, modulus);
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Ok(poly);
            }
        }
    }

    fn term(&mut self, vars: &[char], modulus: u64) -> Result<(Monomial, u64), SpecError> {
        let mut coeff = 1u64;
        let mut had_int = false;
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            coeff = self.int()? % modulus;
            had_int = true;
        }
        let mut mono = vec![0u32; vars.len()];
        let mut had_factor = false;
        loop {
            let save = self.pos;
            let star = had_int || had_factor;
            if star && self.eat('*')
                && !matches!(self.peek(), Some(c) if (c as char).is_ascii_lowercase()) {
                    return Err(self.expected(&["variable"]));
                }
            match self.peek() {
                Some(c) if (c as char).is_ascii_lowercase() => {
                    let offset = self.pos;
                    let name = c as char;
                    let idx = vars.iter().position(|&v| v == name).ok_or_else(|| {
                        if VARIABLES.contains(&name) {
                            SpecError::Semantic(format!(
                                "variable {name} at byte {offset} is not declared"
                            ))
                        } else {
                            SpecError::Syntax { offset, expected: vec!["variable".into()] }
                        }
                    })?;
                    self.pos += 1;
                    let e = if self.eat('^') { self.int()? } else { 1 };
                    let e = u32::try_from(e)
                        .map_err(|_| SpecError::Semantic(format!("exponent {e} is too large")))?;
                    mono[idx] += e;
                    had_factor = true;
                }
                _ => {
                    self.pos = save;
                    break;
                }
            }
        }
        if !had_int && !had_factor {
            return Err(self.expected(&["integer", "variable"]));
        }
        Ok((mono, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quotient(spec: &RingSpec) -> (&RingSpec, &[char], &[Polynomial]) {
        match spec {
            RingSpec::Quotient { base, vars, relations } => (base, vars, relations),
            other => panic!("not a quotient: {other:?}"),
        }
    }

    #[test]
    fn parses_atoms() {
        assert_eq!(parse_ring_spec("Z49").unwrap(), RingSpec::ZMod(49));
        assert_eq!(parse_ring_spec(" GF( 9 ) ").unwrap(), RingSpec::GaloisField { q: 9, poly: None });
    }

    #[test]
    fn parses_quotient() {
        let spec = parse_ring_spec("Z4[x]/(x^2+x+1)").unwrap();
        let (base, vars, rels) = quotient(&spec);
        assert_eq!(base, &RingSpec::ZMod(4));
        assert_eq!(vars, &['x']);
        assert_eq!(rels.len(), 1);
        let terms: Vec<_> = rels[0].terms().map(|(m, c)| (m.clone(), c)).collect();
        assert_eq!(terms, vec![(vec![0], 1), (vec![1], 1), (vec![2], 1)]);
    }

    #[test]
    fn reduces_coefficients() {
        let spec = parse_ring_spec("Z4[y]/(y^2-2)").unwrap();
        let (_, _, rels) = quotient(&spec);
        assert_eq!(rels[0].terms().find(|(m, _)| m[0] == 0).map(|(_, c)| c), Some(2));
        let spec = parse_ring_spec("Z2[x]/(3*x+2)").unwrap();
        assert_eq!(format_ring_spec(&spec), "Z2[x]/(x)");
    }

    #[test]
    fn implicit_and_explicit_products_agree() {
        let a = parse_ring_spec("Z2[x,y]/(xy, x^2y)").unwrap();
        let b = parse_ring_spec("Z2[x,y]/(x*y, x^2*y)").unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn flattens_products() {
        let spec = parse_ring_spec("Z2 * Z2 * Z2 * Z2").unwrap();
        assert_eq!(spec, RingSpec::Product(vec![RingSpec::ZMod(2); 4]));
        let nested = RingSpec::product(vec![spec.clone(), RingSpec::ZMod(3)]);
        assert_eq!(nested.factors().len(), 5);
    }

    #[test]
    fn canonical_format() {
        assert_eq!(format_ring_spec(&RingSpec::ZMod(8)), "Z8");
        let s = parse_ring_spec("Z2[x,y]/(x^2,xy,y^2)").unwrap();
        assert_eq!(format_ring_spec(&s), "Z2[x,y]/(x^2, x*y, y^2)");
        let s = parse_ring_spec("Z3*Z8").unwrap();
        assert_eq!(format_ring_spec(&s), "Z3 * Z8");
        let s = parse_ring_spec("Z8[x]/(x^2+2x-2, x^5)").unwrap();
        assert_eq!(format_ring_spec(&s), "Z8[x]/(x^2+2*x+6, x^5)");
    }

    #[test]
    fn syntax_errors_carry_offsets() {
        match parse_ring_spec("Z4[x]/(x^2") {
            Err(SpecError::Syntax { offset, expected }) => {
                assert_eq!(offset, 10);
                assert!(expected.contains(&"')'".to_string()));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_ring_spec(""), Err(SpecError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_ring_spec("Z4 Z2"), Err(SpecError::Syntax { offset: 3, .. })));
        assert!(matches!(parse_ring_spec("Q4"), Err(SpecError::Syntax { .. })));
    }

    #[test]
    fn semantic_errors() {
        assert!(matches!(parse_ring_spec("GF(6)"), Err(SpecError::Semantic(_))));
        assert!(matches!(parse_ring_spec("Z1"), Err(SpecError::Semantic(_))));
        assert!(matches!(parse_ring_spec("Z0"), Err(SpecError::Semantic(_))));
        assert!(matches!(parse_ring_spec("Z2[x]/(y^2)"), Err(SpecError::Semantic(_))));
        assert!(matches!(parse_ring_spec("Z2[x,x]/(x)"), Err(SpecError::Semantic(_))));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(49), Some((7, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(11), Some((11, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn bare_polynomial() {
        let p = Polynomial::parse("y^3-y+1", &['y'], 4).unwrap();
        assert_eq!(p.format_with(&['y']), "y^3+3*y+1");
        assert_eq!(p.degree(), 3);
    }
}
