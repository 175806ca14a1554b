//! Multivariate polynomials over a prime field.
//!
//! Polynomials are stored as term lists sorted strictly decreasing in the
//! monomial order of their [`PolyRing`], with no zero coefficients. Two equal
//! polynomials therefore have identical term sequences, and structural
//! equality is mathematical equality.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{AlgebraError, Result};

/// Default characteristic of the coefficient field.
pub const DEFAULT_CHARACTERISTIC: u32 = 101;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= p as u64 {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic in the prime field `F_p`. Residues are kept in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(AlgebraError::NonPrime(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn characteristic(self) -> u32 {
        self.p
    }

    /// Reduces an arbitrary signed integer into `0..p`.
    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn pow(self, a: u32, mut e: u64) -> u32 {
        let mut base = a % self.p;
        let mut acc = 1u32 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }
}

/// Exponent vector together with its cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u16>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self { exps: vec![0; nvars], degree: 0 }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self { exps, degree }
    }

    pub fn variable(nvars: usize, index: usize, exponent: u16) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = exponent;
        Self { exps, degree: exponent as u32 }
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect();
        Some(Monomial { exps, degree: other.degree - self.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u16> = self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect();
        Monomial::from_exponents(exps)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with a positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, e)| **e > 0).map(|(i, _)| i).collect()
    }
}

/// Supported monomial orders.
///
/// `Elimination(k)` is the block order where the first `k` variables form a
/// block compared first (degrevlex inside the block), and the remaining
/// variables are compared by degrevlex afterwards.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonoOrder {
    DegRevLex,
    Elimination(usize),
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for i in (0..a.len()).rev() {
        if a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonoOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonoOrder::DegRevLex => match a.degree.cmp(&b.degree) {
                Ordering::Equal => {
                    for i in (0..a.exps.len()).rev() {
                        if a.exps[i] != b.exps[i] {
                            return b.exps[i].cmp(&a.exps[i]);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            },
            MonoOrder::Elimination(k) => match degrevlex(&a.exps[..k], &b.exps[..k]) {
                Ordering::Equal => degrevlex(&a.exps[k..], &b.exps[k..]),
                o => o,
            },
        }
    }
}

/// Compares two monomials under degrevlex, failing on a length mismatch.
pub fn mono_cmp(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(AlgebraError::Usage(format!("monomials have {} and {} variables", a.nvars(), b.nvars())));
    }
    Ok(MonoOrder::DegRevLex.cmp(a, b))
}

/// The ambient polynomial ring `F_p[x1..xn]` with a fixed monomial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PolyRing {
    nvars: usize,
    field: PrimeField,
    order: MonoOrder,
}

impl PolyRing {
    pub fn new(nvars: usize, characteristic: u32) -> Result<Self> {
        Ok(Self { nvars, field: PrimeField::new(characteristic)?, order: MonoOrder::DegRevLex })
    }

    pub fn with_order(nvars: usize, field: PrimeField, order: MonoOrder) -> Self {
        Self { nvars, field, order }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.p
    }

    #[inline]
    pub fn order(&self) -> MonoOrder {
        self.order
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(*self)
    }

    pub fn one(&self) -> Poly {
        Poly::constant(*self, 1)
    }

    pub fn var(&self, i: usize) -> Poly {
        Poly::monomial(*self, Monomial::variable(self.nvars, i, 1), 1)
    }

    /// All variables of the ring as polynomials.
    pub fn variables(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.var(i)).collect()
    }

    pub fn parse(&self, text: &str) -> Result<Poly> {
        parse_poly(*self, text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub mono: Monomial,
    pub coeff: u32,
}

/// A polynomial in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    ring: PolyRing,
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero(ring: PolyRing) -> Self {
        Self { ring, terms: Vec::new() }
    }

    pub fn constant(ring: PolyRing, c: u32) -> Self {
        Self::monomial(ring, Monomial::one(ring.nvars), c)
    }

    pub fn monomial(ring: PolyRing, mono: Monomial, coeff: u32) -> Self {
        let coeff = coeff % ring.characteristic();
        if coeff == 0 {
            return Self::zero(ring);
        }
        Self { ring, terms: vec![Term { mono, coeff }] }
    }

    /// Builds a polynomial from arbitrary `(coefficient, exponents)` pairs,
    /// combining duplicates and discarding zeros.
    pub fn from_terms(ring: PolyRing, raw: impl IntoIterator<Item = (i64, Vec<u16>)>) -> Self {
        let f = ring.field;
        let terms = raw
            .into_iter()
            .map(|(c, e)| {
                assert_eq!(e.len(), ring.nvars, "exponent vector length");
                Term { mono: Monomial::from_exponents(e), coeff: f.from_i64(c) }
            })
            .collect();
        Self::canonicalize(ring, terms)
    }

    fn canonicalize(ring: PolyRing, mut terms: Vec<Term>) -> Self {
        terms.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        let f = ring.field;
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = f.add(last.coeff, t.coeff),
                _ => {
                    if let Some(last) = out.last() {
                        if last.coeff == 0 {
                            out.pop();
                        }
                    }
                    out.push(t)
                }
            }
        }
        out.retain(|t| t.coeff != 0);
        Self { ring, terms: out }
    }

    #[inline]
    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.coeff)
    }

    /// Maximum total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|s| s.mono.degree == t.mono.degree),
        }
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_unit()
    }

    /// Single term with coefficient 1.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Coefficient of the constant term.
    pub fn constant_coefficient(&self) -> u32 {
        match self.terms.last() {
            Some(t) if t.mono.is_one() => t.coeff,
            _ => 0,
        }
    }

    pub fn coefficient_of(&self, mono: &Monomial) -> u32 {
        self.terms.iter().find(|t| &t.mono == mono).map(|t| t.coeff).unwrap_or(0)
    }

    /// Homogeneous component of the given degree.
    pub fn homogeneous_part(&self, degree: u32) -> Poly {
        Poly { ring: self.ring, terms: self.terms.iter().filter(|t| t.mono.degree == degree).cloned().collect() }
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring.nvars != other.ring.nvars || self.ring.field != other.ring.field {
            return Err(AlgebraError::RingMismatch(format!(
                "F_{}[{} vars] vs F_{}[{} vars]",
                self.ring.characteristic(),
                self.ring.nvars,
                other.ring.characteristic(),
                other.ring.nvars
            )));
        }
        if self.ring.order != other.ring.order {
            return Err(AlgebraError::RingMismatch("monomial orders differ".into()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.add(other))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.sub(other))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.mul(other))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled_term(other, 1, None);
        r
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut r = self.clone();
        r.add_scaled_term(other, self.ring.field.neg(1), None);
        r
    }

    pub fn neg(&self) -> Poly {
        self.scale(self.ring.field.neg(1))
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = self.ring.field;
        let c = c % f.p;
        if c == 0 {
            return Poly::zero(self.ring);
        }
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|t| Term { mono: t.mono.clone(), coeff: f.mul(t.coeff, c) }).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Monomial, c: u32) -> Poly {
        let f = self.ring.field;
        let c = c % f.p;
        if c == 0 {
            return Poly::zero(self.ring);
        }
        Poly {
            ring: self.ring,
            terms: self.terms.iter().map(|t| Term { mono: t.mono.mul(mono), coeff: f.mul(t.coeff, c) }).collect(),
        }
    }

    /// `self += c * mono * other`, a linear merge since the order is multiplicative.
    pub fn add_scaled_term(&mut self, other: &Poly, c: u32, mono: Option<&Monomial>) {
        debug_assert_eq!(self.ring.nvars, other.ring.nvars);
        let f = self.ring.field;
        let c = c % f.p;
        if c == 0 || other.is_zero() {
            return;
        }
        let ring = self.ring;
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + other.terms.len());
        let mut a = lhs.into_iter().peekable();
        let mut b = other.terms.iter().map(|t| Term {
            mono: match mono {
                Some(m) => t.mono.mul(m),
                None => t.mono.clone(),
            },
            coeff: f.mul(t.coeff, c),
        });
        let mut next_b = b.next();
        loop {
            match (a.peek(), &next_b) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap()),
                (None, Some(_)) => {
                    out.push(next_b.take().unwrap());
                    next_b = b.next();
                }
                (Some(x), Some(y)) => match ring.cmp(&x.mono, &y.mono) {
                    Ordering::Greater => out.push(a.next().unwrap()),
                    Ordering::Less => {
                        out.push(next_b.take().unwrap());
                        next_b = b.next();
                    }
                    Ordering::Equal => {
                        let mut x = a.next().unwrap();
                        x.coeff = f.add(x.coeff, next_b.take().unwrap().coeff);
                        if x.coeff != 0 {
                            out.push(x);
                        }
                        next_b = b.next();
                    }
                },
            }
        }
        self.terms = out;
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut acc = Poly::zero(self.ring);
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        for t in &small.terms {
            acc.add_scaled_term(large, t.coeff, Some(&t.mono));
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn make_monic(&self) -> Poly {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.field.inv(c)),
        }
    }

    /// Re-expresses the polynomial in another ring, sending variable `i` to
    /// variable `var_map[i]` of the target.
    pub fn map_into(&self, target: PolyRing, var_map: &[usize]) -> Poly {
        assert_eq!(var_map.len(), self.ring.nvars);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut exps = vec![0u16; target.nvars];
                for (i, &e) in t.mono.exps.iter().enumerate() {
                    exps[var_map[i]] += e;
                }
                Term { mono: Monomial::from_exponents(exps), coeff: t.coeff % target.characteristic() }
            })
            .collect();
        Poly::canonicalize(target, terms)
    }

    /// Same polynomial under a different order of the same variables.
    pub fn with_ring(&self, target: PolyRing) -> Poly {
        assert_eq!(target.nvars, self.ring.nvars);
        let ident: Vec<usize> = (0..self.ring.nvars).collect();
        self.map_into(target, &ident)
    }

    /// Exact quotient `self / divisor` in the polynomial ring, if it exists.
    pub fn exact_div(&self, divisor: &Poly) -> Option<Poly> {
        let lt = divisor.leading_term()?;
        let f = self.ring.field;
        let inv = f.inv(lt.coeff);
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.ring);
        while let Some(t) = rem.leading_term().cloned() {
            let m = lt.mono.quotient_of(&t.mono)?;
            let c = f.mul(t.coeff, inv);
            quot.add_scaled_term(&Poly::monomial(self.ring, m.clone(), 1), c, None);
            rem.add_scaled_term(divisor, f.neg(c), Some(&m));
        }
        Some(quot)
    }

    /// Evaluates variables named in `subs` (index, value) by substitution.
    pub fn substitute(&self, index: usize, value: &Poly) -> Poly {
        let mut acc = Poly::zero(self.ring);
        for t in &self.terms {
            let e = t.mono.exps[index];
            let mut exps = t.mono.exps.clone();
            exps[index] = 0;
            let rest = Poly::monomial(self.ring, Monomial::from_exponents(exps), t.coeff);
            acc = acc.add(&rest.mul(&value.pow(e as u32)));
        }
        acc
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(out, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(out, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if t.coeff != 1 || t.mono.is_one() {
                factors.push(t.coeff.to_string());
            }
            for (i, &e) in t.mono.exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", i + 1)),
                    _ => factors.push(format!("x{}^{}", i + 1, e)),
                }
            }
            write!(out, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

struct Lexer<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    src: &'a str,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Self { chars: src.char_indices().filter(|(_, c)| !c.is_whitespace()).collect(), pos: 0, src }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map(|&(i, _)| i + 1).unwrap_or(self.src.len() + 1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(AlgebraError::Parse { column: self.column(), message: message.into() })
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        let mut v: u64 = 0;
        while let Some(c) = self.peek() {
            if let Some(d) = c.to_digit(10) {
                v = v.checked_mul(10).and_then(|v| v.checked_add(d as u64)).ok_or_else(|| AlgebraError::Parse {
                    column: self.column(),
                    message: "integer too large".into(),
                })?;
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return self.err("expected a number");
        }
        Ok(v)
    }
}

fn parse_poly(ring: PolyRing, text: &str) -> Result<Poly> {
    let f = ring.field;
    let mut lx = Lexer::new(text);
    let mut terms: Vec<Term> = Vec::new();
    if lx.peek().is_none() {
        return lx.err("empty polynomial");
    }
    let mut first = true;
    while lx.peek().is_some() {
        let mut sign = 1i64;
        match lx.peek() {
            Some('+') => {
                lx.pos += 1;
            }
            Some('-') => {
                sign = -1;
                lx.pos += 1;
            }
            _ if first => {}
            Some(c) => return lx.err(format!("expected '+' or '-', found '{c}'")),
            None => unreachable!(),
        }
        first = false;
        let mut coeff = f.from_i64(sign);
        let mut exps = vec![0u16; ring.nvars];
        loop {
            match lx.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let v = lx.number()?;
                    coeff = f.mul(coeff, (v % f.p as u64) as u32);
                }
                Some('x') => {
                    let start = lx.column();
                    lx.pos += 1;
                    let idx = lx.number()? as usize;
                    if idx == 0 || idx > ring.nvars {
                        return Err(AlgebraError::Parse {
                            column: start,
                            message: format!("variable x{idx} outside x1..x{}", ring.nvars),
                        });
                    }
                    let mut e = 1u64;
                    if lx.peek() == Some('^') {
                        lx.pos += 1;
                        e = lx.number()?;
                    }
                    let slot = &mut exps[idx - 1];
                    let total = *slot as u64 + e;
                    if total > u16::MAX as u64 {
                        return lx.err("exponent too large");
                    }
                    *slot = total as u16;
                }
                Some(c) => return lx.err(format!("unexpected character '{c}'")),
                None => return lx.err("dangling sign"),
            }
            if lx.peek() == Some('*') {
                lx.pos += 1;
                continue;
            }
            break;
        }
        terms.push(Term { mono: Monomial::from_exponents(exps), coeff });
    }
    Ok(Poly::canonicalize(ring, terms))
}
