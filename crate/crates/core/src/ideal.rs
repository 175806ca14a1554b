//! Ideals of the ambient polynomial ring and the usual ideal calculus.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::gb::{ideal_groebner_basis, reduce_by_ideal_basis};
use crate::poly::{MonoOrder, Poly, PolyRing};

/// Generators of an ideal together with a lazily computed reduced Gröbner
/// basis (degrevlex).
#[derive(Clone)]
pub struct IdealData {
    ring: PolyRing,
    generators: Vec<Poly>,
    gb: OnceLock<Vec<Poly>>,
}

impl fmt::Debug for IdealData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IdealData{}", self)
    }
}

impl fmt::Display for IdealData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

impl PartialEq for IdealData {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.gb() == other.gb()
    }
}

impl IdealData {
    pub fn new(ring: PolyRing, generators: Vec<Poly>) -> Result<Self> {
        if ring.order() != MonoOrder::DegRevLex {
            return Err(AlgebraError::Usage("ideals live in a degrevlex ring".into()));
        }
        for g in &generators {
            if g.ring() != ring {
                return Err(AlgebraError::RingMismatch(format!("generator {g} is not in the ideal's ring")));
            }
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Self { ring, generators, gb: OnceLock::new() })
    }

    /// Like [`IdealData::new`] but additionally requires homogeneous generators.
    pub fn homogeneous(ring: PolyRing, generators: Vec<Poly>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| !g.is_homogeneous()) {
            return Err(AlgebraError::NonHomogeneous(g.to_string()));
        }
        Self::new(ring, generators)
    }

    pub fn zero(ring: PolyRing) -> Self {
        Self { ring, generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: PolyRing) -> Self {
        Self { ring, generators: vec![ring.one()], gb: OnceLock::new() }
    }

    /// The homogeneous maximal ideal `(x1, ..., xn)`.
    pub fn maximal(ring: PolyRing) -> Self {
        Self { ring, generators: ring.variables(), gb: OnceLock::new() }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Poly::is_homogeneous)
    }

    /// All generators are single terms.
    pub fn is_monomial(&self) -> bool {
        self.generators.iter().all(Poly::is_monomial)
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// Reduced Gröbner basis, computed once.
    pub fn gb(&self) -> &[Poly] {
        self.gb.get_or_init(|| ideal_groebner_basis(self.ring, &self.generators))
    }

    pub fn normal_form(&self, f: &Poly) -> Poly {
        reduce_by_ideal_basis(f, self.gb())
    }

    pub fn contains(&self, f: &Poly) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &IdealData) -> bool {
        other.generators.iter().all(|g| self.contains(g))
    }

    pub fn is_proper(&self) -> bool {
        !self.gb().iter().any(Poly::is_unit)
    }

    pub fn sum(&self, other: &IdealData) -> IdealData {
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        IdealData { ring: self.ring, generators: gens, gb: OnceLock::new() }
    }

    pub fn product(&self, other: &IdealData) -> IdealData {
        let mut gens = Vec::new();
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.mul(b));
            }
        }
        IdealData { ring: self.ring, generators: gens, gb: OnceLock::new() }
    }

    pub fn power(&self, s: u32) -> IdealData {
        let mut acc = IdealData::unit(self.ring);
        for _ in 0..s {
            acc = acc.product(self);
            acc = IdealData { ring: self.ring, generators: acc.gb().to_vec(), gb: OnceLock::new() };
        }
        acc
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersection(&self, other: &IdealData) -> IdealData {
        let n = self.ring.nvars();
        let ext = PolyRing::with_order(n + 1, self.ring.field(), MonoOrder::Elimination(1));
        let lift: Vec<usize> = (1..=n).collect();
        let t = ext.var(0);
        let one_minus_t = ext.one().sub(&t);
        let mut gens: Vec<Poly> = Vec::new();
        for f in &self.generators {
            gens.push(f.map_into(ext, &lift).mul(&t));
        }
        for g in &other.generators {
            gens.push(g.map_into(ext, &lift).mul(&one_minus_t));
        }
        let gb = ideal_groebner_basis(ext, &gens);
        let back: Vec<Poly> = gb
            .into_iter()
            .filter(|g| g.terms().iter().all(|t| t.mono.exponents()[0] == 0))
            .map(|g| drop_first_variable(&g, self.ring))
            .collect();
        let raw = IdealData { ring: self.ring, generators: back, gb: OnceLock::new() };
        raw.canonical()
    }

    /// The same ideal generated by its reduced Gröbner basis.
    pub fn canonical(&self) -> IdealData {
        IdealData { ring: self.ring, generators: self.gb().to_vec(), gb: OnceLock::new() }
    }

    /// `(I : f) = { g : g·f ∈ I }`.
    pub fn quotient(&self, f: &Poly) -> Result<IdealData> {
        if f.is_zero() {
            return Err(AlgebraError::Usage("ideal quotient by zero".into()));
        }
        let principal = IdealData { ring: self.ring, generators: vec![f.clone()], gb: OnceLock::new() };
        let meet = self.intersection(&principal);
        let gens = meet
            .generators
            .iter()
            .map(|g| g.exact_div(f).ok_or_else(|| AlgebraError::Internal(format!("{g} not divisible by {f}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealData { ring: self.ring, generators: gens, gb: OnceLock::new() }.canonical())
    }

    /// `(I : J)` as the intersection of the colons by the generators of `J`.
    pub fn quotient_ideal(&self, other: &IdealData) -> Result<IdealData> {
        let mut acc: Option<IdealData> = None;
        for g in &other.generators {
            let q = self.quotient(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersection(&q),
            });
        }
        Ok(acc.unwrap_or_else(|| IdealData::unit(self.ring)))
    }

    /// `(I : J^∞)`, iterating colons until the chain stabilizes.
    pub fn saturation(&self, other: &IdealData) -> Result<IdealData> {
        let mut current = self.canonical();
        loop {
            let next = current.quotient_ideal(other)?;
            if next == current {
                return Ok(next);
            }
            current = next;
        }
    }

    /// `f ∈ √I`, decided by testing `1 ∈ I + (1 − y·f)` with a fresh variable `y`.
    pub fn radical_contains(&self, f: &Poly) -> bool {
        let n = self.ring.nvars();
        let ext = PolyRing::with_order(n + 1, self.ring.field(), MonoOrder::DegRevLex);
        let lift: Vec<usize> = (0..n).collect();
        let mut gens: Vec<Poly> = self.generators.iter().map(|g| g.map_into(ext, &lift)).collect();
        let y = ext.var(n);
        gens.push(ext.one().sub(&y.mul(&f.map_into(ext, &lift))));
        let gb = ideal_groebner_basis(ext, &gens);
        gb.iter().any(Poly::is_unit)
    }

    /// Krull dimension of `P/I` via the leading-term ideal: the largest set of
    /// variables containing the support of no leading monomial. The unit
    /// ideal reports `-1`.
    pub fn krull_dim(&self) -> i64 {
        if !self.is_proper() {
            return -1;
        }
        let n = self.ring.nvars();
        assert!(n < 26, "dimension search is exponential in the variable count");
        let masks: Vec<u32> =
            self.gb().iter().map(|g| support_mask(&g.leading_monomial().unwrap().support())).collect();
        let mut best = 0u32;
        for set in 0u32..(1u32 << n) {
            let size = set.count_ones();
            if size <= best {
                continue;
            }
            if masks.iter().all(|&m| m & !set != 0) {
                best = size;
            }
        }
        best as i64
    }

    pub fn generators_as_strings(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.to_string()).collect()
    }
}

pub(crate) fn support_mask(support: &[usize]) -> u32 {
    support.iter().fold(0u32, |m, &i| m | (1 << i))
}

fn drop_first_variable(f: &Poly, target: PolyRing) -> Poly {
    let raw = f.terms().iter().map(|t| {
        let e = t.mono.exponents();
        debug_assert_eq!(e[0], 0);
        (t.coeff as i64, e[1..].to_vec())
    });
    Poly::from_terms(target, raw)
}

/// Reduced Gröbner basis of the ideal, as a free function.
pub fn reduced_gb(ideal: &IdealData) -> Vec<Poly> {
    ideal.gb().to_vec()
}

pub fn normal_form(f: &Poly, ideal: &IdealData) -> Poly {
    ideal.normal_form(f)
}

pub fn ideal_intersection(a: &IdealData, b: &IdealData) -> IdealData {
    a.intersection(b)
}

pub fn ideal_quotient(a: &IdealData, f: &Poly) -> Result<IdealData> {
    a.quotient(f)
}

pub fn saturation(a: &IdealData, b: &IdealData) -> Result<IdealData> {
    a.saturation(b)
}

pub fn radical_membership(f: &Poly, ideal: &IdealData) -> bool {
    ideal.radical_contains(f)
}

pub fn krull_dim(ideal: &IdealData) -> i64 {
    ideal.krull_dim()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(r: PolyRing, gens: &[&str]) -> IdealData {
        IdealData::new(r, gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
    }

    #[test]
    fn gb_examples() {
        let r = PolyRing::new(2, 101).unwrap();
        let i = ideal(r, &["x1^2", "x1*x2"]);
        assert_eq!(i.gb(), &[r.parse("x1*x2").unwrap(), r.parse("x1^2").unwrap()]);
        let j = ideal(r, &["x1 + x2", "x1 - x2"]);
        assert_eq!(j.gb(), &[r.var(1), r.var(0)]);
        let r3 = PolyRing::new(3, 101).unwrap();
        let k = ideal(r3, &["x1*x2", "x1*x3"]);
        assert_eq!(k.gb().len(), 2);
        assert!(k.gb().contains(&r3.parse("x1*x2").unwrap()));
    }

    #[test]
    fn normal_forms() {
        let r = PolyRing::new(3, 101).unwrap();
        let i = ideal(r, &["x1*x2"]);
        assert!(i.normal_form(&r.parse("x1^2*x2").unwrap()).is_zero());
        let k = ideal(r, &["x1*x2", "x1*x3"]);
        assert_eq!(k.normal_form(&r.parse("x1^2").unwrap()), r.parse("x1^2").unwrap());
        for g in k.generators() {
            assert!(k.normal_form(g).is_zero());
        }
    }

    #[test]
    fn intersections() {
        let r = PolyRing::new(3, 101).unwrap();
        let a = ideal(r, &["x1"]);
        let b = ideal(r, &["x2", "x3"]);
        assert_eq!(a.intersection(&b), ideal(r, &["x1*x2", "x1*x3"]));
        assert_eq!(b.intersection(&b), b);
        let r2 = PolyRing::new(2, 101).unwrap();
        assert_eq!(ideal(r2, &["x1^2"]).intersection(&ideal(r2, &["x2^2"])), ideal(r2, &["x1^2*x2^2"]));
    }

    #[test]
    fn quotients_and_saturation() {
        let r = PolyRing::new(2, 101).unwrap();
        let i = ideal(r, &["x1*x2"]);
        assert_eq!(i.quotient(&r.var(0)).unwrap(), ideal(r, &["x2"]));
        assert_eq!(i.quotient(&r.one()).unwrap(), i);
        assert!(i.quotient(&r.zero()).is_err());
        let j = ideal(r, &["x1^2*x2"]);
        assert_eq!(j.saturation(&ideal(r, &["x1"])).unwrap(), ideal(r, &["x2"]));
    }

    #[test]
    fn radicals() {
        let r = PolyRing::new(2, 101).unwrap();
        assert!(ideal(r, &["x1^2"]).radical_contains(&r.var(0)));
        assert!(!ideal(r, &["x1^2"]).radical_contains(&r.var(1)));
        let i = ideal(r, &["x1^2", "x2^2"]);
        let f = r.parse("x1 + x2").unwrap();
        assert!(i.radical_contains(&f));
        assert!(i.contains(&f.pow(3)));
        assert!(!i.contains(&f.pow(2)));
    }

    #[test]
    fn dimensions() {
        let r = PolyRing::new(3, 101).unwrap();
        assert_eq!(ideal(r, &["x1*x2", "x1*x3"]).krull_dim(), 2);
        assert_eq!(IdealData::zero(r).krull_dim(), 3);
        assert_eq!(IdealData::maximal(r).krull_dim(), 0);
        assert_eq!(IdealData::unit(r).krull_dim(), -1);
    }
}
