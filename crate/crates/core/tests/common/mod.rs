#![allow(dead_code)]

use levelcert::module::QuotientRing;
use levelcert::{IdealData, Monomial, Poly, PolyRing};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn ring(n: usize) -> PolyRing {
    PolyRing::new(n, 101).unwrap()
}

pub fn qring(n: usize, gens: &[&str]) -> QuotientRing {
    let p = ring(n);
    if gens.is_empty() {
        return QuotientRing::polynomial(p);
    }
    QuotientRing::new(IdealData::new(p, gens.iter().map(|g| p.parse(g).unwrap()).collect()).unwrap()).unwrap()
}

pub fn polys(p: PolyRing, s: &[&str]) -> Vec<Poly> {
    s.iter().map(|e| p.parse(e).unwrap()).collect()
}

fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u16>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in exponent_vectors(n - 1, d - e) {
            rest.insert(0, e as u16);
            out.push(rest);
        }
    }
    out
}

/// Random homogeneous polynomial of degree `d` with at most `terms` terms.
pub fn random_homogeneous(p: PolyRing, d: u32, terms: usize, rng: &mut StdRng) -> Poly {
    let monos = exponent_vectors(p.nvars(), d);
    let mut f = p.zero();
    for _ in 0..terms {
        let m = &monos[rng.gen_range(0..monos.len())];
        let c = rng.gen_range(1..p.characteristic());
        f = f.add(&Poly::monomial(p, Monomial::from_exponents(m.clone()), c));
    }
    f
}

pub fn random_nonzero_homogeneous(p: PolyRing, d: u32, terms: usize, rng: &mut StdRng) -> Poly {
    loop {
        let f = random_homogeneous(p, d, terms, rng);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random monomial of degree `d`.
pub fn random_monomial(p: PolyRing, d: u32, rng: &mut StdRng) -> Poly {
    let monos = exponent_vectors(p.nvars(), d);
    Poly::monomial(p, Monomial::from_exponents(monos[rng.gen_range(0..monos.len())].clone()), 1)
}

/// A random proper homogeneous quotient with generators of degree >= 2.
pub fn random_quotient(n: usize, rng: &mut StdRng) -> QuotientRing {
    let p = ring(n);
    let count = rng.gen_range(0..3);
    let gens: Vec<Poly> = (0..count)
        .map(|_| {
            let d = rng.gen_range(2..4);
            if rng.gen_bool(0.5) {
                random_monomial(p, d, rng)
            } else {
                random_nonzero_homogeneous(p, d, 2, rng)
            }
        })
        .collect();
    if gens.is_empty() {
        QuotientRing::polynomial(p)
    } else {
        QuotientRing::new(IdealData::new(p, gens).unwrap()).unwrap()
    }
}
