//! Buchberger's algorithm for submodules of free modules `P^r`.
//!
//! Vectors are compared position-over-term: the first nonzero position is
//! the leading position (lower index is larger), ties are broken by the
//! monomial order of the coefficient ring. An ideal is the rank-one case.
//!
//! The engine is incremental: generators can be added between calls to
//! [`GbEngine::complete_to_degree`], which makes it usable for computing
//! minimal generating sets of graded submodules degree by degree.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::poly::{Monomial, Poly, PolyRing};

/// An element of a free module `P^r`, one polynomial per position.
pub type Vector = Vec<Poly>;

pub fn zero_vector(ring: PolyRing, rank: usize) -> Vector {
    vec![Poly::zero(ring); rank]
}

pub fn is_zero_vector(v: &[Poly]) -> bool {
    v.iter().all(Poly::is_zero)
}

/// Leading position and monomial of a nonzero vector.
pub fn leading(v: &[Poly]) -> Option<(usize, &Monomial, u32)> {
    v.iter().enumerate().find_map(|(i, p)| p.leading_term().map(|t| (i, &t.mono, t.coeff)))
}

/// `v += c * mono * w`.
pub fn axpy(v: &mut [Poly], c: u32, mono: Option<&Monomial>, w: &[Poly]) {
    for (a, b) in v.iter_mut().zip(w) {
        if !b.is_zero() {
            a.add_scaled_term(b, c, mono);
        }
    }
}

pub fn scale_vector(v: &[Poly], c: u32) -> Vector {
    v.iter().map(|p| p.scale(c)).collect()
}

/// Degree of a homogeneous vector with respect to the given twists.
pub fn vector_degree(v: &[Poly], twists: &[i32]) -> Option<i64> {
    v.iter().zip(twists).find_map(|(p, &t)| p.degree().map(|d| d as i64 + t as i64))
}

pub fn is_homogeneous_vector(v: &[Poly], twists: &[i32]) -> bool {
    let mut deg = None;
    for (p, &t) in v.iter().zip(twists) {
        if p.is_zero() {
            continue;
        }
        if !p.is_homogeneous() {
            return false;
        }
        let d = p.degree().unwrap() as i64 + t as i64;
        match deg {
            None => deg = Some(d),
            Some(e) if e != d => return false,
            _ => {}
        }
    }
    true
}

#[derive(Clone, Debug)]
struct Elem {
    v: Vector,
    pos: usize,
    lm: Monomial,
    degree: i64,
    group: u32,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: i64,
}

/// Incremental Gröbner basis computation for a submodule of `P^r`.
#[derive(Clone, Debug)]
pub struct GbEngine {
    ring: PolyRing,
    rank: usize,
    twists: Vec<i32>,
    basis: Vec<Elem>,
    pairs: Vec<Pair>,
    pending: HashSet<(usize, usize)>,
    completed_to: Option<i64>,
}

impl GbEngine {
    pub fn new(ring: PolyRing, rank: usize) -> Self {
        Self::with_twists(ring, vec![0; rank])
    }

    pub fn with_twists(ring: PolyRing, twists: Vec<i32>) -> Self {
        Self {
            ring,
            rank: twists.len(),
            twists,
            basis: Vec::new(),
            pairs: Vec::new(),
            pending: HashSet::new(),
            completed_to: None,
        }
    }

    pub fn ring(&self) -> PolyRing {
        self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    /// Adds a generator. Elements sharing a nonzero `group` are assumed to
    /// already form a Gröbner basis among themselves, so their mutual
    /// S-pairs are skipped.
    pub fn add_generator(&mut self, v: Vector, group: u32) {
        assert_eq!(v.len(), self.rank, "vector rank");
        let v = self.reduce(&v);
        if is_zero_vector(&v) {
            return;
        }
        self.insert(v, group);
        self.completed_to = None;
    }

    fn insert(&mut self, v: Vector, group: u32) {
        let (pos, lm, lc) = {
            let (p, m, c) = leading(&v).expect("nonzero");
            (p, m.clone(), c)
        };
        let v = if lc == 1 { v } else { scale_vector(&v, self.ring.field().inv(lc)) };
        let degree = lm.degree() as i64 + self.twists[pos] as i64;
        let idx = self.basis.len();
        for (i, e) in self.basis.iter().enumerate() {
            if e.pos != pos {
                continue;
            }
            if group != 0 && e.group == group {
                continue;
            }
            // Product criterion holds only for rank-one modules.
            if self.rank == 1 && e.lm.is_coprime(&lm) {
                continue;
            }
            let lcm = e.lm.lcm(&lm);
            let degree = lcm.degree() as i64 + self.twists[pos] as i64;
            self.pairs.push(Pair { i, j: idx, lcm, degree });
            self.pending.insert((i, idx));
        }
        self.basis.push(Elem { v, pos, lm, degree, group });
    }

    fn next_pair(&mut self, max_degree: Option<i64>) -> Option<Pair> {
        let ring = self.ring;
        let mut best: Option<usize> = None;
        for (k, p) in self.pairs.iter().enumerate() {
            if let Some(d) = max_degree {
                if p.degree > d {
                    continue;
                }
            }
            best = match best {
                None => Some(k),
                Some(b) => {
                    let q = &self.pairs[b];
                    let ord = p
                        .degree
                        .cmp(&q.degree)
                        .then_with(|| ring.cmp(&p.lcm, &q.lcm))
                        .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)));
                    if ord == Ordering::Less {
                        Some(k)
                    } else {
                        Some(b)
                    }
                }
            };
        }
        best.map(|k| self.pairs.swap_remove(k))
    }

    fn chain_criterion(&self, pair: &Pair) -> bool {
        let pos = self.basis[pair.i].pos;
        self.basis.iter().enumerate().any(|(k, e)| {
            if k == pair.i || k == pair.j || e.pos != pos || !e.lm.divides(&pair.lcm) {
                return false;
            }
            let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
            !self.pending.contains(&key(pair.i, k)) && !self.pending.contains(&key(pair.j, k))
        })
    }

    /// Processes all S-pairs whose degree is at most `max_degree`.
    pub fn complete_to_degree(&mut self, max_degree: Option<i64>) {
        if let (Some(done), Some(d)) = (self.completed_to, max_degree) {
            if done >= d && !self.pairs.iter().any(|p| p.degree <= d) {
                return;
            }
        }
        while let Some(pair) = self.next_pair(max_degree) {
            self.pending.remove(&(pair.i, pair.j));
            if self.chain_criterion(&pair) {
                continue;
            }
            let s = self.s_vector(&pair);
            let h = self.reduce(&s);
            if !is_zero_vector(&h) {
                self.insert(h, 0);
            }
        }
        self.completed_to = max_degree.or(Some(i64::MAX));
    }

    pub fn complete(&mut self) {
        self.complete_to_degree(None);
    }

    fn s_vector(&self, pair: &Pair) -> Vector {
        let a = &self.basis[pair.i];
        let b = &self.basis[pair.j];
        let ma = a.lm.quotient_of(&pair.lcm).expect("lcm");
        let mb = b.lm.quotient_of(&pair.lcm).expect("lcm");
        let mut s = zero_vector(self.ring, self.rank);
        axpy(&mut s, 1, Some(&ma), &a.v);
        axpy(&mut s, self.ring.field().neg(1), Some(&mb), &b.v);
        s
    }

    fn find_reducer(&self, pos: usize, mono: &Monomial) -> Option<usize> {
        self.basis.iter().position(|e| e.pos == pos && e.lm.divides(mono))
    }

    /// Full reduction of `v` by the current basis.
    pub fn reduce(&self, v: &[Poly]) -> Vector {
        let f = self.ring.field();
        let mut work: Vector = v.to_vec();
        for pos in 0..self.rank {
            if work[pos].is_zero() {
                continue;
            }
            let mut rest = Poly::zero(self.ring);
            while let Some(t) = work[pos].leading_term().cloned() {
                match self.find_reducer(pos, &t.mono) {
                    Some(k) => {
                        let e = &self.basis[k];
                        let m = e.lm.quotient_of(&t.mono).expect("divides");
                        axpy(&mut work, f.neg(t.coeff), Some(&m), &e.v);
                    }
                    None => {
                        rest.add_scaled_term(&Poly::monomial(self.ring, t.mono.clone(), t.coeff), 1, None);
                        let lead = Poly::monomial(self.ring, t.mono, t.coeff);
                        work[pos] = work[pos].sub(&lead);
                    }
                }
            }
            work[pos] = rest;
        }
        work
    }

    pub fn contains(&self, v: &[Poly]) -> bool {
        is_zero_vector(&self.reduce(v))
    }

    /// Leading positions and monomials of the current basis.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.basis.iter().map(|e| (e.pos, e.lm.clone())).collect()
    }

    /// The reduced Gröbner basis: minimal, monic, tail-reduced, sorted by
    /// position and then by increasing leading monomial.
    pub fn reduced_basis(&self) -> Vec<Vector> {
        let mut keep: Vec<usize> = Vec::new();
        for (i, e) in self.basis.iter().enumerate() {
            let redundant = self
                .basis
                .iter()
                .enumerate()
                .any(|(k, o)| k != i && o.pos == e.pos && o.lm.divides(&e.lm) && (o.lm != e.lm || k < i));
            if !redundant {
                keep.push(i);
            }
        }
        let minimal = GbEngine {
            ring: self.ring,
            rank: self.rank,
            twists: self.twists.clone(),
            basis: keep.iter().map(|&i| self.basis[i].clone()).collect(),
            pairs: Vec::new(),
            pending: HashSet::new(),
            completed_to: None,
        };
        let f = self.ring.field();
        let mut out: Vec<(usize, Monomial, Vector)> = Vec::new();
        for (k, e) in minimal.basis.iter().enumerate() {
            // Tail-reduce against the other elements only.
            let mut others = minimal.clone();
            others.basis.remove(k);
            let mut tail = e.v.clone();
            let lead = Poly::monomial(self.ring, e.lm.clone(), 1);
            tail[e.pos] = tail[e.pos].sub(&lead);
            let mut reduced = others.reduce(&tail);
            reduced[e.pos] = reduced[e.pos].add(&lead);
            debug_assert_eq!(leading(&reduced).map(|(p, _, c)| (p, c)), Some((e.pos, 1)));
            let _ = f;
            out.push((e.pos, e.lm.clone(), reduced));
        }
        let ring = self.ring;
        out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| ring.cmp(&a.1, &b.1)));
        out.into_iter().map(|(_, _, v)| v).collect()
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    /// Current (not necessarily reduced) basis vectors.
    pub fn basis(&self) -> Vec<Vector> {
        self.basis.iter().map(|e| e.v.clone()).collect()
    }

    /// Degree of the basis element at `index`.
    pub fn degree_of(&self, index: usize) -> i64 {
        self.basis[index].degree
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn ideal_groebner_basis(ring: PolyRing, gens: &[Poly]) -> Vec<Poly> {
    let mut eng = GbEngine::new(ring, 1);
    let mut sorted: Vec<&Poly> = gens.iter().filter(|g| !g.is_zero()).collect();
    sorted.sort_by(|a, b| {
        a.degree().cmp(&b.degree()).then_with(|| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()))
    });
    for g in sorted {
        eng.add_generator(vec![g.clone()], 0);
    }
    eng.complete();
    eng.reduced_basis().into_iter().map(|mut v| v.pop().unwrap()).collect()
}

/// Remainder of `f` modulo a Gröbner basis of an ideal.
pub fn reduce_by_ideal_basis(f: &Poly, basis: &[Poly]) -> Poly {
    let ring = f.ring();
    let fld = ring.field();
    let mut work = f.clone();
    let mut rest = Poly::zero(ring);
    while let Some(t) = work.leading_term().cloned() {
        match basis.iter().find(|g| g.leading_monomial().is_some_and(|m| m.divides(&t.mono))) {
            Some(g) => {
                let lt = g.leading_term().unwrap();
                let m = lt.mono.quotient_of(&t.mono).unwrap();
                let c = fld.mul(t.coeff, fld.inv(lt.coeff));
                work.add_scaled_term(g, fld.neg(c), Some(&m));
            }
            None => {
                let lead = Poly::monomial(ring, t.mono, t.coeff);
                work = work.sub(&lead);
                rest = rest.add(&lead);
            }
        }
    }
    rest
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_forms_reduce_to_variables() {
        let r = PolyRing::new(2, 101).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let gb = ideal_groebner_basis(r, &[x.add(&y), x.sub(&y)]);
        assert_eq!(gb, vec![y.clone(), x.clone()]);
    }

    #[test]
    fn module_membership() {
        let r = PolyRing::new(2, 101).unwrap();
        let (x, y) = (r.var(0), r.var(1));
        let mut eng = GbEngine::new(r, 1);
        eng.add_generator(vec![x.clone()], 0);
        eng.add_generator(vec![y.clone()], 0);
        eng.complete();
        assert!(eng.contains(&[x.mul(&y)]));
        assert!(!eng.contains(&[r.one()]));
    }

    #[test]
    fn cyclic_three_is_stable() {
        let r = PolyRing::new(3, 101).unwrap();
        let f1 = r.parse("x1 + x2 + x3").unwrap();
        let f2 = r.parse("x1*x2 + x2*x3 + x3*x1").unwrap();
        let f3 = r.parse("x1*x2*x3").unwrap();
        let a = ideal_groebner_basis(r, &[f1.clone(), f2.clone(), f3.clone()]);
        let b = ideal_groebner_basis(r, &[f3, f1, f2]);
        assert_eq!(a, b);
        // Symmetric functions: in(I) = (x1, x2^2, x3^3) in degrevlex.
        let degs: Vec<u32> = a.iter().map(|g| g.degree().unwrap()).collect();
        assert_eq!(degs, vec![1, 2, 3]);
    }
}
