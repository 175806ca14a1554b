//! Brute-force reference computations over `F_p`, degree by degree.
//!
//! Nothing here uses Gröbner bases. The graded piece `R_d` of
//! `R = P/J` is computed as `P_d` modulo the span of all monomial multiples
//! of the generators of `J`, and every question is reduced to ranks of
//! explicit matrices. These routines are slow and only meant for small
//! inputs in tests.

pub mod corpus;

use std::collections::HashMap;

use levelcert::complex::ChainComplex;
use levelcert::module::{GradedModule, QuotientRing};
use levelcert::{Monomial, Poly};

/// Plain Gaussian elimination over `F_p` with `u64` arithmetic.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

impl Echelon {
    pub fn new(p: u64, cols: usize) -> Self {
        Self { p, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &mut [u64]) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v[piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + (self.p - c) * r) % self.p;
                }
            }
        }
    }

    /// Inserts `v`; returns whether it was independent of the stored rows.
    pub fn insert(&mut self, mut v: Vec<u64>) -> bool {
        assert_eq!(v.len(), self.cols);
        self.reduce(&mut v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[piv], self.p);
        for x in v.iter_mut() {
            *x = *x * inv % self.p;
        }
        for row in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = (*x + (self.p - c) * y) % self.p;
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(piv);
        true
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }
}

pub fn rank_of(p: u64, cols: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> usize {
    let mut e = Echelon::new(p, cols);
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: i32) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    if d < 0 {
        return out;
    }
    fn rec(i: usize, left: u16, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, d as u16, &mut vec![0; n], &mut out);
    out
}

/// `R_d` as a quotient of `P_d`: monomial coordinates plus an echelon basis
/// of `J_d`.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    pub degree: i32,
    monomials: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, usize>,
    relations: Echelon,
    /// Monomial positions that are not pivots of `J_d`; they index a basis of `R_d`.
    free: Vec<usize>,
}

impl GradedPiece {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Coordinates of the degree-`d` polynomial `f` in the basis of `R_d`.
    pub fn coordinates(&self, f: &Poly) -> Vec<u64> {
        let mut v = vec![0u64; self.monomials.len()];
        for t in f.terms() {
            let i = self.index[t.mono.exponents()];
            v[i] = (v[i] + t.coeff as u64) % self.relations.p;
        }
        self.relations.reduce(&mut v);
        self.free.iter().map(|&i| v[i]).collect()
    }

    /// Basis monomials of `R_d`.
    pub fn basis(&self) -> Vec<Vec<u16>> {
        self.free.iter().map(|&i| self.monomials[i].clone()).collect()
    }
}

/// Degreewise model of `R = P/J`.
pub struct DegreewiseRing {
    ring: QuotientRing,
    pieces: HashMap<i32, GradedPiece>,
}

impl DegreewiseRing {
    pub fn new(ring: &QuotientRing) -> Self {
        Self { ring: ring.clone(), pieces: HashMap::new() }
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    fn characteristic(&self) -> u64 {
        self.ring.ambient().characteristic() as u64
    }

    pub fn piece(&mut self, d: i32) -> &GradedPiece {
        if !self.pieces.contains_key(&d) {
            let piece = self.build(d);
            self.pieces.insert(d, piece);
        }
        &self.pieces[&d]
    }

    fn build(&self, d: i32) -> GradedPiece {
        let n = self.ring.nvars();
        let p = self.characteristic();
        let monos = monomials(n, d);
        let index: HashMap<Vec<u16>, usize> = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut relations = Echelon::new(p, monos.len());
        for g in self.ring.defining().generators() {
            let gd = g.degree().unwrap() as i32;
            for m in monomials(n, d - gd) {
                let mono = Monomial::from_exponents(m);
                let mut v = vec![0u64; monos.len()];
                for t in g.terms() {
                    let i = index[mono.mul(&t.mono).exponents()];
                    v[i] = (v[i] + t.coeff as u64) % p;
                }
                relations.insert(v);
            }
        }
        let pivots: Vec<usize> = relations.pivots().to_vec();
        let free = (0..monos.len()).filter(|i| !pivots.contains(i)).collect();
        GradedPiece { degree: d, monomials: monos, index, relations, free }
    }

    pub fn dim(&mut self, d: i32) -> usize {
        if d < 0 {
            0
        } else {
            self.piece(d).dim()
        }
    }

    /// Whether a homogeneous polynomial vanishes in `R`.
    pub fn is_zero(&mut self, f: &Poly) -> bool {
        if f.is_zero() {
            return true;
        }
        let d = f.degree().unwrap() as i32;
        self.piece(d).coordinates(f).iter().all(|&c| c == 0)
    }

    fn basis_polys(&mut self, d: i32) -> Vec<Poly> {
        if d < 0 {
            return Vec::new();
        }
        let ambient = self.ring.ambient();
        self.piece(d).basis().into_iter().map(|m| Poly::monomial(ambient, Monomial::from_exponents(m), 1)).collect()
    }

    /// Matrix of a map between free modules restricted to degree `d`,
    /// as a list of image vectors (one per basis element of the source piece).
    pub fn map_in_degree(
        &mut self,
        source_twists: &[i32],
        target_twists: &[i32],
        entry: &dyn Fn(usize, usize) -> Poly,
        d: i32,
    ) -> (usize, Vec<Vec<u64>>) {
        let target_dim: usize = target_twists.iter().map(|&t| self.dim(d - t)).sum();
        let mut images = Vec::new();
        for (j, &s) in source_twists.iter().enumerate() {
            for m in self.basis_polys(d - s) {
                let mut v = Vec::with_capacity(target_dim);
                for (i, &t) in target_twists.iter().enumerate() {
                    if d - t < 0 {
                        continue;
                    }
                    let e = entry(i, j);
                    let img = m.mul(&e);
                    if img.is_zero() {
                        v.extend(std::iter::repeat_n(0, self.dim(d - t)));
                    } else {
                        v.extend(self.piece(d - t).coordinates(&img));
                    }
                }
                images.push(v);
            }
        }
        (target_dim, images)
    }
}

fn map_rank(ring: &mut DegreewiseRing, complex: &ChainComplex, i: usize, d: i32) -> usize {
    if i == 0 || i > complex.top() {
        return 0;
    }
    let dmap = complex.differential(i);
    let src = complex.module(i).twists().to_vec();
    let tgt = complex.module(i - 1).twists().to_vec();
    let (cols, rows) = ring.map_in_degree(&src, &tgt, &|r, c| dmap.entry(r, c).clone(), d);
    rank_of(ring.characteristic(), cols, rows)
}

/// `dim_k H_i(C)_d` by row reduction of the differentials on graded pieces.
pub fn homology_dimension(ring: &mut DegreewiseRing, complex: &ChainComplex, i: usize, d: i32) -> usize {
    let size: usize = complex.module(i).twists().iter().map(|&t| ring.dim(d - t)).sum();
    size - map_rank(ring, complex, i, d) - map_rank(ring, complex, i + 1, d)
}

/// Hilbert function of a presented module in degree `d`.
pub fn module_dimension(ring: &mut DegreewiseRing, module: &GradedModule, d: i32) -> usize {
    let gens = module.gens().twists().to_vec();
    let size: usize = gens.iter().map(|&t| ring.dim(d - t)).sum();
    let rels = module.rels();
    let src = rels.source().twists().to_vec();
    let (cols, rows) = ring.map_in_degree(&src, &gens, &|r, c| rels.entry(r, c).clone(), d);
    size - rank_of(ring.characteristic(), cols, rows)
}

/// Whether `R` has a nonzero socle element in some degree `<= max_degree`.
pub fn has_socle(ring: &mut DegreewiseRing, max_degree: i32) -> bool {
    let vars = ring.ring().ambient().variables();
    (0..=max_degree).any(|d| {
        let dim = ring.dim(d);
        if dim == 0 {
            return false;
        }
        // Kernel of r ↦ (x_1 r, ..., x_n r) on R_d.
        let twists: Vec<i32> = vec![-1; vars.len()];
        let (cols, rows) = ring.map_in_degree(&[0], &twists, &|i, _| vars[i].clone(), d);
        rank_of(ring.characteristic(), cols, rows) < dim
    })
}

/// Whether multiplication by a linear form is injective on `R_d` for all `d <= max_degree`.
pub fn is_regular_through(ring: &mut DegreewiseRing, form: &Poly, max_degree: i32) -> bool {
    (0..=max_degree).all(|d| {
        let dim = ring.dim(d);
        let (cols, rows) = ring.map_in_degree(&[0], &[-1], &|_, _| form.clone(), d);
        rank_of(ring.characteristic(), cols, rows) == dim
    })
}

/// Depth of `R` by socle detection and reduction modulo regular linear
/// forms, checking degrees up to `max_degree`. Candidate forms are the
/// variables and sums `x_i + c·x_j` for small `c`.
pub fn depth_by_regular_forms(ring: &QuotientRing, max_degree: i32) -> usize {
    let mut current = ring.clone();
    let mut depth = 0;
    loop {
        let mut model = DegreewiseRing::new(&current);
        if current.is_field() || has_socle(&mut model, max_degree) {
            return depth;
        }
        let ambient = current.ambient();
        let vars = ambient.variables();
        let mut candidates: Vec<Poly> = vars.clone();
        for i in 0..vars.len() {
            for j in 0..vars.len() {
                if i != j {
                    for c in 1..4u32 {
                        candidates.push(vars[i].add(&vars[j].scale(c)));
                    }
                }
            }
        }
        let Some(form) =
            candidates.into_iter().find(|f| !model.is_zero(f) && is_regular_through(&mut model, f, max_degree))
        else {
            return depth;
        };
        let ideal = current.defining().sum(&levelcert::IdealData::new(ambient, vec![form]).unwrap());
        current = QuotientRing::new(ideal).expect("proper quotient");
        depth += 1;
    }
}

/// Whether `f` lies in the defining ideal of `ring`, decided in degree `deg f`.
pub fn in_ideal_degreewise(f: &Poly, ring: &QuotientRing) -> bool {
    DegreewiseRing::new(ring).is_zero(f)
}

/// Free rank of a module by exhaustive search: enumerate every homogeneous
/// homomorphism `M -> R` in the degrees that can hit a unit, and return the
/// largest rank of the constant pairing matrix over tuples of them. Meant for
/// tiny characteristic and at most two generators.
pub fn frank_brute_force(module: &GradedModule) -> usize {
    let ring = module.ring().clone();
    let mut model = DegreewiseRing::new(&ring);
    let p = ring.ambient().characteristic() as u64;
    let gens = module.gens().twists().to_vec();
    let g = gens.len();
    let rels = module.rels();
    let rel_twists = rels.source().twists().to_vec();
    let mut rows: Vec<Vec<u64>> = Vec::new();
    let mut degrees: Vec<i32> = gens.iter().map(|t| -t).collect();
    degrees.sort_unstable();
    degrees.dedup();
    for e in degrees {
        // φ is given by w_j ∈ R_{e + t_j}; unknowns are the coordinates of all w_j.
        let blocks: Vec<(usize, Vec<Poly>)> = gens
            .iter()
            .map(|&t| {
                let basis = model.basis_polys(e + t);
                (basis.len(), basis)
            })
            .collect();
        let unknowns: usize = blocks.iter().map(|b| b.0).sum();
        if unknowns == 0 {
            continue;
        }
        // Constraint: Σ_j w_j rel[j][k] = 0 in R_{e + s_k} for every relation k.
        let mut equations: Vec<Vec<u64>> = Vec::new();
        for (k, &s) in rel_twists.iter().enumerate() {
            let dim = model.dim(e + s);
            if dim == 0 {
                continue;
            }
            let mut columns: Vec<Vec<u64>> = Vec::new();
            for (j, (_, basis)) in blocks.iter().enumerate() {
                for b in basis {
                    let img = b.mul(rels.entry(j, k));
                    columns.push(if img.is_zero() { vec![0; dim] } else { model.piece(e + s).coordinates(&img) });
                }
            }
            for r in 0..dim {
                equations.push(columns.iter().map(|c| c[r]).collect());
            }
        }
        // Enumerate the solution space by brute force over F_p^unknowns.
        let total = (p as u128).pow(unknowns as u32);
        assert!(total <= 1 << 20, "brute-force search space too large");
        for code in 0..total {
            let mut x = Vec::with_capacity(unknowns);
            let mut c = code;
            for _ in 0..unknowns {
                x.push((c % p as u128) as u64);
                c /= p as u128;
            }
            if !equations.iter().all(|eq| eq.iter().zip(&x).map(|(a, b)| a * b % p).sum::<u64>() % p == 0) {
                continue;
            }
            // Constant part of φ(e_j): nonzero only when e + t_j = 0.
            let mut row = Vec::with_capacity(g);
            let mut offset = 0;
            for (j, (len, basis)) in blocks.iter().enumerate() {
                let constant = if e + gens[j] == 0 && *len == 1 && basis[0].is_constant() { x[offset] } else { 0 };
                row.push(constant);
                offset += len;
            }
            if row.iter().any(|&v| v != 0) {
                rows.push(row);
            }
        }
    }
    // Largest rank over tuples of at most g maps equals the rank of all rows,
    // but search tuples explicitly to stay definition-level.
    let mut best = 0;
    for a in 0..rows.len() {
        best = best.max(rank_of(p, g, [rows[a].clone()]));
        for b in a + 1..rows.len() {
            best = best.max(rank_of(p, g, [rows[a].clone(), rows[b].clone()]));
            if best == g.min(2) {
                return best;
            }
        }
    }
    best
}
