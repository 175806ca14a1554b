//! Finite free chain complexes over a quotient ring.
//!
//! A complex is stored with homological degrees normalized to `0..=top`; the
//! original lowest degree is kept as `shift`. `differential(i)` is
//! `∂_i: F_i -> F_{i-1}` for `1 <= i <= top`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};
use crate::gb::{is_zero_vector, zero_vector, Vector};
use crate::module::{
    kernel_submodule, minimal_presentation, syzygies_with_degrees, FreeModule, GradedModule, ModMap, QuotientRing,
};
use crate::poly::Poly;

/// How a complex was built; the level engine only applies Koszul-specific
/// bounds to complexes it constructed itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Origin {
    General,
    Koszul(Vec<Poly>),
}

/// Homology in one degree, stored as a minimal presentation.
#[derive(Clone, Debug)]
pub struct HomologyModule {
    pub underlying: GradedModule,
    pub degree: usize,
}

impl HomologyModule {
    pub fn is_zero(&self) -> bool {
        self.underlying.gens().rank() == 0
    }

    pub fn min_gens(&self) -> usize {
        self.underlying.gens().rank()
    }
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: QuotientRing,
    shift: i32,
    modules: Vec<FreeModule>,
    diffs: Vec<ModMap>,
    origin: Origin,
    homology: Vec<OnceLock<HomologyModule>>,
}

impl PartialEq for ChainComplex {
    fn eq(&self, other: &Self) -> bool {
        self.shift == other.shift && self.modules == other.modules && self.diffs == other.diffs
    }
}

impl ChainComplex {
    /// Builds `F_lo <- ... <- F_{lo+len-1}`; `diffs[i]` maps degree `lo+i+1`
    /// to `lo+i`. Checks shapes and `∂² = 0`.
    pub fn new(ring: &QuotientRing, lo: i32, modules: Vec<FreeModule>, diffs: Vec<ModMap>) -> Result<Self> {
        let modules = if modules.is_empty() { vec![FreeModule::zero()] } else { modules };
        if diffs.len() + 1 != modules.len() {
            return Err(AlgebraError::Usage(format!(
                "{} modules need {} differentials, got {}",
                modules.len(),
                modules.len() - 1,
                diffs.len()
            )));
        }
        for (i, d) in diffs.iter().enumerate() {
            if d.source() != &modules[i + 1] || d.target() != &modules[i] {
                return Err(AlgebraError::Usage(format!("differential {} has the wrong shape", i + 1)));
            }
        }
        for i in 1..diffs.len() {
            if !diffs[i - 1].compose(ring, &diffs[i])?.is_zero() {
                return Err(AlgebraError::Usage(format!("∂_{} ∘ ∂_{} is not zero", i, i + 1)));
            }
        }
        let homology = (0..modules.len()).map(|_| OnceLock::new()).collect();
        Ok(Self { ring: ring.clone(), shift: lo, modules, diffs, origin: Origin::General, homology })
    }

    fn from_parts(
        ring: &QuotientRing,
        shift: i32,
        modules: Vec<FreeModule>,
        diffs: Vec<ModMap>,
        origin: Origin,
    ) -> Self {
        let homology = (0..modules.len()).map(|_| OnceLock::new()).collect();
        Self { ring: ring.clone(), shift, modules, diffs, origin, homology }
    }

    /// A single free module in degree 0.
    pub fn concentrated(ring: &QuotientRing, module: FreeModule) -> Self {
        Self::from_parts(ring, 0, vec![module], Vec::new(), Origin::General)
    }

    pub fn zero(ring: &QuotientRing) -> Self {
        Self::concentrated(ring, FreeModule::zero())
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    /// The homological degree of `F_0` before normalization.
    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn top(&self) -> usize {
        self.modules.len() - 1
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn modules(&self) -> &[FreeModule] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &FreeModule {
        &self.modules[i]
    }

    /// `∂_i` for `1 <= i <= top`.
    pub fn differential(&self, i: usize) -> &ModMap {
        &self.diffs[i - 1]
    }

    pub fn differentials(&self) -> &[ModMap] {
        &self.diffs
    }

    /// Module in absolute homological degree `d` (zero outside the range).
    pub fn module_at(&self, d: i32) -> FreeModule {
        let i = d - self.shift;
        if i < 0 || i as usize >= self.modules.len() {
            FreeModule::zero()
        } else {
            self.modules[i as usize].clone()
        }
    }

    /// `∂_d: F_d -> F_{d-1}` in absolute degrees, zero outside the range.
    pub fn differential_at(&self, d: i32) -> ModMap {
        let i = d - self.shift;
        if i >= 1 && (i as usize) <= self.diffs.len() {
            self.diffs[i as usize - 1].clone()
        } else {
            ModMap::zero(&self.ring, self.module_at(d), self.module_at(d - 1))
        }
    }

    pub fn is_zero_complex(&self) -> bool {
        self.modules.iter().all(|m| m.rank() == 0)
    }

    /// Lowest and highest normalized degree with a nonzero module.
    pub fn support_span(&self) -> Option<(usize, usize)> {
        let lo = self.modules.iter().position(|m| m.rank() > 0)?;
        let hi = self.modules.iter().rposition(|m| m.rank() > 0)?;
        Some((lo, hi))
    }

    pub fn is_minimal(&self) -> bool {
        self.diffs.iter().all(ModMap::is_minimal)
    }

    pub fn check_square_zero(&self) -> bool {
        (1..self.diffs.len())
            .all(|i| self.diffs[i - 1].compose(&self.ring, &self.diffs[i]).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// All twists moved by `by`.
    pub fn twisted(&self, by: i32) -> ChainComplex {
        let modules: Vec<FreeModule> = self.modules.iter().map(|m| m.shifted(by)).collect();
        let diffs = self
            .diffs
            .iter()
            .enumerate()
            .map(|(i, d)| {
                ModMap::from_parts_unchecked(modules[i + 1].clone(), modules[i].clone(), d.columns().to_vec())
            })
            .collect();
        Self::from_parts(&self.ring, self.shift, modules, diffs, self.origin.clone())
    }

    /// Homology in normalized degree `i`, cached.
    pub fn homology(&self, i: usize) -> Result<&HomologyModule> {
        if i >= self.modules.len() {
            return Err(AlgebraError::Usage(format!("homology degree {i} outside 0..={}", self.top())));
        }
        Ok(self.homology[i].get_or_init(|| self.compute_homology(i)))
    }

    fn compute_homology(&self, i: usize) -> HomologyModule {
        let ring = &self.ring;
        let p = ring.ambient();
        let fi = &self.modules[i];
        let cycles: Vec<Vector> = if i == 0 {
            (0..fi.rank()).map(|k| fi.basis_vector(p, k)).collect()
        } else {
            kernel_submodule(ring, self.differential(i)).generators
        };
        let boundaries: Vec<Vector> = if i < self.diffs.len() {
            self.differential(i + 1).columns().iter().filter(|c| !is_zero_vector(c)).cloned().collect()
        } else {
            Vec::new()
        };
        let t = cycles.len();
        let cycle_degrees: Vec<i32> =
            cycles.iter().map(|z| crate::gb::vector_degree(z, fi.twists()).unwrap() as i32).collect();
        let mut all = cycles;
        all.extend(boundaries.iter().cloned());
        let mut degrees = cycle_degrees.clone();
        degrees.extend(boundaries.iter().map(|b| crate::gb::vector_degree(b, fi.twists()).unwrap() as i32));
        let syz = syzygies_with_degrees(ring, fi, &all, &degrees);
        let relations: Vec<Vector> = syz.into_iter().map(|s| s[..t].to_vec()).collect();
        let module = GradedModule::from_relations(ring, FreeModule::new(cycle_degrees), relations)
            .expect("homology relations are homogeneous");
        HomologyModule { underlying: minimal_presentation(&module), degree: i }
    }

    pub fn homology_is_zero(&self, i: usize) -> Result<bool> {
        Ok(self.homology(i)?.is_zero())
    }

    /// Whether every homology module vanishes.
    pub fn is_exact(&self) -> bool {
        (0..self.modules.len()).all(|i| self.homology(i).map(HomologyModule::is_zero).unwrap_or(false))
    }

    /// Repeated Gaussian cancellation of unit entries; the result has every
    /// differential entry in the maximal ideal. Zero modules at both ends
    /// are trimmed and the shift adjusted.
    pub fn minimalize(&self) -> ChainComplex {
        let ring = &self.ring;
        let fld = ring.field();
        let mut twists: Vec<Vec<i32>> = self.modules.iter().map(|m| m.twists().to_vec()).collect();
        // cols[i][c][r]: entry (r, c) of ∂_{i+1}
        let mut cols: Vec<Vec<Vector>> = self.diffs.iter().map(|d| d.columns().to_vec()).collect();
        loop {
            let mut pivot = None;
            'search: for (i, m) in cols.iter().enumerate() {
                for (c, col) in m.iter().enumerate() {
                    if let Some(r) = col.iter().position(Poly::is_unit) {
                        pivot = Some((i, r, c));
                        break 'search;
                    }
                }
            }
            let Some((i, r, c)) = pivot else { break };
            // ∂ = cols[i] : F_{i+1} -> F_i, unit at (r, c).
            let inv = fld.inv(cols[i][c][r].constant_coefficient());
            let pivot_col = cols[i][c].clone();
            let pivot_row: Vec<Poly> = cols[i].iter().map(|col| col[r].clone()).collect();
            let mut next: Vec<Vector> = Vec::with_capacity(cols[i].len() - 1);
            for (b, col) in cols[i].iter().enumerate() {
                if b == c {
                    continue;
                }
                let factor = pivot_row[b].scale(inv);
                let mut new_col = Vec::with_capacity(col.len() - 1);
                for (a, e) in col.iter().enumerate() {
                    if a == r {
                        continue;
                    }
                    let v = if factor.is_zero() || pivot_col[a].is_zero() {
                        e.clone()
                    } else {
                        ring.reduce(&e.sub(&pivot_col[a].mul(&factor)))
                    };
                    new_col.push(v);
                }
                next.push(new_col);
            }
            cols[i] = next;
            if i + 1 < cols.len() {
                for col in cols[i + 1].iter_mut() {
                    col.remove(c);
                }
            }
            if i > 0 {
                cols[i - 1].remove(r);
            }
            twists[i + 1].remove(c);
            twists[i].remove(r);
        }
        let lo = twists.iter().position(|t| !t.is_empty());
        let Some(lo) = lo else {
            return Self::from_parts(ring, self.shift, vec![FreeModule::zero()], Vec::new(), Origin::General);
        };
        let hi = twists.iter().rposition(|t| !t.is_empty()).unwrap();
        let modules: Vec<FreeModule> = twists[lo..=hi].iter().cloned().map(FreeModule::new).collect();
        let diffs = (lo..hi)
            .map(|i| {
                ModMap::from_parts_unchecked(modules[i + 1 - lo].clone(), modules[i - lo].clone(), cols[i].clone())
            })
            .collect();
        let origin = if lo == 0
            && hi + 1 == self.modules.len()
            && twists.iter().zip(&self.modules).all(|(t, m)| t.len() == m.rank())
        {
            self.origin.clone()
        } else {
            Origin::General
        };
        Self::from_parts(ring, self.shift + lo as i32, modules, diffs, origin)
    }

    /// `coker(∂_b: F_b -> F_{b-1})` for `1 <= b <= top + 1`; for `b = top + 1`
    /// this is the free module `F_top`. Requires a minimal complex.
    pub fn truncation_cokernel(&self, b: usize) -> Result<GradedModule> {
        if !self.is_minimal() {
            return Err(AlgebraError::Usage("truncation cokernel needs a minimal complex; minimalize first".into()));
        }
        if b == 0 || b > self.modules.len() {
            return Err(AlgebraError::Usage(format!("truncation index {b} outside 1..={}", self.modules.len())));
        }
        if b == self.modules.len() {
            return Ok(GradedModule::free(&self.ring, self.modules[b - 1].clone()));
        }
        let d = self.differential(b);
        let rels: Vec<Vector> = d.columns().iter().filter(|c| !is_zero_vector(c)).cloned().collect();
        GradedModule::from_relations(&self.ring, self.modules[b - 1].clone(), rels)
    }

    /// Direct sum, aligned on absolute homological degrees.
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let ring = &self.ring;
        let p = ring.ambient();
        let lo = self.shift.min(other.shift);
        let hi = (self.shift + self.top() as i32).max(other.shift + other.top() as i32);
        let mut modules = Vec::new();
        for d in lo..=hi {
            let mut t = self.module_at(d).twists().to_vec();
            t.extend_from_slice(other.module_at(d).twists());
            modules.push(FreeModule::new(t));
        }
        let mut diffs = Vec::new();
        for d in lo + 1..=hi {
            let a = self.differential_at(d);
            let b = other.differential_at(d);
            let (ra, rb) = (a.target().rank(), b.target().rank());
            let mut columns = Vec::new();
            for c in a.columns() {
                let mut v = c.clone();
                v.extend(zero_vector(p, rb));
                columns.push(v);
            }
            for c in b.columns() {
                let mut v = zero_vector(p, ra);
                v.extend(c.iter().cloned());
                columns.push(v);
            }
            let i = (d - lo) as usize;
            diffs.push(ModMap::from_parts_unchecked(modules[i].clone(), modules[i - 1].clone(), columns));
        }
        Self::from_parts(ring, lo, modules, diffs, Origin::General)
    }

    /// Splits the complex into direct summands. Unipotent basis changes are
    /// applied greedily whenever they clear a whole row or column of some
    /// differential and lower the number of nonzero entries; the summands are
    /// then the connected pieces of the support of the differentials.
    pub fn split_summands(&self) -> Vec<ChainComplex> {
        let mut work = SplitWork::new(self);
        while work.improve() {}
        work.components()
    }
}

/// Mutable dense copy of a complex used by `split_summands`.
struct SplitWork<'a> {
    complex: &'a ChainComplex,
    twists: Vec<Vec<i32>>,
    // mats[i][r][c]: entry (r, c) of ∂_{i+1}
    mats: Vec<Vec<Vec<Poly>>>,
}

impl<'a> SplitWork<'a> {
    fn new(complex: &'a ChainComplex) -> Self {
        let twists = complex.modules.iter().map(|m| m.twists().to_vec()).collect();
        let mats = complex
            .diffs
            .iter()
            .map(|d| {
                (0..d.target().rank())
                    .map(|r| (0..d.source().rank()).map(|c| d.entry(r, c).clone()).collect())
                    .collect()
            })
            .collect();
        Self { complex, twists, mats }
    }

    fn nonzeros(&self) -> usize {
        self.mats.iter().flatten().flatten().filter(|p| !p.is_zero()).count()
    }

    /// `q` with `target = q * source` entrywise, homogeneous of the given degree.
    fn ratio(source: &[Poly], target: &[Poly], degree: i32) -> Option<Poly> {
        if degree < 0 || source.iter().all(Poly::is_zero) || target.iter().all(Poly::is_zero) {
            return None;
        }
        let mut q: Option<Poly> = None;
        for (s, t) in source.iter().zip(target) {
            match (s.is_zero(), t.is_zero()) {
                (true, true) => {}
                (true, false) => return None,
                (false, true) => return None,
                (false, false) => {
                    let this = t.exact_div(s)?;
                    match &q {
                        None => q = Some(this),
                        Some(prev) if *prev == this => {}
                        Some(_) => return None,
                    }
                }
            }
        }
        let q = q?;
        if q.is_homogeneous() && q.degree() == Some(degree as u32) {
            Some(q)
        } else {
            None
        }
    }

    /// Basis change `e_u ↦ e_u + q e_v` in `F_k`: row `v` of `∂_{k+1}` loses
    /// `q·row u`, column `u` of `∂_k` gains `q·column v`.
    fn apply(&mut self, k: usize, u: usize, v: usize, q: &Poly) {
        let ring = &self.complex.ring;
        if k < self.mats.len() {
            let m = &mut self.mats[k];
            let row_u = m[u].clone();
            for (e, x) in m[v].iter_mut().zip(&row_u) {
                if !x.is_zero() {
                    *e = ring.reduce(&e.sub(&q.mul(x)));
                }
            }
        }
        if k >= 1 {
            let m = &mut self.mats[k - 1];
            for row in m.iter_mut() {
                if !row[v].is_zero() {
                    row[u] = ring.reduce(&row[u].add(&q.mul(&row[v])));
                }
            }
        }
    }

    fn row(&self, k: usize, r: usize) -> Vec<Poly> {
        self.mats[k][r].clone()
    }

    fn column(&self, k: usize, c: usize) -> Vec<Poly> {
        self.mats[k].iter().map(|row| row[c].clone()).collect()
    }

    fn try_apply(&mut self, k: usize, u: usize, v: usize, q: &Poly) -> bool {
        let before = self.nonzeros();
        let saved = self.mats.clone();
        self.apply(k, u, v, q);
        if self.nonzeros() < before {
            true
        } else {
            self.mats = saved;
            false
        }
    }

    fn improve(&mut self) -> bool {
        for k in 0..self.twists.len() {
            let rank = self.twists[k].len();
            for u in 0..rank {
                for v in 0..rank {
                    if u == v {
                        continue;
                    }
                    let degree = self.twists[k][u] - self.twists[k][v];
                    // Clear row v of ∂_{k+1} using row u.
                    if k < self.mats.len() {
                        let (ru, rv) = (self.row(k, u), self.row(k, v));
                        if let Some(q) = Self::ratio(&ru, &rv, degree) {
                            if self.try_apply(k, u, v, &q) {
                                return true;
                            }
                        }
                    }
                    // Clear column u of ∂_k using column v.
                    if k >= 1 {
                        let (cu, cv) = (self.column(k - 1, u), self.column(k - 1, v));
                        if let Some(q) = Self::ratio(&cv, &cu, degree) {
                            if self.try_apply(k, u, v, &q.neg()) {
                                return true;
                            }
                        }
                    }
                }
            }
        }
        false
    }

    fn components(&self) -> Vec<ChainComplex> {
        let ring = &self.complex.ring;
        let nodes: Vec<(usize, usize)> =
            self.twists.iter().enumerate().flat_map(|(k, t)| (0..t.len()).map(move |i| (k, i))).collect();
        let index: HashMap<(usize, usize), usize> = nodes.iter().enumerate().map(|(n, &key)| (key, n)).collect();
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (k, m) in self.mats.iter().enumerate() {
            for (r, row) in m.iter().enumerate() {
                for (c, e) in row.iter().enumerate() {
                    if !e.is_zero() {
                        let a = find(&mut parent, index[&(k, r)]);
                        let b = find(&mut parent, index[&(k + 1, c)]);
                        parent[a] = b;
                    }
                }
            }
        }
        let mut groups: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
        for (n, &node) in nodes.iter().enumerate() {
            let root = find(&mut parent, n);
            match groups.iter_mut().find(|(r, _)| *r == root) {
                Some((_, g)) => g.push(node),
                None => groups.push((root, vec![node])),
            }
        }
        groups
            .into_iter()
            .map(|(_, members)| {
                let lo = members.iter().map(|m| m.0).min().unwrap();
                let hi = members.iter().map(|m| m.0).max().unwrap();
                let picks: Vec<Vec<usize>> =
                    (lo..=hi).map(|k| members.iter().filter(|m| m.0 == k).map(|m| m.1).collect()).collect();
                let modules: Vec<FreeModule> = (lo..=hi)
                    .map(|k| FreeModule::new(picks[k - lo].iter().map(|&i| self.twists[k][i]).collect()))
                    .collect();
                let diffs = (lo..hi)
                    .map(|k| {
                        let columns = picks[k + 1 - lo]
                            .iter()
                            .map(|&c| picks[k - lo].iter().map(|&r| self.mats[k][r][c].clone()).collect())
                            .collect();
                        ModMap::from_parts_unchecked(modules[k + 1 - lo].clone(), modules[k - lo].clone(), columns)
                    })
                    .collect();
                ChainComplex::from_parts(ring, self.complex.shift + lo as i32, modules, diffs, Origin::General)
            })
            .collect()
    }
}

/// Subsets of `0..n` of size `k` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// The Koszul complex on a sequence of homogeneous elements. Basis vectors
/// `e_S` in degree `|S|` are ordered lexicographically by index set and
/// `∂(e_S) = Σ_j (-1)^(j+1) s_{i_j} e_{S \ i_j}`.
pub fn koszul_complex(seq: &[Poly], ring: &QuotientRing) -> Result<ChainComplex> {
    let p = ring.ambient();
    let mut reduced = Vec::with_capacity(seq.len());
    for f in seq {
        if f.ring() != p {
            return Err(AlgebraError::RingMismatch("sequence element from another ring".into()));
        }
        if !f.is_homogeneous() {
            return Err(AlgebraError::NonHomogeneous(f.to_string()));
        }
        let r = ring.reduce(f);
        if r.is_zero() {
            return Err(AlgebraError::Usage(format!("sequence element {f} is zero in the ring")));
        }
        reduced.push(r);
    }
    let n = reduced.len();
    let degs: Vec<i32> = reduced.iter().map(|f| f.degree().unwrap() as i32).collect();
    let bases: Vec<Vec<Vec<usize>>> = (0..=n).map(|k| subsets(n, k)).collect();
    let modules: Vec<FreeModule> =
        bases.iter().map(|b| FreeModule::new(b.iter().map(|s| s.iter().map(|&i| degs[i]).sum()).collect())).collect();
    let mut diffs = Vec::with_capacity(n);
    for k in 1..=n {
        let position: HashMap<&Vec<usize>, usize> = bases[k - 1].iter().enumerate().map(|(i, s)| (s, i)).collect();
        let columns = bases[k]
            .iter()
            .map(|s| {
                let mut col = zero_vector(p, bases[k - 1].len());
                for (j, &idx) in s.iter().enumerate() {
                    let mut face = s.clone();
                    face.remove(j);
                    let entry = if j % 2 == 0 { reduced[idx].clone() } else { reduced[idx].neg() };
                    col[position[&face]] = entry;
                }
                col
            })
            .collect();
        diffs.push(ModMap::from_parts_unchecked(modules[k].clone(), modules[k - 1].clone(), columns));
    }
    Ok(ChainComplex::from_parts(ring, 0, modules, diffs, Origin::Koszul(reduced)))
}

/// `Hom(F, G)` with `Hom(F,G)_i = ⊕_j Hom(F_j, G_{j+i})` and
/// `d(φ) = ∂^G φ - (-1)^i φ ∂^F`. The basis element `φ_{a,b}` sending `e_a`
/// to `e_b` has twist `deg e_b - deg e_a`.
pub fn hom_complex(f: &ChainComplex, g: &ChainComplex) -> Result<ChainComplex> {
    let ring = &f.ring;
    let p = ring.ambient();
    let (f_lo, f_hi) = (f.shift, f.shift + f.top() as i32);
    let (g_lo, g_hi) = (g.shift, g.shift + g.top() as i32);
    let lo = g_lo - f_hi;
    let hi = g_hi - f_lo;
    // For each Hom degree, the blocks (j, offset) with j the absolute F degree.
    let mut layout: Vec<Vec<(i32, usize)>> = Vec::new();
    let mut modules = Vec::new();
    for i in lo..=hi {
        let mut blocks = Vec::new();
        let mut twists = Vec::new();
        for j in f_lo..=f_hi {
            let k = j + i;
            if k < g_lo || k > g_hi {
                continue;
            }
            blocks.push((j, twists.len()));
            let (fj, gk) = (f.module_at(j), g.module_at(k));
            for &ta in fj.twists() {
                for &tb in gk.twists() {
                    twists.push(tb - ta);
                }
            }
        }
        layout.push(blocks);
        modules.push(FreeModule::new(twists));
    }
    let offset = |i: i32, j: i32| -> Option<usize> {
        layout[(i - lo) as usize].iter().find(|(jj, _)| *jj == j).map(|&(_, o)| o)
    };
    let mut diffs = Vec::new();
    for i in lo + 1..=hi {
        let src = &modules[(i - lo) as usize];
        let tgt = &modules[(i - 1 - lo) as usize];
        let mut columns = vec![zero_vector(p, tgt.rank()); src.rank()];
        let sign_neg = i % 2 == 0;
        for &(j, off) in &layout[(i - lo) as usize] {
            let k = j + i;
            let (fj, gk) = (f.module_at(j), g.module_at(k));
            let dg = g.differential_at(k);
            let df = f.differential_at(j + 1);
            let gk1 = g.module_at(k - 1).rank();
            let fj1 = f.module_at(j + 1).rank();
            for a in 0..fj.rank() {
                for b in 0..gk.rank() {
                    let col = &mut columns[off + a * gk.rank() + b];
                    // ∂^G ∘ φ_{a,b} = Σ_c ∂^G[c][b] φ_{a,c}
                    if gk1 > 0 {
                        let o = offset(i - 1, j).expect("block exists");
                        for c in 0..gk1 {
                            let e = dg.entry(c, b);
                            if !e.is_zero() {
                                col[o + a * gk1 + c] = col[o + a * gk1 + c].add(e);
                            }
                        }
                    }
                    // φ_{a,b} ∘ ∂^F = Σ_{a'} ∂^F[a][a'] φ_{a',b}
                    if fj1 > 0 {
                        let o = offset(i - 1, j + 1).expect("block exists");
                        for a2 in 0..fj1 {
                            let e = df.entry(a, a2);
                            if !e.is_zero() {
                                let idx = o + a2 * gk.rank() + b;
                                let term = if sign_neg { e.neg() } else { e.clone() };
                                col[idx] = col[idx].add(&term);
                            }
                        }
                    }
                }
            }
        }
        let columns = columns.into_iter().map(|c| ring.reduce_vector(&c)).collect();
        diffs.push(ModMap::from_parts_unchecked(src.clone(), tgt.clone(), columns));
    }
    let c = ChainComplex::from_parts(ring, lo, modules, diffs, Origin::General);
    debug_assert!(c.check_square_zero());
    Ok(c)
}

/// A degree-preserving map of complexes: `components[i]` goes from the
/// source's normalized degree `i` to the target module in the same absolute
/// degree.
#[derive(Clone, Debug)]
pub struct ChainMap {
    pub source: ChainComplex,
    pub target: ChainComplex,
    pub components: Vec<ModMap>,
}

impl ChainMap {
    pub fn new(source: &ChainComplex, target: &ChainComplex, components: Vec<ModMap>) -> Result<Self> {
        if components.len() != source.modules.len() {
            return Err(AlgebraError::Usage("one component per source degree is required".into()));
        }
        for (i, c) in components.iter().enumerate() {
            let d = source.shift + i as i32;
            if c.source() != source.module(i) || c.target().rank() != target.module_at(d).rank() {
                return Err(AlgebraError::Usage(format!("component in degree {d} has the wrong shape")));
            }
        }
        Ok(Self { source: source.clone(), target: target.clone(), components })
    }

    /// Component in absolute degree `d`.
    pub fn component_at(&self, d: i32) -> ModMap {
        let i = d - self.source.shift;
        if i >= 0 && (i as usize) < self.components.len() {
            self.components[i as usize].clone()
        } else {
            ModMap::zero(&self.source.ring, self.source.module_at(d), self.target.module_at(d))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(ModMap::is_zero)
    }

    /// Entrywise equality of components (twists may differ by relabeling).
    pub fn same_entries(&self, other: &ChainMap) -> bool {
        let lo = self.source.shift.min(other.source.shift);
        let hi = (self.source.shift + self.source.top() as i32).max(other.source.shift + other.source.top() as i32);
        (lo..=hi).all(|d| {
            let (a, b) = (self.component_at(d), other.component_at(d));
            a.columns().len() == b.columns().len() && a.columns() == b.columns()
        })
    }
}

/// `∂^tgt ∘ f_d = f_{d-1} ∘ ∂^src` in every degree.
pub fn check_chain_map(f: &ChainMap) -> bool {
    let ring = &f.source.ring;
    let lo = f.source.shift;
    let hi = lo + f.source.top() as i32;
    (lo..=hi + 1).all(|d| {
        let left = f.target.differential_at(d).compose(ring, &f.component_at(d));
        let right = f.component_at(d - 1).compose(ring, &f.source.differential_at(d));
        match (left, right) {
            (Ok(l), Ok(r)) => l.columns() == r.columns(),
            _ => {
                // Shapes only disagree through zero modules; compare entries.
                let l = entries_of(ring, &f.target.differential_at(d), &f.component_at(d));
                let r = entries_of(ring, &f.component_at(d - 1), &f.source.differential_at(d));
                l == r
            }
        }
    })
}

fn entries_of(ring: &QuotientRing, outer: &ModMap, inner: &ModMap) -> Vec<Vector> {
    inner.columns().iter().map(|c| outer.apply(ring, c)).collect()
}

/// `f ∘ g`.
pub fn compose(f: &ChainMap, g: &ChainMap) -> Result<ChainMap> {
    let ring = &g.source.ring;
    let lo = g.source.shift;
    let mut components = Vec::with_capacity(g.components.len());
    for (i, gi) in g.components.iter().enumerate() {
        let d = lo + i as i32;
        let fd = f.component_at(d);
        if fd.source().rank() != gi.target().rank() {
            return Err(AlgebraError::Usage(format!("maps are not composable in degree {d}")));
        }
        let columns = gi.columns().iter().map(|c| fd.apply(ring, c)).collect();
        components.push(ModMap::from_parts_unchecked(gi.source().clone(), fd.target().clone(), columns));
    }
    Ok(ChainMap { source: g.source.clone(), target: f.target.clone(), components })
}

/// Multiplication by a homogeneous `r`: `F -> F` with target twists lowered
/// by `deg r`.
pub fn scalar_chain_map(f: &ChainComplex, r: &Poly) -> ChainMap {
    let ring = &f.ring;
    let shift = r.degree().unwrap_or(0) as i32;
    let target = f.twisted(-shift);
    let components = f.modules.iter().map(|m| ModMap::identity(ring, m).scale(ring, r)).collect();
    ChainMap { source: f.clone(), target, components }
}

pub fn identity_chain_map(f: &ChainComplex) -> ChainMap {
    let components = f.modules.iter().map(|m| ModMap::identity(&f.ring, m)).collect();
    ChainMap { source: f.clone(), target: f.clone(), components }
}
