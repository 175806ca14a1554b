//! Finitely generated graded modules over a quotient ring `R = P/J`.
//!
//! Every computation over `R` is lifted to `P` by adjoining `J`-multiples of
//! the basis vectors to the submodule in question, so a single Gröbner
//! engine serves both the ring and its quotients. Stored entries are always
//! normal forms modulo `J`.
//!
//! Degree convention: basis vector `e_j` of a free module with twist `d_j`
//! has degree `d_j`, so `f·e_j` has degree `deg f + d_j`. A map entry `(i, j)`
//! is homogeneous of degree `twist_source(j) - twist_target(i)`.

use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::gb::{axpy, is_zero_vector, vector_degree, zero_vector, GbEngine, Vector};
use crate::ideal::IdealData;
use crate::linalg::DenseMatrix;
use crate::poly::{Poly, PolyRing, PrimeField};

const J_GROUP: u32 = 1;

/// `R = P/J` for a proper homogeneous ideal `J`.
#[derive(Clone)]
pub struct QuotientRing {
    ambient: PolyRing,
    defining: Arc<IdealData>,
}

impl fmt::Debug for QuotientRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[x1..x{}]/{}", self.ambient.characteristic(), self.ambient.nvars(), self.defining)
    }
}

impl QuotientRing {
    pub fn new(defining: IdealData) -> Result<Self> {
        if !defining.is_homogeneous() {
            return Err(AlgebraError::NonHomogeneous(defining.to_string()));
        }
        if !defining.is_proper() {
            return Err(AlgebraError::Usage("the defining ideal must be proper".into()));
        }
        Ok(Self { ambient: defining.ring(), defining: Arc::new(defining.canonical()) })
    }

    /// The polynomial ring itself (`J = 0`).
    pub fn polynomial(ambient: PolyRing) -> Self {
        Self { ambient, defining: Arc::new(IdealData::zero(ambient)) }
    }

    pub fn ambient(&self) -> PolyRing {
        self.ambient
    }

    pub fn field(&self) -> PrimeField {
        self.ambient.field()
    }

    pub fn nvars(&self) -> usize {
        self.ambient.nvars()
    }

    pub fn defining(&self) -> &IdealData {
        &self.defining
    }

    pub fn reduce(&self, f: &Poly) -> Poly {
        if self.defining.is_zero() {
            f.clone()
        } else {
            self.defining.normal_form(f)
        }
    }

    pub fn reduce_vector(&self, v: &[Poly]) -> Vector {
        v.iter().map(|p| self.reduce(p)).collect()
    }

    pub fn is_zero(&self, f: &Poly) -> bool {
        self.reduce(f).is_zero()
    }

    /// Image of `(x1, ..., xn)` lifted to `P`.
    pub fn maximal_ideal(&self) -> IdealData {
        IdealData::maximal(self.ambient)
    }

    /// `R/I = P/(J + I)` for an ideal `I` given by lifts to `P`.
    pub fn quotient_by(&self, ideal: &IdealData) -> Result<QuotientRing> {
        QuotientRing::new(self.defining.sum(ideal))
    }

    /// `I + J` in `P` for an ideal `I` of `R` given by lifts.
    pub fn lift_ideal(&self, ideal: &IdealData) -> IdealData {
        ideal.sum(&self.defining)
    }

    pub fn dim(&self) -> i64 {
        self.defining.krull_dim()
    }

    /// Whether `R` is a field (`J` contains every variable).
    pub fn is_field(&self) -> bool {
        self.defining.krull_dim() == 0 && self.ambient.variables().iter().all(|x| self.is_zero(x))
    }

    /// A Gröbner engine on `P^twists.len()` already containing `J·e_i` for
    /// the first `ambient_rank` positions.
    pub(crate) fn engine(&self, twists: Vec<i32>, ambient_rank: usize) -> GbEngine {
        let rank = twists.len();
        let mut eng = GbEngine::with_twists(self.ambient, twists);
        for i in 0..ambient_rank {
            for g in self.defining.gb() {
                let mut v = zero_vector(self.ambient, rank);
                v[i] = g.clone();
                eng.add_generator(v, J_GROUP + i as u32);
            }
        }
        eng
    }
}

/// A graded free module given by the degrees of its basis vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FreeModule {
    twists: Vec<i32>,
}

impl FreeModule {
    pub fn new(twists: Vec<i32>) -> Self {
        Self { twists }
    }

    pub fn zero() -> Self {
        Self { twists: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i32] {
        &self.twists
    }

    pub fn twist(&self, i: usize) -> i32 {
        self.twists[i]
    }

    pub fn dual(&self) -> FreeModule {
        FreeModule { twists: self.twists.iter().map(|t| -t).collect() }
    }

    pub fn shifted(&self, by: i32) -> FreeModule {
        FreeModule { twists: self.twists.iter().map(|t| t + by).collect() }
    }

    pub fn basis_vector(&self, ring: PolyRing, i: usize) -> Vector {
        let mut v = zero_vector(ring, self.rank());
        v[i] = ring.one();
        v
    }
}

/// A homogeneous map of free modules, stored by columns: column `j` is the
/// image of the `j`-th source basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMap {
    source: FreeModule,
    target: FreeModule,
    columns: Vec<Vector>,
}

impl ModMap {
    /// Builds a map after reducing entries modulo `J` and checking the
    /// degree bookkeeping.
    pub fn new(ring: &QuotientRing, source: FreeModule, target: FreeModule, columns: Vec<Vector>) -> Result<Self> {
        if columns.len() != source.rank() {
            return Err(AlgebraError::Usage(format!(
                "map has {} columns for a source of rank {}",
                columns.len(),
                source.rank()
            )));
        }
        let mut reduced = Vec::with_capacity(columns.len());
        for (j, col) in columns.into_iter().enumerate() {
            if col.len() != target.rank() {
                return Err(AlgebraError::Usage(format!(
                    "column {j} has length {} for a target of rank {}",
                    col.len(),
                    target.rank()
                )));
            }
            let col = ring.reduce_vector(&col);
            for (i, p) in col.iter().enumerate() {
                if p.is_zero() {
                    continue;
                }
                let want = source.twist(j) - target.twist(i);
                if !p.is_homogeneous() || p.degree().unwrap() as i64 != want as i64 {
                    return Err(AlgebraError::NonHomogeneous(format!(
                        "entry ({i}, {j}) = {p} should be homogeneous of degree {want}"
                    )));
                }
            }
            reduced.push(col);
        }
        Ok(Self { source, target, columns: reduced })
    }

    pub(crate) fn from_parts_unchecked(source: FreeModule, target: FreeModule, columns: Vec<Vector>) -> Self {
        debug_assert_eq!(columns.len(), source.rank());
        Self { source, target, columns }
    }

    pub fn zero(ring: &QuotientRing, source: FreeModule, target: FreeModule) -> Self {
        let columns = vec![zero_vector(ring.ambient(), target.rank()); source.rank()];
        Self { source, target, columns }
    }

    pub fn identity(ring: &QuotientRing, module: &FreeModule) -> Self {
        let columns = (0..module.rank()).map(|i| module.basis_vector(ring.ambient(), i)).collect();
        Self { source: module.clone(), target: module.clone(), columns }
    }

    pub fn source(&self) -> &FreeModule {
        &self.source
    }

    pub fn target(&self) -> &FreeModule {
        &self.target
    }

    pub fn columns(&self) -> &[Vector] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> &Poly {
        &self.columns[col][row]
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| is_zero_vector(c))
    }

    /// Every entry lies in the homogeneous maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.columns.iter().flatten().all(|p| p.constant_coefficient() == 0)
    }

    pub fn apply(&self, ring: &QuotientRing, v: &[Poly]) -> Vector {
        assert_eq!(v.len(), self.source.rank());
        let mut out = zero_vector(ring.ambient(), self.target.rank());
        for (c, col) in v.iter().zip(&self.columns) {
            if c.is_zero() {
                continue;
            }
            for (o, e) in out.iter_mut().zip(col) {
                if !e.is_zero() {
                    *o = o.add(&c.mul(e));
                }
            }
        }
        ring.reduce_vector(&out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, ring: &QuotientRing, other: &ModMap) -> Result<ModMap> {
        if other.target != self.source {
            return Err(AlgebraError::Usage("maps are not composable".into()));
        }
        let columns = other.columns.iter().map(|c| self.apply(ring, c)).collect();
        Ok(ModMap { source: other.source.clone(), target: self.target.clone(), columns })
    }

    pub fn add(&self, ring: &QuotientRing, other: &ModMap) -> Result<ModMap> {
        if self.source != other.source || self.target != other.target {
            return Err(AlgebraError::Usage("maps have different shapes".into()));
        }
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| ring.reduce_vector(&a.iter().zip(b).map(|(x, y)| x.add(y)).collect::<Vec<_>>()))
            .collect();
        Ok(ModMap { source: self.source.clone(), target: self.target.clone(), columns })
    }

    /// Multiplies every entry by a homogeneous `r`; the target twists drop by `deg r`.
    pub fn scale(&self, ring: &QuotientRing, r: &Poly) -> ModMap {
        let columns =
            self.columns.iter().map(|c| ring.reduce_vector(&c.iter().map(|p| p.mul(r)).collect::<Vec<_>>())).collect();
        let shift = r.degree().unwrap_or(0) as i32;
        ModMap { source: self.source.clone(), target: self.target.shifted(-shift), columns }
    }

    /// Transpose between dual modules: `target* -> source*`.
    pub fn transpose(&self) -> ModMap {
        let columns = (0..self.target.rank()).map(|i| self.columns.iter().map(|c| c[i].clone()).collect()).collect();
        ModMap { source: self.target.dual(), target: self.source.dual(), columns }
    }
}

/// A finitely presented graded module `coker(rels: F1 -> F0)` with `F0 = gens`.
#[derive(Clone, Debug)]
pub struct GradedModule {
    ring: QuotientRing,
    rels: ModMap,
}

impl GradedModule {
    /// `coker(rels)`; zero columns are dropped.
    pub fn cokernel(ring: &QuotientRing, rels: ModMap) -> Self {
        let keep: Vec<usize> = (0..rels.source.rank()).filter(|&j| !is_zero_vector(&rels.columns[j])).collect();
        let rels = if keep.len() == rels.source.rank() {
            rels
        } else {
            let source = FreeModule::new(keep.iter().map(|&j| rels.source.twist(j)).collect());
            let columns = keep.iter().map(|&j| rels.columns[j].clone()).collect();
            ModMap { source, target: rels.target, columns }
        };
        Self { ring: ring.clone(), rels }
    }

    pub fn free(ring: &QuotientRing, gens: FreeModule) -> Self {
        let rels = ModMap::zero(ring, FreeModule::zero(), gens);
        Self { ring: ring.clone(), rels }
    }

    pub fn zero(ring: &QuotientRing) -> Self {
        Self::free(ring, FreeModule::zero())
    }

    /// `coker` of the given relation vectors in `gens`; relation degrees are
    /// read off the vectors (zero vectors are dropped).
    pub fn from_relations(ring: &QuotientRing, gens: FreeModule, relations: Vec<Vector>) -> Result<Self> {
        let relations: Vec<Vector> =
            relations.into_iter().map(|v| ring.reduce_vector(&v)).filter(|v| !is_zero_vector(v)).collect();
        let degrees: Vec<i32> = relations.iter().map(|v| vector_degree(v, gens.twists()).unwrap() as i32).collect();
        let rels = ModMap::new(ring, FreeModule::new(degrees), gens, relations)?;
        Ok(Self { ring: ring.clone(), rels })
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }

    pub fn gens(&self) -> &FreeModule {
        self.rels.target()
    }

    pub fn rels(&self) -> &ModMap {
        &self.rels
    }

    pub fn relation_vectors(&self) -> &[Vector] {
        self.rels.columns()
    }

    /// Hilbert function value in the given degree, computed from the
    /// leading terms of a Gröbner basis of the relation module.
    pub fn hilbert_function(&self, degree: i32) -> usize {
        let gens = self.gens();
        let mut eng = self.ring.engine(gens.twists().to_vec(), gens.rank());
        for r in self.relation_vectors() {
            eng.add_generator(r.clone(), 0);
        }
        eng.complete_to_degree(Some(degree as i64));
        let leads = eng.leading_terms();
        let n = self.ring.nvars();
        let mut count = 0;
        for (pos, &tw) in gens.twists().iter().enumerate() {
            let d = degree - tw;
            if d < 0 {
                continue;
            }
            for_each_monomial(n, d as u32, &mut |exps| {
                let m = crate::poly::Monomial::from_exponents(exps.to_vec());
                if !leads.iter().any(|(p, l)| *p == pos && l.divides(&m)) {
                    count += 1;
                }
            });
        }
        count
    }
}

/// Calls `f` with every exponent vector of the given total degree.
pub(crate) fn for_each_monomial(n: usize, degree: u32, f: &mut dyn FnMut(&[u16])) {
    fn rec(exps: &mut Vec<u16>, i: usize, left: u32, f: &mut dyn FnMut(&[u16])) {
        let n = exps.len();
        if i + 1 == n {
            exps[i] = left as u16;
            f(exps);
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e as u16;
            rec(exps, i + 1, left - e, f);
        }
        exps[i] = 0;
    }
    if n == 0 {
        if degree == 0 {
            f(&[]);
        }
        return;
    }
    let mut exps = vec![0u16; n];
    rec(&mut exps, 0, degree, f);
}

/// A Gröbner basis of `span(vectors) + J·F` inside a free module `F`.
#[derive(Clone, Debug)]
pub struct SubmoduleBasis {
    ring: QuotientRing,
    engine: GbEngine,
}

impl SubmoduleBasis {
    pub fn contains(&self, v: &[Poly]) -> bool {
        self.engine.contains(v)
    }

    pub fn normal_form(&self, v: &[Poly]) -> Vector {
        self.engine.reduce(v)
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.engine.reduced_basis()
    }

    pub fn ring(&self) -> &QuotientRing {
        &self.ring
    }
}

pub fn module_gb(ring: &QuotientRing, module: &FreeModule, vectors: &[Vector]) -> SubmoduleBasis {
    let mut engine = ring.engine(module.twists().to_vec(), module.rank());
    for v in vectors {
        engine.add_generator(v.clone(), 0);
    }
    engine.complete();
    SubmoduleBasis { ring: ring.clone(), engine }
}

fn degrees_of(vectors: &[Vector], twists: &[i32]) -> Vec<i32> {
    vectors.iter().map(|v| vector_degree(v, twists).expect("nonzero vector") as i32).collect()
}

/// A minimal homogeneous generating set of `span(vectors)` modulo `J·F`,
/// ordered by degree. Vectors whose degree is given explicitly may be zero.
pub fn minimal_generators(ring: &QuotientRing, module: &FreeModule, vectors: &[Vector]) -> Vec<Vector> {
    let mut items: Vec<(i32, usize, Vector)> = vectors
        .iter()
        .enumerate()
        .map(|(k, v)| (k, ring.reduce_vector(v)))
        .filter(|(_, v)| !is_zero_vector(v))
        .map(|(k, v)| (vector_degree(&v, module.twists()).unwrap() as i32, k, v))
        .collect();
    items.sort_by_key(|(d, k, _)| (*d, *k));
    let mut engine = ring.engine(module.twists().to_vec(), module.rank());
    let mut kept = Vec::new();
    for (d, _, v) in items {
        engine.complete_to_degree(Some(d as i64));
        if engine.contains(&v) {
            continue;
        }
        engine.add_generator(v.clone(), 0);
        kept.push(v);
    }
    kept
}

/// Generators of the syzygy module over `R` of homogeneous `vectors` in
/// `module`, where `degrees[j]` is the degree assigned to the `j`-th vector
/// (needed when it is zero). Returns a minimal generating set of vectors in
/// `R^m`, `m = vectors.len()`.
pub fn syzygies_with_degrees(
    ring: &QuotientRing,
    module: &FreeModule,
    vectors: &[Vector],
    degrees: &[i32],
) -> Vec<Vector> {
    let r = module.rank();
    let m = vectors.len();
    assert_eq!(degrees.len(), m);
    let p = ring.ambient();
    let mut twists = module.twists().to_vec();
    twists.extend_from_slice(degrees);
    let mut engine = ring.engine(twists, r);
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by_key(|&j| (degrees[j], j));
    for j in order {
        let mut v = ring.reduce_vector(&vectors[j]);
        v.extend(zero_vector(p, m));
        v[r + j] = p.one();
        engine.add_generator(v, 0);
    }
    engine.complete();
    let syz: Vec<Vector> =
        engine.basis().into_iter().filter(|v| v[..r].iter().all(Poly::is_zero)).map(|v| v[r..].to_vec()).collect();
    minimal_generators(ring, &FreeModule::new(degrees.to_vec()), &syz)
}

/// First syzygies of nonzero homogeneous vectors, degrees read off the vectors.
pub fn syzygies(ring: &QuotientRing, module: &FreeModule, vectors: &[Vector]) -> Vec<Vector> {
    let degrees = degrees_of(vectors, module.twists());
    syzygies_with_degrees(ring, module, vectors, &degrees)
}

/// Syzygies of the columns of a map, as a map into its source.
pub fn syzygy_map(ring: &QuotientRing, map: &ModMap) -> ModMap {
    let syz = syzygies_with_degrees(ring, map.target(), map.columns(), map.source().twists());
    let degrees = degrees_of(&syz, map.source().twists());
    ModMap::from_parts_unchecked(FreeModule::new(degrees), map.source().clone(), syz)
}

/// `Σ a_j v_j` reduced modulo `J`.
fn combine(ring: &QuotientRing, rank: usize, coeffs: &[Poly], vectors: &[Vector]) -> Vector {
    let mut out = zero_vector(ring.ambient(), rank);
    for (c, v) in coeffs.iter().zip(vectors) {
        for term in c.terms() {
            axpy(&mut out, term.coeff, Some(&term.mono), v);
        }
    }
    ring.reduce_vector(&out)
}

/// A submodule of a free module presented by generators, viewed as a module.
#[derive(Clone, Debug)]
pub struct Submodule {
    pub ambient: FreeModule,
    pub generators: Vec<Vector>,
}

impl Submodule {
    pub fn degrees(&self) -> Vec<i32> {
        degrees_of(&self.generators, self.ambient.twists())
    }

    /// Presentation: generators become a free module, relations are their syzygies.
    pub fn as_module(&self, ring: &QuotientRing) -> GradedModule {
        let degrees = self.degrees();
        let syz = syzygies_with_degrees(ring, &self.ambient, &self.generators, &degrees);
        let gens = FreeModule::new(degrees);
        let rel_degrees = degrees_of(&syz, gens.twists());
        GradedModule { ring: ring.clone(), rels: ModMap::from_parts_unchecked(FreeModule::new(rel_degrees), gens, syz) }
    }
}

/// Kernel of a map, with its inclusion into the source.
pub fn kernel_submodule(ring: &QuotientRing, map: &ModMap) -> Submodule {
    let syz = syzygies_with_degrees(ring, map.target(), map.columns(), map.source().twists());
    Submodule { ambient: map.source().clone(), generators: syz }
}

pub fn kernel(ring: &QuotientRing, map: &ModMap) -> GradedModule {
    kernel_submodule(ring, map).as_module(ring)
}

/// Removes unit entries by pivoting, then trims the relations to a minimal
/// generating set. The result has all relation entries in the maximal ideal.
pub fn minimal_presentation(module: &GradedModule) -> GradedModule {
    let ring = &module.ring;
    let fld = ring.field();
    let mut twists = module.gens().twists().to_vec();
    let mut rels: Vec<Vector> =
        module.relation_vectors().iter().map(|v| ring.reduce_vector(v)).filter(|v| !is_zero_vector(v)).collect();
    loop {
        let pivot = rels.iter().enumerate().find_map(|(j, v)| v.iter().position(Poly::is_unit).map(|i| (j, i)));
        let Some((j, i)) = pivot else { break };
        let pivot_col = rels.swap_remove(j);
        let inv = fld.inv(pivot_col[i].leading_coefficient().unwrap());
        for v in rels.iter_mut() {
            let c = v[i].clone();
            if c.is_zero() {
                continue;
            }
            for term in c.terms() {
                axpy(v, fld.neg(fld.mul(term.coeff, inv)), Some(&term.mono), &pivot_col);
            }
            *v = ring.reduce_vector(v);
            debug_assert!(v[i].is_zero());
        }
        for v in rels.iter_mut() {
            v.remove(i);
        }
        twists.remove(i);
        rels.retain(|v| !is_zero_vector(v));
    }
    let gens = FreeModule::new(twists);
    let rels = minimal_generators(ring, &gens, &rels);
    let degrees = degrees_of(&rels, gens.twists());
    GradedModule { ring: ring.clone(), rels: ModMap::from_parts_unchecked(FreeModule::new(degrees), gens, rels) }
}

/// Number of minimal generators, `dim_k(M ⊗ k)`.
pub fn min_gens(module: &GradedModule) -> usize {
    minimal_presentation(module).gens().rank()
}

pub fn is_zero_module(module: &GradedModule) -> bool {
    min_gens(module) == 0
}

pub fn is_free(module: &GradedModule) -> bool {
    minimal_presentation(module).relation_vectors().is_empty()
}

/// Generators of `Hom_R(M, R)` as vectors in the dual of the generator module.
pub fn hom_into_ring_submodule(module: &GradedModule) -> Submodule {
    let ring = &module.ring;
    kernel_submodule(ring, &module.rels.transpose())
}

/// `Hom_R(M, R)` as the kernel of the transposed relation matrix.
pub fn hom_into_ring(module: &GradedModule) -> GradedModule {
    let ring = &module.ring;
    hom_into_ring_submodule(module).as_module(ring)
}

/// `{ g ∈ P : g·v ∈ span(vectors) + J·F }`, returned including `J`.
fn colon_of_vector(ring: &QuotientRing, module: &FreeModule, vectors: &[Vector], v: &[Poly]) -> IdealData {
    let mut all = vec![v.to_vec()];
    all.extend(vectors.iter().cloned());
    let mut degrees = vec![vector_degree(v, module.twists()).map_or(0, |d| d as i32)];
    degrees.extend(degrees_of(vectors, module.twists()));
    let syz = syzygies_with_degrees(ring, module, &all, &degrees);
    let gens: Vec<Poly> = syz.into_iter().map(|s| s[0].clone()).filter(|p| !p.is_zero()).collect();
    IdealData::new(ring.ambient(), gens).expect("same ring").sum(ring.defining()).canonical()
}

/// `(0 : M)`, lifted to `P` (so it contains `J`).
pub fn annihilator(module: &GradedModule) -> IdealData {
    let ring = &module.ring;
    let gens = module.gens();
    let p = ring.ambient();
    let mut acc: Option<IdealData> = None;
    for j in 0..gens.rank() {
        let colon = colon_of_vector(ring, gens, module.relation_vectors(), &gens.basis_vector(p, j));
        acc = Some(match acc {
            None => colon,
            Some(a) => a.intersection(&colon),
        });
    }
    acc.unwrap_or_else(|| IdealData::unit(p))
}

/// `{ m ∈ F : g·m ∈ U }` for a submodule `U ⊇ J·F` given by generators.
fn module_colon(ring: &QuotientRing, module: &FreeModule, sub: &[Vector], g: &Poly) -> Vec<Vector> {
    let r = module.rank();
    let p = ring.ambient();
    let gdeg = g.degree().unwrap_or(0) as i32;
    let mut all: Vec<Vector> = (0..r)
        .map(|i| {
            let mut v = zero_vector(p, r);
            v[i] = g.clone();
            v
        })
        .collect();
    let mut degrees: Vec<i32> = module.twists().iter().map(|t| t + gdeg).collect();
    all.extend(sub.iter().cloned());
    degrees.extend(degrees_of(sub, module.twists()));
    let syz = syzygies_with_degrees(ring, module, &all, &degrees);
    let mut out: Vec<Vector> = syz.into_iter().map(|s| ring.reduce_vector(&s[..r])).collect();
    out.extend(sub.iter().cloned());
    minimal_generators(ring, module, &out)
}

fn intersect_submodules(ring: &QuotientRing, module: &FreeModule, a: &[Vector], b: &[Vector]) -> Vec<Vector> {
    let mut all: Vec<Vector> = a.to_vec();
    all.extend(b.iter().cloned());
    let syz = syzygies(ring, module, &all);
    let out: Vec<Vector> = syz.iter().map(|s| combine(ring, module.rank(), &s[..a.len()], a)).collect();
    minimal_generators(ring, module, &out)
}

fn same_submodule(ring: &QuotientRing, module: &FreeModule, a: &[Vector], b: &[Vector]) -> bool {
    let ga = module_gb(ring, module, a);
    let gb = module_gb(ring, module, b);
    b.iter().all(|v| ga.contains(v)) && a.iter().all(|v| gb.contains(v))
}

/// `(U :_F I)` for a submodule `U ⊇ J·F`.
fn colon_by_ideal(ring: &QuotientRing, module: &FreeModule, sub: &[Vector], ideal: &IdealData) -> Vec<Vector> {
    let mut acc: Option<Vec<Vector>> = None;
    for g in ideal.generators() {
        let c = module_colon(ring, module, sub, g);
        acc = Some(match acc {
            None => c,
            Some(a) => intersect_submodules(ring, module, &a, &c),
        });
    }
    acc.unwrap_or_else(|| (0..module.rank()).map(|i| module.basis_vector(ring.ambient(), i)).collect())
}

/// `Γ_I(M)` as a module, with the lifts of its generators to the generator
/// module of `M`.
#[derive(Clone, Debug)]
pub struct TorsionSubmodule {
    pub module: GradedModule,
    pub generators_in_ambient: Vec<Vector>,
}

/// `Γ_I(M) = (0 :_M I^∞)`: iterate `U ← (U :_F I)` from the relation module
/// until two consecutive submodules agree.
pub fn gamma_torsion(module: &GradedModule, ideal: &IdealData) -> TorsionSubmodule {
    let ring = &module.ring;
    let gens = module.gens();
    let rels: Vec<Vector> = module.relation_vectors().to_vec();
    let mut current = minimal_generators(ring, gens, &rels);
    loop {
        let next = colon_by_ideal(ring, gens, &current, ideal);
        if same_submodule(ring, gens, &current, &next) {
            break;
        }
        current = next;
    }
    // Present U/N with generators U's minimal generators not already in N.
    let n_basis = module_gb(ring, gens, &rels);
    let u_gens: Vec<Vector> = current.into_iter().filter(|v| !n_basis.contains(v)).collect();
    let mut all = u_gens.clone();
    all.extend(rels.iter().cloned());
    let syz = syzygies(ring, gens, &all);
    let t = u_gens.len();
    let sub_gens = FreeModule::new(degrees_of(&u_gens, gens.twists()));
    let relations: Vec<Vector> = syz.into_iter().map(|s| s[..t].to_vec()).collect();
    let presented = GradedModule::from_relations(ring, sub_gens, relations).expect("homogeneous relations");
    TorsionSubmodule { module: presented, generators_in_ambient: u_gens }
}

/// Torsion test by colon chains: for each generator `f` of `I`, the chain
/// `(0 :_M f^s)` must reach all of `M`.
pub fn is_power_torsion(module: &GradedModule, ideal: &IdealData) -> bool {
    let ring = &module.ring;
    let gens = module.gens();
    let p = ring.ambient();
    let everything: Vec<Vector> = (0..gens.rank()).map(|i| gens.basis_vector(p, i)).collect();
    let start = minimal_generators(ring, gens, module.relation_vectors());
    for f in ideal.generators() {
        let mut current = start.clone();
        loop {
            let next = module_colon(ring, gens, &current, f);
            let basis = module_gb(ring, gens, &next);
            if everything.iter().all(|e| basis.contains(e)) {
                break;
            }
            if same_submodule(ring, gens, &current, &next) {
                return false;
            }
            current = next;
        }
    }
    true
}

/// Torsion test through the annihilator: every generator of `I` lies in
/// the radical of `(0 : M)`.
pub fn is_power_torsion_by_annihilator(module: &GradedModule, ideal: &IdealData) -> bool {
    let ann = annihilator(module);
    ideal.generators().iter().all(|f| ann.radical_contains(f))
}

/// Free rank: the rank over `k` of the pairing `(φ_i(m_j) mod 𝔪)` between
/// generators of `Hom(M, R)` and minimal generators of `M`.
pub fn frank(module: &GradedModule) -> usize {
    let mp = minimal_presentation(module);
    let rank = mp.gens().rank();
    if mp.relation_vectors().is_empty() {
        return rank;
    }
    let hom = hom_into_ring_submodule(&mp);
    let rows: Vec<Vec<u32>> =
        hom.generators.iter().map(|phi| phi.iter().map(|p| p.constant_coefficient()).collect()).collect();
    if rows.is_empty() {
        return 0;
    }
    DenseMatrix::from_rows(rows).rank(mp.ring.field())
}

/// The element `v` of the generator module maps into `𝔪·M + N`.
pub fn in_maximal_times_module(module: &GradedModule, v: &[Poly]) -> bool {
    let ring = &module.ring;
    let gens = module.gens();
    let p = ring.ambient();
    let mut vectors: Vec<Vector> = module.relation_vectors().to_vec();
    for i in 0..gens.rank() {
        for x in p.variables() {
            let mut w = zero_vector(p, gens.rank());
            w[i] = x;
            vectors.push(w);
        }
    }
    module_gb(ring, gens, &vectors).contains(v)
}

/// Direct sum of two modules over the same ring.
pub fn direct_sum(a: &GradedModule, b: &GradedModule) -> GradedModule {
    let ring = &a.ring;
    let p = ring.ambient();
    let (ra, rb) = (a.gens().rank(), b.gens().rank());
    let mut twists = a.gens().twists().to_vec();
    twists.extend_from_slice(b.gens().twists());
    let mut rels: Vec<Vector> = Vec::new();
    for v in a.relation_vectors() {
        let mut w = v.clone();
        w.extend(zero_vector(p, rb));
        rels.push(w);
    }
    for v in b.relation_vectors() {
        let mut w = zero_vector(p, ra);
        w.extend(v.iter().cloned());
        rels.push(w);
    }
    GradedModule::from_relations(ring, FreeModule::new(twists), rels).expect("homogeneous")
}
