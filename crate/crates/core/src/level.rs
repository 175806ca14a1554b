//! Certified level intervals for finite free complexes.
//!
//! Each bound is emitted as a [`BoundCertificate`] only after its hypotheses
//! have been checked; a [`LevelReport`] squeezes the level between the
//! largest certified lower bound and the smallest certified upper bound.
//!
//! The torsion lower bound needs "a minimal generator of `H_0` is `I`-power
//! torsion". It is decided as `Γ_I(H_0) ⊄ 𝔪·H_0`: an element outside
//! `𝔪·H_0` extends to a minimal generating set, and conversely.

use std::fmt;

use serde::Serialize;

use crate::complex::{check_chain_map, compose, koszul_complex, scalar_chain_map, ChainComplex, ChainMap, Origin};
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealData;
use crate::invariants::{dims, edim, frank_conormal};
use crate::module::{
    gamma_torsion, in_maximal_times_module, is_free, is_power_torsion, FreeModule, ModMap, QuotientRing,
};
use crate::poly::{Poly, PolyRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundKind {
    /// `dim R - dim R/I + 1` for complexes with `I`-power torsion homology.
    TorsionDim,
    /// `b - a + 1` from a nonfree truncation cokernel above a homology gap.
    Gap,
    /// `frank(I/I²) + 1` for Koszul complexes.
    Frank,
    /// Level 1 for any complex with nonzero homology.
    Nonzero,
    /// Number of degrees spanned by the minimal complex.
    LengthUb,
    /// `edim R + 1` for Koszul complexes.
    EdimUb,
    /// Largest span among direct summands found by basis changes.
    SplitUb,
}

impl BoundKind {
    pub fn name(self) -> &'static str {
        match self {
            BoundKind::TorsionDim => "TORSION_DIM",
            BoundKind::Gap => "GAP",
            BoundKind::Frank => "FRANK",
            BoundKind::Nonzero => "NONZERO",
            BoundKind::LengthUb => "LENGTH_UB",
            BoundKind::EdimUb => "EDIM_UB",
            BoundKind::SplitUb => "SPLIT_UB",
        }
    }

    pub fn is_upper(self) -> bool {
        matches!(self, BoundKind::LengthUb | BoundKind::EdimUb | BoundKind::SplitUb)
    }
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The facts a certificate rests on. Homological degrees are absolute.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    TorsionDim {
        ideal: String,
        dim_r: i64,
        dim_r_mod_i: i64,
        torsion_degrees: Vec<i32>,
        torsion_generator: Vec<String>,
    },
    Gap {
        a: i32,
        b: i32,
        cokernel_generators: usize,
        cokernel_relations: usize,
    },
    Frank {
        sequence: Vec<String>,
        frank: usize,
    },
    Nonzero {
        degree: i32,
    },
    Length {
        lowest: i32,
        highest: i32,
    },
    Edim {
        edim: usize,
    },
    Split {
        spans: Vec<(i32, i32)>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCertificate {
    pub kind: BoundKind,
    pub value: usize,
    pub evidence: Evidence,
}

impl fmt::Display for BoundCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.kind, self.value)?;
        match &self.evidence {
            Evidence::TorsionDim { dim_r, dim_r_mod_i, torsion_degrees, .. } => {
                write!(f, " (dim R = {dim_r}, dim R/I = {dim_r_mod_i}, torsion homology in {torsion_degrees:?})")
            }
            Evidence::Gap { a, b, .. } => write!(f, " (a = {a}, b = {b})"),
            Evidence::Frank { frank, .. } => write!(f, " (frank = {frank})"),
            Evidence::Nonzero { degree } => write!(f, " (H_{degree} != 0)"),
            Evidence::Length { lowest, highest } => write!(f, " (degrees {lowest}..{highest})"),
            Evidence::Edim { edim } => write!(f, " (edim = {edim})"),
            Evidence::Split { spans } => write!(f, " ({} summands)", spans.len()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub label: String,
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub certificates: Vec<BoundCertificate>,
}

impl LevelReport {
    pub fn has_certificate_of_value(&self, value: usize) -> bool {
        self.certificates.iter().any(|c| c.value == value)
    }
}

/// Outcome of the hypothesis checks for the torsion lower bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionCheck {
    pub h0_nonzero: bool,
    /// `(degree, is I-power torsion)` for every positive degree with nonzero homology.
    pub higher_homology: Vec<(i32, bool)>,
    pub torsion_generator: Option<Vec<String>>,
    pub certificate: Option<BoundCertificate>,
}

impl TorsionCheck {
    pub fn hypotheses_hold(&self) -> bool {
        self.certificate.is_some()
    }
}

fn require_minimal(f: &ChainComplex) -> Result<()> {
    if f.is_minimal() {
        Ok(())
    } else {
        Err(AlgebraError::Usage("the complex must be minimal; minimalize first".into()))
    }
}

fn vector_strings(v: &[Poly]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Torsion lower bound on a minimal complex.
pub fn check_torsion_bound(f: &ChainComplex, ideal: &IdealData) -> Result<TorsionCheck> {
    require_minimal(f)?;
    let ring = f.ring();
    let (dim_r, dim_r_mod_i) = dims(ideal, ring)?;
    let shift = f.shift();
    let h0 = f.homology(0)?;
    if h0.is_zero() {
        return Ok(TorsionCheck {
            h0_nonzero: false,
            higher_homology: Vec::new(),
            torsion_generator: None,
            certificate: None,
        });
    }
    let mut higher = Vec::new();
    for i in 1..=f.top() {
        let h = f.homology(i)?;
        if !h.is_zero() {
            higher.push((shift + i as i32, is_power_torsion(&h.underlying, ideal)));
        }
    }
    let torsion = gamma_torsion(&h0.underlying, ideal);
    let witness = torsion
        .generators_in_ambient
        .iter()
        .find(|g| !in_maximal_times_module(&h0.underlying, g))
        .map(|g| vector_strings(g));
    let certificate = if higher.iter().all(|(_, t)| *t) && witness.is_some() {
        Some(BoundCertificate {
            kind: BoundKind::TorsionDim,
            value: (dim_r - dim_r_mod_i + 1) as usize,
            evidence: Evidence::TorsionDim {
                ideal: ideal.to_string(),
                dim_r,
                dim_r_mod_i,
                torsion_degrees: higher.iter().map(|(d, _)| *d).collect(),
                torsion_generator: witness.clone().unwrap(),
            },
        })
    } else {
        None
    };
    Ok(TorsionCheck { h0_nonzero: true, higher_homology: higher, torsion_generator: witness, certificate })
}

/// Gap lower bound on a minimal complex: the best `b - a + 1` with `∂_b != 0`,
/// `H_a != 0` and `H_i = 0` for `a < i < b`.
pub fn lb_gap(f: &ChainComplex) -> Result<Option<BoundCertificate>> {
    require_minimal(f)?;
    let mut best: Option<BoundCertificate> = None;
    for b in 1..=f.top() {
        if f.differential(b).is_zero() {
            continue;
        }
        let mut a = None;
        for i in (0..b).rev() {
            if !f.homology_is_zero(i)? {
                a = Some(i);
                break;
            }
        }
        let Some(a) = a else { continue };
        let cokernel = f.truncation_cokernel(b)?;
        if is_free(&cokernel) {
            return Err(AlgebraError::Internal(format!("nonzero minimal differential {b} has a free cokernel")));
        }
        let value = b - a + 1;
        if best.as_ref().is_none_or(|c| value > c.value) {
            best = Some(BoundCertificate {
                kind: BoundKind::Gap,
                value,
                evidence: Evidence::Gap {
                    a: f.shift() + a as i32,
                    b: f.shift() + b as i32,
                    cokernel_generators: cokernel.gens().rank(),
                    cokernel_relations: cokernel.relation_vectors().len(),
                },
            });
        }
    }
    Ok(best)
}

/// Level is at least one when some homology is nonzero.
pub fn lb_nonzero(f: &ChainComplex) -> Result<Option<BoundCertificate>> {
    for i in 0..=f.top() {
        if !f.homology_is_zero(i)? {
            return Ok(Some(BoundCertificate {
                kind: BoundKind::Nonzero,
                value: 1,
                evidence: Evidence::Nonzero { degree: f.shift() + i as i32 },
            }));
        }
    }
    Ok(None)
}

/// `frank_{R/I}(I/I²) + 1` for the Koszul complex on `seq`.
pub fn lb_frank_koszul(seq: &[Poly], ring: &QuotientRing) -> Result<BoundCertificate> {
    let frank = frank_conormal(seq, ring)?;
    Ok(BoundCertificate {
        kind: BoundKind::Frank,
        value: frank + 1,
        evidence: Evidence::Frank { sequence: vector_strings(seq), frank },
    })
}

/// Number of degrees spanned by a minimal complex.
pub fn ub_length(f: &ChainComplex) -> Result<Option<BoundCertificate>> {
    require_minimal(f)?;
    Ok(f.support_span().map(|(lo, hi)| BoundCertificate {
        kind: BoundKind::LengthUb,
        value: hi - lo + 1,
        evidence: Evidence::Length { lowest: f.shift() + lo as i32, highest: f.shift() + hi as i32 },
    }))
}

pub fn ub_edim_koszul(ring: &QuotientRing) -> BoundCertificate {
    let e = edim(ring);
    BoundCertificate { kind: BoundKind::EdimUb, value: e + 1, evidence: Evidence::Edim { edim: e } }
}

/// Direct-sum upper bound: only emitted when the complex splits.
pub fn ub_split(f: &ChainComplex) -> Result<Option<BoundCertificate>> {
    require_minimal(f)?;
    let pieces = f.split_summands();
    if pieces.len() < 2 {
        return Ok(None);
    }
    let mut spans = Vec::new();
    for piece in &pieces {
        if !piece.check_square_zero() {
            return Err(AlgebraError::Internal("split summand is not a complex".into()));
        }
        if let Some((lo, hi)) = piece.support_span() {
            spans.push((piece.shift() + lo as i32, piece.shift() + hi as i32));
        }
    }
    spans.sort_unstable();
    let value = spans.iter().map(|(a, b)| (b - a + 1) as usize).max().unwrap_or(0);
    Ok(Some(BoundCertificate { kind: BoundKind::SplitUb, value, evidence: Evidence::Split { spans } }))
}

/// Runs every applicable bound on the minimalization of `f`.
pub fn level_interval(label: &str, f: &ChainComplex, ideal: Option<&IdealData>) -> Result<LevelReport> {
    let m = f.minimalize();
    if m.is_zero_complex() {
        return Ok(LevelReport { label: label.to_string(), lower: 0, upper: 0, exact: true, certificates: Vec::new() });
    }
    let ring = m.ring();
    let mut certs = Vec::new();
    certs.extend(lb_nonzero(&m)?);
    certs.extend(lb_gap(&m)?);
    if let Some(i) = ideal {
        certs.extend(check_torsion_bound(&m, i)?.certificate);
    }
    let koszul = match f.origin() {
        Origin::Koszul(seq) => Some(seq.clone()),
        Origin::General => None,
    };
    if let Some(seq) = &koszul {
        certs.push(lb_frank_koszul(seq, ring)?);
    }
    certs.extend(ub_length(&m)?);
    certs.extend(ub_split(&m)?);
    if koszul.is_some() {
        certs.push(ub_edim_koszul(ring));
    }
    let lower = certs.iter().filter(|c| !c.kind.is_upper()).map(|c| c.value).max().unwrap_or(0);
    let upper = certs.iter().filter(|c| c.kind.is_upper()).map(|c| c.value).min().unwrap_or(usize::MAX);
    if lower > upper {
        let dump: Vec<String> = certs.iter().map(ToString::to_string).collect();
        return Err(AlgebraError::Internal(format!(
            "{label}: lower bound {lower} exceeds upper bound {upper}; certificates: {}",
            dump.join("; ")
        )));
    }
    Ok(LevelReport { label: label.to_string(), lower, upper, exact: lower == upper, certificates: certs })
}

/// Level interval of the Koszul complex on `seq`, with the torsion bound
/// checked against `ideal` (default: the ideal generated by `seq`).
pub fn koszul_level(seq: &[Poly], ring: &QuotientRing, ideal: Option<&IdealData>) -> Result<LevelReport> {
    let k = koszul_complex(seq, ring)?;
    let own = IdealData::new(ring.ambient(), seq.to_vec())?;
    let label = format!("K({})", vector_strings(seq).join(", "));
    level_interval(&label, &k, Some(ideal.unwrap_or(&own)))
}

/// Results of the factorization check through torsion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationCheck {
    pub n: usize,
    pub alpha_is_chain_map: bool,
    pub beta_is_chain_map: bool,
    pub composite_is_multiplication: bool,
    pub homology_is_torsion: bool,
}

impl FactorizationCheck {
    pub fn passed(&self) -> bool {
        self.alpha_is_chain_map
            && self.beta_is_chain_map
            && self.composite_is_multiplication
            && self.homology_is_torsion
    }
}

/// `R = k[x1..xn]/((x1) ∩ (x2..xn))` (or the polynomial ring itself when
/// `with_quotient` is false) and the maps `R -> K(x2..xn; R) -> R` whose
/// composite is multiplication by `x1`.
pub fn verify_factorization_example(n: usize, characteristic: u32, with_quotient: bool) -> Result<FactorizationCheck> {
    if n < 3 {
        return Err(AlgebraError::Usage(format!("the factorization example needs n >= 3, got {n}")));
    }
    let p = PolyRing::new(n, characteristic)?;
    let x1 = p.var(0);
    let ring = if with_quotient {
        let gens = (1..n).map(|j| x1.mul(&p.var(j))).collect();
        QuotientRing::new(IdealData::new(p, gens)?)?
    } else {
        QuotientRing::polynomial(p)
    };
    let tail: Vec<Poly> = (1..n).map(|j| p.var(j)).collect();
    let k = koszul_complex(&tail, &ring)?;
    let unit = ChainComplex::concentrated(&ring, FreeModule::new(vec![0]));
    let alpha = ChainMap::new(
        &unit,
        &k,
        vec![ModMap::new(&ring, FreeModule::new(vec![0]), k.module(0).clone(), vec![vec![p.one()]])?],
    )?;
    let target = unit.twisted(-1);
    let mut parts = vec![ModMap::new(&ring, k.module(0).clone(), target.module(0).clone(), vec![vec![x1.clone()]])?];
    for i in 1..=k.top() {
        parts.push(ModMap::zero(&ring, k.module(i).clone(), FreeModule::zero()));
    }
    let beta = ChainMap::new(&k, &target, parts)?;
    let composite = compose(&beta, &alpha)?;
    let tail_ideal = IdealData::new(p, tail)?;
    let mut torsion = true;
    for i in 1..=k.top() {
        let h = k.homology(i)?;
        if !h.is_zero() && !is_power_torsion(&h.underlying, &tail_ideal) {
            torsion = false;
        }
    }
    Ok(FactorizationCheck {
        n,
        alpha_is_chain_map: check_chain_map(&alpha),
        beta_is_chain_map: check_chain_map(&beta),
        composite_is_multiplication: composite.same_entries(&scalar_chain_map(&unit, &x1)),
        homology_is_torsion: torsion,
    })
}
