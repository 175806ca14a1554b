//! Ring and ideal invariants: dimension, depth, embedding dimension,
//! Lech-independence, free rank of the conormal module and parameter tests.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::complex::koszul_complex;
use crate::error::{AlgebraError, Result};
use crate::ideal::IdealData;
use crate::module::{frank, syzygies_with_degrees, FreeModule, GradedModule, QuotientRing};
use crate::monomial_ideal::{bigheight_monomial, height_monomial};
use crate::poly::Poly;

/// Depth of an ideal; the unit ideal has infinite depth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Depth {
    Finite(usize),
    Infinite,
}

impl Depth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Depth::Finite(d) => Some(d),
            Depth::Infinite => None,
        }
    }
}

impl fmt::Display for Depth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Depth::Finite(d) => write!(f, "{d}"),
            Depth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Depth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Depth::Finite(d) => s.serialize_u64(*d as u64),
            Depth::Infinite => s.serialize_str("inf"),
        }
    }
}

fn check_sequence(seq: &[Poly], ring: &QuotientRing) -> Result<()> {
    for f in seq {
        if f.ring() != ring.ambient() {
            return Err(AlgebraError::RingMismatch("sequence element from another ring".into()));
        }
        if !f.is_homogeneous() {
            return Err(AlgebraError::NonHomogeneous(f.to_string()));
        }
    }
    Ok(())
}

fn ideal_of(seq: &[Poly], ring: &QuotientRing) -> IdealData {
    IdealData::new(ring.ambient(), seq.to_vec()).expect("ring checked")
}

/// `n - sup{i : H_i(f; R) != 0}` for generators `f_1..f_n` of `I`. Elements
/// that vanish in `R` are dropped first, which leaves the value unchanged.
pub fn depth_of_sequence(seq: &[Poly], ring: &QuotientRing) -> Result<Depth> {
    check_sequence(seq, ring)?;
    if !ring.lift_ideal(&ideal_of(seq, ring)).is_proper() {
        return Ok(Depth::Infinite);
    }
    let nonzero: Vec<Poly> = seq.iter().map(|f| ring.reduce(f)).filter(|f| !f.is_zero()).collect();
    let k = koszul_complex(&nonzero, ring)?;
    let n = nonzero.len();
    for i in (0..=n).rev() {
        if !k.homology_is_zero(i)? {
            return Ok(Depth::Finite(n - i));
        }
    }
    Err(AlgebraError::Internal("Koszul homology vanishes for a proper ideal".into()))
}

/// Depth of `I` on `R`, computed from the generators of `I`.
pub fn depth_ideal(ideal: &IdealData, ring: &QuotientRing) -> Result<Depth> {
    depth_of_sequence(ideal.generators(), ring)
}

/// Depth of the maximal ideal, using the variables as generators.
pub fn depth_ring(ring: &QuotientRing) -> usize {
    depth_of_sequence(&ring.ambient().variables(), ring)
        .ok()
        .and_then(Depth::finite)
        .expect("the maximal ideal is proper")
}

/// `(dim R, dim R/I)`.
pub fn dims(ideal: &IdealData, ring: &QuotientRing) -> Result<(i64, i64)> {
    let lifted = ring.lift_ideal(ideal);
    if !lifted.is_proper() {
        return Err(AlgebraError::Usage("I + J is not proper".into()));
    }
    Ok((ring.dim(), lifted.krull_dim()))
}

/// `dim_k 𝔪/𝔪²`: the number of variables minus the linear forms in `J`.
pub fn edim(ring: &QuotientRing) -> usize {
    let linear = ring.defining().gb().iter().filter(|g| g.degree() == Some(1)).count();
    ring.nvars() - linear
}

/// Whether `(R/I)^n -> I/I²` is an isomorphism: every syzygy of the
/// sequence has all coordinates in `I`.
pub fn lech_independent(seq: &[Poly], ring: &QuotientRing) -> Result<bool> {
    check_sequence(seq, ring)?;
    let lifted = ring.lift_ideal(&ideal_of(seq, ring));
    if !lifted.is_proper() {
        return Err(AlgebraError::Usage("the sequence generates the unit ideal".into()));
    }
    let syz = sequence_syzygies(seq, ring);
    Ok(syz.iter().flatten().all(|e| lifted.contains(e)))
}

fn sequence_syzygies(seq: &[Poly], ring: &QuotientRing) -> Vec<Vec<Poly>> {
    let vectors: Vec<Vec<Poly>> = seq.iter().map(|f| vec![ring.reduce(f)]).collect();
    let degrees: Vec<i32> = seq.iter().map(|f| f.degree().unwrap_or(0) as i32).collect();
    syzygies_with_degrees(ring, &FreeModule::new(vec![0]), &vectors, &degrees)
}

/// `I/I²` over `R/I`, presented by the sequence with its syzygies reduced mod `I`.
pub fn conormal_module(seq: &[Poly], ring: &QuotientRing) -> Result<GradedModule> {
    check_sequence(seq, ring)?;
    let ideal = ideal_of(seq, ring);
    let quotient = ring.quotient_by(&ideal)?;
    let gens = FreeModule::new(seq.iter().map(|f| f.degree().unwrap_or(0) as i32).collect());
    let relations = sequence_syzygies(seq, ring);
    GradedModule::from_relations(&quotient, gens, relations)
}

/// Free rank of `I/I²` as an `R/I`-module.
pub fn frank_conormal(seq: &[Poly], ring: &QuotientRing) -> Result<usize> {
    Ok(frank(&conormal_module(seq, ring)?))
}

/// Whether the sequence is part of a system of parameters.
pub fn is_psop(seq: &[Poly], ring: &QuotientRing) -> Result<bool> {
    check_sequence(seq, ring)?;
    let (dim_r, dim_q) = dims(&ideal_of(seq, ring), ring)?;
    Ok(dim_q == dim_r - seq.len() as i64)
}

/// Every invariant of `R` and `I = (seq)` the bounds use.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub dim_r: i64,
    pub dim_r_mod_i: i64,
    pub depth_r: usize,
    pub depth_i: Depth,
    pub edim: usize,
    pub height: Option<usize>,
    pub bigheight: Option<usize>,
    pub lech_independent: bool,
    pub frank_conormal: usize,
    pub is_psop: bool,
}

pub fn invariant_report(seq: &[Poly], ring: &QuotientRing) -> Result<InvariantReport> {
    let ideal = ideal_of(seq, ring);
    let (dim_r, dim_r_mod_i) = dims(&ideal, ring)?;
    let monomial = ideal.is_monomial() && ring.defining().is_monomial();
    let (height, bigheight) = if monomial {
        (Some(height_monomial(&ideal, ring.defining())?), Some(bigheight_monomial(&ideal, ring.defining())?))
    } else {
        (None, None)
    };
    Ok(InvariantReport {
        dim_r,
        dim_r_mod_i,
        depth_r: depth_ring(ring),
        depth_i: depth_of_sequence(seq, ring)?,
        edim: edim(ring),
        height,
        bigheight,
        lech_independent: lech_independent(seq, ring)?,
        frank_conormal: frank_conormal(seq, ring)?,
        is_psop: is_psop(seq, ring)?,
    })
}
