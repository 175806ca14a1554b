//! Randomized small complexes for cross-checking: at most three variables,
//! free modules of rank at most four, entries of degree at most six.

use levelcert::complex::{koszul_complex, ChainComplex};
use levelcert::gb::Vector;
use levelcert::module::{kernel_submodule, FreeModule, ModMap, QuotientRing};
use levelcert::{IdealData, Monomial, Poly, PolyRing};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::monomials;

pub fn random_homogeneous(p: PolyRing, d: u32, terms: usize, rng: &mut StdRng) -> Poly {
    let monos = monomials(p.nvars(), d as i32);
    let mut f = p.zero();
    for _ in 0..terms {
        let m = &monos[rng.gen_range(0..monos.len())];
        let c = rng.gen_range(1..p.characteristic());
        f = f.add(&Poly::monomial(p, Monomial::from_exponents(m.clone()), c));
    }
    f
}

fn random_quotient(n: usize, rng: &mut StdRng) -> QuotientRing {
    let p = PolyRing::new(n, 101).unwrap();
    let gens: Vec<Poly> = (0..rng.gen_range(0..3))
        .map(|_| random_homogeneous(p, rng.gen_range(2..4), rng.gen_range(1..3), rng))
        .filter(|f| !f.is_zero())
        .collect();
    if gens.is_empty() {
        QuotientRing::polynomial(p)
    } else {
        QuotientRing::new(IdealData::new(p, gens).unwrap()).unwrap()
    }
}

fn random_map(ring: &QuotientRing, src: &[i32], tgt: &[i32], rng: &mut StdRng) -> ModMap {
    let p = ring.ambient();
    let columns: Vec<Vector> = src
        .iter()
        .map(|&s| {
            tgt.iter()
                .map(|&t| {
                    let d = s - t;
                    if !(0..=6).contains(&d) || rng.gen_bool(0.25) {
                        p.zero()
                    } else {
                        random_homogeneous(p, d as u32, 2, rng)
                    }
                })
                .collect()
        })
        .collect();
    ModMap::new(ring, FreeModule::new(src.to_vec()), FreeModule::new(tgt.to_vec()), columns).unwrap()
}

fn koszul_case(ring: &QuotientRing, rng: &mut StdRng) -> Option<ChainComplex> {
    let len = rng.gen_range(1..3);
    let seq: Vec<Poly> = (0..len).map(|_| random_homogeneous(ring.ambient(), rng.gen_range(1..3), 2, rng)).collect();
    if seq.iter().any(|f| ring.is_zero(f)) {
        return None;
    }
    koszul_complex(&seq, ring).ok()
}

fn two_term_case(ring: &QuotientRing, rng: &mut StdRng) -> ChainComplex {
    let tgt: Vec<i32> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..2)).collect();
    let src: Vec<i32> = (0..rng.gen_range(1..4)).map(|_| rng.gen_range(0..4)).collect();
    let d = random_map(ring, &src, &tgt, rng);
    ChainComplex::new(ring, 0, vec![FreeModule::new(tgt), FreeModule::new(src)], vec![d]).unwrap()
}

fn three_term_case(ring: &QuotientRing, rng: &mut StdRng) -> Option<ChainComplex> {
    let tgt: Vec<i32> = (0..rng.gen_range(1..3)).map(|_| rng.gen_range(0..2)).collect();
    let mid: Vec<i32> = (0..rng.gen_range(2..4)).map(|_| rng.gen_range(1..3)).collect();
    let d1 = random_map(ring, &mid, &tgt, rng);
    let kernel = kernel_submodule(ring, &d1);
    let chosen: Vec<Vector> = kernel
        .generators
        .iter()
        .filter(|v| levelcert::gb::vector_degree(v, &mid).is_some_and(|d| d <= 6))
        .take(4)
        .cloned()
        .collect();
    if chosen.is_empty() {
        return None;
    }
    let top: Vec<i32> = chosen.iter().map(|v| levelcert::gb::vector_degree(v, &mid).unwrap() as i32).collect();
    let d2 = ModMap::new(ring, FreeModule::new(top.clone()), FreeModule::new(mid.clone()), chosen).ok()?;
    ChainComplex::new(ring, 0, vec![FreeModule::new(tgt), FreeModule::new(mid), FreeModule::new(top)], vec![d1, d2])
        .ok()
}

fn with_unit_summand(c: ChainComplex) -> ChainComplex {
    let ring = c.ring().clone();
    let m = FreeModule::new(vec![1]);
    let unit =
        ChainComplex::new(&ring, c.shift(), vec![m.clone(), m.clone()], vec![ModMap::identity(&ring, &m)]).unwrap();
    c.direct_sum(&unit)
}

/// `count` labelled random complexes, deterministic in `seed`.
pub fn random_complexes(seed: u64, count: usize) -> Vec<(String, ChainComplex)> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempt = 0;
    while out.len() < count {
        attempt += 1;
        let n = rng.gen_range(1..4);
        let ring = random_quotient(n, &mut rng);
        let kind = attempt % 4;
        let c = match kind {
            0 => koszul_case(&ring, &mut rng),
            1 => Some(two_term_case(&ring, &mut rng)),
            2 => three_term_case(&ring, &mut rng),
            _ => koszul_case(&ring, &mut rng).map(with_unit_summand),
        };
        if let Some(c) = c {
            let ranks: Vec<usize> = c.modules().iter().map(FreeModule::rank).collect();
            if ranks.iter().all(|&r| r <= 4) {
                out.push((format!("complex {} (kind {kind}, {n} vars, ranks {ranks:?})", out.len()), c));
            }
        }
    }
    out
}
