mod common;

use common::*;
use levelcert::invariants::{
    depth_of_sequence, depth_ring, dims, edim, frank_conormal, invariant_report, is_psop, lech_independent, Depth,
};
use levelcert::module::QuotientRing;
use levelcert::{IdealData, Poly};
use levelcert_oracle::depth_by_regular_forms;
use rand::Rng;

#[test]
fn depth_agrees_with_regular_element_oracle() {
    for (gens, expected) in [(vec![], 2), (vec!["x1*x2"], 1), (vec!["x1^2", "x1*x2"], 0)] {
        let q = qring(2, &gens);
        assert_eq!(depth_ring(&q), expected);
        assert_eq!(depth_by_regular_forms(&q, 6), expected);
    }
    let mut r = rng(31);
    for _ in 0..6 {
        let q = random_quotient(3, &mut r);
        assert_eq!(depth_ring(&q), depth_by_regular_forms(&q, 6), "{q:?}");
    }
}

#[test]
fn depth_is_generator_set_independent() {
    let mut r = rng(32);
    for _ in 0..8 {
        let q = random_quotient(3, &mut r);
        let p = q.ambient();
        let seq: Vec<Poly> = (0..2).map(|_| random_nonzero_homogeneous(p, 1, 2, &mut r)).collect();
        let mut padded = seq.clone();
        // Redundant element: a combination of the others.
        let c = random_homogeneous(p, 0, 1, &mut r);
        padded.push(seq[0].add(&seq[1].mul(&c)));
        assert_eq!(depth_of_sequence(&seq, &q).unwrap(), depth_of_sequence(&padded, &q).unwrap());
    }
}

#[test]
fn depth_bounded_by_dimension() {
    let mut r = rng(33);
    for _ in 0..10 {
        let q = random_quotient(3, &mut r);
        assert!(depth_ring(&q) as i64 <= q.dim());
    }
    let q = qring(2, &[]);
    let p = q.ambient();
    assert_eq!(depth_of_sequence(&[p.one()], &q).unwrap(), Depth::Infinite);
}

#[test]
fn regular_pairs_are_lech_independent() {
    let mut r = rng(34);
    let q = qring(3, &[]);
    let p = q.ambient();
    let mut checked = 0;
    while checked < 8 {
        let seq = vec![
            random_nonzero_homogeneous(p, r.gen_range(1..4), 2, &mut r),
            random_nonzero_homogeneous(p, r.gen_range(1..4), 2, &mut r),
        ];
        if IdealData::new(p, seq.clone()).unwrap().krull_dim() != 1 {
            continue;
        }
        assert!(lech_independent(&seq, &q).unwrap());
        assert_eq!(frank_conormal(&seq, &q).unwrap(), 2);
        checked += 1;
    }
}

#[test]
fn lech_independence_forces_full_free_rank() {
    let mut r = rng(35);
    for _ in 0..12 {
        let q = random_quotient(3, &mut r);
        let p = q.ambient();
        let seq: Vec<Poly> = (0..r.gen_range(1..3)).map(|_| random_monomial(p, r.gen_range(1..3), &mut r)).collect();
        if !q.lift_ideal(&IdealData::new(p, seq.clone()).unwrap()).is_proper() {
            continue;
        }
        if lech_independent(&seq, &q).unwrap() {
            assert_eq!(frank_conormal(&seq, &q).unwrap(), seq.len());
        }
    }
    let art = qring(2, &["x1^2", "x1*x2", "x2^3"]);
    let p = art.ambient();
    assert!(lech_independent(&[p.var(0), p.var(1)], &art).unwrap());
    assert_eq!(frank_conormal(&[p.var(0), p.var(1)], &art).unwrap(), 2);
}

#[test]
fn monomial_height_below_dimension_drop() {
    let mut r = rng(36);
    for _ in 0..12 {
        let n = 4;
        let p = ring(n);
        let jg: Vec<Poly> = (0..r.gen_range(0..2)).map(|_| random_monomial(p, 2, &mut r)).collect();
        let q = if jg.is_empty() {
            QuotientRing::polynomial(p)
        } else {
            QuotientRing::new(IdealData::new(p, jg).unwrap()).unwrap()
        };
        let seq: Vec<Poly> = (0..r.gen_range(1..3)).map(|_| random_monomial(p, r.gen_range(1..3), &mut r)).collect();
        if !q.lift_ideal(&IdealData::new(p, seq.clone()).unwrap()).is_proper() {
            continue;
        }
        let rep = invariant_report(&seq, &q).unwrap();
        let h = rep.height.unwrap();
        assert!(h <= rep.bigheight.unwrap());
        assert!(h as i64 <= rep.dim_r - rep.dim_r_mod_i);
        assert!(rep.depth_r as i64 <= rep.dim_r);
    }
}

#[test]
fn worked_examples() {
    let q = qring(2, &[]);
    let p = q.ambient();
    let m = IdealData::maximal(p);
    assert_eq!(dims(&m, &q).unwrap(), (2, 0));
    assert_eq!(edim(&qring(3, &["x3"])), 2);
    assert!(is_psop(&[p.var(0), p.var(1)], &q).unwrap());
    assert!(!is_psop(&[p.var(0), p.parse("x1*x2").unwrap()], &q).unwrap());
    assert!(!lech_independent(&[p.var(0), p.parse("x1*x2").unwrap()], &q).unwrap());
}
