mod common;

use common::*;
use levelcert::complex::{hom_complex, koszul_complex};
use levelcert::invariants::{is_psop, lech_independent};
use levelcert::level::{check_torsion_bound, koszul_level, level_interval, verify_factorization_example, BoundKind};
use levelcert::module::QuotientRing;
use levelcert::{AlgebraError, IdealData, Poly};
use levelcert_oracle::corpus::random_complexes;
use rand::Rng;

#[test]
fn bounds_never_cross_on_the_corpus() {
    for (label, c) in random_complexes(41, 16) {
        let report = level_interval(&label, &c, None).unwrap();
        assert!(report.lower <= report.upper, "{label}");
    }
}

#[test]
fn partial_parameters_are_exact() {
    for n in 1..=3 {
        let q = qring(n, &[]);
        let p = q.ambient();
        for m in 1..=n {
            let seq: Vec<Poly> = (0..m).map(|i| p.var(i)).collect();
            assert!(is_psop(&seq, &q).unwrap());
            let rep = koszul_level(&seq, &q, None).unwrap();
            assert!(rep.exact);
            assert_eq!(rep.lower, m + 1);
        }
    }
    let mut r = rng(42);
    let q = qring(3, &[]);
    let p = q.ambient();
    for _ in 0..6 {
        let seq = vec![random_nonzero_homogeneous(p, r.gen_range(1..3), 3, &mut r)];
        if is_psop(&seq, &q).unwrap() {
            let rep = koszul_level(&seq, &q, None).unwrap();
            assert_eq!((rep.lower, rep.upper), (2, 2));
        }
    }
}

#[test]
fn lech_independent_sequences_are_exact() {
    let cases: Vec<(QuotientRing, Vec<&str>)> = vec![
        (qring(2, &["x1^2", "x1*x2", "x2^3"]), vec!["x1", "x2"]),
        (qring(2, &["x1^2", "x1*x2", "x2^2"]), vec!["x1", "x2"]),
        (qring(2, &[]), vec!["x1^2", "x2^2"]),
    ];
    for (q, seq) in cases {
        let seq = polys(q.ambient(), &seq);
        assert!(lech_independent(&seq, &q).unwrap());
        let rep = koszul_level(&seq, &q, None).unwrap();
        assert_eq!((rep.lower, rep.upper), (seq.len() + 1, seq.len() + 1));
        assert!(rep.certificates.iter().any(|c| c.kind == BoundKind::Frank && c.value == seq.len() + 1));
    }
}

#[test]
fn redundant_generators_keep_the_torsion_value() {
    let q = qring(3, &[]);
    let p = q.ambient();
    let seq = polys(p, &["x1*x2", "x1*x3"]);
    let mut padded = seq.clone();
    padded.push(p.parse("x1*x2 + x1*x3").unwrap());
    let value = |s: &[Poly]| {
        let k = koszul_complex(s, &q).unwrap().minimalize();
        let ideal = IdealData::new(p, s.to_vec()).unwrap();
        check_torsion_bound(&k, &ideal).unwrap().certificate.unwrap().value
    };
    assert!(value(&padded) >= value(&seq));
}

#[test]
fn torsion_hypotheses_hold_for_koszul_complexes() {
    let mut r = rng(43);
    for _ in 0..8 {
        let q = random_quotient(3, &mut r);
        let p = q.ambient();
        let seq: Vec<Poly> = (0..r.gen_range(1..3))
            .map(|_| random_nonzero_homogeneous(p, r.gen_range(1..3), 2, &mut r))
            .filter(|f| !q.is_zero(f))
            .collect();
        let ideal = IdealData::new(p, seq.clone()).unwrap();
        if seq.is_empty() || !q.lift_ideal(&ideal).is_proper() {
            continue;
        }
        let k = koszul_complex(&seq, &q).unwrap().minimalize();
        if k.is_zero_complex() {
            continue;
        }
        assert!(check_torsion_bound(&k, &ideal).unwrap().hypotheses_hold());
    }
}

#[test]
fn hom_of_koszul_over_power_series_model() {
    // Same computation without the quotient: the level is still two.
    let q = qring(3, &[]);
    let k = koszul_complex(&[q.ambient().var(0)], &q).unwrap();
    let rep = level_interval("Hom", &hom_complex(&k, &k).unwrap(), None).unwrap();
    assert_eq!((rep.lower, rep.upper), (2, 2));
}

#[test]
fn factorization_checks() {
    for n in 3..=5 {
        assert!(verify_factorization_example(n, 101, true).unwrap().passed());
    }
    assert!(verify_factorization_example(3, 2, true).unwrap().passed());
    assert!(!verify_factorization_example(4, 101, false).unwrap().passed());
    assert!(matches!(verify_factorization_example(2, 101, true), Err(AlgebraError::Usage(_))));
}
