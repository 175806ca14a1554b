mod common;

use common::*;
use levelcert::complex::{hom_complex, koszul_complex, ChainComplex};
use levelcert::invariants::{depth_of_sequence, Depth};
use levelcert::module::{is_power_torsion, FreeModule, ModMap, QuotientRing};
use levelcert::{IdealData, Poly};
use levelcert_oracle::corpus::random_complexes;
use levelcert_oracle::{homology_dimension, DegreewiseRing};
use rand::Rng;

fn homology_table(c: &ChainComplex, upto: i32) -> Vec<Vec<usize>> {
    homology_table_from(c, 0, upto)
}

fn homology_table_from(c: &ChainComplex, from: i32, upto: i32) -> Vec<Vec<usize>> {
    let mut model = DegreewiseRing::new(c.ring());
    (0..=c.top()).map(|i| (from..=upto).map(|d| homology_dimension(&mut model, c, i, d)).collect()).collect()
}

fn groebner_table(c: &ChainComplex, upto: i32) -> Vec<Vec<usize>> {
    (0..=c.top())
        .map(|i| {
            let h = c.homology(i).unwrap();
            (0..=upto).map(|d| h.underlying.hilbert_function(d)).collect()
        })
        .collect()
}

#[test]
fn homology_matches_degreewise_oracle() {
    for (label, c) in random_complexes(21, 12) {
        assert!(c.check_square_zero(), "{label}");
        assert_eq!(groebner_table(&c, 5), homology_table(&c, 5), "{label}");
    }
}

#[test]
fn minimalize_preserves_homology() {
    for (label, c) in random_complexes(22, 12) {
        let m = c.minimalize();
        assert!(m.is_minimal(), "{label}");
        assert!(m.check_square_zero(), "{label}");
        // Align by absolute degree.
        let before = homology_table(&c, 5);
        let after = homology_table(&m, 5);
        for (i, row) in before.iter().enumerate() {
            let d = c.shift() + i as i32;
            let j = d - m.shift();
            let expected = if j >= 0 && (j as usize) < after.len() && !m.is_zero_complex() {
                after[j as usize].clone()
            } else {
                vec![0; row.len()]
            };
            assert_eq!(row, &expected, "{label}, degree {d}");
            if j >= 0 && (j as usize) <= m.top() && !m.is_zero_complex() {
                assert_eq!(c.homology(i).unwrap().min_gens(), m.homology(j as usize).unwrap().min_gens());
            }
        }
    }
}

#[test]
fn koszul_homology_is_torsion() {
    let mut r = rng(23);
    for _ in 0..10 {
        let ring = random_quotient(3, &mut r);
        let p = ring.ambient();
        let seq: Vec<Poly> = (0..r.gen_range(1..4))
            .map(|_| random_nonzero_homogeneous(p, r.gen_range(1..3), 2, &mut r))
            .filter(|f| !ring.is_zero(f))
            .collect();
        let k = koszul_complex(&seq, &ring).unwrap();
        let ideal = IdealData::new(p, seq.clone()).unwrap();
        for i in 1..=k.top() {
            let h = k.homology(i).unwrap();
            assert!(is_power_torsion(&h.underlying, &ideal));
        }
    }
}

#[test]
fn depth_ignores_sequence_order() {
    let mut r = rng(24);
    for _ in 0..8 {
        let ring = random_quotient(3, &mut r);
        let p = ring.ambient();
        let seq: Vec<Poly> = (0..3).map(|_| random_nonzero_homogeneous(p, r.gen_range(1..3), 2, &mut r)).collect();
        let mut rev = seq.clone();
        rev.reverse();
        rev.rotate_left(1);
        assert_eq!(depth_of_sequence(&seq, &ring).unwrap(), depth_of_sequence(&rev, &ring).unwrap());
    }
}

#[test]
fn koszul_examples() {
    let q = qring(2, &[]);
    let p = q.ambient();
    let k = koszul_complex(&[p.var(0), p.var(1)], &q).unwrap();
    assert_eq!(k.differential(2).columns()[0], vec![p.var(1).neg(), p.var(0)]);
    let empty = koszul_complex(&[], &q).unwrap();
    assert_eq!(empty.top(), 0);
    assert_eq!(empty.module(0).rank(), 1);
    assert!(koszul_complex(&[p.parse("x1 + x2^2").unwrap()], &q).is_err());
    let a = qring(2, &["x1*x2"]);
    assert!(koszul_complex(&[a.ambient().parse("x1*x2").unwrap()], &a).is_err());
}

#[test]
fn hom_complexes() {
    let q = qring(1, &[]);
    let p = q.ambient();
    let k = koszul_complex(&[p.var(0)], &q).unwrap();
    let h = hom_complex(&k, &k).unwrap();
    assert!(h.check_square_zero());
    let table = homology_table_from(&h, -2, 4);
    // Over k[x]: H_{-1} and H_0 are one-dimensional, H_1 = 0.
    assert_eq!(table[2], vec![0; 7]);
    assert_eq!(table[0][1], 1);
    assert_eq!(table[0].iter().sum::<usize>(), 1);
    assert_eq!(table[1].iter().sum::<usize>(), 1);
    let unit = ChainComplex::concentrated(&q, FreeModule::new(vec![0]));
    let dual = hom_complex(&k, &unit).unwrap();
    assert_eq!(dual.shift(), -1);
    assert_eq!(dual.module(0).twists(), &[-1]);
    let same = hom_complex(&unit, &k).unwrap();
    assert_eq!(same.modules(), k.modules());
}

#[test]
fn direct_sum_with_unit_cancels() {
    let q = qring(2, &[]);
    let p = q.ambient();
    let k = koszul_complex(&[p.var(0), p.var(1)], &q).unwrap();
    let m = FreeModule::new(vec![3]);
    let unit = ChainComplex::new(&q, 1, vec![m.clone(), m.clone()], vec![ModMap::identity(&q, &m)]).unwrap();
    let sum = k.direct_sum(&unit);
    assert_eq!(sum.minimalize(), k);
    let _ = QuotientRing::polynomial(p);
    assert!(matches!(depth_of_sequence(&[p.var(0)], &q).unwrap(), Depth::Finite(1)));
}
