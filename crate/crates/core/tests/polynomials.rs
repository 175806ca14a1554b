use std::cmp::Ordering;

use levelcert::poly::{mono_cmp, MonoOrder, PrimeField};
use levelcert::{AlgebraError, Monomial, Poly, PolyRing};
use proptest::prelude::*;

fn ring() -> PolyRing {
    PolyRing::new(3, 101).unwrap()
}

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-200i64..200, prop::collection::vec(0u16..4, 3)), 0..6)
        .prop_map(|terms| Poly::from_terms(ring(), terms))
}

fn mono_strategy() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u16..5, 3).prop_map(Monomial::from_exponents)
}

proptest! {
    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&ring().one()), a.clone());
    }

    #[test]
    fn terms_are_sorted_and_nonzero(a in poly_strategy(), b in poly_strategy()) {
        let r = ring();
        let f = a.mul(&b).add(&a);
        for w in f.terms().windows(2) {
            prop_assert_eq!(r.cmp(&w[0].mono, &w[1].mono), Ordering::Greater);
        }
        prop_assert!(f.terms().iter().all(|t| t.coeff != 0 && t.coeff < 101));
    }

    #[test]
    fn order_is_total_and_multiplicative(a in mono_strategy(), b in mono_strategy(), c in mono_strategy()) {
        let ab = mono_cmp(&a, &b).unwrap();
        prop_assert_eq!(ab, mono_cmp(&b, &a).unwrap().reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(mono_cmp(&a.mul(&c), &b.mul(&c)).unwrap(), ab);
        if a.degree() > b.degree() {
            prop_assert_eq!(ab, Ordering::Greater);
        }
        let elim = MonoOrder::Elimination(1);
        if a.exponents()[0] > b.exponents()[0] {
            prop_assert_eq!(elim.cmp(&a, &b), Ordering::Greater);
        }
    }

    #[test]
    fn display_parses_back(a in poly_strategy()) {
        let text = a.to_string();
        prop_assert_eq!(ring().parse(&text).unwrap(), a);
    }

    #[test]
    fn exact_division_inverts_multiplication(a in poly_strategy(), b in poly_strategy()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(a.mul(&b).exact_div(&b), Some(a));
    }
}

#[test]
fn field_arithmetic() {
    let f = PrimeField::new(7).unwrap();
    for a in 1..7 {
        assert_eq!(f.mul(a, f.inv(a)), 1);
    }
    assert_eq!(f.from_i64(-1), 6);
    assert!(matches!(PrimeField::new(10), Err(AlgebraError::NonPrime(10))));
    assert!(PolyRing::new(2, 4).is_err());
}

#[test]
fn degrevlex_examples() {
    let r = PolyRing::new(3, 101).unwrap();
    let lead = |s: &str| r.parse(s).unwrap().leading_monomial().unwrap().clone();
    // x1*x3 < x2^2 under degrevlex
    assert_eq!(r.cmp(&lead("x2^2"), &lead("x1*x3")), Ordering::Greater);
    assert_eq!(r.cmp(&lead("x1^2"), &lead("x2^2")), Ordering::Greater);
    assert_eq!(lead("x1*x3 + x2^2"), lead("x2^2"));
}

#[test]
fn mismatched_rings_are_rejected() {
    let a = PolyRing::new(2, 101).unwrap().var(0);
    let b = PolyRing::new(3, 101).unwrap().var(0);
    assert!(matches!(a.checked_add(&b), Err(AlgebraError::RingMismatch(_))));
    let c = PolyRing::new(2, 7).unwrap().var(0);
    assert!(a.checked_mul(&c).is_err());
}

#[test]
fn parse_errors_report_columns() {
    let r = PolyRing::new(2, 101).unwrap();
    match r.parse("x1 + x3") {
        Err(AlgebraError::Parse { column, .. }) => assert_eq!(column, 6),
        other => panic!("unexpected {other:?}"),
    }
    assert!(r.parse("x1 +").is_err());
    assert!(r.parse("2*x1^2 - x2*x1 + 7").is_ok());
}
