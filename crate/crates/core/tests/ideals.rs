mod common;

use common::*;
use levelcert::gb::GbEngine;
use levelcert::ideal::{ideal_intersection, reduced_gb};
use levelcert::module::QuotientRing;
use levelcert::monomial_ideal::{bigheight_monomial, height_monomial, monomial_minimal_primes};
use levelcert::{AlgebraError, IdealData, Poly};
use levelcert_oracle::in_ideal_degreewise;
use proptest::prelude::*;

fn random_ideal(seed: u64, n: usize, count: usize) -> IdealData {
    let mut r = rng(seed);
    let p = ring(n);
    let gens: Vec<Poly> = (0..count)
        .map(|_| {
            let d = r_range(&mut r, 1, 4);
            random_nonzero_homogeneous(p, d, 3, &mut r)
        })
        .collect();
    IdealData::new(p, gens).unwrap()
}

fn r_range(r: &mut rand::rngs::StdRng, lo: u32, hi: u32) -> u32 {
    use rand::Rng;
    r.gen_range(lo..hi)
}

fn member_by_oracle(f: &Poly, ideal: &IdealData) -> bool {
    if f.is_zero() {
        return true;
    }
    match QuotientRing::new(ideal.clone()) {
        Ok(q) => in_ideal_degreewise(f, &q),
        Err(_) => true,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn basis_ignores_generator_order(seed in 0u64..10_000) {
        let ideal = random_ideal(seed, 3, 3);
        let mut gens = ideal.generators().to_vec();
        gens.reverse();
        let scaled: Vec<Poly> = gens.iter().map(|g| g.scale(7)).collect();
        let other = IdealData::new(ideal.ring(), scaled).unwrap();
        prop_assert_eq!(reduced_gb(&ideal), reduced_gb(&other));
    }

    #[test]
    fn normal_forms_agree_with_degreewise_membership(seed in 0u64..10_000) {
        let ideal = random_ideal(seed, 3, 2);
        let mut r = rng(seed + 1);
        let p = ideal.ring();
        let d = r_range(&mut r, 1, 5);
        let f = random_homogeneous(p, d, 4, &mut r);
        let nf = ideal.normal_form(&f);
        prop_assert!(member_by_oracle(&f.sub(&nf), &ideal));
        prop_assert_eq!(nf.is_zero(), member_by_oracle(&f, &ideal));
        // A combination of generators is always a member.
        let g = &ideal.generators()[0];
        let h = random_homogeneous(p, 1, 2, &mut r);
        prop_assert!(ideal.contains(&g.mul(&h)));
    }

    #[test]
    fn intersections_sit_between_product_and_factors(seed in 0u64..10_000) {
        let a = random_ideal(seed, 3, 2);
        let b = random_ideal(seed + 7, 3, 2);
        let meet = ideal_intersection(&a, &b);
        for g in meet.generators() {
            prop_assert!(a.contains(g));
            prop_assert!(b.contains(g));
        }
        prop_assert!(meet.contains_ideal(&a.product(&b)));
    }

    #[test]
    fn reduced_basis_is_a_groebner_basis(seed in 0u64..10_000) {
        let ideal = random_ideal(seed, 3, 3);
        let basis = reduced_gb(&ideal);
        // Every S-polynomial-free check: generators reduce to zero and the basis is monic.
        for g in ideal.generators() {
            prop_assert!(ideal.normal_form(g).is_zero());
        }
        for b in basis {
            prop_assert_eq!(b.leading_coefficient(), Some(1));
        }
    }
}

#[test]
fn worked_bases() {
    let p = ring(2);
    let i = IdealData::new(p, polys(p, &["x1^2", "x1*x2"])).unwrap();
    assert_eq!(reduced_gb(&i), polys(p, &["x1*x2", "x1^2"]));
    assert!(IdealData::new(p, polys(p, &["x1", "x1 + 1"])).unwrap().gb() == [p.one()]);
    let mut eng = GbEngine::new(p, 1);
    eng.add_generator(vec![p.parse("x1*x2").unwrap()], 0);
    eng.complete();
    assert!(eng.contains(&[p.parse("x1^2*x2^3").unwrap()]));
}

#[test]
fn colon_and_saturation() {
    let p = ring(2);
    let i = IdealData::new(p, polys(p, &["x1^2*x2"])).unwrap();
    let x = p.var(0);
    assert_eq!(i.quotient(&x).unwrap(), IdealData::new(p, polys(p, &["x1*x2"])).unwrap());
    let sat = i.saturation(&IdealData::new(p, vec![x.clone()]).unwrap()).unwrap();
    assert_eq!(sat, IdealData::new(p, polys(p, &["x2"])).unwrap());
    assert!(matches!(i.quotient(&p.zero()), Err(AlgebraError::Usage(_))));
}

#[test]
fn radicals_and_dimension() {
    let p = ring(3);
    let i = IdealData::new(p, polys(p, &["x1^3", "x2^2*x3"])).unwrap();
    assert!(i.radical_contains(&p.var(0)));
    assert!(i.radical_contains(&p.parse("x2*x3").unwrap()));
    assert!(!i.radical_contains(&p.var(1)));
    assert_eq!(i.krull_dim(), 1);
    assert_eq!(IdealData::zero(p).krull_dim(), 3);
    assert_eq!(IdealData::unit(p).krull_dim(), -1);
    assert_eq!(IdealData::maximal(p).krull_dim(), 0);
}

#[test]
fn intersection_family_invariants() {
    for n in 3..=5 {
        let p = ring(n);
        let x1 = IdealData::new(p, vec![p.var(0)]).unwrap();
        let rest = IdealData::new(p, (1..n).map(|j| p.var(j)).collect()).unwrap();
        let i = x1.intersection(&rest);
        assert!(i.is_monomial());
        assert_eq!(i.krull_dim(), (n - 1) as i64);
        let zero = IdealData::zero(p);
        assert_eq!(bigheight_monomial(&i, &zero).unwrap(), n - 1);
        assert_eq!(height_monomial(&i, &zero).unwrap(), 1);
        let primes = monomial_minimal_primes(&i).unwrap();
        assert_eq!(primes.len(), 2);
        // Within R = P/I the ideal (x2..xn) has bigheight 0.
        assert_eq!(bigheight_monomial(&rest, &i).unwrap(), 0);
        assert!(height_monomial(&rest, &i).unwrap() <= (i.krull_dim() - rest.sum(&i).krull_dim()) as usize);
    }
}

#[test]
fn non_monomial_height_is_refused() {
    let p = ring(2);
    let i = IdealData::new(p, polys(p, &["x1 + x2"])).unwrap();
    assert!(matches!(monomial_minimal_primes(&i), Err(AlgebraError::Unsupported(_))));
}
