//! Built-in battery of worked examples parameterized by the number of variables.

use levelcert::complex::{hom_complex, koszul_complex};
use levelcert::invariants::dims;
use levelcert::level::{check_torsion_bound, koszul_level, level_interval, verify_factorization_example, BoundKind};
use levelcert::module::QuotientRing;
use levelcert::monomial_ideal::bigheight_monomial;
use levelcert::{AlgebraError, IdealData, Poly, PolyRing, Result};
use serde::Serialize;

pub const MIN_SUITE_VARS: usize = 3;
pub const MAX_SUITE_VARS: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub n: usize,
    pub p: u32,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
}

struct Checks(Vec<SuiteCheck>);

impl Checks {
    fn push(&mut self, name: String, expected: impl ToString, actual: impl ToString) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let passed = expected == actual;
        self.0.push(SuiteCheck { name, expected, actual, passed });
    }
}

fn interval(lower: usize, upper: usize) -> String {
    format!("[{lower}, {upper}]")
}

/// `(x1) ∩ (x2, ..., xn)`, generated by `x1*xj`.
fn meet_ideal(p: PolyRing) -> Result<IdealData> {
    let x1 = p.var(0);
    IdealData::new(p, (1..p.nvars()).map(|j| x1.mul(&p.var(j))).collect())
}

fn vars(p: PolyRing, range: std::ops::Range<usize>) -> Vec<Poly> {
    range.map(|i| p.var(i)).collect()
}

fn parameter_checks(out: &mut Checks, n: usize, p: u32, tag: &str) -> Result<()> {
    let ring = PolyRing::new(n, p)?;
    let q = QuotientRing::polynomial(ring);
    for m in 1..=n {
        let rep = koszul_level(&vars(ring, 0..m), &q, None)?;
        out.push(
            format!("{tag}K(x1..x{m}) over k[x1..x{n}] is exact"),
            interval(m + 1, m + 1),
            interval(rep.lower, rep.upper),
        );
    }
    Ok(())
}

fn lech_checks(out: &mut Checks, n: usize, p: u32) -> Result<()> {
    let ring = PolyRing::new(n, p)?;
    let square = IdealData::maximal(ring).power(2);
    let artinian = QuotientRing::new(square)?;
    let frank_value = |rep: &levelcert::level::LevelReport| {
        rep.certificates.iter().filter(|c| c.kind == BoundKind::Frank).map(|c| c.value).max().unwrap_or(0)
    };
    let rep = koszul_level(&ring.variables(), &artinian, None)?;
    out.push(
        format!("minimal generators of the maximal ideal of k[x1..x{n}]/m^2: interval and frank bound"),
        format!("{} frank {}", interval(n + 1, n + 1), n + 1),
        format!("{} frank {}", interval(rep.lower, rep.upper), frank_value(&rep)),
    );
    let squares: Vec<Poly> = ring.variables().iter().map(|x| x.mul(x)).collect();
    let rep = koszul_level(&squares, &QuotientRing::polynomial(ring), None)?;
    out.push(
        format!("regular sequence x1^2..x{n}^2: interval and frank bound"),
        format!("{} frank {}", interval(n + 1, n + 1), n + 1),
        format!("{} frank {}", interval(rep.lower, rep.upper), frank_value(&rep)),
    );
    Ok(())
}

fn family_checks(out: &mut Checks, n: usize, p: u32) -> Result<()> {
    let ring = PolyRing::new(n, p)?;
    let poly = QuotientRing::polynomial(ring);
    let meet = meet_ideal(ring)?;

    let (a, b) = dims(&meet, &poly)?;
    out.push("family A: dim R - dim R/I".into(), 1, a - b);
    out.push("family A: bigheight I".into(), n - 1, bigheight_monomial(&meet, poly.defining())?);

    let quotient = QuotientRing::new(meet.clone())?;
    let tail = IdealData::new(ring, vars(ring, 1..n))?;
    let (a, b) = dims(&tail, &quotient)?;
    out.push("family B: dim R - dim R/I".into(), n - 2, a - b);
    out.push("family B: bigheight I".into(), 0, bigheight_monomial(&tail, quotient.defining())?);

    let k = koszul_complex(meet.generators(), &poly)?.minimalize();
    let check = check_torsion_bound(&k, &meet)?;
    let value = check.certificate.as_ref().map_or(0, |c| c.value);
    out.push(
        "torsion bound on the Koszul complex of family A: value and hypotheses".into(),
        "2 true",
        format!("{value} {}", check.hypotheses_hold()),
    );

    let k1 = koszul_complex(&vars(ring, 0..1), &poly)?;
    let rep = level_interval("K(x1)", &k1, Some(&meet))?;
    out.push(
        format!("K(x1) with I of bigheight {}: interval, certificate of value {n}", n - 1),
        format!("{} false", interval(2, 2)),
        format!("{} {}", interval(rep.lower, rep.upper), rep.has_certificate_of_value(n)),
    );
    Ok(())
}

fn factorization_checks(out: &mut Checks, n: usize, p: u32, tag: &str) -> Result<()> {
    let check = verify_factorization_example(n, p, true)?;
    out.push(format!("{tag}multiplication by x1 factors through torsion"), true, check.passed());
    let ring = PolyRing::new(n, p)?;
    let quotient = QuotientRing::new(meet_ideal(ring)?)?;
    let k = koszul_complex(&vars(ring, 0..1), &quotient)?;
    let h = hom_complex(&k, &k)?;
    let rep = level_interval("Hom(K(x1), K(x1))", &h, None)?;
    out.push(format!("{tag}Hom(K(x1), K(x1)) over family B ring"), interval(2, 2), interval(rep.lower, rep.upper));
    Ok(())
}

/// Runs every example for `n` variables in characteristic `p`, plus a
/// spot check in characteristic 2.
pub fn example_suite(n: usize, p: u32) -> Result<SuiteSummary> {
    if !(MIN_SUITE_VARS..=MAX_SUITE_VARS).contains(&n) {
        return Err(AlgebraError::Usage(format!("the suite needs {MIN_SUITE_VARS} <= n <= {MAX_SUITE_VARS}, got {n}")));
    }
    PolyRing::new(n, p)?;
    let mut out = Checks(Vec::new());
    parameter_checks(&mut out, n, p, "")?;
    lech_checks(&mut out, n, p)?;
    family_checks(&mut out, n, p)?;
    factorization_checks(&mut out, n, p, "")?;
    if p != 2 {
        factorization_checks(&mut out, n, 2, "p = 2: ")?;
        let q = QuotientRing::polynomial(PolyRing::new(n, 2)?);
        let rep = koszul_level(&q.ambient().variables(), &q, None)?;
        out.push(format!("p = 2: K(x1..x{n}) is exact"), interval(n + 1, n + 1), interval(rep.lower, rep.upper));
    }
    let passed = out.0.iter().all(|c| c.passed);
    Ok(SuiteSummary { n, p, passed, checks: out.0 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_n() {
        assert!(matches!(example_suite(2, 101), Err(AlgebraError::Usage(_))));
        assert!(matches!(example_suite(7, 101), Err(AlgebraError::Usage(_))));
    }

    #[test]
    fn three_variables_pass() {
        let s = example_suite(3, 101).unwrap();
        for c in &s.checks {
            assert!(c.passed, "{c:?}");
        }
    }
}
