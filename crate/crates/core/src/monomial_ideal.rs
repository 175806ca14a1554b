//! Minimal primes, height and bigheight for monomial ideals.
//!
//! Minimal primes of a monomial ideal are generated by variables: they are
//! the minimal vertex covers of the hypergraph whose edges are the supports
//! of the generators.

use std::fmt;

use serde::Serialize;

use crate::error::{AlgebraError, Result};
use crate::ideal::{support_mask, IdealData};

/// The prime ideal generated by a set of variables (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialPrime {
    pub variables: Vec<usize>,
}

impl MonomialPrime {
    pub fn height(&self) -> usize {
        self.variables.len()
    }

    fn mask(&self) -> u32 {
        support_mask(&self.variables)
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.variables.iter().map(|i| format!("x{}", i + 1)).collect();
        write!(f, "({})", names.join(", "))
    }
}

fn require_monomial(ideal: &IdealData) -> Result<()> {
    if !ideal.is_monomial() {
        return Err(AlgebraError::Unsupported(format!(
            "{ideal} is not a monomial ideal; height and bigheight are only computed for monomial data"
        )));
    }
    Ok(())
}

/// Minimal primes of a monomial ideal. The zero ideal has the single minimal
/// prime `(0)`.
pub fn monomial_minimal_primes(ideal: &IdealData) -> Result<Vec<MonomialPrime>> {
    require_monomial(ideal)?;
    let n = ideal.ring().nvars();
    assert!(n < 26, "vertex-cover search is exponential in the variable count");
    let edges: Vec<u32> =
        ideal.generators().iter().map(|g| support_mask(&g.leading_monomial().unwrap().support())).collect();
    if edges.contains(&0) {
        return Err(AlgebraError::Usage(format!("{ideal} is the unit ideal")));
    }
    let covers: Vec<u32> = (0u32..(1u32 << n)).filter(|&s| edges.iter().all(|&e| e & s != 0)).collect();
    let minimal: Vec<u32> = covers.iter().copied().filter(|&s| !covers.iter().any(|&t| t != s && t & s == t)).collect();
    let mut primes: Vec<MonomialPrime> = minimal
        .into_iter()
        .map(|s| MonomialPrime { variables: (0..n).filter(|i| s & (1 << i) != 0).collect() })
        .collect();
    primes.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.variables.cmp(&b.variables)));
    Ok(primes)
}

/// Heights in `R = P/J` of the minimal primes of `I + J`, for monomial `I`, `J`.
fn heights_in_quotient(ideal: &IdealData, defining: &IdealData) -> Result<Vec<usize>> {
    require_monomial(ideal)?;
    require_monomial(defining)?;
    let total = ideal.sum(defining);
    if !total.is_proper() {
        return Err(AlgebraError::Usage("I + J is the unit ideal".into()));
    }
    let over = monomial_minimal_primes(&total)?;
    let base = monomial_minimal_primes(defining)?;
    Ok(over
        .iter()
        .map(|p| {
            base.iter()
                .filter(|q| q.mask() & !p.mask() == 0)
                .map(|q| p.height() - q.height())
                .max()
                .expect("some minimal prime of J lies below every prime containing J")
        })
        .collect())
}

/// Largest height of a minimal prime of `I` in `R = P/J`.
pub fn bigheight_monomial(ideal: &IdealData, defining: &IdealData) -> Result<usize> {
    Ok(heights_in_quotient(ideal, defining)?.into_iter().max().unwrap_or(0))
}

/// Smallest height of a minimal prime of `I` in `R = P/J`.
pub fn height_monomial(ideal: &IdealData, defining: &IdealData) -> Result<usize> {
    Ok(heights_in_quotient(ideal, defining)?.into_iter().min().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn ideal(r: PolyRing, gens: &[&str]) -> IdealData {
        IdealData::new(r, gens.iter().map(|g| r.parse(g).unwrap()).collect()).unwrap()
    }

    fn primes(v: &[&[usize]]) -> Vec<MonomialPrime> {
        v.iter().map(|s| MonomialPrime { variables: s.to_vec() }).collect()
    }

    #[test]
    fn vertex_covers() {
        let r = PolyRing::new(3, 101).unwrap();
        assert_eq!(monomial_minimal_primes(&ideal(r, &["x1*x2", "x1*x3"])).unwrap(), primes(&[&[0], &[1, 2]]));
        assert_eq!(monomial_minimal_primes(&IdealData::maximal(r)).unwrap(), primes(&[&[0, 1, 2]]));
        assert_eq!(monomial_minimal_primes(&ideal(r, &["x1*x2"])).unwrap(), primes(&[&[0], &[1]]));
        assert_eq!(monomial_minimal_primes(&ideal(r, &["x1^3*x2^2"])).unwrap(), primes(&[&[0], &[1]]));
    }

    #[test]
    fn non_monomial_is_rejected() {
        let r = PolyRing::new(2, 101).unwrap();
        let i = ideal(r, &["x1 + x2"]);
        assert!(matches!(monomial_minimal_primes(&i), Err(AlgebraError::Unsupported(_))));
        assert!(matches!(bigheight_monomial(&i, &IdealData::zero(r)), Err(AlgebraError::Unsupported(_))));
    }

    #[test]
    fn bigheight_families() {
        let r = PolyRing::new(4, 101).unwrap();
        let zero = IdealData::zero(r);
        let a = ideal(r, &["x1*x2", "x1*x3", "x1*x4"]);
        assert_eq!(bigheight_monomial(&a, &zero).unwrap(), 3);
        assert_eq!(height_monomial(&a, &zero).unwrap(), 1);
        let b = ideal(r, &["x2", "x3", "x4"]);
        assert_eq!(bigheight_monomial(&b, &a).unwrap(), 0);
        let c = ideal(r, &["x1", "x2"]);
        assert_eq!(bigheight_monomial(&c, &zero).unwrap(), 2);
        assert_eq!(height_monomial(&c, &zero).unwrap(), 2);
    }
}
