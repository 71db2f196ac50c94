//! Stability exponents of convergent denominators and the Brjuno partial
//! sum. Exponents are computed with exact integer powers; logarithms are
//! the only floating point in the crate's analysis layer.

use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::exact::{ContinuedFraction, QuadraticIrrational};
use crate::Result;

/// One growth step `q_{i+1} = gamma * q_i^tau` with `1 <= gamma < q_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityRow {
    pub index: usize,
    pub q: BigInt,
    pub q_next: BigInt,
    pub tau: u32,
    pub gamma: BigRational,
}

/// Growth profile of the convergent denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityProfile {
    pub rows: Vec<StabilityRow>,
}

/// Sequence of convergent denominators for a quotient sequence.
fn denominators(quotients: &[u64]) -> Result<Vec<BigInt>> {
    let cf = ContinuedFraction::new(quotients.to_vec())?;
    Ok(cf.convergents().rows().iter().map(|r| r.q.clone()).collect())
}

/// Profile of a finite expansion: rows start at the first index with
/// `q_i >= 2` (degenerate denominators 0 and 1 are skipped) and end at the
/// next-to-last convergent.
pub fn stability_profile(quotients: &[u64]) -> Result<StabilityProfile> {
    if quotients.len() < 2 {
        return Err(Error::BadDepth);
    }
    let dens = denominators(quotients)?;
    let two = BigInt::from(2);
    let mut rows = Vec::new();
    for i in 0..dens.len() - 1 {
        let q = &dens[i];
        if q < &two {
            continue;
        }
        let q_next = &dens[i + 1];
        // unique tau >= 1 with q^tau <= q_next < q^(tau+1)
        let mut tau = 1u32;
        let mut power = q.clone();
        loop {
            let next_power = &power * q;
            if &next_power > q_next {
                break;
            }
            power = next_power;
            tau += 1;
        }
        let gamma = BigRational::new(q_next.clone(), power);
        if gamma < BigRational::one() || gamma >= BigRational::new(q.clone(), BigInt::one()) {
            return Err(Error::Invalid(String::from("stability pair left its uniqueness range")));
        }
        rows.push(StabilityRow { index: i, q: q.clone(), q_next: q_next.clone(), tau, gamma });
    }
    Ok(StabilityProfile { rows })
}

/// Profile of an eventually periodic expansion, truncated at `depth`.
pub fn stability_profile_surd(x: &QuadraticIrrational, depth: usize) -> Result<StabilityProfile> {
    if depth < 2 {
        return Err(Error::BadDepth);
    }
    stability_profile(&x.expand(depth))
}

/// A Brjuno partial sum with its convergence evidence.
#[derive(Debug, Clone, PartialEq)]
pub struct BrjunoSum {
    pub value: f64,
    pub terms: usize,
    pub last_term: f64,
    pub converged: bool,
}

/// Partial sum of `log(q_{i+1}) / q_i` over the available convergents.
///
/// `bounded_quotients` is the caller's certificate that the tail keeps
/// shrinking geometrically (always true for eventually periodic
/// expansions); together with a last term below `tol` it sets the
/// convergence flag.
pub fn brjuno_partial(quotients: &[u64], tol: f64, bounded_quotients: bool) -> Result<BrjunoSum> {
    if quotients.is_empty() {
        return Err(Error::EmptyContinuedFraction);
    }
    if !(tol > 0.0) {
        return Err(Error::BadDepth);
    }
    let dens = denominators(quotients)?;
    let mut value = 0.0f64;
    let mut last_term = 0.0f64;
    let mut terms = 0usize;
    for i in 0..dens.len().saturating_sub(1) {
        if dens[i].is_zero() {
            continue;
        }
        let term = ln_big(&dens[i + 1]) / big_to_f64(&dens[i]);
        value += term;
        last_term = term;
        terms += 1;
    }
    let converged = terms > 0 && bounded_quotients && last_term < tol;
    Ok(BrjunoSum { value, terms, last_term, converged })
}

/// Finite sum for a rational (its expansion terminates, so it converges).
pub fn brjuno_rational(x: &crate::exact::ProjectiveRational, tol: f64) -> Result<BrjunoSum> {
    let cf = ContinuedFraction::from_rational(x)?;
    if cf.len() < 2 {
        return Ok(BrjunoSum { value: 0.0, terms: 0, last_term: 0.0, converged: true });
    }
    let mut sum = brjuno_partial(cf.quotients(), tol, true)?;
    sum.converged = true;
    Ok(sum)
}

/// Partial sum for an eventually periodic expansion truncated at `depth`.
pub fn brjuno_surd(x: &QuadraticIrrational, depth: usize, tol: f64) -> Result<BrjunoSum> {
    if depth < 1 {
        return Err(Error::BadDepth);
    }
    brjuno_partial(&x.expand(depth.max(2)), tol, true)
}

fn big_to_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Natural log of a positive big integer, safe far beyond f64 range.
fn ln_big(x: &BigInt) -> f64 {
    if let Some(v) = x.to_f64() {
        if v.is_finite() && v > 0.0 {
            return libm::log(v);
        }
    }
    let bits = x.bits();
    let top = x >> (bits - 53);
    let mantissa = top.to_f64().unwrap_or(1.0);
    libm::log(mantissa) + (bits - 53) as f64 * core::f64::consts::LN_2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_profile_is_flat() {
        let golden = QuadraticIrrational::from_periodic(&[], &[1]).unwrap();
        let profile = stability_profile_surd(&golden, 20).unwrap();
        assert!(!profile.rows.is_empty());
        for row in &profile.rows {
            assert_eq!(row.tau, 1, "index {}", row.index);
            assert!(row.gamma >= BigRational::one());
            assert!(row.gamma < BigRational::new(row.q.clone(), BigInt::one()));
        }
    }

    #[test]
    fn measured_ratio_has_the_big_jump() {
        let profile = stability_profile(&[0, 1, 1, 2, 1596, 1, 10]).unwrap();
        let jump = profile.rows.iter().find(|r| r.q == BigInt::from(5)).unwrap();
        assert_eq!(jump.q_next, BigInt::from(7982));
        assert_eq!(jump.tau, 5); // 5^5 = 3125 <= 7982 < 5^6
        assert_eq!(jump.gamma, BigRational::new(7982.into(), 3125.into()));
    }

    #[test]
    fn bounded_quotients_mean_tau_one_eventually() {
        // once q_i > K+1 for quotients <= K, q_{i+1} <= (K+1) q_i < q_i^2
        let x = QuadraticIrrational::from_periodic(&[], &[3, 1, 2]).unwrap();
        let profile = stability_profile_surd(&x, 24).unwrap();
        for row in profile.rows.iter().skip(2) {
            assert_eq!(row.tau, 1);
        }
    }

    #[test]
    fn brjuno_golden_partial_sums_increase_and_settle() {
        let golden = QuadraticIrrational::from_periodic(&[], &[1]).unwrap();
        let mut prev = 0.0;
        for depth in [4usize, 8, 16, 32] {
            let s = brjuno_surd(&golden, depth, 1e-9).unwrap();
            assert!(s.value >= prev);
            prev = s.value;
        }
        let a = brjuno_surd(&golden, 40, 1e-6).unwrap();
        let b = brjuno_surd(&golden, 80, 1e-6).unwrap();
        assert!((a.value - b.value).abs() < 1e-6);
        assert!(b.converged);
    }

    #[test]
    fn brjuno_rational_terminates() {
        let s = brjuno_rational(&"3/4".parse().unwrap(), 1e-9).unwrap();
        assert!(s.converged);
        assert!(s.value > 0.0);
        let z = brjuno_rational(&"0/1".parse().unwrap(), 1e-9).unwrap();
        assert_eq!(z.terms, 0);
    }

    #[test]
    fn ln_big_handles_huge_values() {
        let big = BigInt::from(10).pow(400);
        let l = ln_big(&big);
        assert!((l - 400.0 * libm::log(10.0)).abs() < 1e-6);
    }
}
