//! Locking-zone boundaries and the approximation-error profile.
//!
//! For a center `p/q = [a0,...,an]` whose quotients stay below the bound,
//! the two boundary points are obtained by appending the bound to the two
//! representations of the center:
//!
//! ```text
//! nu_sigma    = [a0,...,an,a]          sigma = + for even n, - for odd n
//! nu_-sigma   = [a0,...,an-1,1,a]
//! ```
//!
//! The zone of 0 is left-clipped to `[0, 1/a]`, and everything at or above
//! `a` is absorbed by infinity.

use alloc::vec::Vec;

use num_rational::BigRational;

use crate::exact::{ContinuedFraction, ProjectiveRational};
use crate::error::Error;
use crate::Result;

use super::map::{in_invariant_set_cf, resolve, ResolutionBound};

/// A rational center with its closed locking interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LockingZone {
    pub center: ProjectiveRational,
    pub nu_minus: ProjectiveRational,
    pub nu_plus: ProjectiveRational,
    /// The appended quotient (the smallest admissible depth-one quotient).
    pub a_used: u64,
}

impl LockingZone {
    /// Closed-interval membership.
    pub fn contains(&self, x: &ProjectiveRational) -> bool {
        &self.nu_minus <= x && x <= &self.nu_plus
    }

    /// `center - nu_minus` (zero for the clipped zone of 0).
    pub fn left_width(&self) -> BigRational {
        self.center.to_ratio().expect("finite center") - self.nu_minus.to_ratio().expect("finite bound")
    }

    /// `nu_plus - center`.
    pub fn right_width(&self) -> BigRational {
        self.nu_plus.to_ratio().expect("finite bound") - self.center.to_ratio().expect("finite center")
    }
}

/// The boundary pair for a minimal expansion, ordered. Callers enforce
/// their own quotient preconditions; the appended quotient may be as low
/// as 1 (the detector-facing layer reaches that at its denominator cap).
pub(crate) fn locking_interval(
    minimal: &ContinuedFraction,
    appended: u64,
) -> Result<(ProjectiveRational, ProjectiveRational)> {
    if !minimal.is_minimal() {
        return Err(Error::NotCanonical("zone center must be in minimal form"));
    }
    if appended == 0 {
        return Err(Error::BadDepth);
    }
    let a = appended;
    let q = minimal.quotients();

    let mut appended = q.to_vec();
    appended.push(a);
    let first = ContinuedFraction::new(appended)?.value();

    let second = if q == [0] {
        // Left boundary clipped at the cone edge.
        ProjectiveRational::zero()
    } else {
        let mut twin = q.to_vec();
        *twin.last_mut().unwrap() -= 1;
        twin.push(1);
        twin.push(a);
        ContinuedFraction::new(twin)?.value()
    };

    if first <= second {
        Ok((first, second))
    } else {
        Ok((second, first))
    }
}

fn center_cf(center: &ProjectiveRational, bound: ResolutionBound) -> Result<ContinuedFraction> {
    if center.is_infinite() {
        return Err(Error::InfiniteInput);
    }
    let cf = ContinuedFraction::from_rational(center)?;
    if !in_invariant_set_cf(&cf, bound) {
        return Err(Error::NotInInvariantSet);
    }
    Ok(cf)
}

/// Right boundary of the center's locking interval.
pub fn nu_plus(center: &ProjectiveRational, bound: ResolutionBound) -> Result<ProjectiveRational> {
    zone(center, bound).map(|z| z.nu_plus)
}

/// Left boundary of the center's locking interval.
pub fn nu_minus(center: &ProjectiveRational, bound: ResolutionBound) -> Result<ProjectiveRational> {
    zone(center, bound).map(|z| z.nu_minus)
}

/// The full locking interval `[nu_minus, nu_plus]` of a center in the
/// invariant set; every rational in it maps to the center in one step.
pub fn zone(center: &ProjectiveRational, bound: ResolutionBound) -> Result<LockingZone> {
    let cf = center_cf(center, bound)?;
    let (lo, hi) = locking_interval(&cf, bound.get())?;
    Ok(LockingZone { center: center.clone(), nu_minus: lo, nu_plus: hi, a_used: bound.get() })
}

/// Both functional identities of the boundary maps, exactly:
/// translation covariance (`nu(1+x) = 1 + nu(x)` for both sides) and
/// inversion anti-covariance (`nu_plus(1/x) = 1/nu_minus(x)` and the
/// mirror). Requires `x`, `1+x`, `1/x` to be invariant-set centers.
pub fn functional_check(x: &ProjectiveRational, bound: ResolutionBound) -> Result<bool> {
    if x.is_infinite() || x.is_zero() {
        return Err(Error::NotInInvariantSet);
    }
    let here = zone(x, bound)?;
    let shifted = zone(&x.succ(), bound)?;
    let inverted = zone(&x.recip(), bound)?;

    let translation = shifted.nu_plus == here.nu_plus.succ() && shifted.nu_minus == here.nu_minus.succ();
    let inversion = inverted.nu_plus == here.nu_minus.recip() && inverted.nu_minus == here.nu_plus.recip();
    Ok(translation && inversion)
}

/// Exact approximation error `|x - resolve(x)|`; infinity when the point
/// is absorbed upward.
pub fn approximation_error(x: &ProjectiveRational, bound: ResolutionBound) -> Result<ProjectiveRational> {
    let image = resolve(x, bound)?;
    if image.is_infinite() {
        return Ok(ProjectiveRational::infinity());
    }
    let diff = x.to_ratio().ok_or(Error::InfiniteInput)? - image.to_ratio().expect("finite image");
    let abs = if diff < BigRational::new(0.into(), 1.into()) { -diff } else { diff };
    Ok(ProjectiveRational::from_ratio(&abs))
}

/// Error profile on a mediant-refined grid between `lo` and `hi`.
///
/// The grid is grown by repeatedly inserting the mediant of the adjacent
/// pair with the smallest denominator sum (leftmost on ties), so sample
/// points accumulate at simple rationals and plateaus line up with zone
/// boundaries instead of aliasing across them.
pub fn error_profile(
    lo: &ProjectiveRational,
    hi: &ProjectiveRational,
    bound: ResolutionBound,
    samples: usize,
) -> Result<Vec<(ProjectiveRational, ProjectiveRational)>> {
    if lo.is_infinite() || hi.is_infinite() {
        return Err(Error::InfiniteInput);
    }
    if lo >= hi {
        return Err(Error::Invalid(alloc::format!("empty range: {lo} >= {hi}")));
    }
    if samples < 2 {
        return Err(Error::BadDepth);
    }
    let mut grid: Vec<ProjectiveRational> = alloc::vec![lo.clone(), hi.clone()];
    while grid.len() < samples {
        let mut best: Option<(num_bigint::BigInt, usize)> = None;
        for i in 0..grid.len() - 1 {
            let weight = grid[i].denom() + grid[i + 1].denom();
            match &best {
                Some((w, _)) if *w <= weight => {}
                _ => best = Some((weight, i)),
            }
        }
        let (_, i) = best.expect("grid has at least one pair");
        let mid = grid[i].mediant(&grid[i + 1]);
        grid.insert(i + 1, mid);
    }
    grid.into_iter()
        .map(|x| {
            let e = approximation_error(&x, bound)?;
            Ok((x, e))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(s: &str) -> ProjectiveRational {
        s.parse().unwrap()
    }

    fn a(n: u64) -> ResolutionBound {
        ResolutionBound::new(n).unwrap()
    }

    #[test]
    fn integer_boundaries() {
        let z = zone(&pr("1/1"), a(3)).unwrap();
        assert_eq!(z.nu_plus, pr("4/3"));
        assert_eq!(z.nu_minus, pr("3/4"));
        assert_eq!(z.left_width(), "1/4".parse().unwrap());
        assert_eq!(z.right_width(), "1/3".parse().unwrap());
    }

    #[test]
    fn odd_length_center() {
        let z = zone(&pr("1/2"), a(3)).unwrap();
        assert_eq!(z.nu_minus, pr("3/7"));
        assert_eq!(z.nu_plus, pr("4/7"));
        assert!(z.nu_minus < pr("1/2") && pr("1/2") < z.nu_plus);
    }

    #[test]
    fn zone_of_zero_is_clipped() {
        let z = zone(&pr("0/1"), a(3)).unwrap();
        assert_eq!(z.nu_minus, pr("0/1"));
        assert_eq!(z.nu_plus, pr("1/3"));
    }

    #[test]
    fn rejects_non_members() {
        assert!(matches!(zone(&pr("3/4"), a(3)), Err(Error::NotInInvariantSet)));
        assert!(zone(&ProjectiveRational::infinity(), a(3)).is_err());
    }

    #[test]
    fn preimage_scan_matches_zone() {
        // every rational with denominator <= 200 in [0.7, 1.4]:
        // image is 1 exactly on [3/4, 4/3].
        let z = zone(&pr("1/1"), a(3)).unwrap();
        let grid = crate::exact::farey_grid(&pr("7/10"), &pr("7/5"), 200);
        for x in grid {
            let hit = resolve(&x, a(3)).unwrap() == pr("1/1");
            assert_eq!(hit, z.contains(&x), "mismatch at {x}");
        }
    }

    #[test]
    fn functional_identities() {
        assert!(functional_check(&pr("1/2"), a(3)).unwrap());
        assert!(functional_check(&pr("1/1"), a(3)).unwrap());
        assert!(functional_check(&pr("2/1"), a(4)).unwrap());
        // worked instance: nu_plus(3/2) = 1 + nu_plus(1/2) = 11/7
        assert_eq!(nu_plus(&pr("3/2"), a(3)).unwrap(), pr("11/7"));
        // self-inverse point: nu_plus(1) = 1/nu_minus(1)
        assert_eq!(nu_plus(&pr("1/1"), a(3)).unwrap(), nu_minus(&pr("1/1"), a(3)).unwrap().recip());
    }

    #[test]
    fn error_values() {
        assert_eq!(approximation_error(&pr("1/2"), a(3)).unwrap(), pr("0/1"));
        assert_eq!(approximation_error(&pr("4/3"), a(3)).unwrap(), pr("1/3"));
        assert_eq!(approximation_error(&pr("7/2"), a(3)).unwrap(), ProjectiveRational::infinity());
    }

    #[test]
    fn profile_grid_is_mediant_refined() {
        let rows = error_profile(&pr("3/4"), &pr("4/3"), a(3), 9).unwrap();
        assert_eq!(rows.len(), 9);
        for w in rows.windows(2) {
            assert!(w[0].0 < w[1].0);
        }
        // maximum error on the zone of 1 sits at an endpoint
        let max = rows.iter().map(|(_, e)| e.clone()).max().unwrap();
        assert_eq!(max, pr("1/3"));
        assert!(rows.iter().any(|(x, _)| *x == pr("1/1")));
    }
}
