//! Basins of attraction and the orbit-based structure classification.
//!
//! The basin of a center collects everything whose orbit eventually equals
//! it: the locking interval plus the chains of transit intervals glued to
//! both sides. Each transit hop right of an integer center is the map
//! `x -> 1 + x/(1 + x(a-1))`; its fixed points, transported to the chosen
//! center, are the quadratic irrationals with periodic tail `(a-1, 1)`
//! that bound the basin.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::exact::{ContinuedFraction, ProjectiveRational, QuadraticIrrational};
use crate::error::Error;
use crate::Result;

use super::map::{in_invariant_set_cf, in_invariant_set_surd, orbit, resolve, ResolutionBound};

/// A center with its two quadratic-irrational basin edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Basin {
    pub center: ProjectiveRational,
    pub left_edge: QuadraticIrrational,
    pub right_edge: QuadraticIrrational,
}

impl Basin {
    /// Strict interior membership for a rational point.
    pub fn contains_rational(&self, x: &ProjectiveRational) -> bool {
        self.left_edge.cmp_rational(x) == core::cmp::Ordering::Less
            && self.right_edge.cmp_rational(x) == core::cmp::Ordering::Greater
    }
}

/// Basin edges of a positive invariant-set center: the expansions
/// `[a0,...,an,(a-1,1)...]` and `[a0,...,an-1,1,(a-1,1)...]`, returned in
/// left/right order by exact comparison.
pub fn basin(center: &ProjectiveRational, bound: ResolutionBound) -> Result<Basin> {
    if center.is_infinite() {
        return Err(Error::InfiniteInput);
    }
    if center.is_zero() {
        return Err(Error::Invalid(
            alloc::string::String::from("basin of 0 has no left quadratic edge (cone boundary)"),
        ));
    }
    let cf = ContinuedFraction::from_rational(center)?;
    if !in_invariant_set_cf(&cf, bound) {
        return Err(Error::NotInInvariantSet);
    }
    let a = bound.get();
    let tail = [a - 1, 1];

    let first = QuadraticIrrational::from_periodic(cf.quotients(), &tail)?;
    let second = {
        let mut twin = cf.quotients().to_vec();
        *twin.last_mut().unwrap() -= 1;
        twin.push(1);
        QuadraticIrrational::from_periodic(&twin, &tail)?
    };
    let (left_edge, right_edge) = match first.cmp_surd(&second) {
        core::cmp::Ordering::Less => (first, second),
        _ => (second, first),
    };
    debug_assert_eq!(left_edge.cmp_rational(center), core::cmp::Ordering::Less);
    debug_assert_eq!(right_edge.cmp_rational(center), core::cmp::Ordering::Greater);
    Ok(Basin { center: center.clone(), left_edge, right_edge })
}

/// Coefficients `(A, B, C)` of the transit-hop fixed-point equation
/// `A x² + B x + C = 0` for the given bound: `(a-1) x² - (a-1) x - 1`.
pub fn transit_fixed_point_quadratic(bound: ResolutionBound) -> (BigInt, BigInt, BigInt) {
    let am1 = BigInt::from(bound.get() - 1);
    (am1.clone(), -am1, BigInt::from(-1))
}

/// Structure classes of points under the resolution map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZoneClassTag {
    /// Fixed rational: owns a two-sided locking interval.
    AttractiveRational,
    /// Moving rational: reaches a fixed point after finitely many steps.
    TransientRational,
    /// Irrational built from blocking zones only (no transit tail).
    BlockingIrrational,
    /// Irrational with pure transit tail `(a-1, 1)`.
    TransientIrrational,
    /// Irrational mixing transit pairs with other quotients.
    MixedIrrational,
    /// Classification would need more quotients than the depth allows.
    Fuzzy,
}

/// A classification with the evidence that reproduces it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZoneClass {
    pub tag: ZoneClassTag,
    /// For rationals: the orbit. For irrationals: the primitive period.
    pub orbit_certificate: Vec<ProjectiveRational>,
    pub period_certificate: Vec<u64>,
    pub depth_used: usize,
}

/// Classify a rational by its orbit.
pub fn classify_rational(x: &ProjectiveRational, bound: ResolutionBound, depth: usize) -> Result<ZoneClass> {
    if depth == 0 {
        return Err(Error::BadDepth);
    }
    if !x.is_infinite() {
        let cf = ContinuedFraction::from_rational(x)?;
        if cf.len() > depth {
            return Ok(ZoneClass {
                tag: ZoneClassTag::Fuzzy,
                orbit_certificate: Vec::new(),
                period_certificate: Vec::new(),
                depth_used: depth,
            });
        }
    }
    let image = resolve(x, bound)?;
    if &image == x {
        return Ok(ZoneClass {
            tag: ZoneClassTag::AttractiveRational,
            orbit_certificate: alloc::vec![x.clone()],
            period_certificate: Vec::new(),
            depth_used: depth,
        });
    }
    let orbit = orbit(x, bound, depth.max(4))?;
    Ok(ZoneClass {
        tag: ZoneClassTag::TransientRational,
        orbit_certificate: orbit,
        period_certificate: Vec::new(),
        depth_used: depth,
    })
}

/// Classify a quadratic irrational by its periodic tail.
pub fn classify_surd(x: &QuadraticIrrational, bound: ResolutionBound, depth: usize) -> Result<ZoneClass> {
    if depth == 0 {
        return Err(Error::BadDepth);
    }
    let needed = x.preperiod().len() + x.period().len();
    if needed > depth {
        return Ok(ZoneClass {
            tag: ZoneClassTag::Fuzzy,
            orbit_certificate: Vec::new(),
            period_certificate: Vec::new(),
            depth_used: depth,
        });
    }
    let period = x.primitive_period();
    if !in_invariant_set_surd(x, bound) {
        // Offending quotient: one application already lands on a rational.
        let quotients = x.expand(needed.max(2));
        let a = bound.get();
        let cut = quotients.iter().position(|&q| q >= a).unwrap_or(0);
        let start = if cut == 0 {
            ProjectiveRational::infinity()
        } else {
            ContinuedFraction::new(quotients[..cut].to_vec())?.value()
        };
        let mut cert = alloc::vec![start.clone()];
        cert.extend(orbit(&start, bound, depth.max(4))?);
        cert.dedup();
        return Ok(ZoneClass {
            tag: ZoneClassTag::TransientIrrational,
            orbit_certificate: cert,
            period_certificate: period,
            depth_used: depth,
        });
    }
    // Primitive form of the transit tail; for bound 2 the pair (1,1)
    // collapses to the all-ones (noble) tail.
    let transit_pair: Vec<u64> = if bound.get() == 2 { alloc::vec![1] } else { alloc::vec![bound.get() - 1, 1] };
    let tag = if is_rotation_of(&period, &transit_pair) {
        ZoneClassTag::TransientIrrational
    } else if !has_cyclic_pair(&period, bound.get() - 1) {
        ZoneClassTag::BlockingIrrational
    } else {
        ZoneClassTag::MixedIrrational
    };
    Ok(ZoneClass { tag, orbit_certificate: Vec::new(), period_certificate: period, depth_used: depth })
}

/// Whether `cycle` is some rotation of `target` (as cyclic words).
fn is_rotation_of(cycle: &[u64], target: &[u64]) -> bool {
    if cycle.len() != target.len() {
        return false;
    }
    let n = cycle.len();
    (0..n).any(|shift| (0..n).all(|i| cycle[(i + shift) % n] == target[i]))
}

/// Whether the cyclic sequence contains an adjacent pair `(head, 1)`.
fn has_cyclic_pair(cycle: &[u64], head: u64) -> bool {
    let n = cycle.len();
    if n == 1 {
        return cycle[0] == head && head == 1;
    }
    (0..n).any(|i| cycle[i] == head && cycle[(i + 1) % n] == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cf;
    use num_traits::ToPrimitive;

    fn pr(s: &str) -> ProjectiveRational {
        s.parse().unwrap()
    }

    fn a(n: u64) -> ResolutionBound {
        ResolutionBound::new(n).unwrap()
    }

    #[test]
    fn basin_of_one_has_the_expected_edges() {
        let b = basin(&pr("1/1"), a(3)).unwrap();
        let (p, d, q) = b.right_edge.value_parts();
        assert_eq!((p.to_i64(), d.to_i64(), q.to_i64()), (Some(1), Some(3), Some(2)));
        assert_eq!(b.right_edge.expand(6), &[1, 2, 1, 2, 1, 2]);
        // left edge is sqrt(3) - 1 = (-1 + sqrt(3))/1
        let (p, d, q) = b.left_edge.value_parts();
        assert_eq!((p.to_i64(), d.to_i64(), q.to_i64()), (Some(-1), Some(3), Some(1)));

        let (qa, qb, qc) = transit_fixed_point_quadratic(a(3));
        assert!(b.right_edge.satisfies_quadratic(&qa, &qb, &qc));
    }

    #[test]
    fn basin_interior_orbits_reach_the_center() {
        let b = basin(&pr("1/1"), a(3)).unwrap();
        for x in crate::exact::farey_grid(&pr("3/4"), &pr("15/11"), 40) {
            if !b.contains_rational(&x) {
                continue;
            }
            let o = orbit(&x, a(3), 32).unwrap();
            assert_eq!(o.last().unwrap(), &pr("1/1"), "orbit of {x} ends elsewhere");
        }
    }

    #[test]
    fn noble_edges_for_bound_two() {
        let b = basin(&pr("1/1"), a(2)).unwrap();
        assert_eq!(b.right_edge.primitive_period(), &[1]);
        let (p, d, q) = b.right_edge.value_parts();
        assert_eq!((p.to_i64(), d.to_i64(), q.to_i64()), (Some(1), Some(5), Some(2)));
    }

    #[test]
    fn basin_rejections() {
        assert!(basin(&pr("0/1"), a(3)).is_err());
        assert!(basin(&pr("3/4"), a(3)).is_err());
        assert!(basin(&ProjectiveRational::infinity(), a(3)).is_err());
    }

    #[test]
    fn classify_rationals() {
        let c = classify_rational(&pr("1/2"), a(3), 16).unwrap();
        assert_eq!(c.tag, ZoneClassTag::AttractiveRational);

        let x = cf(&[0, 1, 2, 1, 3]).value();
        let c = classify_rational(&x, a(3), 16).unwrap();
        assert_eq!(c.tag, ZoneClassTag::TransientRational);
        assert_eq!(c.orbit_certificate, [pr("3/4"), pr("1/1")]);

        let c = classify_rational(&x, a(3), 2).unwrap();
        assert_eq!(c.tag, ZoneClassTag::Fuzzy);
    }

    #[test]
    fn classify_surds() {
        let x = QuadraticIrrational::from_periodic(&[1], &[2, 1]).unwrap();
        assert_eq!(classify_surd(&x, a(3), 16).unwrap().tag, ZoneClassTag::TransientIrrational);

        let golden = QuadraticIrrational::from_periodic(&[], &[1]).unwrap();
        assert_eq!(classify_surd(&golden, a(3), 16).unwrap().tag, ZoneClassTag::BlockingIrrational);

        let mixed = QuadraticIrrational::from_periodic(&[], &[2, 1, 1]).unwrap();
        assert_eq!(classify_surd(&mixed, a(3), 16).unwrap().tag, ZoneClassTag::MixedIrrational);

        // sqrt(7) = [2;(1,1,1,4)]: quotient 4 leaves the bound-3 set
        let out = QuadraticIrrational::from_parts(BigInt::from(0), BigInt::from(7), BigInt::from(1)).unwrap();
        assert_eq!(classify_surd(&out, a(3), 16).unwrap().tag, ZoneClassTag::TransientIrrational);

        assert_eq!(classify_surd(&golden, a(3), 0).err(), Some(Error::BadDepth));
    }
}
