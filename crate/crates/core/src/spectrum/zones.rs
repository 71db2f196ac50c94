//! The predicted zone spectrum: admissibility, per-center zones, and the
//! ordered zone/gap decomposition of a frequency window.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::exact::{ContinuedFraction, ProjectiveRational};
use crate::error::Error;
use crate::resolution::{locking_interval, LockingZone};
use crate::Result;

use super::config::{decimal_or_fraction, DetectorConfig};

/// A locking zone under a detector configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumZone {
    pub zone: LockingZone,
    /// `floor(f1/(fc q))` for the center's denominator.
    pub a_max_zone: u64,
    /// Whether the center's own minimal quotients stay within the bound
    /// (the enumeration filter used by [`build_spectrum`]).
    pub representable: bool,
}

impl SpectrumZone {
    pub fn center(&self) -> &ProjectiveRational {
        &self.zone.center
    }
}

/// Zone of one center: nonempty exactly when the center's denominator is
/// at most `floor(f1/fc)`; larger denominators signal the empty set.
pub fn spectrum_zone(center: &ProjectiveRational, cfg: &DetectorConfig) -> Result<SpectrumZone> {
    if center.is_infinite() {
        return Err(Error::InfiniteInput);
    }
    if center.is_negative() {
        return Err(Error::NegativeInput);
    }
    let q = center
        .denom()
        .to_u64()
        .ok_or_else(|| Error::Invalid(String::from("denominator exceeds u64")))?;
    if q > cfg.q_max() {
        return Err(Error::EmptyZone);
    }
    let bound = cfg.a_max(q)?;
    debug_assert!(bound >= 1);
    let minimal = ContinuedFraction::from_rational(center)?;
    let representable = minimal.max_quotient() <= bound;
    let (lo, hi) = locking_interval(&minimal, bound)?;
    Ok(SpectrumZone {
        zone: LockingZone { center: center.clone(), nu_minus: lo, nu_plus: hi, a_used: bound },
        a_max_zone: bound,
        representable,
    })
}

/// Membership in the admissible set of a center: `x` is the center itself,
/// or the expansion of `x` continues one of the center's two canonical
/// representations with its next quotient at least `a_max(q)` (boundary
/// included — the zone endpoints append exactly that bound).
pub fn admissible(x: &ProjectiveRational, center: &ProjectiveRational, cfg: &DetectorConfig) -> Result<bool> {
    if x == center {
        return Ok(true);
    }
    if x.is_infinite() || x.is_negative() {
        return Ok(false);
    }
    let q = center
        .denom()
        .to_u64()
        .ok_or_else(|| Error::Invalid(String::from("denominator exceeds u64")))?;
    if q > cfg.q_max() {
        return Err(Error::EmptyZone);
    }
    let bound = cfg.a_max(q)?;
    let center_cf = ContinuedFraction::from_rational(center)?;
    let x_cf = ContinuedFraction::from_rational(x)?;

    let center_reps = both_reps(&center_cf);
    let x_reps = both_reps(&x_cf);
    for c in &center_reps {
        for xs in &x_reps {
            if continues_with_deep_quotient(xs, c, bound) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// The two expansions of a rational: minimal and its `[.., a-1, 1]` twin
/// (for integers `[m] = [m-1, 1]`; zero has no twin).
fn both_reps(cf: &ContinuedFraction) -> Vec<Vec<u64>> {
    let mut out = Vec::with_capacity(2);
    let q = cf.quotients();
    out.push(q.to_vec());
    if q != [0] {
        let mut twin = q.to_vec();
        *twin.last_mut().unwrap() -= 1;
        twin.push(1);
        out.push(twin);
    }
    out
}

fn continues_with_deep_quotient(x: &[u64], prefix: &[u64], bound: u64) -> bool {
    x.len() > prefix.len() && x[..prefix.len()] == *prefix && x[prefix.len()] >= bound
}

/// One unresolved interval between zones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyGap {
    pub lo: ProjectiveRational,
    pub hi: ProjectiveRational,
}

/// The ordered zone list over a window, plus the fuzzy complement.
#[derive(Debug, Clone)]
pub struct Spectrum {
    pub config: DetectorConfig,
    pub nu_lo: ProjectiveRational,
    pub nu_hi: ProjectiveRational,
    pub zones: Vec<SpectrumZone>,
    pub gaps: Vec<FuzzyGap>,
}

impl Spectrum {
    /// The zone containing `nu`, if any (zones have disjoint interiors).
    pub fn zone_containing(&self, nu: &ProjectiveRational) -> Option<&SpectrumZone> {
        self.zones.iter().find(|z| z.zone.contains(nu))
    }

    /// Total zone measure inside the window, as an exact ratio.
    pub fn covered_measure(&self) -> num_rational::BigRational {
        let zero = num_rational::BigRational::new(0.into(), 1.into());
        self.zones.iter().fold(zero, |acc, z| {
            let lo = z.zone.nu_minus.clone().max(self.nu_lo.clone());
            let hi = z.zone.nu_plus.clone().min(self.nu_hi.clone());
            if lo >= hi {
                return acc;
            }
            acc + (hi.to_ratio().unwrap() - lo.to_ratio().unwrap())
        })
    }

    /// JSON interchange: zones and fuzzy gaps with exact fraction strings.
    pub fn to_json(&self) -> String {
        let mut s = String::from("{");
        let _ = write!(
            s,
            "\"f1\":\"{}\",\"fc\":\"{}\",\"zones\":[",
            decimal_or_fraction(self.config.f1()),
            decimal_or_fraction(self.config.fc())
        );
        for (i, z) in self.zones.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(
                s,
                "{{\"center\":\"{}\",\"nu_minus\":\"{}\",\"nu_plus\":\"{}\",\"a_max\":{}}}",
                z.zone.center, z.zone.nu_minus, z.zone.nu_plus, z.a_max_zone
            );
        }
        s.push_str("],\"fuzzy\":[");
        for (i, g) in self.gaps.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{{\"lo\":\"{}\",\"hi\":\"{}\"}}", g.lo, g.hi);
        }
        s.push_str("]}");
        s
    }
}

/// Enumerate every representable center in `[nu_lo, nu_hi]` with
/// denominator at most `q_max` (mediant-tree descent), attach zones in
/// ascending center order, and report the uncovered complement as fuzzy
/// gaps. With `n_max` set, centers needing deeper expansions are dropped.
pub fn build_spectrum(
    cfg: &DetectorConfig,
    nu_lo: &ProjectiveRational,
    nu_hi: &ProjectiveRational,
) -> Result<Spectrum> {
    if nu_lo.is_infinite() || nu_hi.is_infinite() {
        return Err(Error::InfiniteInput);
    }
    if nu_lo.is_negative() || nu_lo >= nu_hi {
        return Err(Error::Invalid(String::from("window must satisfy 0 <= lo < hi")));
    }
    let mut centers: Vec<ProjectiveRational> = Vec::new();
    if nu_lo.is_zero() {
        centers.push(ProjectiveRational::zero());
    }
    stern_brocot_centers(cfg.q_max(), nu_lo, nu_hi, &mut centers);

    let mut zones = Vec::new();
    for center in centers {
        let sz = spectrum_zone(&center, cfg)?;
        if !sz.representable {
            continue;
        }
        if let Some(n_max) = cfg.n_max() {
            if ContinuedFraction::from_rational(&center)?.len() > n_max {
                continue;
            }
        }
        zones.push(sz);
    }
    zones.sort_by(|a, b| a.zone.center.cmp(&b.zone.center));

    let mut gaps = Vec::new();
    let mut cursor = nu_lo.clone();
    for z in &zones {
        if z.zone.nu_minus > cursor {
            let hi = z.zone.nu_minus.clone().min(nu_hi.clone());
            if cursor < hi {
                gaps.push(FuzzyGap { lo: cursor.clone(), hi });
            }
        }
        if z.zone.nu_plus > cursor {
            cursor = z.zone.nu_plus.clone();
        }
    }
    if cursor < *nu_hi {
        gaps.push(FuzzyGap { lo: cursor, hi: nu_hi.clone() });
    }

    Ok(Spectrum {
        config: cfg.clone(),
        nu_lo: nu_lo.clone(),
        nu_hi: nu_hi.clone(),
        zones,
        gaps,
    })
}

/// In-order mediant-tree walk over (0/1, 1/0), pruned by denominator and
/// window; emits centers in ascending order.
fn stern_brocot_centers(
    q_max: u64,
    lo: &ProjectiveRational,
    hi: &ProjectiveRational,
    out: &mut Vec<ProjectiveRational>,
) {
    let left = ProjectiveRational::zero();
    let right = ProjectiveRational::infinity();
    descend(&left, &right, q_max, lo, hi, out);
}

fn descend(
    left: &ProjectiveRational,
    right: &ProjectiveRational,
    q_max: u64,
    lo: &ProjectiveRational,
    hi: &ProjectiveRational,
    out: &mut Vec<ProjectiveRational>,
) {
    let mid = left.mediant(right);
    if mid.denom() > &BigInt::from(q_max) {
        return;
    }
    // subtree of `mid` spans the open interval (left, right)
    if right <= lo || left >= hi {
        return;
    }
    descend(left, &mid, q_max, lo, hi, out);
    if &mid >= lo && &mid <= hi {
        out.push(mid.clone());
    }
    descend(&mid, right, q_max, lo, hi, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::config::parse_frequency;

    fn pr(s: &str) -> ProjectiveRational {
        s.parse().unwrap()
    }

    fn cfg(f1: &str, fc: &str) -> DetectorConfig {
        DetectorConfig::new(parse_frequency(f1).unwrap(), parse_frequency(fc).unwrap(), None).unwrap()
    }

    #[test]
    fn zone_examples() {
        let c = cfg("3", "1");
        let z = spectrum_zone(&pr("1/1"), &c).unwrap();
        assert_eq!(z.zone.nu_minus, pr("3/4"));
        assert_eq!(z.zone.nu_plus, pr("4/3"));
        assert_eq!(z.a_max_zone, 3);

        let c = cfg("10", "1");
        let z = spectrum_zone(&pr("1/2"), &c).unwrap();
        assert_eq!(z.a_max_zone, 5);
        assert_eq!(z.zone.nu_minus, pr("5/11"));
        assert_eq!(z.zone.nu_plus, pr("6/11"));

        assert_eq!(spectrum_zone(&pr("1/11"), &c).err(), Some(Error::EmptyZone));
    }

    #[test]
    fn zone_exists_for_every_denominator_up_to_the_cap() {
        let c = cfg("10", "1");
        for q in 1..=10u64 {
            let center = ProjectiveRational::new(1, q as i64).unwrap();
            let z = spectrum_zone(&center, &c).unwrap();
            assert!(z.zone.nu_minus < z.zone.nu_plus);
        }
        for q in 11..=20u64 {
            let center = ProjectiveRational::new(1, q as i64).unwrap();
            assert_eq!(spectrum_zone(&center, &c).err(), Some(Error::EmptyZone));
        }
    }

    #[test]
    fn admissibility_matches_zone_membership() {
        let c = cfg("3", "1");
        let center = pr("1/1");
        let z = spectrum_zone(&center, &c).unwrap();
        for x in crate::exact::farey_grid(&pr("1/2"), &pr("2/1"), 60) {
            let adm = admissible(&x, &center, &c).unwrap();
            assert_eq!(adm, z.zone.contains(&x), "mismatch at {x}");
        }
    }

    #[test]
    fn admissible_trivia() {
        let c = cfg("12", "1");
        let center = pr("3/4");
        assert!(admissible(&center, &center, &c).unwrap());
        assert!(!admissible(&pr("2/5"), &center, &c).unwrap());
    }

    #[test]
    fn small_spectrum_centers() {
        let c = cfg("3", "1");
        let s = build_spectrum(&c, &pr("0/1"), &pr("2/1")).unwrap();
        let centers: Vec<String> = s.zones.iter().map(|z| z.center().to_string()).collect();
        assert_eq!(centers, ["0/1", "1/1", "2/1"]);
        assert_eq!(s.zones[0].zone.nu_plus, pr("1/3"));
        assert_eq!(s.zones[1].zone.nu_minus, pr("3/4"));
        // gaps are the exact complement
        assert_eq!(s.gaps.len(), 2);
        assert_eq!(s.gaps[0].lo, pr("1/3"));
        assert_eq!(s.gaps[0].hi, pr("3/4"));
        assert_eq!(s.gaps[1].lo, pr("4/3"));
        assert_eq!(s.gaps[1].hi, pr("7/4"));
        // zone of 2 = [7/4, 7/3] sticks out of the window: no trailing gap
        let covered = s.covered_measure();
        let window = pr("2/1").to_ratio().unwrap() - pr("0/1").to_ratio().unwrap();
        assert!(covered < window);
    }

    #[test]
    fn zones_are_disjoint_and_ordered() {
        for n in ["3", "5", "10"] {
            let c = cfg(n, "1");
            let s = build_spectrum(&c, &pr("0/1"), &pr("2/1")).unwrap();
            for w in s.zones.windows(2) {
                assert!(w[0].zone.nu_plus < w[1].zone.nu_minus, "overlap under N={n}");
            }
        }
    }

    #[test]
    fn n_max_drops_deep_centers() {
        let full = build_spectrum(&cfg("10", "1"), &pr("0/1"), &pr("1/1")).unwrap();
        let shallow = {
            let c = DetectorConfig::new(
                parse_frequency("10").unwrap(),
                parse_frequency("1").unwrap(),
                Some(2),
            )
            .unwrap();
            build_spectrum(&c, &pr("0/1"), &pr("1/1")).unwrap()
        };
        assert!(shallow.zones.len() < full.zones.len());
        // 3/5 = [0,1,1,2] needs four quotients
        assert!(full.zones.iter().any(|z| z.center() == &pr("3/5")));
        assert!(!shallow.zones.iter().any(|z| z.center() == &pr("3/5")));
    }

    #[test]
    fn json_shape() {
        let s = build_spectrum(&cfg("3", "1"), &pr("0/1"), &pr("2/1")).unwrap();
        let j = s.to_json();
        assert!(j.starts_with("{\"f1\":\"3\",\"fc\":\"1\",\"zones\":[{\"center\":\"0/1\""));
        assert!(j.contains("\"nu_minus\":\"3/4\",\"nu_plus\":\"4/3\",\"a_max\":3"));
        assert!(j.contains("\"fuzzy\":[{\"lo\":\"1/3\",\"hi\":\"3/4\"}"));
    }
}
