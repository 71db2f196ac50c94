//! Beat frequencies of rational lock points and the resonance jump scan:
//! extend a fixed quotient prefix by a varying tail quotient and track the
//! exact beat `|p(a) f0 - q(a) f1|` across the family.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::Error;
use crate::exact::{ContinuedFraction, ProjectiveRational};
use crate::Result;

/// Exact `|p f0 - q f1|` for an irreducible `p/q`.
pub fn beat_frequency(pq: &ProjectiveRational, f0: &BigRational, f1: &BigRational) -> Result<BigRational> {
    if pq.is_infinite() {
        return Err(Error::InfiniteInput);
    }
    let p = BigRational::from(pq.numer().clone());
    let q = BigRational::from(pq.denom().clone());
    let beat = p * f0 - q * f1;
    Ok(beat.abs())
}

/// One row of a jump scan.
#[derive(Debug, Clone, PartialEq)]
pub struct JumpRow {
    pub a: u64,
    pub p: BigInt,
    pub q: BigInt,
    pub beat: BigRational,
}

/// For each tail quotient `a` in the inclusive range, reduce
/// `[prefix..., a]` to `p(a)/q(a)` and compute the exact beat. The rows
/// come out sorted by `a`; `p(a)` and `q(a)` are linear in `a` through the
/// convergent recurrence.
pub fn jump_scan(
    prefix: &ContinuedFraction,
    a_from: u64,
    a_to: u64,
    f0: &BigRational,
    f1: &BigRational,
) -> Result<Vec<JumpRow>> {
    if a_from == 0 || a_from > a_to {
        return Err(Error::BadDepth);
    }
    let table = prefix.convergents();
    let rows = table.rows();
    let n = rows.len() - 1;
    let (pn, qn) = (rows[n].p.clone(), rows[n].q.clone());
    let (pn1, qn1) = if n == 0 {
        (BigInt::from(1), BigInt::from(0))
    } else {
        (rows[n - 1].p.clone(), rows[n - 1].q.clone())
    };
    let mut out = Vec::with_capacity((a_to - a_from + 1) as usize);
    for a in a_from..=a_to {
        let p = BigInt::from(a) * &pn + &pn1;
        let q = BigInt::from(a) * &qn + &qn1;
        let value = ProjectiveRational::new(p.clone(), q.clone())?;
        let beat = beat_frequency(&value, f0, f1)?;
        out.push(JumpRow { a, p, q, beat });
    }
    Ok(out)
}

/// For each target beat, the scan row closest to it, provided it lands
/// within `tol`; used to locate observed jump values inside a family.
pub fn match_targets(rows: &[JumpRow], targets_hz: &[f64], tol_hz: f64) -> Vec<Option<u64>> {
    targets_hz
        .iter()
        .map(|&target| {
            let mut best: Option<(f64, u64)> = None;
            for row in rows {
                let beat = big_rational_to_f64(&row.beat);
                let err = (beat - target).abs();
                match best {
                    Some((e, _)) if e <= err => {}
                    _ => best = Some((err, row.a)),
                }
            }
            best.and_then(|(e, a)| if e <= tol_hz { Some(a) } else { None })
        })
        .collect()
}

pub fn big_rational_to_f64(x: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::cf;
    use crate::spectrum::config::parse_frequency;

    fn rat(s: &str) -> BigRational {
        parse_frequency(s).unwrap()
    }

    #[test]
    fn beat_examples() {
        // |3 * 1000000.07 - 5 * 599975| = 125.21 exactly
        let f0 = rat("1000000.07");
        let f1 = rat("599975");
        let beat = beat_frequency(&"3/5".parse().unwrap(), &f0, &f1).unwrap();
        assert_eq!(beat, rat("125.21"));

        let zero = beat_frequency(&"1/1".parse().unwrap(), &rat("7"), &rat("7")).unwrap();
        assert_eq!(zero, rat("0"));
    }

    #[test]
    fn measured_family_is_linear_in_the_tail() {
        let f0 = rat("1000000.07");
        let f1 = rat("599975");
        let rows = jump_scan(&cf(&[0, 1, 1, 2]), 1590, 1605, &f0, &f1).unwrap();
        for row in &rows {
            assert_eq!(row.p, BigInt::from(3 * row.a + 1));
            assert_eq!(row.q, BigInt::from(5 * row.a + 2));
            // |125.21 a - 199949.93| exactly
            let lin = (rat("125.21") * BigInt::from(row.a) - rat("199949.93")).abs();
            assert_eq!(row.beat, lin);
        }
        let beat_at = |a: u64| rows.iter().find(|r| r.a == a).unwrap().beat.clone();
        assert_eq!(beat_at(1597), rat("10.44"));
        assert_eq!(beat_at(1598), rat("135.65"));
        assert_eq!(beat_at(1599), rat("260.86"));
        assert_eq!(beat_at(1600), rat("386.07"));
        // family member from the far side of the resonance
        assert_eq!(beat_at(1595), rat("239.98"));
    }

    #[test]
    fn target_matching() {
        let f0 = rat("1000000.07");
        let f1 = rat("599975");
        let rows = jump_scan(&cf(&[0, 1, 1, 2]), 1590, 1605, &f0, &f1).unwrap();
        let hits = match_targets(&rows, &[135.0, 261.0, 386.0], 1.0);
        assert_eq!(hits, [Some(1598), Some(1599), Some(1600)]);
        let misses = match_targets(&rows, &[500.0], 1.0);
        assert_eq!(misses, [None]);
    }

    #[test]
    fn scan_validation() {
        let f0 = rat("2");
        let f1 = rat("1");
        assert!(jump_scan(&cf(&[1]), 0, 5, &f0, &f1).is_err());
        assert!(jump_scan(&cf(&[1]), 7, 5, &f0, &f1).is_err());
    }
}
