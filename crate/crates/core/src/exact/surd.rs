//! Eventually periodic continued fractions and their exact surd values.
//!
//! A value is kept as `(P + √D)/Q` with `Q | D − P²` so the expansion
//! algorithm stays integral, alongside the canonical preperiod/period
//! recovered by cycle detection. Comparisons never leave integer
//! arithmetic.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::cf::ContinuedFraction;
use super::rational::ProjectiveRational;
use crate::error::Error;
use crate::Result;

/// An eventually periodic continued fraction with exact value `(P + √D)/Q`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    preperiod: Vec<u64>,
    period: Vec<u64>,
    p: BigInt,
    d: BigInt,
    q: BigInt,
}

impl QuadraticIrrational {
    /// Build from a (possibly non-canonical) preperiod and non-empty period.
    ///
    /// The exact value is the positive fixed point of the period's Möbius
    /// matrix transported through the preperiod; the stored quotients are
    /// re-derived canonically from that value.
    pub fn from_periodic(preperiod: &[u64], period: &[u64]) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::DegenerateSurd("empty period"));
        }
        if period.iter().any(|&a| a == 0) || preperiod.iter().skip(1).any(|&a| a == 0) {
            return Err(Error::DegenerateSurd("zero quotient"));
        }

        // Fixed point of y = [period, y]:  A y^2 + B y + C = 0.
        let pt = ContinuedFraction::new(period.to_vec())?.convergents();
        let rows = pt.rows();
        let k = rows.len() - 1;
        let (pk, qk) = (&rows[k].p, &rows[k].q);
        let (pk1, qk1) = if k == 0 {
            (BigInt::one(), BigInt::zero())
        } else {
            (rows[k - 1].p.clone(), rows[k - 1].q.clone())
        };
        let quad_a = qk.clone();
        let quad_b = &qk1 - pk;
        let quad_c = -pk1;
        let disc = &quad_b * &quad_b - BigInt::from(4) * &quad_a * &quad_c;
        if !disc.is_positive() {
            return Err(Error::DegenerateSurd("non-real fixed point"));
        }
        if is_square(&disc) {
            return Err(Error::DegenerateSurd("rational fixed point; period is not genuinely periodic"));
        }
        // y = (u + sqrt(d)) / w with the positive root.
        let u = -quad_b;
        let d = disc;
        let w = BigInt::from(2) * &quad_a;

        // Transport through the preperiod: x = (A y + B)/(C y + D).
        let (ma, mb, mc, md) = if preperiod.is_empty() {
            (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
        } else {
            let t = ContinuedFraction::new(preperiod.to_vec())?.convergents();
            let rows = t.rows();
            let m = rows.len() - 1;
            let (pm, qm) = (rows[m].p.clone(), rows[m].q.clone());
            let (pm1, qm1) = if m == 0 {
                (BigInt::one(), BigInt::zero())
            } else {
                (rows[m - 1].p.clone(), rows[m - 1].q.clone())
            };
            (pm, pm1, qm, qm1)
        };

        // Rationalize ((A u + B w) + A sqrt(d)) / ((C u + D w) + C sqrt(d)).
        let num_rat = &ma * &u + &mb * &w;
        let den_rat = &mc * &u + &md * &w;
        let mut p0 = &num_rat * &den_rat - &ma * &mc * &d;
        let mut s = (&ma * &md - &mb * &mc) * &w;
        let mut q0 = &den_rat * &den_rat - &mc * &mc * &d;
        if s.is_negative() {
            p0 = -p0;
            s = -s;
            q0 = -q0;
        }
        debug_assert!(!q0.is_zero());
        let big_d = &s * &s * &d;

        let (p, d, q) = reduce_surd(p0, big_d, q0)?;
        Self::from_parts(p, d, q)
    }

    /// Build directly from `(P, D, Q)`; `D > 0` non-square, `Q != 0`,
    /// value strictly positive.
    pub fn from_parts(p: BigInt, d: BigInt, q: BigInt) -> Result<Self> {
        if q.is_zero() {
            return Err(Error::DegenerateSurd("zero denominator"));
        }
        if !d.is_positive() || is_square(&d) {
            return Err(Error::DegenerateSurd("D must be positive and non-square"));
        }
        let (p, d, q) = reduce_surd(p, d, q)?;
        if mul_sign(sign_plus_sqrt(&p, &d), sign_of(&q)) != Ordering::Greater {
            return Err(Error::NegativeInput);
        }
        let (preperiod, period) = canonical_expansion(&p, &d, &q)?;
        Ok(Self { preperiod, period, p, d, q })
    }

    pub fn preperiod(&self) -> &[u64] {
        &self.preperiod
    }

    pub fn period(&self) -> &[u64] {
        &self.period
    }

    /// The exact value triple `(P, D, Q)` meaning `(P + √D)/Q`.
    pub fn value_parts(&self) -> (&BigInt, &BigInt, &BigInt) {
        (&self.p, &self.d, &self.q)
    }

    /// First `depth` quotients of the canonical expansion.
    pub fn expand(&self, depth: usize) -> Vec<u64> {
        let mut out = Vec::with_capacity(depth);
        out.extend_from_slice(&self.preperiod);
        while out.len() < depth {
            out.extend_from_slice(&self.period);
        }
        out.truncate(depth);
        out
    }

    /// Smallest cyclic generator of the period (e.g. `[2,1,2,1]` -> `[2,1]`).
    pub fn primitive_period(&self) -> Vec<u64> {
        primitive_cycle(&self.period)
    }

    pub fn max_quotient(&self) -> u64 {
        self.preperiod
            .iter()
            .chain(self.period.iter())
            .copied()
            .max()
            .unwrap_or(0)
    }

    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        let d = self.d.to_f64().unwrap_or(f64::NAN);
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        (p + libm::sqrt(d)) / q
    }

    /// Exact order against a rational (infinity compares greater).
    pub fn cmp_rational(&self, r: &ProjectiveRational) -> Ordering {
        if r.is_infinite() {
            return Ordering::Less;
        }
        // value - n/d = (d P - n Q + d sqrt(D)) / (d Q)
        let a = r.denom() * &self.p - r.numer() * &self.q;
        let b = r.denom().clone();
        mul_sign(sign_surd_expr(&a, &b, &self.d), sign_of(&self.q))
    }

    /// Exact order against another quadratic irrational.
    pub fn cmp_surd(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let (s1, d1) = square_split(&self.d);
        let (s2, d2) = square_split(&other.d);
        if d1 == d2 {
            // (P1 + s1 sqrt(d)) / Q1 - (P2 + s2 sqrt(d)) / Q2
            let a = &self.p * &other.q - &other.p * &self.q;
            let b = &s1 * &other.q - &s2 * &self.q;
            return mul_sign(
                mul_sign(sign_surd_expr(&a, &b, &d1), sign_of(&self.q)),
                sign_of(&other.q),
            );
        }
        // Distinct quadratic fields: the values differ, so convergent
        // intervals eventually separate.
        for depth in [8usize, 16, 32, 64, 128] {
            let (alo, ahi) = self.bounds(depth);
            let (blo, bhi) = other.bounds(depth);
            if ahi < blo {
                return Ordering::Less;
            }
            if bhi < alo {
                return Ordering::Greater;
            }
        }
        unreachable!("distinct quadratic irrationals separate at bounded depth")
    }

    /// Whether the value satisfies `A x² + B x + C = 0` exactly, checked by
    /// splitting the substitution into rational and irrational parts.
    pub fn satisfies_quadratic(&self, qa: &BigInt, qb: &BigInt, qc: &BigInt) -> bool {
        let rational = qa * (&self.p * &self.p + &self.d) + qb * &self.q * &self.p + qc * &self.q * &self.q;
        let irrational = BigInt::from(2) * qa * &self.p + qb * &self.q;
        rational.is_zero() && irrational.is_zero()
    }

    /// Rational bracketing interval from consecutive convergents.
    fn bounds(&self, depth: usize) -> (ProjectiveRational, ProjectiveRational) {
        let cfq = self.expand(depth.max(2));
        let table = ContinuedFraction::new(cfq).unwrap().convergents();
        let rows = table.rows();
        let last = &rows[rows.len() - 1];
        let prev = &rows[rows.len() - 2];
        let a = ProjectiveRational::new(last.p.clone(), last.q.clone()).unwrap();
        let b = ProjectiveRational::new(prev.p.clone(), prev.q.clone()).unwrap();
        if a < b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// Expand `(P + √D)/Q` for `depth` quotients with the integral algorithm.
///
/// Scales the triple to the `Q | D − P²` normal form first; rejects square
/// or non-positive `D`, zero `Q`, and non-positive values.
pub fn surd_expand(p: &BigInt, d: &BigInt, q: &BigInt, depth: usize) -> Result<Vec<u64>> {
    if q.is_zero() {
        return Err(Error::DegenerateSurd("zero denominator"));
    }
    if !d.is_positive() || is_square(d) {
        return Err(Error::DegenerateSurd("D must be positive and non-square"));
    }
    if mul_sign(sign_plus_sqrt(p, d), sign_of(q)) != Ordering::Greater {
        return Err(Error::NegativeInput);
    }
    let (mut p, mut d, mut q) = (p.clone(), d.clone(), q.clone());
    if !((&d - &p * &p) % &q).is_zero() {
        let t = q.abs();
        p *= &t;
        d *= &t * &t;
        q *= &t;
    }
    let s = d.sqrt();
    let mut out = Vec::with_capacity(depth);
    for _ in 0..depth {
        let a = floor_quotient(&p, &s, &q);
        out.push(a.to_u64().ok_or_else(|| Error::Invalid("partial quotient exceeds u64".to_string()))?);
        let p_next = &a * &q - &p;
        let q_next = (&d - &p_next * &p_next) / &q;
        p = p_next;
        q = q_next;
    }
    Ok(out)
}

/// Canonical `(preperiod, period)` of `(P + √D)/Q` via state-cycle detection.
fn canonical_expansion(p: &BigInt, d: &BigInt, q: &BigInt) -> Result<(Vec<u64>, Vec<u64>)> {
    let (mut p, mut d, mut q) = (p.clone(), d.clone(), q.clone());
    if !((&d - &p * &p) % &q).is_zero() {
        let t = q.abs();
        p *= &t;
        d *= &t * &t;
        q *= &t;
    }
    let s = d.sqrt();
    let mut quotients: Vec<u64> = Vec::new();
    let mut states: Vec<(BigInt, BigInt)> = Vec::new();
    for _ in 0..10_000 {
        if let Some(start) = states.iter().position(|(sp, sq)| sp == &p && sq == &q) {
            let pre = quotients[..start].to_vec();
            let per = primitive_cycle(&quotients[start..]);
            return Ok((pre, per));
        }
        states.push((p.clone(), q.clone()));
        let a = floor_quotient(&p, &s, &q);
        quotients.push(
            a.to_u64()
                .ok_or_else(|| Error::Invalid("partial quotient exceeds u64".to_string()))?,
        );
        let p_next = &a * &q - &p;
        let q_next = (&d - &p_next * &p_next) / &q;
        p = p_next;
        q = q_next;
    }
    Err(Error::DegenerateSurd("expansion did not become periodic"))
}

/// floor((P + √D)/Q) given s = floor(√D), exact because √D is irrational.
fn floor_quotient(p: &BigInt, s: &BigInt, q: &BigInt) -> BigInt {
    if q.is_positive() {
        (p + s).div_floor(q)
    } else {
        (-(p + s) - BigInt::one()).div_floor(&-q)
    }
}

fn sign_of(x: &BigInt) -> Ordering {
    match x.sign() {
        num_bigint::Sign::Plus => Ordering::Greater,
        num_bigint::Sign::NoSign => Ordering::Equal,
        num_bigint::Sign::Minus => Ordering::Less,
    }
}

/// Product of two signs represented as `Ordering`s against zero.
fn mul_sign(a: Ordering, b: Ordering) -> Ordering {
    match (a, b) {
        (Ordering::Equal, _) | (_, Ordering::Equal) => Ordering::Equal,
        (x, y) if x == y => Ordering::Greater,
        _ => Ordering::Less,
    }
}

/// Sign of `P + √D` (D > 0 non-square).
fn sign_plus_sqrt(p: &BigInt, d: &BigInt) -> Ordering {
    if !p.is_negative() {
        Ordering::Greater
    } else {
        d.cmp(&(p * p))
    }
}

/// Sign of `a + b√d` for non-square `d > 0`; zero only when both are zero.
fn sign_surd_expr(a: &BigInt, b: &BigInt, d: &BigInt) -> Ordering {
    match (a.is_negative(), b.is_negative()) {
        (false, false) => {
            if a.is_zero() && b.is_zero() {
                Ordering::Equal
            } else {
                Ordering::Greater
            }
        }
        (true, true) => Ordering::Less,
        (false, true) => (a * a).cmp(&(b * b * d)),
        (true, false) => (b * b * d).cmp(&(a * a)),
    }
}

fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Split `n = s² · d0` with `d0` square-free over small primes.
fn square_split(n: &BigInt) -> (BigInt, BigInt) {
    let mut s = BigInt::one();
    let mut rest = n.clone();
    let mut f = BigInt::from(2);
    while &f * &f <= rest && f < BigInt::from(100_000) {
        let f2 = &f * &f;
        while (&rest % &f2).is_zero() {
            rest /= &f2;
            s *= &f;
        }
        f += 1u32;
    }
    // Remaining part may itself be a perfect square times a unit.
    let r = rest.sqrt();
    if &r * &r == rest {
        s *= &r;
        rest = BigInt::one();
    }
    (s, rest)
}

/// Reduce `(P + √D)/Q`: extract the square part of `D`, divide out the
/// common content, then restore the `Q | D − P²` normal form.
fn reduce_surd(p: BigInt, d: BigInt, q: BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if !d.is_positive() || is_square(&d) {
        return Err(Error::DegenerateSurd("D must be positive and non-square"));
    }
    let (mut s, d0) = square_split(&d);
    let mut p = p;
    let mut q = q;
    let g = p.gcd(&s).gcd(&q);
    if !g.is_one() {
        p /= &g;
        s /= &g;
        q /= &g;
    }
    let mut d = &s * &s * &d0;
    if !((&d - &p * &p) % &q).is_zero() {
        let t = q.abs();
        p *= &t;
        d *= &t * &t;
        q *= &t;
    }
    Ok((p, d, q))
}

/// Smallest rotation-generating block of a cyclic quotient sequence.
fn primitive_cycle(cycle: &[u64]) -> Vec<u64> {
    let n = cycle.len();
    'outer: for len in 1..=n {
        if n % len != 0 {
            continue;
        }
        for i in len..n {
            if cycle[i] != cycle[i % len] {
                continue 'outer;
            }
        }
        return cycle[..len].to_vec();
    }
    cycle.to_vec()
}

impl fmt::Display for QuadraticIrrational {
    /// Interchange form: `"[pre;(period)] = (P+sqrt(D))/Q"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.preperiod.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ";(")?;
        for (i, a) in self.period.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")] = ({}+sqrt({}))/{}", self.p, self.d, self.q)
    }
}

impl FromStr for QuadraticIrrational {
    type Err = Error;

    /// Accepts `"pre;(period)"` such as `"1;(2,1)"` or `";(1)"`, with
    /// optional surrounding brackets.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')).unwrap_or(s);
        let (pre_s, per_s) = s.split_once(';').ok_or_else(|| Error::Parse(s.to_string()))?;
        let per_s = per_s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        let parse_list = |t: &str| -> Result<Vec<u64>> {
            let t = t.trim();
            if t.is_empty() {
                return Ok(Vec::new());
            }
            t.split(',')
                .map(|x| x.trim().parse::<u64>().map_err(|_| Error::Parse(t.to_string())))
                .collect()
        };
        let pre = parse_list(pre_s)?;
        let per = parse_list(per_s)?;
        QuadraticIrrational::from_periodic(&pre, &per)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(s: &str) -> ProjectiveRational {
        s.parse().unwrap()
    }

    #[test]
    fn pure_period_two_one_is_one_plus_sqrt3() {
        let x = QuadraticIrrational::from_periodic(&[], &[2, 1]).unwrap();
        let (p, d, q) = x.value_parts();
        assert_eq!((p.to_i64(), d.to_i64(), q.to_i64()), (Some(1), Some(3), Some(1)));
        assert!((x.to_f64() - 2.732).abs() < 1e-3);
    }

    #[test]
    fn preperiod_one_period_two_one() {
        let x = QuadraticIrrational::from_periodic(&[1], &[2, 1]).unwrap();
        let (p, d, q) = x.value_parts();
        assert_eq!((p.to_i64(), d.to_i64(), q.to_i64()), (Some(1), Some(3), Some(2)));
        // the value is purely periodic: the canonical split rolls the
        // leading 1 into the cycle
        assert_eq!(x.preperiod(), &[] as &[u64]);
        assert_eq!(x.period(), &[1, 2]);
        assert_eq!(x.expand(6), &[1, 2, 1, 2, 1, 2]);
        assert_eq!(x.to_string(), "[;(1,2)] = (1+sqrt(3))/2");
    }

    #[test]
    fn golden_ratio() {
        let x = QuadraticIrrational::from_periodic(&[], &[1]).unwrap();
        let (p, d, q) = x.value_parts();
        assert_eq!((p.to_i64(), d.to_i64(), q.to_i64()), (Some(1), Some(5), Some(2)));
    }

    #[test]
    fn expansion_reproduces_quotients() {
        let x = QuadraticIrrational::from_periodic(&[1], &[2, 1]).unwrap();
        assert_eq!(x.expand(9), &[1, 2, 1, 2, 1, 2, 1, 2, 1]);
        let (p, d, q) = x.value_parts();
        assert_eq!(surd_expand(p, d, q, 9).unwrap(), x.expand(9));
    }

    #[test]
    fn surd_roundtrip_small() {
        for pre_len in 0..=2usize {
            for per in [[1u64, 1].as_slice(), &[2, 1], &[1, 2], &[3, 1], &[2, 2], &[4]] {
                let pre: Vec<u64> = (0..pre_len).map(|i| (i as u64 % 3) + 1).collect();
                let x = QuadraticIrrational::from_periodic(&pre, per).unwrap();
                let depth = x.preperiod().len() + 3 * x.period().len();
                let (p, d, q) = x.value_parts();
                assert_eq!(surd_expand(p, d, q, depth).unwrap(), x.expand(depth), "pre {pre:?} per {per:?}");
            }
        }
    }

    #[test]
    fn canonicalizes_redundant_presentations() {
        // [1,2,1,2,...] given with the period phase shifted into the preperiod.
        let a = QuadraticIrrational::from_periodic(&[1, 2], &[1, 2]).unwrap();
        let b = QuadraticIrrational::from_periodic(&[1], &[2, 1]).unwrap();
        assert_eq!(a, b);
        // Doubled period collapses to the primitive one.
        let c = QuadraticIrrational::from_periodic(&[1], &[2, 1, 2, 1]).unwrap();
        assert_eq!(c.period(), &[1, 2]);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(QuadraticIrrational::from_periodic(&[1], &[]).is_err());
        assert!(QuadraticIrrational::from_periodic(&[1], &[0]).is_err());
        assert!(surd_expand(&BigInt::from(0), &BigInt::from(4), &BigInt::from(1), 5).is_err());
        assert!(surd_expand(&BigInt::from(0), &BigInt::from(3), &BigInt::from(0), 5).is_err());
        // (-5 + sqrt(3))/1 < 0
        assert!(surd_expand(&BigInt::from(-5), &BigInt::from(3), &BigInt::from(1), 5).is_err());
    }

    #[test]
    fn exact_comparisons() {
        let x = QuadraticIrrational::from_periodic(&[1], &[2, 1]).unwrap(); // (1+sqrt(3))/2 ~ 1.366
        assert_eq!(x.cmp_rational(&pr("4/3")), Ordering::Greater);
        assert_eq!(x.cmp_rational(&pr("11/8")), Ordering::Less);
        assert_eq!(x.cmp_rational(&ProjectiveRational::infinity()), Ordering::Less);

        let y = QuadraticIrrational::from_periodic(&[], &[2, 1]).unwrap(); // 1+sqrt(3) ~ 2.73
        assert_eq!(x.cmp_surd(&y), Ordering::Less);
        assert_eq!(y.cmp_surd(&x), Ordering::Greater);
        assert_eq!(x.cmp_surd(&x), Ordering::Equal);

        let golden = QuadraticIrrational::from_periodic(&[], &[1]).unwrap(); // 1.618..., field Q(sqrt 5)
        assert_eq!(golden.cmp_surd(&x), Ordering::Greater);
        assert_eq!(x.cmp_surd(&golden), Ordering::Less);
    }

    #[test]
    fn parse_display_roundtrip() {
        let x: QuadraticIrrational = "1;(2,1)".parse().unwrap();
        assert_eq!(x, QuadraticIrrational::from_periodic(&[1], &[2, 1]).unwrap());
        let g: QuadraticIrrational = ";(1)".parse().unwrap();
        assert_eq!(g, QuadraticIrrational::from_periodic(&[], &[1]).unwrap());
    }
}
