//! Irreducible fractions on the projective line, with exact decimal parsing.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// An irreducible fraction `p/q`, or the point at infinity stored as `1/0`.
///
/// Invariants: `gcd(|num|, den) = 1`, `den >= 0`, and `den = 0` implies
/// `num = 1`. Zero is `0/1`. The value is the slope of the prime lattice
/// point `(q, p)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProjectiveRational {
    num: BigInt,
    den: BigInt,
}

impl ProjectiveRational {
    /// Build and normalize `num/den`. `0/0` is rejected; any `n/0` with
    /// `n != 0` collapses to the unique point at infinity.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let mut num: BigInt = num.into();
        let mut den: BigInt = den.into();
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::MalformedFraction);
            }
            return Ok(Self { num: BigInt::one(), den });
        }
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num /= &g;
            den /= &g;
        }
        Ok(Self { num, den })
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Self { num: n.into(), den: BigInt::one() }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn infinity() -> Self {
        Self { num: BigInt::one(), den: BigInt::zero() }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// Finite value as an exact ratio; `None` at infinity.
    pub fn to_ratio(&self) -> Option<BigRational> {
        if self.is_infinite() {
            None
        } else {
            Some(BigRational::new(self.num.clone(), self.den.clone()))
        }
    }

    pub fn from_ratio(r: &BigRational) -> Self {
        Self { num: r.numer().clone(), den: r.denom().clone() }
    }

    /// Lossy conversion for display columns; infinity maps to `f64::INFINITY`.
    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        let n = self.num.to_f64().unwrap_or(f64::NAN);
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        n / d
    }

    /// Projective reciprocal: `1/x`; `1/0 = inf`, `1/inf = 0`.
    pub fn recip(&self) -> Self {
        Self::new(self.den.clone(), self.num.clone()).expect("0/0 cannot arise from a normalized value")
    }

    /// `x + 1`, with `inf + 1 = inf`.
    pub fn succ(&self) -> Self {
        Self { num: &self.num + &self.den, den: self.den.clone() }
    }

    /// Freshman sum `(p1+p2)/(q1+q2)`; the Stern–Brocot refinement step.
    pub fn mediant(&self, other: &Self) -> Self {
        Self::new(&self.num + &other.num, &self.den + &other.den)
            .expect("mediant of normalized values is well-formed")
    }
}

impl PartialOrd for ProjectiveRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjectiveRational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl fmt::Display for ProjectiveRational {
    /// Interchange form: `"p/q"`, infinity as `"inf"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            write!(f, "inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Parse the digits of an exact decimal literal such as `1.00000007`.
fn parse_decimal(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    let (int_part, frac_part) = match body.split_once('.') {
        Some((i, f)) => (i, f),
        None => (body, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(s.to_string()));
    }
    let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
    if !digits_ok(int_part) || !digits_ok(frac_part) {
        return Err(Error::Parse(s.to_string()));
    }
    let mut num: BigInt = if int_part.is_empty() {
        BigInt::zero()
    } else {
        int_part.parse().map_err(|_| Error::Parse(s.to_string()))?
    };
    let mut den = BigInt::one();
    for b in frac_part.bytes() {
        num = num * 10 + (b - b'0');
        den *= 10;
    }
    if neg {
        num = -num;
    }
    Ok(BigRational::new(num, den))
}

impl FromStr for ProjectiveRational {
    type Err = Error;

    /// Accepts `"p/q"` (either side an integer or exact decimal), a single
    /// integer/decimal, or `"inf"`. Decimals convert exactly; no floating
    /// point is involved.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::infinity());
        }
        if let Some((a, b)) = s.split_once('/') {
            let pa = parse_decimal(a)?;
            let pb = parse_decimal(b)?;
            if pb.is_zero() {
                if pa.is_zero() {
                    return Err(Error::MalformedFraction);
                }
                return Ok(Self::infinity());
            }
            return Ok(Self::from_ratio(&(pa / pb)));
        }
        Ok(Self::from_ratio(&parse_decimal(s)?))
    }
}

/// Enumerate every irreducible `p/q` with `1 <= q <= max_den` lying in
/// `[lo, hi]`, plus any integer endpoints; ascending order.
pub fn farey_grid(lo: &ProjectiveRational, hi: &ProjectiveRational, max_den: u64) -> Vec<ProjectiveRational> {
    let mut out = Vec::new();
    if lo.is_infinite() || hi.is_infinite() || lo > hi {
        return out;
    }
    for q in 1..=max_den {
        let qb = BigInt::from(q);
        // smallest p with p/q >= lo: p >= lo.num * q / lo.den
        let p_lo = {
            let n = lo.numer() * &qb;
            n.div_floor(lo.denom())
        };
        let p_hi = {
            let n = hi.numer() * &qb;
            n.div_floor(hi.denom())
        };
        let mut p = p_lo.clone();
        if &p * lo.denom() < lo.numer() * &qb {
            p += 1;
        }
        while p <= p_hi {
            if p.gcd(&qb).is_one() {
                out.push(ProjectiveRational { num: p.clone(), den: qb.clone() });
            }
            p += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}
