//! Detector configuration: the local-oscillator and cutoff frequencies and
//! the derived quotient thresholds.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::Result;

/// Exact detector parameters. Everything downstream derives from the
/// single ratio `N = f1/fc`: the denominator cap is `floor(N)` and the
/// per-denominator quotient bound is `floor(N/q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetectorConfig {
    f1: BigRational,
    fc: BigRational,
    n_max: Option<usize>,
}

impl DetectorConfig {
    /// Requires `0 < fc < f1`.
    pub fn new(f1: BigRational, fc: BigRational, n_max: Option<usize>) -> Result<Self> {
        if !f1.is_positive() || !fc.is_positive() || fc >= f1 {
            return Err(Error::BadDetectorConfig);
        }
        Ok(Self { f1, fc, n_max })
    }

    pub fn f1(&self) -> &BigRational {
        &self.f1
    }

    pub fn fc(&self) -> &BigRational {
        &self.fc
    }

    /// Optional cap on expansion depth (time-resolution bound); centers
    /// needing more quotients are not resolvable.
    pub fn n_max(&self) -> Option<usize> {
        self.n_max
    }

    /// Normalized cutoff `fc/f1`.
    pub fn kappa(&self) -> BigRational {
        &self.fc / &self.f1
    }

    /// Largest admissible zone denominator, `floor(f1/fc) >= 1`.
    pub fn q_max(&self) -> u64 {
        let n = &self.f1 / &self.fc;
        floor_to_u64(&n).expect("f1/fc > 1 fits u64 for sane configs")
    }

    /// Per-denominator quotient bound `floor(f1/(fc q))`; zero exactly when
    /// `q > q_max`.
    pub fn a_max(&self, q: u64) -> Result<u64> {
        if q == 0 {
            return Err(Error::Invalid(alloc::string::String::from("denominator must be positive")));
        }
        let n = &self.f1 / (&self.fc * BigInt::from(q));
        floor_to_u64(&n)
    }
}

fn floor_to_u64(x: &BigRational) -> Result<u64> {
    let f = x.numer().div_floor(x.denom());
    f.to_u64()
        .ok_or_else(|| Error::Invalid(alloc::string::String::from("threshold exceeds u64")))
}

/// Render an exact ratio as a terminating decimal when the denominator is
/// of the form 2^a 5^b, otherwise as `p/q`.
pub fn decimal_or_fraction(x: &BigRational) -> alloc::string::String {
    use alloc::string::{String, ToString};
    if x.denom().is_zero() {
        return String::from("inf");
    }
    let mut den = x.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    while (&den % &two).is_zero() {
        den /= &two;
        twos += 1;
    }
    while (&den % &five).is_zero() {
        den /= &five;
        fives += 1;
    }
    if den != BigInt::from(1) || twos.max(fives) > 60 {
        return alloc::format!("{}/{}", x.numer(), x.denom());
    }
    let k = twos.max(fives);
    let scale = BigInt::from(10).pow(k);
    let scaled = x.numer() * &scale / x.denom();
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if k == 0 {
        out.push_str(&digits);
        return out;
    }
    let k = k as usize;
    if digits.len() <= k {
        out.push_str("0.");
        for _ in 0..k - digits.len() {
            out.push('0');
        }
        out.push_str(&digits);
    } else {
        out.push_str(&digits[..digits.len() - k]);
        out.push('.');
        out.push_str(&digits[digits.len() - k..]);
    }
    out
}

/// Parse an exact frequency string (decimal, integer, or `p/q`).
pub fn parse_frequency(s: &str) -> Result<BigRational> {
    let x: crate::exact::ProjectiveRational = s.parse()?;
    x.to_ratio().ok_or(Error::InfiniteInput)
}
