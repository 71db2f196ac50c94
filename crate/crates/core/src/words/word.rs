//! The positive word monoid on `T` and `J`, its 2×2 integer matrices, and
//! the induced Möbius action on the projective line.
//!
//! `T` translates (`x -> x+1`, matrix `[[1,0],[1,1]]`), `J` is the
//! conjugated translation (`x -> x/(x+1)`, matrix `[[1,1],[0,1]]`), and the
//! swap `S` (`x -> 1/x`) is provided as a utility but never appears in
//! words. A matrix `[[a,b],[c,d]]` acts on lattice points by
//! `(q,p) -> (aq+bp, cq+dp)` and therefore on slopes by
//! `z -> (dz+c)/(bz+a)`.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exact::{ContinuedFraction, ProjectiveRational};
use crate::error::Error;
use crate::Result;

/// Generator letters of the positive monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    T,
    J,
}

/// A word in run-length normal form: adjacent runs alternate letters and
/// every exponent is positive. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratorWord {
    runs: Vec<(Letter, u64)>,
}

impl GeneratorWord {
    pub fn identity() -> Self {
        Self { runs: Vec::new() }
    }

    /// Validate alternation and positivity.
    pub fn from_runs(runs: Vec<(Letter, u64)>) -> Result<Self> {
        for (i, &(letter, exp)) in runs.iter().enumerate() {
            if exp == 0 {
                return Err(Error::Invalid("zero exponent in word".to_string()));
            }
            if i > 0 && runs[i - 1].0 == letter {
                return Err(Error::Invalid("adjacent runs must alternate letters".to_string()));
            }
        }
        Ok(Self { runs })
    }

    pub fn runs(&self) -> &[(Letter, u64)] {
        &self.runs
    }

    pub fn is_identity(&self) -> bool {
        self.runs.is_empty()
    }

    /// Word of the odd-count word form `[a0,...,a2n]`:
    /// `T^a0 J^a1 ... J^a(2n-1) T^a2n`, with zero exponents absent.
    pub fn from_cf(cf: &ContinuedFraction) -> Result<Self> {
        let word_form = cf.to_word_form()?;
        let mut runs = Vec::new();
        for (i, &a) in word_form.quotients().iter().enumerate() {
            let letter = if i % 2 == 0 { Letter::T } else { Letter::J };
            if a > 0 {
                runs.push((letter, a));
            }
        }
        Self::from_runs(runs)
    }

    /// Inverse of [`Self::from_cf`]: the quotient sequence whose word this
    /// is. Words ending in `J` yield a trailing zero quotient (they are not
    /// in the canonical image, but the sequence still evaluates correctly).
    pub fn to_cf(&self) -> ContinuedFraction {
        if self.runs.is_empty() {
            return ContinuedFraction::new([0].to_vec()).unwrap();
        }
        let mut quotients = Vec::new();
        if self.runs[0].0 == Letter::J {
            quotients.push(0);
        }
        for &(_, exp) in &self.runs {
            quotients.push(exp);
        }
        if self.runs.last().unwrap().0 == Letter::J {
            quotients.push(0);
        }
        ContinuedFraction::new(quotients).unwrap()
    }

    /// Product of the run matrices, leftmost run outermost.
    pub fn matrix(&self) -> IntMatrix2 {
        let mut m = IntMatrix2::identity();
        for &(letter, exp) in &self.runs {
            m = m.mul(&IntMatrix2::generator_power(letter, exp));
        }
        m
    }

    /// Number of runs (the word-length scale used by orbit bounds).
    pub fn run_count(&self) -> usize {
        self.runs.len()
    }

    /// Largest run exponent, 0 for the identity.
    pub fn max_exponent(&self) -> u64 {
        self.runs.iter().map(|&(_, e)| e).max().unwrap_or(0)
    }

    /// Append one run, merging with the tail when letters coincide.
    pub fn push_run(&mut self, letter: Letter, exp: u64) {
        if exp == 0 {
            return;
        }
        if let Some(last) = self.runs.last_mut() {
            if last.0 == letter {
                last.1 += exp;
                return;
            }
        }
        self.runs.push((letter, exp));
    }

    /// The word applied to the base point `(1,0)`.
    pub fn base_image(&self) -> LatticePoint {
        self.matrix().apply_point(&LatticePoint::new(1u32, 0u32).unwrap()).unwrap()
    }
}

impl fmt::Display for GeneratorWord {
    /// Interchange form: `"T^2 J^1 T^3"`; the identity prints as `"e"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return write!(f, "e");
        }
        for (i, (letter, exp)) in self.runs.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let l = match letter {
                Letter::T => "T",
                Letter::J => "J",
            };
            write!(f, "{l}^{exp}")?;
        }
        Ok(())
    }
}

/// Row-major 2×2 integer matrix `[[a,b],[c,d]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix2 {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    /// Translation generator: slope action `x -> x+1`.
    pub fn t() -> Self {
        Self::new(1, 0, 1, 1)
    }

    /// Conjugated translation: slope action `x -> x/(x+1)`.
    pub fn j() -> Self {
        Self::new(1, 1, 0, 1)
    }

    /// Swap: slope action `x -> 1/x`. Utility only; not a word letter.
    pub fn s() -> Self {
        Self::new(0, 1, 1, 0)
    }

    /// `T^k = [[1,0],[k,1]]`, `J^k = [[1,k],[0,1]]`.
    pub fn generator_power(letter: Letter, exp: u64) -> Self {
        match letter {
            Letter::T => Self::new(1, 0, BigInt::from(exp), 1),
            Letter::J => Self::new(1, BigInt::from(exp), 0, 1),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    /// Lattice action `(q,p) -> (aq+bp, cq+dp)`; errors if the image leaves
    /// the non-negative cone (cannot happen for positive words).
    pub fn apply_point(&self, pt: &LatticePoint) -> Result<LatticePoint> {
        let q = &self.a * &pt.q + &self.b * &pt.p;
        let p = &self.c * &pt.q + &self.d * &pt.p;
        LatticePoint::from_bigints(q, p)
    }

    /// Möbius action on slopes, `z -> (dz+c)/(bz+a)`; poles map to the
    /// projective point at infinity.
    pub fn mobius(&self, x: &ProjectiveRational) -> Result<ProjectiveRational> {
        let num = &self.c * x.denom() + &self.d * x.numer();
        let den = &self.a * x.denom() + &self.b * x.numer();
        ProjectiveRational::new(num, den)
    }
}

/// A lattice point `(q, p)` in the closed first quadrant; its slope is the
/// fraction `p/q` (`(0,1)` is the point at infinity).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    q: BigInt,
    p: BigInt,
}

impl LatticePoint {
    pub fn new(q: impl Into<BigInt>, p: impl Into<BigInt>) -> Result<Self> {
        Self::from_bigints(q.into(), p.into())
    }

    fn from_bigints(q: BigInt, p: BigInt) -> Result<Self> {
        if q.is_negative() || p.is_negative() {
            return Err(Error::NegativeInput);
        }
        if q.is_zero() && p.is_zero() {
            return Err(Error::Invalid("origin is not a projective point".to_string()));
        }
        Ok(Self { q, p })
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn is_prime(&self) -> bool {
        self.q.gcd(&self.p).is_one()
    }

    pub fn slope(&self) -> ProjectiveRational {
        ProjectiveRational::new(self.p.clone(), self.q.clone()).expect("not the origin")
    }

    /// Componentwise difference as a direction point; errors when not a
    /// non-negative direction.
    pub fn direction_to(&self, other: &Self) -> Result<Self> {
        Self::from_bigints(&other.q - &self.q, &other.p - &self.p)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.q, self.p)
    }
}
