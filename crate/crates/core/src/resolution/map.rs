//! The truncation map on words and numbers.
//!
//! On words: replace the first run `T^i` or `J^i` with `i >= a` by the
//! absorbing symbol (infinity for `T`, zero for `J`). On numbers the map
//! truncates the canonical minimal expansion at its first quotient `>= a`;
//! this closes every locking interval at both of its boundary points (the
//! boundaries have minimal expansions ending in exactly `a`, whose unique
//! odd-count word would otherwise be left fixed). The two readings agree
//! everywhere else, and the word-level map is still exposed verbatim as
//! [`truncate_word`].

use alloc::vec::Vec;

use crate::exact::{ContinuedFraction, ProjectiveRational, QuadraticIrrational};
use crate::error::Error;
use crate::words::GeneratorWord;
use crate::Result;

/// The integer resolution bound `a >= 2`; numbers `>= a` are identified
/// with infinity (and, dually, `[0, 1/a]` collapses to zero).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResolutionBound(u64);

impl ResolutionBound {
    /// `a = 1` collapses every number to 0 or infinity and is rejected.
    pub fn new(a: u64) -> Result<Self> {
        if a < 2 {
            return Err(Error::BadResolutionBound);
        }
        Ok(Self(a))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

/// Absorbing symbol a truncated word ends in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Terminal {
    /// A `T`-run offended: the tail is the point at infinity.
    AtInfinity,
    /// A `J`-run offended: the tail is zero.
    AtZero,
}

/// A word cut at its first offending run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedWord {
    pub prefix: GeneratorWord,
    pub terminal: Option<Terminal>,
}

impl TruncatedWord {
    /// Value of the truncated word applied to the base point: the prefix
    /// Möbius map evaluated at the absorbing symbol (or the original value
    /// when nothing offended).
    pub fn value(&self) -> ProjectiveRational {
        let seed = match self.terminal {
            None => return self.prefix.base_image().slope(),
            Some(Terminal::AtInfinity) => ProjectiveRational::infinity(),
            Some(Terminal::AtZero) => ProjectiveRational::zero(),
        };
        self.prefix
            .matrix()
            .mobius(&seed)
            .expect("word matrices are unimodular")
    }
}

/// Word-level truncation, exactly as defined on run-length words.
pub fn truncate_word(word: &GeneratorWord, bound: ResolutionBound) -> TruncatedWord {
    let a = bound.get();
    for (i, &(letter, exp)) in word.runs().iter().enumerate() {
        if exp >= a {
            let prefix = GeneratorWord::from_runs(word.runs()[..i].to_vec())
                .expect("prefix of a normal-form word is normal");
            let terminal = match letter {
                crate::words::Letter::T => Terminal::AtInfinity,
                crate::words::Letter::J => Terminal::AtZero,
            };
            return TruncatedWord { prefix, terminal: Some(terminal) };
        }
    }
    TruncatedWord { prefix: word.clone(), terminal: None }
}

/// One application of the resolution map to a number in `[0, inf]`.
///
/// Truncates the minimal expansion `[a0,...,an]` at the first index with
/// `a_i >= a`, yielding `[a0,...,a_{i-1}]` (infinity when `i = 0`);
/// infinity and numbers already below every threshold are fixed.
pub fn resolve(x: &ProjectiveRational, bound: ResolutionBound) -> Result<ProjectiveRational> {
    if x.is_infinite() {
        return Ok(ProjectiveRational::infinity());
    }
    let cf = ContinuedFraction::from_rational(x)?;
    let a = bound.get();
    match cf.quotients().iter().position(|&ai| ai >= a) {
        None => Ok(x.clone()),
        Some(0) => Ok(ProjectiveRational::infinity()),
        Some(i) => Ok(ContinuedFraction::new(cf.quotients()[..i].to_vec())?.value()),
    }
}

/// Iterate [`resolve`] from `x` until a fixed point or `max_steps`; the
/// returned sequence starts at the first image and ends at the fixed point
/// (listed once). Rational orbits always terminate: each step strictly
/// shortens the minimal expansion.
pub fn orbit(x: &ProjectiveRational, bound: ResolutionBound, max_steps: usize) -> Result<Vec<ProjectiveRational>> {
    if max_steps == 0 {
        return Err(Error::BadDepth);
    }
    let mut out = Vec::new();
    let mut current = resolve(x, bound)?;
    out.push(current.clone());
    for _ in 1..max_steps {
        let next = resolve(&current, bound)?;
        if next == current {
            break;
        }
        out.push(next.clone());
        current = next;
    }
    Ok(out)
}

/// Membership check on a quotient sequence exactly as given: every entry
/// `< a`. Distinct expansions of the same rational may answer differently;
/// pass the canonical minimal form (e.g. from `ContinuedFraction::
/// from_rational`) for the number-level predicate that matches
/// [`resolve`]-fixedness.
pub fn in_invariant_set_cf(cf: &ContinuedFraction, bound: ResolutionBound) -> bool {
    cf.max_quotient() < bound.get()
}

/// Membership for an eventually periodic expansion: preperiod and period
/// quotients all `< a`.
pub fn in_invariant_set_surd(x: &QuadraticIrrational, bound: ResolutionBound) -> bool {
    x.max_quotient() < bound.get()
}

/// Number-level membership: fixed points of [`resolve`]. Infinity and zero
/// are absorbing and count as members.
pub fn in_invariant_set(x: &ProjectiveRational, bound: ResolutionBound) -> Result<bool> {
    if x.is_infinite() {
        return Ok(true);
    }
    Ok(in_invariant_set_cf(&ContinuedFraction::from_rational(x)?, bound))
}
