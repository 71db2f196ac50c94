//! Error type shared by all modules.

use alloc::string::String;
use core::fmt;

/// Domain and parse errors.
///
/// Every operation that can reject its input returns `Result<_, Error>`;
/// projective poles are *not* errors (they produce the point at infinity).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input could not be parsed as an exact number.
    Parse(String),
    /// Zero denominator with a numerator other than 1, or other malformed fraction.
    MalformedFraction,
    /// Operation requires a finite value but received the point at infinity.
    InfiniteInput,
    /// Operation is restricted to the non-negative cone.
    NegativeInput,
    /// Continued fraction must be non-empty.
    EmptyContinuedFraction,
    /// Quotient sequence is not in the required canonical form.
    NotCanonical(&'static str),
    /// Requested depth/sample count is out of range.
    BadDepth,
    /// Resolution bound must be at least 2.
    BadResolutionBound,
    /// Value lies outside the invariant set for the requested bound.
    NotInInvariantSet,
    /// Tree query at an excluded root point.
    ExcludedNode(&'static str),
    /// Quadratic-irrational construction failed (non-periodic or non-real).
    DegenerateSurd(&'static str),
    /// Detector configuration violates 0 < fc < f1.
    BadDetectorConfig,
    /// Denominator exceeds floor(f1/fc): the admissible set is empty.
    EmptyZone,
    /// Simulator input has no usable signal.
    NoSignal,
    /// Sample rate too low for the highest component frequency.
    AliasingGuard,
    /// Anything else with a message.
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::MalformedFraction => write!(f, "malformed fraction"),
            Error::InfiniteInput => write!(f, "input must be finite"),
            Error::NegativeInput => write!(f, "input must be non-negative"),
            Error::EmptyContinuedFraction => write!(f, "continued fraction is empty"),
            Error::NotCanonical(what) => write!(f, "continued fraction not canonical: {what}"),
            Error::BadDepth => write!(f, "depth/sample count out of range"),
            Error::BadResolutionBound => write!(f, "resolution bound must be >= 2"),
            Error::NotInInvariantSet => write!(f, "value is outside the invariant set"),
            Error::ExcludedNode(what) => write!(f, "excluded tree node: {what}"),
            Error::DegenerateSurd(what) => write!(f, "degenerate quadratic irrational: {what}"),
            Error::BadDetectorConfig => write!(f, "detector config requires 0 < fc < f1"),
            Error::EmptyZone => write!(f, "empty zone: denominator exceeds floor(f1/fc)"),
            Error::NoSignal => write!(f, "no signal"),
            Error::AliasingGuard => write!(f, "sample rate too low (aliasing guard)"),
            Error::Invalid(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}
