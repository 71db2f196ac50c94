//! Exact arithmetic for resolution dynamics on the continued-fraction tree.
//!
//! The crate models what a mixer + low-pass detector can resolve about a
//! frequency ratio when partial quotients are capped by an integer bound:
//!
//! * [`exact`] — arbitrary-precision projective rationals, continued
//!   fractions with their two canonical forms, convergents, and quadratic
//!   irrationals in `(P + √D)/Q` normal form.
//! * [`words`] — the positive word monoid on the unimodular generators
//!   `T` and `J`, its matrix and Möbius actions on the lattice, and the
//!   Farey tree realized in `Z²` with mother/daughter branch queries.
//! * [`resolution`] — the truncation map on words and numbers, locking
//!   zones `[ν⁻, ν⁺]`, basins of attraction bounded by quadratic
//!   irrationals, the approximation-error profile, and the pruned
//!   resolution tree.
//! * [`spectrum`] — detector-facing layer: per-denominator quotient
//!   bounds, the predicted zone spectrum with fuzzy gaps, stability
//!   exponents, Brjuno partial sums, and beat-frequency scans.
//! * [`mixsim`] — a small signal-level simulator (mixer models, ideal
//!   low-pass, zero-crossing counter, frequency sweep) used to
//!   cross-check the number-theoretic predictions.
//!
//! Everything outside explicit time-series synthesis and logarithms is
//! exact integer/rational arithmetic; no floating point decides set
//! membership anywhere.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod mixsim;
pub mod resolution;
pub mod spectrum;
pub mod words;

pub use error::Error;
pub use exact::{ContinuedFraction, ConvergentTable, ProjectiveRational, QuadraticIrrational};
pub use words::{FareyTree, GeneratorWord, IntMatrix2, LatticePoint};

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
