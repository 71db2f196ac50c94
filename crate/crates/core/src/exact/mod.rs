//! Exact arithmetic substrate: projective rationals, continued fractions
//! with their canonical forms, convergents, and quadratic irrationals.
//!
//! All types are immutable values and all operations are pure functions;
//! nothing here touches floating point except the explicit lossy `to_f64`
//! display helpers.

mod cf;
mod rational;
mod surd;

pub use cf::{cf, cf_of_decimal, ContinuedFraction, ConvergentRow, ConvergentTable};
pub use rational::{farey_grid, ProjectiveRational};
pub use surd::{surd_expand, QuadraticIrrational};
