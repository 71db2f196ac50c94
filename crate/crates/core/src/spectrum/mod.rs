//! Detector-facing layer: quotient thresholds from `(f1, fc)`, the
//! predicted zone spectrum with fuzzy gaps, stability exponents, Brjuno
//! partial sums, and beat-frequency scans.

mod config;
mod jumps;
mod stability;
mod zones;

pub use config::{decimal_or_fraction, parse_frequency, DetectorConfig};
pub use jumps::{beat_frequency, big_rational_to_f64, jump_scan, match_targets, JumpRow};
pub use stability::{
    brjuno_partial, brjuno_rational, brjuno_surd, stability_profile, stability_profile_surd,
    BrjunoSum, StabilityProfile, StabilityRow,
};
pub use zones::{admissible, build_spectrum, spectrum_zone, FuzzyGap, Spectrum, SpectrumZone};
