//! Signal-level open-loop simulator.
//!
//! Two oscillators feed a mixer model; an ideal brick-wall low-pass keeps
//! the components under the cutoff; a zero-crossing counter estimates the
//! dominant surviving frequency. Component frequencies stay exact
//! rationals through mixing and filtering — floating point enters only in
//! time-series synthesis — so zone membership in a sweep is decided
//! exactly.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::error::Error;
use crate::exact::ProjectiveRational;
use crate::spectrum::{big_rational_to_f64, build_spectrum, decimal_or_fraction, DetectorConfig, Spectrum};
use crate::Result;

/// A pure tone with exact frequency.
#[derive(Debug, Clone, PartialEq)]
pub struct Oscillator {
    pub frequency: BigRational,
    pub amplitude: f64,
    pub phase: f64,
}

impl Oscillator {
    pub fn new(frequency: BigRational, amplitude: f64) -> Result<Self> {
        if !frequency.is_positive() || !(amplitude > 0.0) {
            return Err(Error::Invalid(String::from("oscillator needs positive frequency and amplitude")));
        }
        Ok(Self { frequency, amplitude, phase: 0.0 })
    }
}

/// Mixer behavior.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MixerKind {
    /// True multiplier: exactly the sum and difference tones.
    Ideal,
    /// Integer-combination products `|p f0 - q f1|` up to a combined order.
    Intermodulating,
}

/// Mixer model; `rolloff` scales amplitude per combined order beyond the
/// desired product pair.
#[derive(Debug, Clone, PartialEq)]
pub struct MixerModel {
    pub kind: MixerKind,
    pub order_limit: u32,
    pub rolloff: f64,
}

impl MixerModel {
    pub fn ideal() -> Self {
        Self { kind: MixerKind::Ideal, order_limit: 2, rolloff: 1.0 }
    }

    pub fn intermodulating(order_limit: u32, rolloff: f64) -> Result<Self> {
        if order_limit < 1 || !(rolloff > 0.0 && rolloff <= 1.0) {
            return Err(Error::Invalid(String::from("order_limit >= 1 and rolloff in (0,1] required")));
        }
        Ok(Self { kind: MixerKind::Intermodulating, order_limit, rolloff })
    }
}

/// One spectral line of the mixer output.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub frequency: BigRational,
    pub amplitude: f64,
}

/// Mix two oscillators. Ideal: the two product tones at `f0+f1` and
/// `|f0-f1|` with amplitude `a0 a1 / 2`. Intermodulating: one component
/// per sign-canonical pair `(p,q)` with `1 <= |p|+|q| <= order_limit` at
/// `|p f0 - q f1|`, amplitude `a0 a1 rolloff^(|p|+|q|-2) / 2`, merged by
/// exact frequency. Components come out sorted by frequency.
pub fn mix(osc0: &Oscillator, osc1: &Oscillator, model: &MixerModel) -> Vec<Component> {
    let base = osc0.amplitude * osc1.amplitude / 2.0;
    let mut lines: Vec<(BigRational, f64)> = Vec::new();
    match model.kind {
        MixerKind::Ideal => {
            lines.push((&osc0.frequency + &osc1.frequency, base));
            lines.push(((&osc0.frequency - &osc1.frequency).abs(), base));
        }
        MixerKind::Intermodulating => {
            let limit = model.order_limit as i64;
            for p in 0..=limit {
                let q_range: Vec<i64> = if p == 0 {
                    (1..=limit).collect()
                } else {
                    (-(limit - p)..=(limit - p)).collect()
                };
                for q in q_range {
                    let order = p.abs() + q.abs();
                    if order < 1 || order > limit {
                        continue;
                    }
                    let freq = (&osc0.frequency * BigInt::from(p) - &osc1.frequency * BigInt::from(q)).abs();
                    let amp = base * libm::pow(model.rolloff, (order - 2) as f64);
                    lines.push((freq, amp));
                }
            }
        }
    }
    lines.sort_by(|a, b| a.0.cmp(&b.0));
    let mut merged: Vec<Component> = Vec::new();
    for (frequency, amplitude) in lines {
        match merged.last_mut() {
            Some(last) if last.frequency == frequency => last.amplitude += amplitude,
            _ => merged.push(Component { frequency, amplitude }),
        }
    }
    merged
}

/// Ideal brick wall: keep components strictly below the cutoff.
pub fn lowpass(components: &[Component], fc: &BigRational) -> Vec<Component> {
    components
        .iter()
        .filter(|c| &c.frequency < fc)
        .cloned()
        .collect()
}

/// Count zero crossings of the synthesized sum over the window and return
/// `crossings / (2 window)`; resolution (and bias bound) is `1/window`.
pub fn count_beat(components: &[Component], window_s: f64, sample_rate: f64) -> Result<f64> {
    if components.is_empty() || components.iter().all(|c| c.amplitude == 0.0) {
        return Err(Error::NoSignal);
    }
    if !(window_s > 0.0) || !(sample_rate > 0.0) {
        return Err(Error::Invalid(String::from("window and sample rate must be positive")));
    }
    let max_f = components
        .iter()
        .map(|c| big_rational_to_f64(&c.frequency))
        .fold(0.0f64, f64::max);
    if sample_rate <= 4.0 * max_f {
        return Err(Error::AliasingGuard);
    }
    let tones: Vec<(f64, f64)> = components
        .iter()
        .map(|c| (big_rational_to_f64(&c.frequency), c.amplitude))
        .collect();
    let samples = libm::ceil(window_s * sample_rate) as u64;
    let two_pi = 2.0 * core::f64::consts::PI;
    let mut crossings = 0u64;
    let mut prev_positive = true;
    for k in 0..=samples {
        let t = k as f64 / sample_rate;
        let mut s = 0.0;
        for &(f, a) in &tones {
            s += a * libm::cos(two_pi * f * t);
        }
        let positive = s >= 0.0;
        if k > 0 && positive != prev_positive {
            crossings += 1;
        }
        prev_positive = positive;
    }
    Ok(crossings as f64 / (2.0 * window_s))
}

/// One sweep grid point.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub f0: BigRational,
    /// Normalized frequency `f0/f1`.
    pub nu: ProjectiveRational,
    pub detected_hz: Option<f64>,
    /// Center of the predicted zone containing `nu`, if any.
    pub predicted_center: Option<ProjectiveRational>,
    /// Exact beat of the predicted lock, `|q_c f0 - p_c f1|`.
    pub expected_beat: Option<BigRational>,
    /// Inside a predicted zone and counted within `2/window` of the beat.
    pub zone_hit: bool,
}

/// A full sweep with its prediction context.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub spectrum: Spectrum,
    pub window_s: f64,
}

impl SweepResult {
    /// CSV interchange: `f0_hz,nu_num,nu_den,detected_hz,predicted_center,zone_hit`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("f0_hz,nu_num,nu_den,detected_hz,predicted_center,zone_hit\n");
        for row in &self.rows {
            let detected = match row.detected_hz {
                Some(v) => alloc::format!("{v}"),
                None => String::new(),
            };
            let center = match &row.predicted_center {
                Some(c) => alloc::format!("{c}"),
                None => String::new(),
            };
            let _ = writeln!(
                s,
                "{},{},{},{},{},{}",
                decimal_or_fraction(&row.f0),
                row.nu.numer(),
                row.nu.denom(),
                detected,
                center,
                row.zone_hit
            );
        }
        s
    }
}

/// Sweep parameters.
#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub f0_lo: BigRational,
    pub f0_hi: BigRational,
    pub steps: usize,
    pub f1: BigRational,
    pub fc: BigRational,
    pub model: MixerModel,
    pub window_s: f64,
    pub sample_rate: f64,
}

/// Run the open-loop chain over an exact grid of reference frequencies and
/// tag each row with the predicted zone for `nu = f0/f1`.
pub fn sweep(spec: &SweepSpec) -> Result<SweepResult> {
    if spec.steps < 2 {
        return Err(Error::BadDepth);
    }
    if spec.f0_lo >= spec.f0_hi || !spec.f0_lo.is_positive() {
        return Err(Error::Invalid(String::from("need 0 < f0_lo < f0_hi")));
    }
    let cfg = DetectorConfig::new(spec.f1.clone(), spec.fc.clone(), None)?;
    let nu_lo = ProjectiveRational::from_ratio(&(&spec.f0_lo / &spec.f1));
    let nu_hi = ProjectiveRational::from_ratio(&(&spec.f0_hi / &spec.f1));
    let spectrum = build_spectrum(&cfg, &nu_lo, &nu_hi)?;
    let tol = 2.0 / spec.window_s;

    let step = (&spec.f0_hi - &spec.f0_lo) / BigInt::from(spec.steps as u64 - 1);
    let mut rows = Vec::with_capacity(spec.steps);
    for k in 0..spec.steps {
        let f0 = &spec.f0_lo + &step * BigInt::from(k as u64);
        let osc0 = Oscillator::new(f0.clone(), 1.0)?;
        let osc1 = Oscillator::new(spec.f1.clone(), 1.0)?;
        let mixed = mix(&osc0, &osc1, &spec.model);
        let surviving = lowpass(&mixed, &spec.fc);
        let detected_hz = match count_beat(&surviving, spec.window_s, spec.sample_rate) {
            Ok(v) => Some(v),
            Err(Error::NoSignal) => None,
            Err(e) => return Err(e),
        };
        let nu = ProjectiveRational::from_ratio(&(&f0 / &spec.f1));
        let hit_zone = spectrum.zone_containing(&nu).cloned();
        let expected_beat = match &hit_zone {
            Some(z) => {
                let c = &z.zone.center;
                Some((BigRational::from(c.denom().clone()) * &f0 - BigRational::from(c.numer().clone()) * &spec.f1).abs())
            }
            None => None,
        };
        let zone_hit = match (&detected_hz, &expected_beat) {
            (Some(d), Some(b)) => (d - big_rational_to_f64(b)).abs() <= tol,
            _ => false,
        };
        rows.push(SweepRow {
            f0,
            nu,
            detected_hz,
            predicted_center: hit_zone.map(|z| z.zone.center.clone()),
            expected_beat,
            zone_hit,
        });
    }
    Ok(SweepResult { rows, spectrum, window_s: spec.window_s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectrum::parse_frequency;

    fn rat(s: &str) -> BigRational {
        parse_frequency(s).unwrap()
    }

    fn shown(components: &[Component]) -> Vec<(String, f64)> {
        components
            .iter()
            .map(|c| (alloc::format!("{}", c.frequency), c.amplitude))
            .collect()
    }

    #[test]
    fn ideal_mixer_is_two_lines() {
        let a = Oscillator::new(rat("3"), 1.0).unwrap();
        let b = Oscillator::new(rat("2"), 1.0).unwrap();
        let out = mix(&a, &b, &MixerModel::ideal());
        assert_eq!(shown(&out), [(String::from("1"), 0.5), (String::from("5"), 0.5)]);
    }

    #[test]
    fn degenerate_lock_has_a_dc_line() {
        let a = Oscillator::new(rat("2"), 1.0).unwrap();
        let out = mix(&a, &a.clone(), &MixerModel::ideal());
        assert_eq!(out[0].frequency, rat("0"));
    }

    #[test]
    fn intermodulation_includes_higher_products() {
        let a = Oscillator::new(rat("3"), 1.0).unwrap();
        let b = Oscillator::new(rat("2"), 1.0).unwrap();
        let model = MixerModel::intermodulating(3, 0.5).unwrap();
        let out = mix(&a, &b, &model);
        assert!(out.iter().any(|c| c.frequency == rat("4")), "|2*3-2| missing");
        assert!(out.iter().any(|c| c.frequency == rat("1")), "|3-2*2| missing");
        // (1,1) at order 2 and (1,2) at order 3 both land on 1 Hz: merged
        let one = out.iter().find(|c| c.frequency == rat("1")).unwrap();
        assert!((one.amplitude - (0.5 + 0.25)).abs() < 1e-12);
        for w in out.windows(2) {
            assert!(w[0].frequency < w[1].frequency);
        }
    }

    #[test]
    fn lowpass_is_strict() {
        let comps = [
            Component { frequency: rat("5"), amplitude: 0.5 },
            Component { frequency: rat("1"), amplitude: 0.5 },
        ];
        let out = lowpass(&comps, &rat("2"));
        assert_eq!(shown(&out), [(String::from("1"), 0.5)]);
        assert!(lowpass(&comps, &rat("1")).iter().all(|c| c.frequency != rat("1")));
        assert!(lowpass(&comps, &rat("1/2")).is_empty());
    }

    #[test]
    fn counter_on_a_pure_tone() {
        let comps = [Component { frequency: rat("1"), amplitude: 1.0 }];
        let f = count_beat(&comps, 10.0, 64.0).unwrap();
        assert!((f - 1.0).abs() <= 0.1, "{f}");
    }

    #[test]
    fn dominant_component_wins() {
        let comps = [
            Component { frequency: rat("1"), amplitude: 0.5 },
            Component { frequency: rat("9/10"), amplitude: 0.01 },
        ];
        let f = count_beat(&comps, 100.0, 64.0).unwrap();
        assert!((f - 1.0).abs() <= 0.02, "{f}");
    }

    #[test]
    fn counter_guards() {
        assert_eq!(count_beat(&[], 1.0, 100.0).err(), Some(Error::NoSignal));
        let silent = [Component { frequency: rat("1"), amplitude: 0.0 }];
        assert_eq!(count_beat(&silent, 1.0, 100.0).err(), Some(Error::NoSignal));
        let fast = [Component { frequency: rat("50"), amplitude: 1.0 }];
        assert_eq!(count_beat(&fast, 1.0, 100.0).err(), Some(Error::AliasingGuard));
    }

    #[test]
    fn small_sweep_locks_on_the_carrier() {
        let spec = SweepSpec {
            f0_lo: rat("9"),
            f0_hi: rat("11"),
            steps: 21,
            f1: rat("10"),
            fc: rat("1"),
            model: MixerModel::intermodulating(3, 0.3).unwrap(),
            window_s: 20.0,
            sample_rate: 32.0,
        };
        let result = sweep(&spec).unwrap();
        assert_eq!(result.rows.len(), 21);
        let at_ten = result.rows.iter().find(|r| r.f0 == rat("10")).unwrap();
        assert_eq!(at_ten.predicted_center, Some("1/1".parse().unwrap()));
        assert!(at_ten.zone_hit, "beat at resonance should be ~0: {:?}", at_ten.detected_hz);
        let csv = result.to_csv();
        assert!(csv.starts_with("f0_hz,nu_num,nu_den,detected_hz,predicted_center,zone_hit\n"));
        assert!(csv.contains("\n10,1,1,"));
    }
}
