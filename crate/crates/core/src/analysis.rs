//! ZCZ profile extraction and the closed-form off-peak value.
//!
//! For the floor construction with parameter `n` the autocorrelation has two
//! non-zero off-peak values, at `tau = 6(2n+1)` and `tau = 18(2n+1)`, both
//! equal to
//!
//! ```text
//! (-1)^(n+1) * 12(2n+1) * sin(pi / (6(2n+1)))
//! ```
//!
//! whose magnitude `2N sin(pi/N)` (with `N = 6(2n+1)`) climbs to `2*pi`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::construction::{build_zcz_sequence, RoundingVariant};
use crate::correlation::{auto_profile, CorrelationMethod, CorrelationProfile, Tolerance};
use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZczProfile {
    pub period: usize,
    pub peak: f64,
    pub nonzero_offpeak: Vec<(usize, Complex64)>,
    /// Largest `Z` with `theta(tau) = 0` for every `0 < tau <= Z`.
    pub zcz_width: usize,
    /// Largest off-peak magnitude divided by the period.
    pub offpeak_ratio: f64,
    pub tolerance: f64,
}

/// Classifies every off-peak shift of an autocorrelation profile.
pub fn zcz_profile(profile: &CorrelationProfile) -> ZczProfile {
    let values = profile.values();
    let period = values.len();
    let tolerance = profile.tolerance();
    let nonzero_offpeak: Vec<(usize, Complex64)> = values
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, v)| v.norm() >= tolerance)
        .map(|(t, &v)| (t, v))
        .collect();
    let zcz_width = nonzero_offpeak
        .first()
        .map_or(period.saturating_sub(1), |&(t, _)| t - 1);
    let max_offpeak = values.iter().skip(1).map(|v| v.norm()).fold(0.0, f64::max);
    ZczProfile {
        period,
        peak: values.first().map_or(0.0, |v| v.re),
        nonzero_offpeak,
        zcz_width,
        offpeak_ratio: max_offpeak / period as f64,
        tolerance,
    }
}

/// `(-1)^(n+1) * 12(2n+1) * sin(pi / (6(2n+1)))`.
pub fn closed_form_offpeak(n: u64) -> f64 {
    let odd = (2 * n + 1) as f64;
    let sign = if n.is_multiple_of(2) { -1.0 } else { 1.0 };
    sign * 12.0 * odd * (PI / (6.0 * odd)).sin()
}

/// Outcome of checking one `(n, variant)` against the closed-form claims.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub n: u64,
    pub variant: RoundingVariant,
    pub period: usize,
    pub tolerance: f64,
    pub expected_shifts: Vec<usize>,
    pub measured_shifts: Vec<usize>,
    /// Autocorrelation at the expected shifts.
    pub values: Vec<Complex64>,
    pub closed_form: f64,
    /// Largest `|value - closed_form|`.
    pub closed_form_deviation: f64,
    pub max_imaginary: f64,
    pub shifts_match: bool,
    pub values_equal: bool,
    pub values_real: bool,
    /// `None` when the closed form is not asserted (ceiling variant).
    pub closed_form_match: Option<bool>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.shifts_match
            && self.values_equal
            && self.values_real
            && self.closed_form_match.unwrap_or(true)
    }
}

/// Builds the sequence for `n`, measures its autocorrelation directly and
/// checks the shift set, the equality and realness of the two values and,
/// for the floor variant, agreement with [`closed_form_offpeak`].
pub fn verify_zcz_claims(n: u64, variant: RoundingVariant, tol: Tolerance) -> Result<ClaimReport> {
    let sequence = build_zcz_sequence(n, variant)?;
    let profile = auto_profile(&sequence, CorrelationMethod::Direct).with_tolerance(tol);
    let tolerance = profile.tolerance();
    let zcz = zcz_profile(&profile);

    let unit = (2 * n + 1) as usize;
    let expected_shifts = vec![6 * unit, 18 * unit];
    let measured_shifts: Vec<usize> = zcz.nonzero_offpeak.iter().map(|&(t, _)| t).collect();
    let values: Vec<Complex64> = expected_shifts
        .iter()
        .map(|&t| profile.values()[t])
        .collect();

    let closed_form = closed_form_offpeak(n);
    let closed_form_deviation = values
        .iter()
        .map(|v| (v - Complex64::new(closed_form, 0.0)).norm())
        .fold(0.0, f64::max);
    let max_imaginary = values.iter().map(|v| v.im.abs()).fold(0.0, f64::max);

    Ok(ClaimReport {
        n,
        variant,
        period: sequence.period(),
        tolerance,
        shifts_match: measured_shifts == expected_shifts,
        expected_shifts,
        measured_shifts,
        values_equal: (values[0] - values[1]).norm() < tolerance,
        values_real: max_imaginary < tolerance,
        closed_form_match: match variant {
            RoundingVariant::Floor => Some(closed_form_deviation < tolerance),
            RoundingVariant::Ceiling => None,
        },
        values,
        closed_form,
        closed_form_deviation,
        max_imaginary,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoteRow {
    pub n: u64,
    pub value: f64,
    pub magnitude: f64,
    /// `magnitude - 2*pi`.
    pub deviation: f64,
}

/// Tabulates how far the closed-form magnitude is from `2*pi`.
pub fn asymptote_report(n_values: &[u64]) -> Vec<AsymptoteRow> {
    n_values
        .iter()
        .map(|&n| {
            let value = closed_form_offpeak(n);
            AsymptoteRow {
                n,
                value,
                magnitude: value.abs(),
                deviation: value.abs() - TAU,
            }
        })
        .collect()
}
