//! Periodic correlation of root-of-unity sequences.
//!
//! `theta_{a,b}(tau) = sum_i a_i * conj(b_{(i + tau) mod L})`.
//!
//! Two evaluation routes are provided. [`CorrelationMethod::Direct`] sums the
//! `L` terms per shift in ascending `i`, looking each term `w^(a_i - b_j)` up
//! in a [`RootTable`]; it is the reference. [`CorrelationMethod::Transform`]
//! goes through the FFT cross-spectrum and costs `O(L log L)`.

use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;
use rustfft::{Fft, FftPlanner};
use serde::{Deserialize, Serialize};

use crate::alphabet::RootTable;
use crate::construction::Sequence;
use crate::error::{Error, Result};

/// Relative factor of the default zero-classification tolerance.
pub const DEFAULT_RELATIVE_TOLERANCE: f64 = 1e-9;

/// Threshold below which a correlation value counts as zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum Tolerance {
    /// `factor * length`, where length is the number of summed terms.
    Relative(f64),
    Absolute(f64),
}

impl Tolerance {
    pub fn resolve(self, length: usize) -> f64 {
        match self {
            Tolerance::Relative(f) => f * length as f64,
            Tolerance::Absolute(t) => t,
        }
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance::Relative(DEFAULT_RELATIVE_TOLERANCE)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrelationMethod {
    #[default]
    Direct,
    Transform,
}

impl std::str::FromStr for CorrelationMethod {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "direct" => Ok(CorrelationMethod::Direct),
            "transform" | "fft" => Ok(CorrelationMethod::Transform),
            other => Err(format!("unknown correlation method `{other}`")),
        }
    }
}

/// Correlation value for every shift `tau` in `[0, L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CorrelationProfile {
    values: Vec<Complex64>,
    tolerance: f64,
}

impl CorrelationProfile {
    /// Wraps raw values; the tolerance defaults to `1e-9 * L`.
    pub fn new(values: Vec<Complex64>) -> Self {
        let tolerance = Tolerance::default().resolve(values.len());
        Self { values, tolerance }
    }

    pub fn with_tolerance(mut self, tolerance: Tolerance) -> Self {
        self.tolerance = tolerance.resolve(self.values.len());
        self
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    /// Absolute zero threshold.
    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Value at `shift`, reduced mod `L`.
    pub fn at(&self, shift: i64) -> Complex64 {
        self.values[normalize_shift(shift, self.values.len())]
    }

    pub fn is_zero(&self, shift: i64) -> bool {
        self.at(shift).norm() < self.tolerance
    }

    /// Shifts whose magnitude reaches the tolerance, in increasing order.
    pub fn nonzero_shifts(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| v.norm() >= self.tolerance)
            .map(|(t, _)| t)
            .collect()
    }
}

pub(crate) fn normalize_shift(shift: i64, period: usize) -> usize {
    (shift as i128).rem_euclid(period as i128) as usize
}

fn check_compatible(a: &Sequence, b: &Sequence) -> Result<()> {
    if a.period() != b.period() {
        return Err(Error::PeriodMismatch {
            left: a.period(),
            right: b.period(),
        });
    }
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.modulus(),
            right: b.modulus(),
        });
    }
    Ok(())
}

fn direct_at(table: &RootTable, a: &[u64], b: &[u64], shift: usize) -> Complex64 {
    let len = a.len();
    let mut acc = Complex64::new(0.0, 0.0);
    for (i, &ai) in a.iter().enumerate() {
        let j = i + shift;
        let j = if j >= len { j - len } else { j };
        acc += table.ratio(ai, b[j]);
    }
    acc
}

/// `theta_{a,b}(shift)` by direct summation.
pub fn cross_correlation(a: &Sequence, b: &Sequence, shift: i64) -> Result<Complex64> {
    check_compatible(a, b)?;
    let table = RootTable::new(a.modulus());
    let shift = normalize_shift(shift, a.period());
    Ok(direct_at(&table, a.exponents(), b.exponents(), shift))
}

fn direct_profile(a: &Sequence, b: &Sequence) -> Vec<Complex64> {
    let table = RootTable::new(a.modulus());
    (0..a.period())
        .into_par_iter()
        .map(|shift| direct_at(&table, a.exponents(), b.exponents(), shift))
        .collect()
}

fn to_signal(table: &RootTable, s: &Sequence) -> Vec<Complex64> {
    s.exponents().iter().map(|&e| table.get(e)).collect()
}

fn transform_profile(a: &Sequence, b: &Sequence) -> Vec<Complex64> {
    let len = a.period();
    let table = RootTable::new(a.modulus());
    let mut planner = FftPlanner::<f64>::new();
    let forward: Arc<dyn Fft<f64>> = planner.plan_fft_forward(len);
    let inverse: Arc<dyn Fft<f64>> = planner.plan_fft_inverse(len);

    let mut spec_a = to_signal(&table, a);
    forward.process(&mut spec_a);
    // Autocorrelation reuses the power spectrum |A|^2.
    let mut cross: Vec<Complex64> = if std::ptr::eq(a, b) || a == b {
        spec_a
            .iter()
            .map(|x| Complex64::new(x.norm_sqr(), 0.0))
            .collect()
    } else {
        let mut spec_b = to_signal(&table, b);
        forward.process(&mut spec_b);
        spec_a
            .iter()
            .zip(&spec_b)
            .map(|(x, y)| x.conj() * y)
            .collect()
    };
    // inverse(conj(A) B) / L = sum_i conj(a_i) b_{i+tau}, the conjugate of theta.
    inverse.process(&mut cross);
    let scale = 1.0 / len as f64;
    cross.into_iter().map(|v| v.conj() * scale).collect()
}

/// Autocorrelation for every shift, tolerance `1e-9 * L`.
pub fn auto_profile(s: &Sequence, method: CorrelationMethod) -> CorrelationProfile {
    let values = match method {
        CorrelationMethod::Direct => direct_profile(s, s),
        CorrelationMethod::Transform => transform_profile(s, s),
    };
    CorrelationProfile::new(values)
}

/// Cross-correlation for every shift by direct summation.
pub fn cross_profile(a: &Sequence, b: &Sequence) -> Result<CorrelationProfile> {
    cross_profile_with(a, b, CorrelationMethod::Direct)
}

pub fn cross_profile_with(
    a: &Sequence,
    b: &Sequence,
    method: CorrelationMethod,
) -> Result<CorrelationProfile> {
    check_compatible(a, b)?;
    let values = match method {
        CorrelationMethod::Direct => direct_profile(a, b),
        CorrelationMethod::Transform => transform_profile(a, b),
    };
    Ok(CorrelationProfile::new(values))
}
