//! Array orthogonality property (AOP).
//!
//! A sequence of period `L = R d` is written row by row into an `R x d`
//! array. Its autocorrelation at `tau = q d + r'` splits into column terms:
//!
//! ```text
//! theta_s(tau) = sum_{r=0}^{d-1} theta_{col r, col (r + r') mod d}(q + floor((r + r') / d))
//! ```
//!
//! so the sequence is perfect when (1) distinct columns have zero
//! cross-correlation at every shift and (2) the column autocorrelations sum
//! to zero at every non-zero shift.

use std::collections::BTreeSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::construction::{PhaseArray, Sequence};
use crate::correlation::{cross_profile, Tolerance};
use crate::error::{Error, Result};

/// Writes `s` row by row into an `L/d x d` array.
pub fn associate_array(s: &Sequence, d: usize) -> Result<PhaseArray> {
    if d == 0 || !s.period().is_multiple_of(d) {
        return Err(Error::DivisorMismatch {
            divisor: d,
            period: s.period(),
        });
    }
    PhaseArray::new(s.period() / d, d, s.modulus(), s.exponents().to_vec())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Condition1Violation {
    pub columns: (usize, usize),
    pub kappa: usize,
    pub value: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Condition2Exception {
    pub kappa: usize,
    pub value: Complex64,
}

/// Every `(pair, kappa)` where two distinct columns correlate above `tol`.
///
/// `tol` resolves against the column length `R`.
pub fn check_condition1(array: &PhaseArray, tol: Tolerance) -> Vec<Condition1Violation> {
    let threshold = tol.resolve(array.rows());
    let columns: Vec<Sequence> = (0..array.cols()).map(|c| array.column(c)).collect();
    let mut violations = Vec::new();
    for a in 0..columns.len() {
        for b in a + 1..columns.len() {
            let profile = cross_profile(&columns[a], &columns[b])
                .expect("columns of one array share period and modulus");
            violations.extend(
                profile
                    .values()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.norm() >= threshold)
                    .map(|(kappa, &value)| Condition1Violation {
                        columns: (a, b),
                        kappa,
                        value,
                    }),
            );
        }
    }
    violations
}

/// Sum of the column autocorrelations at every shift `kappa` in `[0, R)`.
pub fn column_autocorrelation_sum(array: &PhaseArray) -> Vec<Complex64> {
    let mut total = vec![Complex64::new(0.0, 0.0); array.rows()];
    for c in 0..array.cols() {
        let column = array.column(c);
        let profile = cross_profile(&column, &column).expect("column is self-compatible");
        for (acc, v) in total.iter_mut().zip(profile.values()) {
            *acc += v;
        }
    }
    total
}

/// Every non-zero `kappa` at which the column autocorrelations fail to cancel.
pub fn check_condition2(array: &PhaseArray, tol: Tolerance) -> Vec<Condition2Exception> {
    let threshold = tol.resolve(array.rows());
    column_autocorrelation_sum(array)
        .into_iter()
        .enumerate()
        .skip(1)
        .filter(|(_, v)| v.norm() >= threshold)
        .map(|(kappa, value)| Condition2Exception { kappa, value })
        .collect()
}

/// Both AOP conditions evaluated on one array.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AopReport {
    pub divisor: usize,
    pub rows: usize,
    pub tolerance: f64,
    pub condition1_violations: Vec<Condition1Violation>,
    pub condition2_exceptions: Vec<Condition2Exception>,
}

impl AopReport {
    pub fn evaluate(array: &PhaseArray, tol: Tolerance) -> Self {
        Self {
            divisor: array.cols(),
            rows: array.rows(),
            tolerance: tol.resolve(array.rows()),
            condition1_violations: check_condition1(array, tol),
            condition2_exceptions: check_condition2(array, tol),
        }
    }

    pub fn condition1_holds(&self) -> bool {
        self.condition1_violations.is_empty()
    }

    pub fn condition2_holds(&self) -> bool {
        self.condition2_exceptions.is_empty()
    }

    /// Both conditions hold, so the associated sequence is perfect.
    pub fn is_perfect(&self) -> bool {
        self.condition1_holds() && self.condition2_holds()
    }

    pub fn exception_kappas(&self) -> Vec<usize> {
        self.condition2_exceptions.iter().map(|e| e.kappa).collect()
    }
}

/// `tau = quotient * d + remainder`, `0 <= remainder < d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftDecomposition {
    pub quotient: u64,
    pub remainder: u64,
}

impl ShiftDecomposition {
    pub fn new(tau: u64, d: u64) -> Self {
        assert!(d > 0, "divisor must be positive");
        Self {
            quotient: tau / d,
            remainder: tau % d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AopCondition {
    /// Cross-correlation of distinct columns.
    CrossColumns,
    /// Sum of column autocorrelations.
    AutoSum,
}

impl AopCondition {
    pub fn number(self) -> u8 {
        match self {
            AopCondition::CrossColumns => 1,
            AopCondition::AutoSum => 2,
        }
    }
}

/// One column term of `theta_s(tau)`: column `column` against column
/// `partner` at array shift `kappa`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnTerm {
    pub column: u64,
    pub partner: u64,
    pub kappa: u64,
}

/// Which AOP condition governs sequence shift `tau`, and at which array shifts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftMapping {
    pub decomposition: ShiftDecomposition,
    pub condition: AopCondition,
    pub kappas: BTreeSet<u64>,
    /// One entry per column `r` in `0..d`.
    pub terms: Vec<ColumnTerm>,
}

/// Maps a sequence shift to the array shifts it is built from.
///
/// With `tau = q d + r'`: `r' = 0` gives condition 2 at `{q}`; otherwise
/// condition 1 at `{q + floor((r + r') / d) : 0 <= r < d}`.
pub fn map_shift_to_kappa(tau: u64, d: u64) -> ShiftMapping {
    let decomposition = ShiftDecomposition::new(tau, d);
    let ShiftDecomposition {
        quotient,
        remainder,
    } = decomposition;
    let terms: Vec<ColumnTerm> = (0..d)
        .map(|r| ColumnTerm {
            column: r,
            partner: (r + remainder) % d,
            kappa: quotient + (r + remainder) / d,
        })
        .collect();
    let condition = if remainder == 0 {
        AopCondition::AutoSum
    } else {
        AopCondition::CrossColumns
    };
    ShiftMapping {
        decomposition,
        condition,
        kappas: terms.iter().map(|t| t.kappa).collect(),
        terms,
    }
}
