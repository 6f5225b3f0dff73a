//! Periodic zero-correlation-zone (ZCZ) sequences over roots of unity.
//!
//! The crate builds the `12(2n+1) x 2` phase array `S[i][j] = w^floor(i(i+j)/2)`
//! with `w = exp(2*pi*sqrt(-1) / (6(2n+1)))`, flattens it row by row into a
//! sequence of length `24(2n+1)`, and checks its correlation structure:
//!
//! - [`alphabet`]: exact exponent arithmetic over N-th roots of unity.
//! - [`construction`]: the ZCZ array/sequence (floor and ceiling variants)
//!   and Frank sequences.
//! - [`correlation`]: periodic cross/auto-correlation, direct and FFT-based.
//! - [`aop`]: associated arrays and the two array orthogonality conditions.
//! - [`analysis`]: ZCZ profile extraction, the closed-form off-peak value and
//!   the asymptotic behaviour of that value.
//! - [`cli`]: the `zcz` command-line frontend and the sequence file formats.

pub mod alphabet;
pub mod analysis;
pub mod aop;
pub mod cli;
pub mod construction;
pub mod correlation;
mod error;

pub use alphabet::{gaussian_sum, reduce, to_complex, RootTable, UnitRootExponent};
pub use analysis::{
    asymptote_report, closed_form_offpeak, verify_zcz_claims, zcz_profile, AsymptoteRow,
    ClaimReport, ZczProfile,
};
pub use aop::{
    associate_array, check_condition1, check_condition2, map_shift_to_kappa, AopCondition,
    AopReport, Condition1Violation, Condition2Exception, ShiftDecomposition, ShiftMapping,
};
pub use construction::{
    build_frank_sequence, build_zcz_array, build_zcz_sequence, flatten_row_major, PhaseArray,
    RoundingVariant, Sequence, MAX_SUPPORTED_N,
};
pub use correlation::{
    auto_profile, cross_correlation, cross_profile, CorrelationMethod, CorrelationProfile,
    Tolerance,
};
pub use error::{Error, Result};
