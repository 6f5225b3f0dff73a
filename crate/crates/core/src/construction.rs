//! Phase arrays, sequences and the two constructions built on them.
//!
//! The ZCZ construction for `n >= 0` is the `12(2n+1) x 2` array
//!
//! ```text
//! S[i][j] = w^round(i (i + j) / 2),   w = exp(2*pi*i / (6(2n+1)))
//! ```
//!
//! where `round` is floor (default) or ceiling, read out row by row into a
//! sequence of length `24(2n+1)`. Frank sequences (`S[i][j] = w^(ij)` over
//! `d`-th roots, length `d^2`) are provided as a perfect reference.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::alphabet::UnitRootExponent;
use crate::error::{Error, Result};

/// Largest `n` accepted by [`build_zcz_array`].
///
/// For this bound the biggest product `i (i + 1)`, with
/// `i = 12(2n+1) - 1`, is about `5.8e18` and fits both `u64` and `i64`.
pub const MAX_SUPPORTED_N: u64 = 100_000_000;

/// How the half-integer `i (i + j) / 2` is rounded to an exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RoundingVariant {
    #[default]
    Floor,
    Ceiling,
}

impl RoundingVariant {
    pub fn as_str(&self) -> &'static str {
        match self {
            RoundingVariant::Floor => "floor",
            RoundingVariant::Ceiling => "ceiling",
        }
    }

    /// Rounds `numerator / 2`.
    fn halve(self, numerator: u64) -> u64 {
        let x = numerator as i128;
        let rounded = match self {
            RoundingVariant::Floor => x.div_euclid(2),
            RoundingVariant::Ceiling => -(-x).div_euclid(2),
        };
        rounded as u64
    }
}

impl fmt::Display for RoundingVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RoundingVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "floor" => Ok(RoundingVariant::Floor),
            "ceiling" | "ceil" => Ok(RoundingVariant::Ceiling),
            other => Err(format!("unknown rounding variant `{other}`")),
        }
    }
}

/// A periodic sequence of N-th roots of unity, stored as exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Sequence {
    modulus: u64,
    exponents: Vec<u64>,
}

impl Sequence {
    /// Validates that the sequence is non-empty and every exponent is below `modulus`.
    pub fn new(modulus: u64, exponents: Vec<u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if exponents.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some((index, &exponent)) = exponents.iter().enumerate().find(|(_, &e)| e >= modulus)
        {
            return Err(Error::ExponentOutOfRange {
                index,
                exponent,
                modulus,
            });
        }
        Ok(Self { modulus, exponents })
    }

    pub fn from_elements(elements: &[UnitRootExponent]) -> Result<Self> {
        let first = elements.first().ok_or(Error::EmptySequence)?;
        let modulus = first.modulus();
        if let Some(other) = elements.iter().find(|e| e.modulus() != modulus) {
            return Err(Error::ModulusMismatch {
                left: modulus,
                right: other.modulus(),
            });
        }
        Self::new(modulus, elements.iter().map(|e| e.exponent()).collect())
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// The period `L`.
    pub fn period(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn get(&self, index: usize) -> UnitRootExponent {
        UnitRootExponent::new(self.exponents[index], self.modulus)
            .expect("sequence entries are canonical")
    }

    pub fn iter(&self) -> impl Iterator<Item = UnitRootExponent> + '_ {
        (0..self.period()).map(move |i| self.get(i))
    }
}

/// An `R x C` array of N-th roots of unity, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PhaseArray {
    rows: usize,
    cols: usize,
    modulus: u64,
    entries: Vec<u64>,
}

impl PhaseArray {
    pub fn new(rows: usize, cols: usize, modulus: u64, entries: Vec<u64>) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if rows == 0 || cols == 0 || rows.checked_mul(cols) != Some(entries.len()) {
            return Err(Error::ShapeMismatch {
                rows,
                cols,
                len: entries.len(),
            });
        }
        if let Some((index, &exponent)) = entries.iter().enumerate().find(|(_, &e)| e >= modulus) {
            return Err(Error::ExponentOutOfRange {
                index,
                exponent,
                modulus,
            });
        }
        Ok(Self {
            rows,
            cols,
            modulus,
            entries,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns, the divisor `d` of the associated sequence.
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn get(&self, row: usize, col: usize) -> UnitRootExponent {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds"
        );
        UnitRootExponent::new(self.entries[row * self.cols + col], self.modulus)
            .expect("array entries are canonical")
    }

    /// Row-major exponents.
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// Column `col` as a standalone sequence of period `R`.
    pub fn column(&self, col: usize) -> Sequence {
        assert!(col < self.cols, "column {col} out of bounds");
        let exponents = self
            .entries
            .iter()
            .skip(col)
            .step_by(self.cols)
            .copied()
            .collect();
        Sequence {
            modulus: self.modulus,
            exponents,
        }
    }
}

/// Builds the `12(2n+1) x 2` ZCZ phase array over `6(2n+1)`-th roots of unity.
pub fn build_zcz_array(n: u64, variant: RoundingVariant) -> Result<PhaseArray> {
    if n > MAX_SUPPORTED_N {
        return Err(Error::UnsupportedN {
            n,
            max: MAX_SUPPORTED_N,
        });
    }
    let odd = 2 * n + 1;
    let rows = 12 * odd;
    let modulus = 6 * odd;
    let mut entries = Vec::with_capacity(2 * rows as usize);
    for i in 0..rows {
        for j in 0..2u64 {
            let product = i
                .checked_add(j)
                .and_then(|s| s.checked_mul(i))
                .ok_or(Error::Overflow { row: i })?;
            entries.push(variant.halve(product) % modulus);
        }
    }
    PhaseArray::new(rows as usize, 2, modulus, entries)
}

/// Reads an array out row by row: `s[i * C + j] = A[i][j]`.
pub fn flatten_row_major(array: &PhaseArray) -> Sequence {
    Sequence {
        modulus: array.modulus,
        exponents: array.entries.clone(),
    }
}

/// The ZCZ sequence of length `24(2n+1)` over `6(2n+1)`-th roots of unity.
pub fn build_zcz_sequence(n: u64, variant: RoundingVariant) -> Result<Sequence> {
    build_zcz_array(n, variant).map(|a| flatten_row_major(&a))
}

/// Frank sequence of length `d^2` over `d`-th roots: `s[i d + j] = w^(i j)`.
pub fn build_frank_sequence(d: usize) -> Result<Sequence> {
    if d == 0 {
        return Err(Error::ZeroDivisor);
    }
    let modulus = d as u64;
    let exponents = (0..d)
        .flat_map(|i| (0..d).map(move |j| ((i * j) % d) as u64))
        .collect();
    Sequence::new(modulus, exponents)
}
