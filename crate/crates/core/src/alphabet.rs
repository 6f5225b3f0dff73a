//! Exact arithmetic over the N-th roots of unity.
//!
//! An element `w^e` with `w = exp(2*pi*i/N)` is stored as the canonical residue
//! `e mod N`. Products and conjugates stay in the integer exponent domain;
//! conversion to `Complex64` only happens when a correlation is evaluated.

use std::f64::consts::TAU;
use std::fmt;
use std::ops::{Mul, Neg};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `w^exponent` for `w` a primitive `modulus`-th root of unity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitRootExponent {
    exponent: u64,
    modulus: u64,
}

impl UnitRootExponent {
    /// Builds an element from an exponent that is already a canonical residue.
    pub fn new(exponent: u64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::ZeroModulus);
        }
        if exponent >= modulus {
            return Err(Error::ExponentOutOfRange {
                index: 0,
                exponent,
                modulus,
            });
        }
        Ok(Self { exponent, modulus })
    }

    /// The multiplicative identity `w^0`.
    pub fn one(modulus: u64) -> Result<Self> {
        Self::new(0, modulus)
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Complex conjugate, `w^-e`.
    pub fn conj(self) -> Self {
        Self {
            exponent: (self.modulus - self.exponent) % self.modulus,
            modulus: self.modulus,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        to_complex(self)
    }
}

impl Mul for UnitRootExponent {
    type Output = Self;

    /// Panics if the two operands live in different moduli.
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(
            self.modulus, rhs.modulus,
            "cannot multiply roots of unity of different orders"
        );
        let sum = (self.exponent as u128 + rhs.exponent as u128) % self.modulus as u128;
        Self {
            exponent: sum as u64,
            modulus: self.modulus,
        }
    }
}

impl Neg for UnitRootExponent {
    type Output = Self;

    fn neg(self) -> Self {
        self.conj()
    }
}

impl fmt::Display for UnitRootExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}^{}", self.modulus, self.exponent)
    }
}

/// Reduces an arbitrary integer exponent to its canonical residue mod `modulus`.
pub fn reduce(raw_exponent: i64, modulus: u64) -> Result<UnitRootExponent> {
    if modulus == 0 {
        return Err(Error::ZeroModulus);
    }
    let exponent = (raw_exponent as i128).rem_euclid(modulus as i128) as u64;
    Ok(UnitRootExponent { exponent, modulus })
}

/// `exp(2*pi*i * e / N)` in double precision.
pub fn to_complex(e: UnitRootExponent) -> Complex64 {
    let angle = TAU * (e.exponent as f64) / (e.modulus as f64);
    Complex64::from_polar(1.0, angle)
}

/// The Gaussian summation `sum_{k=0}^{N-1} w^(q k)`.
///
/// Each term is reduced exactly before conversion, so the result is exactly
/// `N` when `q = 0 mod N` and vanishes up to roundoff otherwise.
///
/// Panics if `modulus` is zero.
pub fn gaussian_sum(q: i64, modulus: u64) -> Complex64 {
    assert!(modulus > 0, "gaussian_sum needs a positive modulus");
    let table = RootTable::new(modulus);
    let step = (q as i128).rem_euclid(modulus as i128) as u128;
    (0..modulus as u128)
        .map(|k| table.get(((step * k) % modulus as u128) as u64))
        .sum()
}

/// Precomputed complex values of `w^0 .. w^(N-1)`.
///
/// Correlation sums look every term up here, so all `w^e` with the same `e`
/// map to bitwise-identical complex numbers.
#[derive(Debug, Clone)]
pub struct RootTable {
    modulus: u64,
    values: Vec<Complex64>,
}

impl RootTable {
    pub fn new(modulus: u64) -> Self {
        assert!(modulus > 0, "root table needs a positive modulus");
        let values = (0..modulus)
            .map(|e| {
                to_complex(UnitRootExponent {
                    exponent: e,
                    modulus,
                })
            })
            .collect();
        Self { modulus, values }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Complex value of `w^exponent`; `exponent` must be a canonical residue.
    #[inline]
    pub fn get(&self, exponent: u64) -> Complex64 {
        self.values[exponent as usize]
    }

    /// Complex value of `w^(a - b)`, i.e. `w^a * conj(w^b)`.
    #[inline]
    pub fn ratio(&self, a: u64, b: u64) -> Complex64 {
        let e = if a >= b {
            a - b
        } else {
            self.modulus - (b - a)
        };
        self.values[e as usize]
    }
}
