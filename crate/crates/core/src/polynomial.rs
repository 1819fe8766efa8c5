//! Dense univariate polynomials with unbounded integer coefficients.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::DistanceDistribution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolynomialError {
    #[error("cannot divide by x: constant term is {0}")]
    NonzeroConstantTerm(BigInt),
    #[error("invalid coefficient `{0}`")]
    BadCoefficient(String),
}

/// Coefficients in ascending degree, with no trailing zeros; the zero
/// polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// Canonicalizes by trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The generating polynomial `sum_k counts[k] x^k`.
    pub fn from_distribution(dist: &DistanceDistribution) -> Self {
        Self::new(dist.counts().iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero past the degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn has_negative_coefficient(&self) -> bool {
        self.coeffs.iter().any(Signed::is_negative)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    /// Horner evaluation.
    pub fn evaluate(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Divides by `x`; the constant term must be zero.
    pub fn shift_down(&self) -> Result<Self, PolynomialError> {
        match self.coeffs.first() {
            None => Ok(Self::zero()),
            Some(c) if !c.is_zero() => Err(PolynomialError::NonzeroConstantTerm(c.clone())),
            Some(_) => Ok(Polynomial {
                coeffs: self.coeffs[1..].to_vec(),
            }),
        }
    }

    /// Multiplies by `x`.
    pub fn shift_up(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn add_constant(&self, c: impl Into<BigInt>) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        coeffs[0] += c.into();
        Self::new(coeffs)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&BigInt, &BigInt) -> BigInt) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let zero = BigInt::zero();
        Self::new(
            (0..len)
                .map(|k| {
                    f(
                        self.coeffs.get(k).unwrap_or(&zero),
                        other.coeffs.get(k).unwrap_or(&zero),
                    )
                })
                .collect(),
        )
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

/// `a0 + a1*x + a2*x^2 ...`; zero terms omitted, unit coefficients elided
/// on non-constant terms, zero polynomial printed as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = magnitude.is_one();
            match k {
                0 => write!(f, "{magnitude}")?,
                _ if unit => f.write_str("x")?,
                _ => write!(f, "{magnitude}*x")?,
            }
            if k > 1 {
                write!(f, "^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Polynomial {
    /// Compact coefficient array, e.g. `[4,3,3]`.
    pub fn to_array_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct CoeffsRepr {
    coeffs: Vec<String>,
}

/// Serialized as `{"coeffs":["4","3","3"]}`: decimal strings so consumers
/// with 53-bit numbers lose nothing.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        CoeffsRepr {
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = CoeffsRepr::deserialize(deserializer)?;
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| {
                s.parse::<BigInt>()
                    .map_err(|_| serde::de::Error::custom(PolynomialError::BadCoefficient(s.clone())))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}
