//! Exact univariate polynomial and truncated power-series arithmetic over
//! arbitrary-precision integers.
//!
//! Invariants:
//! - `IntPoly` stores coefficients by ascending degree with no trailing
//!   zeros; the zero polynomial is the empty coefficient vector.
//! - `IntSeries` with truncation `T` stores exactly `T + 1` coefficients
//!   (degrees `0..=T`). Binary operations carry the minimum truncation of
//!   their operands.
//! - There is no rational arithmetic anywhere: a series is only inverted
//!   when its constant term is a unit (`+1` or `-1`), which keeps every
//!   coefficient an exact integer.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::ser::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Errors from polynomial and series arithmetic.
#[derive(Debug, Error, PartialEq, Eq, Clone)]
pub enum SeriesError {
    /// Series inversion (or rational-function construction) needs a unit
    /// constant term.
    #[error("constant term {0} is not a unit (need +1 or -1)")]
    NonUnitConstantTerm(BigInt),
    /// Polynomial division left a nonzero remainder.
    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,
}

/// Polynomial over `BigInt`, coefficients indexed by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// `c * t^degree`.
    pub fn monomial(c: impl Into<BigInt>, degree: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        IntPoly { coeffs }
    }

    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^degree` (zero beyond the stored length).
    pub fn coeff(&self, degree: usize) -> BigInt {
        self.coeffs.get(degree).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![BigInt::zero(); len];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::from_coeffs(out)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Convolution product; exact in every coefficient.
    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }

    pub fn pow(&self, exp: u32) -> IntPoly {
        let mut out = IntPoly::one();
        for _ in 0..exp {
            out = out.mul(self);
        }
        out
    }

    /// `p(-t)`: flips the sign of every odd-degree coefficient.
    pub fn substitute_neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Exact division: returns `r` with `divisor * r = self`, or
    /// `NotDivisible` when no such integer polynomial exists.
    ///
    /// The divisor must be nonzero.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly, SeriesError> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPoly::zero());
        }
        let dd = divisor.degree().unwrap();
        let Some(pd) = self.degree().filter(|&pd| pd >= dd) else {
            return Err(SeriesError::NotDivisible);
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); pd - dd + 1];
        for k in (0..=pd - dd).rev() {
            let top = rem[k + dd].clone();
            if top.is_zero() {
                continue;
            }
            if (&top % lead) != BigInt::zero() {
                return Err(SeriesError::NotDivisible);
            }
            let q = &top / lead;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::NotDivisible);
        }
        Ok(IntPoly::from_coeffs(quot))
    }
}

/// Power series known exactly up to and including degree `truncation`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntSeries {
    truncation: usize,
    coeffs: Vec<BigInt>,
}

impl IntSeries {
    pub fn zero(truncation: usize) -> Self {
        IntSeries {
            truncation,
            coeffs: vec![BigInt::zero(); truncation + 1],
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = IntSeries::zero(truncation);
        s.coeffs[0] = BigInt::one();
        s
    }

    /// Truncates (or zero-pads) a polynomial to a series. When
    /// `degree(p) <= truncation` this is lossless and `to_poly` recovers `p`.
    pub fn from_poly(p: &IntPoly, truncation: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); truncation + 1];
        for (d, c) in p.coeffs().iter().enumerate().take(truncation + 1) {
            coeffs[d] = c.clone();
        }
        IntSeries { truncation, coeffs }
    }

    /// Wraps an explicit coefficient list; the truncation is `len - 1`.
    ///
    /// The list must be nonempty.
    pub fn from_coeff_vec(coeffs: Vec<BigInt>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least degree 0");
        IntSeries {
            truncation: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeff(&self, degree: usize) -> &BigInt {
        assert!(
            degree <= self.truncation,
            "coefficient of t^{degree} requested but series is only known to O(t^{})",
            self.truncation + 1
        );
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Drops precision down to `truncation <= self.truncation()`.
    pub fn truncated(&self, truncation: usize) -> IntSeries {
        assert!(truncation <= self.truncation, "cannot extend a series");
        IntSeries {
            truncation,
            coeffs: self.coeffs[..=truncation].to_vec(),
        }
    }

    pub fn add(&self, other: &IntSeries) -> IntSeries {
        let t = self.truncation.min(other.truncation);
        let coeffs = (0..=t)
            .map(|d| &self.coeffs[d] + &other.coeffs[d])
            .collect();
        IntSeries {
            truncation: t,
            coeffs,
        }
    }

    pub fn sub(&self, other: &IntSeries) -> IntSeries {
        let t = self.truncation.min(other.truncation);
        let coeffs = (0..=t)
            .map(|d| &self.coeffs[d] - &other.coeffs[d])
            .collect();
        IntSeries {
            truncation: t,
            coeffs,
        }
    }

    /// Truncated convolution; the result carries the minimum truncation.
    pub fn mul(&self, other: &IntSeries) -> IntSeries {
        let t = self.truncation.min(other.truncation);
        let mut coeffs = vec![BigInt::zero(); t + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(t + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(t + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        IntSeries {
            truncation: t,
            coeffs,
        }
    }

    /// Multiplicative inverse up to the truncation.
    ///
    /// The constant term must be `+1` or `-1`; this is what keeps the
    /// inverse integral.
    pub fn inverse(&self) -> Result<IntSeries, SeriesError> {
        let c0 = &self.coeffs[0];
        if !c0.is_one() && !(-c0).is_one() {
            return Err(SeriesError::NonUnitConstantTerm(c0.clone()));
        }
        // c0 is its own inverse.
        let mut inv = vec![BigInt::zero(); self.truncation + 1];
        inv[0] = c0.clone();
        for n in 1..=self.truncation {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &inv[n - k];
                }
            }
            inv[n] = -(c0 * acc);
        }
        Ok(IntSeries {
            truncation: self.truncation,
            coeffs: inv,
        })
    }

    /// `s(-t)`.
    pub fn substitute_neg(&self) -> IntSeries {
        IntSeries {
            truncation: self.truncation,
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(d, c)| if d % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Reads the known coefficients back as a polynomial.
    pub fn to_poly(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.clone())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }
}

/// Quotient of integer polynomials with `den(0) = 1`, so its series
/// expansion has integer coefficients at every truncation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFn {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFn {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self, SeriesError> {
        if !den.coeff(0).is_one() {
            return Err(SeriesError::NonUnitConstantTerm(den.coeff(0)));
        }
        Ok(RationalFn { num, den })
    }

    pub fn num(&self) -> &IntPoly {
        &self.num
    }

    pub fn den(&self) -> &IntPoly {
        &self.den
    }

    pub fn expand(&self, truncation: usize) -> IntSeries {
        let den = IntSeries::from_poly(&self.den, truncation)
            .inverse()
            .expect("denominator has constant term 1");
        IntSeries::from_poly(&self.num, truncation).mul(&den)
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt]) -> fmt::Result {
    let mut first = true;
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if d == 0 {
            write!(f, "{mag}")?;
        } else {
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write!(f, "t")?;
            if d > 1 {
                write!(f, "^{d}")?;
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs)
    }
}

impl fmt::Display for IntSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.coeffs)?;
        write!(f, " + O(t^{})", self.truncation + 1)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// Serde helpers representing `Vec<BigInt>` as a plain JSON integer array.
///
/// serde_json's `arbitrary_precision` feature carries the digits through
/// without ever rounding to a float, so coefficients survive a round trip
/// at any size.
pub(crate) mod biglist {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigInt], ser: S) -> Result<S::Ok, S::Error> {
        let numbers = v
            .iter()
            .map(|b| serde_json::from_str::<serde_json::Number>(&b.to_string()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(S::Error::custom)?;
        numbers.serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<BigInt>, D::Error> {
        let numbers = Vec::<serde_json::Number>::deserialize(de)?;
        numbers
            .iter()
            .map(|n| {
                BigInt::from_str(&n.to_string())
                    .map_err(|_| D::Error::custom(format!("not an integer: {n}")))
            })
            .collect()
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        biglist::serialize(&self.coeffs, ser)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        Ok(IntPoly::from_coeffs(biglist::deserialize(de)?))
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesRepr {
    #[serde(with = "biglist")]
    coefficients: Vec<BigInt>,
    truncation: usize,
}

impl Serialize for IntSeries {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        SeriesRepr {
            coefficients: self.coeffs.clone(),
            truncation: self.truncation,
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for IntSeries {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let repr = SeriesRepr::deserialize(de)?;
        if repr.coefficients.len().checked_sub(1) != Some(repr.truncation) {
            return Err(D::Error::custom(format!(
                "series truncated at {} must list exactly truncation + 1 coefficients, got {}",
                repr.truncation,
                repr.coefficients.len()
            )));
        }
        Ok(IntSeries {
            truncation: repr.truncation,
            coeffs: repr.coefficients,
        })
    }
}
