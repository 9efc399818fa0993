//! Dense polynomials with arbitrary-precision nonnegative coefficients.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use thiserror::Error;

/// `coeffs[i]` is the coefficient of `x^i`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients and equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct DomPoly {
    coeffs: Vec<BigUint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("mode analysis of the zero polynomial")]
    Zero,
}

impl DomPoly {
    pub fn zero() -> DomPoly {
        DomPoly { coeffs: Vec::new() }
    }

    pub fn one() -> DomPoly {
        DomPoly::monomial(0)
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> DomPoly {
        let mut coeffs = vec![BigUint::zero(); k + 1];
        coeffs[k] = BigUint::one();
        DomPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigUint>) -> DomPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        DomPoly { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> DomPoly {
        DomPoly::from_coeffs(coeffs.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// `(1 + x)^n`.
    pub fn binomial_power(n: usize) -> DomPoly {
        let mut row = Vec::with_capacity(n + 1);
        let mut c = BigUint::one();
        row.push(c.clone());
        for i in 0..n {
            c = c * BigUint::from(n - i) / BigUint::from(i + 1);
            row.push(c.clone());
        }
        DomPoly { coeffs: row }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> DomPoly {
        if self.is_zero() {
            return DomPoly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        DomPoly { coeffs }
    }

    /// `self - other`, or `None` if some coefficient would go negative.
    pub fn checked_sub(&self, other: &DomPoly) -> Option<DomPoly> {
        if other.coeffs.len() > self.coeffs.len() {
            return None;
        }
        let mut coeffs = self.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&other.coeffs) {
            if *a < *b {
                return None;
            }
            *a -= b;
        }
        Some(DomPoly::from_coeffs(coeffs))
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + BigInt::from(c.clone()))
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Unimodality, log-concavity and the argmax set over the support
    /// `[min_degree, degree]`.
    pub fn analyze_modes(&self) -> Result<ModeReport, PolyError> {
        let lo = self.min_degree().ok_or(PolyError::Zero)?;
        let seq = &self.coeffs[lo..];

        let max = seq.iter().max().expect("nonzero polynomial");
        let modes: Vec<usize> = seq
            .iter()
            .enumerate()
            .filter(|(_, c)| *c == max)
            .map(|(i, _)| i + lo)
            .collect();

        let mut falling = false;
        let mut is_unimodal = true;
        for w in seq.windows(2) {
            if w[1] < w[0] {
                falling = true;
            } else if w[1] > w[0] && falling {
                is_unimodal = false;
                break;
            }
        }

        let positive = seq.iter().all(|c| !c.is_zero());
        let is_log_concave = positive && seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2]);

        Ok(ModeReport {
            is_unimodal,
            strict_unique_mode: modes.len() == 1,
            modes,
            is_log_concave,
        })
    }
}

impl Add for &DomPoly {
    type Output = DomPoly;

    fn add(self, rhs: &DomPoly) -> DomPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        DomPoly::from_coeffs(coeffs)
    }
}

impl Add for DomPoly {
    type Output = DomPoly;

    fn add(self, rhs: DomPoly) -> DomPoly {
        &self + &rhs
    }
}

impl Mul for &DomPoly {
    type Output = DomPoly;

    fn mul(self, rhs: &DomPoly) -> DomPoly {
        if self.is_zero() || rhs.is_zero() {
            return DomPoly::zero();
        }
        let mut coeffs = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        DomPoly { coeffs }
    }
}

impl Mul for DomPoly {
    type Output = DomPoly;

    fn mul(self, rhs: DomPoly) -> DomPoly {
        &self * &rhs
    }
}

impl core::iter::Product for DomPoly {
    fn product<I: Iterator<Item = DomPoly>>(iter: I) -> DomPoly {
        iter.fold(DomPoly::one(), |acc, p| &acc * &p)
    }
}

impl fmt::Debug for DomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DomPoly({self})")
    }
}

/// Descending powers: `x^4 + 4x^3 + 4x^2`.
impl fmt::Display for DomPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Shape of a coefficient sequence over its support.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeReport {
    pub is_unimodal: bool,
    /// Every degree attaining the maximum coefficient.
    pub modes: Vec<usize>,
    pub is_log_concave: bool,
    pub strict_unique_mode: bool,
}
