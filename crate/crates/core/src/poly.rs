//! Dense univariate polynomials with exact `i64` coefficients.
//!
//! Every arithmetic operation is checked; overflow surfaces as
//! [`Error::Overflow`] instead of wrapping.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficient `i` of `coeffs` belongs to degree `i`. Trailing zeros are
/// always trimmed, so the zero polynomial is the empty vector.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// `c * x^degree`.
    pub fn monomial(c: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `1 + x + ... + x^(len-1)`, the q-integer `[len]_q`.
    pub fn q_integer(len: usize) -> Self {
        Self::new(vec![1; len])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(
                self.coeff(i)
                    .checked_add(other.coeff(i))
                    .ok_or(Error::Overflow("polynomial addition"))?,
            );
        }
        Ok(Self::new(out))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.checked_scale(-1)?)
    }

    pub fn checked_scale(&self, c: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| {
                a.checked_mul(c)
                    .ok_or(Error::Overflow("polynomial scaling"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a
                    .checked_mul(b)
                    .ok_or(Error::Overflow("polynomial product"))?;
                out[i + j] = out[i + j]
                    .checked_add(term)
                    .ok_or(Error::Overflow("polynomial product"))?;
            }
        }
        Ok(Self::new(out))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }

    /// Drops every term of degree `>= len`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coeffs.iter().copied().take(len).collect())
    }

    /// Long division that must leave no remainder.
    ///
    /// Fails with [`Error::InexactDivision`] when the remainder is nonzero or a
    /// quotient coefficient would not be an integer.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let dlead = *divisor.coeffs.last().ok_or(Error::InexactDivision)?;
        let ddeg = divisor.coeffs.len() - 1;
        if self.is_zero() {
            return Ok(Self::zero());
        }
        if self.coeffs.len() <= ddeg {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.coeffs.clone();
        let qlen = rem.len() - ddeg;
        let mut quot = vec![0i64; qlen];
        for i in (0..qlen).rev() {
            let top = rem[i + ddeg];
            if top % dlead != 0 {
                return Err(Error::InexactDivision);
            }
            let q = top / dlead;
            quot[i] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let t = q
                    .checked_mul(d)
                    .ok_or(Error::Overflow("polynomial division"))?;
                rem[i + j] = rem[i + j]
                    .checked_sub(t)
                    .ok_or(Error::Overflow("polynomial division"))?;
            }
        }
        if rem.iter().any(|&r| r != 0) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::new(quot))
    }

    pub fn eval(&self, x: i64) -> Result<i64> {
        let mut acc: i64 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x)
                .and_then(|v| v.checked_add(c))
                .ok_or(Error::Overflow("polynomial evaluation"))?;
        }
        Ok(acc)
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// Renders the polynomial in the named variable, lowest degree first,
    /// e.g. `2d + 3d^2 + 4d^3 + d^4`.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let abs = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let show_coeff = abs != 1 || i == 0;
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display("q"))
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}
