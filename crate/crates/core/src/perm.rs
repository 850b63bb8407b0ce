//! Permutations in one-line notation, their statistics, and the Bruhat orders.
//!
//! Positions and values are 1-indexed throughout. Composition follows
//! `(u ∘ v)(i) = u(v(i))`, and multiplying on the right by a simple
//! transposition `s_i` swaps the entries in positions `i` and `i + 1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poly::IntPolynomial;

/// Largest `n` for which `n!` fits the exact 64-bit count range.
pub const MAX_FACTORIAL_N: usize = 20;

/// A bijection of `{1, ..., n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    /// Validates that `values` is a rearrangement of `1..=n`.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n}"
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is duplicated"
                )));
            }
            seen[v] = true;
        }
        // Every value is in range and none repeats, so none is missing.
        Ok(Permutation { values })
    }

    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("n must be at least 1".into()));
        }
        Ok(Permutation {
            values: (1..=n).collect(),
        })
    }

    /// `w₀ = [n, n-1, ..., 1]`.
    pub fn longest_element(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("n must be at least 1".into()));
        }
        Ok(Permutation {
            values: (1..=n).rev().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// `w(i)` for 1-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.values;
        let mut inv = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn descent_set(&self) -> BTreeSet<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn ascent_set(&self) -> BTreeSet<usize> {
        self.values
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] < w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.at(x);
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_unsorted(lengths)
    }

    pub fn fixed_points(&self) -> BTreeSet<usize> {
        (1..=self.n()).filter(|&i| self.at(i) == i).collect()
    }

    /// `c_i = #{j > i : w(j) < w(i)}`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let v = &self.values;
        (0..v.len())
            .map(|i| v[i + 1..].iter().filter(|&&x| x < v[i]).count())
            .collect()
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(Permutation {
            values: other.values.iter().map(|&j| self.at(j)).collect(),
        })
    }

    /// One-line notation read right to left.
    pub fn reverse(&self) -> Self {
        let mut values = self.values.clone();
        values.reverse();
        Permutation { values }
    }

    /// Swaps the entries at 1-based positions `i` and `j`.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut values = self.values.clone();
        values.swap(i - 1, j - 1);
        Permutation { values }
    }

    /// Right multiplication by the simple transposition `s_i`.
    pub fn times_simple(&self, i: usize) -> Result<Self> {
        if i == 0 || i >= self.n() {
            return Err(Error::LetterOutOfRange {
                letter: i,
                n: self.n(),
            });
        }
        Ok(self.swap_positions(i, i + 1))
    }

    /// Elements covering `self` in the strong Bruhat order: transpositions of
    /// positions that raise the length by exactly one. Sorted lexicographically.
    pub fn bruhat_covers(&self) -> Vec<Permutation> {
        let len = self.length();
        let n = self.n();
        let mut out = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.at(i) < self.at(j) {
                    let v = self.swap_positions(i, j);
                    if v.length() == len + 1 {
                        out.push(v);
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Elements covering `self` in the right weak order: adjacent swaps at ascents.
    pub fn weak_covers(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = self
            .ascent_set()
            .into_iter()
            .map(|i| self.swap_positions(i, i + 1))
            .collect();
        out.sort();
        out
    }

    /// `Some(position)` when the permutation has exactly one descent.
    pub fn grassmannian_descent(&self) -> Option<usize> {
        let des = self.descent_set();
        if des.len() == 1 {
            des.into_iter().next()
        } else {
            None
        }
    }

    pub fn is_grassmannian(&self) -> bool {
        self.grassmannian_descent().is_some()
    }

    /// `"5,1,3,4,2"` form, valid for every `n`.
    pub fn to_comma_string(&self) -> String {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        parts.join(",")
    }
}

impl fmt::Display for Permutation {
    /// Digit string when `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            f.write_str(&self.to_comma_string())
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"5,1,3,4,2"`, or a bare digit string such as `"51342"` when `n <= 9`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| {
                    p.trim().parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!(
                            "entry {:?} is not a natural number",
                            p.trim()
                        ))
                    })
                })
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::InvalidPermutation(format!(
                    "digit string {s:?} is only accepted for n <= 9; use commas"
                )));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10).map(|d| d as usize).ok_or_else(|| {
                        Error::InvalidPermutation(format!("character {c:?} is not a digit"))
                    })
                })
                .collect::<Result<_>>()?
        };
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty one-line notation".into()));
        }
        // Name the first duplicated value and the first missing one.
        let mut counts = vec![0usize; n + 1];
        for &v in &values {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} outside 1..={n} in {s:?}"
                )));
            }
            counts[v] += 1;
        }
        if let Some(dup) = (1..=n).find(|&v| counts[v] > 1) {
            let missing = (1..=n).find(|&v| counts[v] == 0).unwrap_or(0);
            return Err(Error::InvalidPermutation(format!(
                "value {dup} is duplicated and {missing} is missing in {s:?}"
            )));
        }
        Permutation::new(values)
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> AllPermutations {
    AllPermutations {
        next: if n == 0 {
            None
        } else {
            Some((1..=n).collect())
        },
    }
}

pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut v = current.clone();
        // Standard next-permutation step.
        if let Some(i) = (0..v.len().saturating_sub(1))
            .rev()
            .find(|&i| v[i] < v[i + 1])
        {
            let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
            self.next = Some(v);
        }
        Some(Permutation { values: current })
    }
}

/// The length generating function of `S_n`: `∏_{k=1}^{n} [k]_q`.
pub fn poincare_polynomial(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::InvalidPermutation("n must be at least 1".into()));
    }
    if n > MAX_FACTORIAL_N {
        return Err(Error::Overflow("Poincaré polynomial beyond n = 20"));
    }
    let mut p = IntPolynomial::one();
    for k in 1..=n {
        p = p.checked_mul(&IntPolynomial::q_integer(k))?;
    }
    Ok(p)
}

/// `n!` with overflow checking.
pub fn factorial(n: usize) -> Result<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| {
        acc.checked_mul(k).ok_or(Error::Overflow("factorial"))
    })
}

/// `C(n, k)` with overflow checking.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow("binomial"));
        }
    }
    Ok(acc as u64)
}
