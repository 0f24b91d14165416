//! Dominant weights of type `A_{n-1}` and the arithmetic the rest of the crate
//! is built on.
//!
//! A weight is stored by its fundamental-weight coordinates `(m_1, ..., m_{n-1})`.
//! Root coordinates are rational with denominator `n`, so they are always
//! handled scaled by `n` and every computation stays in `i64`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A dominant weight `sum m_i * omega_i` of `SL_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight {
    entries: Vec<i64>,
}

impl DominantWeight {
    /// Builds a weight for `SL_n` with `n = entries.len() + 1`.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidWeight(
                "a weight needs at least one entry (n >= 2)".into(),
            ));
        }
        if let Some(bad) = entries.iter().find(|&&m| m < 0) {
            return Err(Error::InvalidWeight(format!(
                "entry {bad} is negative in {}",
                join(&entries)
            )));
        }
        Ok(Self { entries })
    }

    /// Builds a weight for a known `n`, checking the length.
    pub fn with_rank(n: usize, entries: Vec<i64>) -> Result<Self> {
        if entries.len() + 1 != n {
            return Err(Error::RankMismatch {
                expected: n,
                found: entries.len() + 1,
            });
        }
        Self::new(entries)
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 2, "n must be at least 2");
        Self {
            entries: vec![0; n - 1],
        }
    }

    /// `St_p = (p-1, ..., p-1)`.
    pub fn steinberg(n: usize, p: u64) -> Self {
        assert!(n >= 2, "n must be at least 2");
        assert!(p >= 2, "p must be at least 2");
        Self {
            entries: vec![p as i64 - 1; n - 1],
        }
    }

    /// The rank parameter `n` of `SL_n`.
    pub fn n(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// Entry `m_pos` with a 1-based position.
    pub fn at(&self, pos: usize) -> i64 {
        self.entries[pos - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&m| m == 0)
    }

    /// 1-based position of the first nonzero entry.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.entries.iter().position(|&m| m != 0).map(|i| i + 1)
    }

    pub fn is_p_restricted(&self, p: u64) -> bool {
        self.entries.iter().all(|&m| (m as u64) < p)
    }

    /// `f = n * c_{n-1} = sum_i i * m_i`.
    pub fn f_value(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, &m)| (i as i64 + 1) * m)
            .sum()
    }

    /// `S = sum_i m_i`.
    pub fn s_sum(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn to_scaled_root_coeffs(&self) -> ScaledRootCoefficients {
        ScaledRootCoefficients {
            n: self.n(),
            scaled: scaled_root_coeffs_of(&self.entries),
        }
    }

    pub fn to_partition(&self) -> PartitionLabel {
        let mut parts = vec![0; self.n()];
        for i in (0..self.entries.len()).rev() {
            parts[i] = parts[i + 1] + self.entries[i];
        }
        PartitionLabel { parts }
    }

    pub fn into_entries(self) -> Vec<i64> {
        self.entries
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<i64>) -> Self {
        debug_assert!(!entries.is_empty() && entries.iter().all(|&m| m >= 0));
        Self { entries }
    }

    pub(crate) fn entry_mut(&mut self, pos: usize) -> &mut i64 {
        &mut self.entries[pos - 1]
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::RankMismatch {
                expected: self.n(),
                found: other.n(),
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;

    fn try_from(entries: Vec<i64>) -> Result<Self> {
        Self::new(entries)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Self {
        w.entries
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.entries))
    }
}

impl FromStr for DominantWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

/// Root coordinates `n * c` of a weight, where `lambda = sum c_i alpha_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ScaledRootCoefficients {
    n: usize,
    scaled: Vec<i64>,
}

impl ScaledRootCoefficients {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn scaled(&self) -> &[i64] {
        &self.scaled
    }

    /// True when every `c_i` is an integer, i.e. the weight is in the root lattice.
    pub fn is_integral(&self) -> bool {
        self.scaled.iter().all(|&x| x % self.n as i64 == 0)
    }

    /// The unscaled root coefficients, when integral.
    pub fn root_coeffs(&self) -> Option<Vec<i64>> {
        self.is_integral()
            .then(|| self.scaled.iter().map(|&x| x / self.n as i64).collect())
    }

    /// Applies the Cartan matrix to `scaled / n`, recovering the fundamental
    /// coordinates. Exact: `C * scaled` is always divisible by `n`.
    pub fn to_weight_entries(&self) -> Vec<i64> {
        let n = self.n as i64;
        cartan_apply(&self.scaled)
            .into_iter()
            .map(|x| {
                debug_assert_eq!(x % n, 0);
                x / n
            })
            .collect()
    }
}

/// `n * C^{-1} m` for any integral weight `m` (not necessarily dominant),
/// using `n * c_j = sum_i min(i, j) * (n - max(i, j)) * m_i`.
pub fn scaled_root_coeffs_of(m: &[i64]) -> Vec<i64> {
    let n = m.len() as i64 + 1;
    (1..n)
        .map(|j| {
            m.iter()
                .enumerate()
                .map(|(idx, &mi)| {
                    let i = idx as i64 + 1;
                    i.min(j) * (n - i.max(j)) * mi
                })
                .sum()
        })
        .collect()
}

/// Multiplies by the type `A` Cartan matrix (2 on the diagonal, -1 beside it).
pub fn cartan_apply(c: &[i64]) -> Vec<i64> {
    (0..c.len())
        .map(|i| {
            let left = if i > 0 { c[i - 1] } else { 0 };
            let right = c.get(i + 1).copied().unwrap_or(0);
            2 * c[i] - left - right
        })
        .collect()
}

/// `nu <= lambda`: `lambda - nu` is a nonnegative integral sum of simple roots.
pub fn is_subdominant(nu: &DominantWeight, lambda: &DominantWeight) -> Result<bool> {
    nu.check_rank(lambda)?;
    let diff: Vec<i64> = lambda
        .entries
        .iter()
        .zip(&nu.entries)
        .map(|(a, b)| a - b)
        .collect();
    let n = lambda.n() as i64;
    Ok(scaled_root_coeffs_of(&diff)
        .iter()
        .all(|&x| x >= 0 && x % n == 0))
}

/// The partition `lambda~` of length `n` attached to a weight, with last part 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct PartitionLabel {
    parts: Vec<i64>,
}

impl PartitionLabel {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::NotPartition(
                "a partition label needs length n >= 2".into(),
            ));
        }
        if !is_weakly_decreasing(&parts) {
            return Err(Error::NotPartition(format!(
                "{} is not weakly decreasing",
                join(&parts)
            )));
        }
        if *parts.last().unwrap() != 0 {
            return Err(Error::NotPartition(format!(
                "last part of {} must be 0",
                join(&parts)
            )));
        }
        Ok(Self { parts })
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Part `lambda~_i` with a 1-based index.
    pub fn part(&self, i: usize) -> i64 {
        self.parts[i - 1]
    }

    pub fn to_weight(&self) -> DominantWeight {
        DominantWeight::from_entries_unchecked(consecutive_differences(&self.parts))
    }
}

impl TryFrom<Vec<i64>> for PartitionLabel {
    type Error = Error;

    fn try_from(parts: Vec<i64>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<PartitionLabel> for Vec<i64> {
    fn from(p: PartitionLabel) -> Self {
        p.parts
    }
}

impl fmt::Display for PartitionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for PartitionLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_int_list(s)?)
    }
}

pub fn weight_to_partition(lambda: &DominantWeight) -> PartitionLabel {
    lambda.to_partition()
}

/// Restricts a `GL_n` label to `SL_n`: `m_i = parts_i - parts_{i+1}`.
///
/// The last part may be nonzero; shifting every part by a constant does not
/// change the result.
pub fn partition_to_weight(parts: &[i64]) -> Result<DominantWeight> {
    if parts.len() < 2 {
        return Err(Error::NotPartition("length must be at least 2".into()));
    }
    if !is_weakly_decreasing(parts) {
        return Err(Error::NotPartition(format!(
            "{} is not weakly decreasing",
            join(parts)
        )));
    }
    Ok(DominantWeight::from_entries_unchecked(
        consecutive_differences(parts),
    ))
}

/// Entrywise base-`p` digits: `mu = sum_k p^k * digits[k]`, each digit
/// `p`-restricted. Trailing zero digits are dropped, so the zero weight
/// decomposes to an empty list.
pub fn p_adic_decompose(mu: &DominantWeight, p: u64) -> Vec<DominantWeight> {
    assert!(p >= 2, "p must be at least 2");
    let p = p as i64;
    let mut rest = mu.entries.clone();
    let mut digits = Vec::new();
    while rest.iter().any(|&m| m != 0) {
        digits.push(DominantWeight::from_entries_unchecked(
            rest.iter().map(|&m| m % p).collect(),
        ));
        rest.iter_mut().for_each(|m| *m /= p);
    }
    digits
}

pub fn steinberg_weight(n: usize, p: u64) -> DominantWeight {
    DominantWeight::steinberg(n, p)
}

/// `(p-1) * (n^2 - n) / 2`, which is also `f(St_p)`.
pub fn diameter_bound(n: usize, p: u64) -> u64 {
    (p - 1) * (n as u64) * (n as u64 - 1) / 2
}

pub(crate) fn is_weakly_decreasing(parts: &[i64]) -> bool {
    parts.windows(2).all(|w| w[0] >= w[1])
}

fn consecutive_differences(parts: &[i64]) -> Vec<i64> {
    parts.windows(2).map(|w| w[0] - w[1]).collect()
}

pub(crate) fn join(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

/// Parses `"1,0,2"` (whitespace and surrounding parentheses tolerated).
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')');
    if trimmed.trim().is_empty() {
        return Err(Error::Parse("empty integer list".into()));
    }
    trimmed
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer {:?}: {e}", tok.trim())))
        })
        .collect()
}
