//! Permutations in one-line notation and classical pattern containment.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}` in one-line notation. The empty permutation
/// (`n = 0`) is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    values: Vec<u32>,
}

impl Permutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            let i = v as usize;
            if i == 0 || i > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} is outside 1..={n}"
                )));
            }
            if seen[i] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[i] = true;
        }
        Ok(Self { values })
    }

    /// Caller guarantees `values` is a rearrangement of `1..=len`.
    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        debug_assert!(Self::new(values.clone()).is_ok());
        Self { values }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            values: (1..=n as u32).collect(),
        }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Left-to-right minima as `(position, value)` pairs, 0-based positions.
    pub fn left_to_right_minima(&self) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        let mut current = u32::MAX;
        for (i, &v) in self.values.iter().enumerate() {
            if v < current {
                current = v;
                out.push((i, v));
            }
        }
        out
    }

    /// Right-to-left maxima as `(position, value)` pairs in increasing
    /// position order, 0-based positions.
    pub fn right_to_left_maxima(&self) -> Vec<(usize, u32)> {
        let mut out = Vec::new();
        let mut current = 0;
        for (i, &v) in self.values.iter().enumerate().rev() {
            if v > current {
                current = v;
                out.push((i, v));
            }
        }
        out.reverse();
        out
    }

    /// Advances to the lexicographic successor in place; returns `false`
    /// (leaving the slice sorted ascending) after the last permutation.
    pub(crate) fn next_lexicographic(values: &mut [u32]) -> bool {
        let n = values.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && values[i - 1] >= values[i] {
            i -= 1;
        }
        if i == 0 {
            values.reverse();
            return false;
        }
        let mut j = n - 1;
        while values[j] <= values[i - 1] {
            j -= 1;
        }
        values.swap(i - 1, j);
        values[i..].reverse();
        true
    }

    /// Every permutation of size `n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        let mut state = Some((1..=n as u32).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let current = state.take()?;
            let mut next = current.clone();
            if Self::next_lexicographic(&mut next) {
                state = Some(next);
            }
            Some(Permutation { values: current })
        })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.len() <= 9 {
            for v in &self.values {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(" "))
        }
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts a digit word (`"74352681"`) or whitespace-separated integers.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if s.split_whitespace().count() > 1 {
            s.split_whitespace()
                .map(|tok| {
                    tok.parse::<u32>()
                        .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .ok_or_else(|| Error::Parse(format!("not a digit: {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Permutation::new(values)
    }
}

/// A classical pattern: a permutation of `{1, …, k}` with `k ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Pattern(Permutation);

impl Pattern {
    pub fn new(perm: Permutation) -> Result<Self> {
        if perm.is_empty() {
            return Err(Error::InvalidPattern("patterns must be nonempty".into()));
        }
        Ok(Self(perm))
    }

    /// `12…k`.
    pub fn increasing(k: usize) -> Result<Self> {
        Self::new(Permutation::identity(k))
    }

    /// `23…k1`.
    pub fn rotated_increasing(k: usize) -> Result<Self> {
        let mut v: Vec<u32> = (2..=k as u32).collect();
        v.push(1);
        Self::new(Permutation::new(v)?)
    }

    /// `(k−1)(k−2)…1k`.
    pub fn descent_then_max(k: usize) -> Result<Self> {
        let mut v: Vec<u32> = (1..k as u32).rev().collect();
        v.push(k as u32);
        Self::new(Permutation::new(v)?)
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[u32] {
        self.0.values()
    }

    pub fn as_permutation(&self) -> &Permutation {
        &self.0
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let perm: Permutation = s
            .parse()
            .map_err(|e: Error| Error::InvalidPattern(format!("{s:?}: {e}")))?;
        Self::new(perm)
    }
}

/// Depth-first scan over increasing index tuples. A partial tuple is
/// extended only while it stays order-isomorphic to the matching prefix of
/// the pattern. `visit` returns `false` to stop the scan.
fn scan_occurrences(pi: &[u32], sigma: &[u32], visit: &mut dyn FnMut(&[usize]) -> bool) {
    let k = sigma.len();
    let n = pi.len();
    if k == 0 || k > n {
        return;
    }
    let mut chosen = Vec::with_capacity(k);

    fn rec(
        pi: &[u32],
        sigma: &[u32],
        start: usize,
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let depth = chosen.len();
        if depth == sigma.len() {
            return visit(chosen);
        }
        let remaining = sigma.len() - depth;
        for i in start..=pi.len() - remaining {
            let v = pi[i];
            let consistent = chosen
                .iter()
                .zip(sigma)
                .all(|(&j, &s)| (pi[j] < v) == (s < sigma[depth]));
            if consistent {
                chosen.push(i);
                let keep_going = rec(pi, sigma, i + 1, chosen, visit);
                chosen.pop();
                if !keep_going {
                    return false;
                }
            }
        }
        true
    }

    rec(pi, sigma, 0, &mut chosen, visit);
}

pub(crate) fn count_occurrences_u64(pi: &[u32], sigma: &[u32]) -> u64 {
    let mut count = 0u64;
    scan_occurrences(pi, sigma, &mut |_| {
        count += 1;
        true
    });
    count
}

pub(crate) fn avoids_slice(pi: &[u32], sigma: &[u32]) -> bool {
    let mut found = false;
    scan_occurrences(pi, sigma, &mut |_| {
        found = true;
        false
    });
    !found
}

/// Number of occurrences of `sigma` in `pi`.
pub fn count_occurrences(pi: &Permutation, sigma: &Pattern) -> BigUint {
    BigUint::from(count_occurrences_u64(pi.values(), sigma.values()))
}

/// Whether `pi` avoids `sigma`. Stops at the first occurrence.
pub fn avoids(pi: &Permutation, sigma: &Pattern) -> bool {
    avoids_slice(pi.values(), sigma.values())
}

/// First occurrence in lexicographic index order, as 0-based positions.
pub fn find_occurrence(pi: &Permutation, sigma: &Pattern) -> Option<Vec<usize>> {
    let mut witness = None;
    scan_occurrences(pi.values(), sigma.values(), &mut |idx| {
        witness = Some(idx.to_vec());
        false
    });
    witness
}

/// Every occurrence of `sigma` in `pi`, as 0-based index tuples.
pub fn occurrences(pi: &Permutation, sigma: &Pattern) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    scan_occurrences(pi.values(), sigma.values(), &mut |idx| {
        out.push(idx.to_vec());
        true
    });
    out
}

/// Fails with [`Error::ContainsPattern`] (1-based witness) unless `pi`
/// avoids `sigma`.
pub(crate) fn require_avoids(pi: &Permutation, sigma: &Pattern) -> Result<()> {
    match find_occurrence(pi, sigma) {
        None => Ok(()),
        Some(idx) => Err(Error::ContainsPattern {
            pattern: sigma.to_string(),
            positions: idx.into_iter().map(|i| i + 1).collect(),
        }),
    }
}
