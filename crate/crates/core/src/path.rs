//! Dyck and Motzkin paths, their step weights, and exhaustive generation.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::combinat::binomial;
use crate::error::{Error, Result};

/// Default cap on the length of exhaustively generated paths.
pub const DEFAULT_PATH_BOUND: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Level,
    Down,
}

impl Step {
    fn delta(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Level => 0,
            Step::Down => -1,
        }
    }

    fn letter(self) -> char {
        match self {
            Step::Up => 'U',
            Step::Level => 'L',
            Step::Down => 'D',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathKind {
    Dyck,
    Motzkin,
}

/// A path over `{U, L, D}` whose running height never drops below zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    start_height: u32,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start_height: u32, steps: Vec<Step>) -> Result<Self> {
        let mut h = start_height as i64;
        for (index, s) in steps.iter().enumerate() {
            h += s.delta();
            if h < 0 {
                return Err(Error::BelowAxis { index });
            }
        }
        Ok(Self {
            start_height,
            steps,
        })
    }

    pub fn parse_from(start_height: u32, s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                'L' | 'l' => Ok(Step::Level),
                other => Err(Error::InvalidPath(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(start_height, steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn start_height(&self) -> u32 {
        self.start_height
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Heights before the first step and after every step (`len() + 1` values).
    pub fn heights(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = self.start_height as i64;
        out.push(h as u32);
        for s in &self.steps {
            h += s.delta();
            out.push(h as u32);
        }
        out
    }

    pub fn end_height(&self) -> u32 {
        let h = self.start_height as i64 + self.steps.iter().map(|s| s.delta()).sum::<i64>();
        h as u32
    }

    pub fn max_height(&self) -> u32 {
        self.heights().into_iter().max().unwrap_or(self.start_height)
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::Level)
    }

    /// Dyck, starting and ending at height 0.
    pub fn is_closed_dyck(&self) -> bool {
        self.is_dyck() && self.start_height == 0 && self.end_height() == 0
    }

    pub(crate) fn require_closed_dyck(&self) -> Result<()> {
        if self.is_closed_dyck() {
            Ok(())
        } else {
            Err(Error::NotClosedDyck(format!(
                "{self} (start {}, end {})",
                self.start_height,
                self.end_height()
            )))
        }
    }

    /// Peaks as `(index of the up-step, apex height)`.
    pub fn peaks(&self) -> Vec<(usize, u32)> {
        let heights = self.heights();
        self.steps
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] == Step::Up && w[1] == Step::Down)
            .map(|(i, _)| (i, heights[i + 1]))
            .collect()
    }

    /// Starting heights of the down-steps, in path order.
    pub fn down_step_heights(&self) -> Vec<u32> {
        let heights = self.heights();
        self.steps
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::Down)
            .map(|(i, _)| heights[i])
            .collect()
    }

    /// Mirror image in a vertical line: reverse the steps and swap U and D.
    pub fn reflect(&self) -> LatticePath {
        let steps = self
            .steps
            .iter()
            .rev()
            .map(|s| match s {
                Step::Up => Step::Down,
                Step::Down => Step::Up,
                Step::Level => Step::Level,
            })
            .collect();
        LatticePath {
            start_height: self.end_height(),
            steps,
        }
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    /// Paths written as `U`/`D`/`L` strings start at height 0.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_from(0, s)
    }
}

/// `Σ_d C(i(d) − 1, k − 1)` over the down-steps `d`, `i(d)` the starting height.
pub fn weight_w1(k: usize, p: &LatticePath) -> BigUint {
    p.down_step_heights()
        .into_iter()
        .map(|h| binomial(h as i64 - 1, k as i64 - 1))
        .sum()
}

/// `Σ_p C(i(p) − 1, k − 1)` over the peaks `p`, `i(p)` the apex height.
pub fn weight_w2(k: usize, p: &LatticePath) -> BigUint {
    p.peaks()
        .into_iter()
        .map(|(_, h)| binomial(h as i64 - 1, k as i64 - 1))
        .sum()
}

/// A height-indexed weight family: either the same value at every height or
/// an explicit table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HeightWeights {
    Constant(BigRational),
    Table(BTreeMap<usize, BigRational>),
}

impl HeightWeights {
    pub fn constant(v: impl Into<BigRational>) -> Self {
        HeightWeights::Constant(v.into())
    }

    /// Table with `values[i]` at height `offset + i`.
    pub fn from_values(offset: usize, values: impl IntoIterator<Item = BigRational>) -> Self {
        HeightWeights::Table(
            values
                .into_iter()
                .enumerate()
                .map(|(i, v)| (offset + i, v))
                .collect(),
        )
    }

    pub fn from_fn(heights: impl IntoIterator<Item = usize>, f: impl Fn(usize) -> BigRational) -> Self {
        HeightWeights::Table(heights.into_iter().map(|h| (h, f(h))).collect())
    }

    pub fn get(&self, height: usize) -> Option<&BigRational> {
        match self {
            HeightWeights::Constant(v) => Some(v),
            HeightWeights::Table(t) => t.get(&height),
        }
    }

    pub(crate) fn require(&self, kind: &'static str, height: usize) -> Result<&BigRational> {
        self.get(height).ok_or(Error::MissingWeight { kind, height })
    }

    /// Re-index by `+m`: the weight at height `h` becomes the old weight at `h + m`.
    pub fn shifted(&self, m: usize) -> Self {
        match self {
            HeightWeights::Constant(v) => HeightWeights::Constant(v.clone()),
            HeightWeights::Table(t) => HeightWeights::Table(
                t.iter()
                    .filter(|(h, _)| **h >= m)
                    .map(|(h, v)| (h - m, v.clone()))
                    .collect(),
            ),
        }
    }
}

/// Step weights: level-steps at height `h` weigh `level(h)`, down-steps from
/// `h` to `h − 1` weigh `down(h)`; with `peak` present, a down-step right
/// after an up-step weighs `peak(h)` instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpec {
    pub level: HeightWeights,
    pub down: HeightWeights,
    pub peak: Option<HeightWeights>,
}

impl WeightSpec {
    pub fn motzkin(level: HeightWeights, down: HeightWeights) -> Self {
        Self {
            level,
            down,
            peak: None,
        }
    }

    pub fn peaked(peak: HeightWeights, down: HeightWeights) -> Self {
        Self {
            level: HeightWeights::constant(BigRational::zero()),
            down,
            peak: Some(peak),
        }
    }
}

/// Product of step weights, ignoring any peak weights in `w`.
pub fn weight_motzkin(p: &LatticePath, w: &WeightSpec) -> Result<BigRational> {
    let heights = p.heights();
    let mut acc = BigRational::one();
    for (i, s) in p.steps().iter().enumerate() {
        let h = heights[i] as usize;
        match s {
            Step::Up => {}
            Step::Level => acc *= w.level.require("level", h)?,
            Step::Down => acc *= w.down.require("down", h)?,
        }
    }
    Ok(acc)
}

/// Product over down-steps of `peak(h)` when the step completes a peak and
/// `down(h)` otherwise.
pub fn weight_peaked(p: &LatticePath, w: &WeightSpec) -> Result<BigRational> {
    let peak = w
        .peak
        .as_ref()
        .ok_or_else(|| Error::InvalidPath("weight spec has no peak weights".into()))?;
    if !p.is_dyck() {
        return Err(Error::InvalidPath(format!("{p} has level steps")));
    }
    let heights = p.heights();
    let mut acc = BigRational::one();
    for (i, s) in p.steps().iter().enumerate() {
        if *s == Step::Down {
            let h = heights[i] as usize;
            let after_up = i > 0 && p.steps()[i - 1] == Step::Up;
            acc *= if after_up {
                peak.require("peak", h)?
            } else {
                w.down.require("down", h)?
            };
        }
    }
    Ok(acc)
}

/// Depth-first generator of every path with the requested shape, in
/// lexicographic step order (`U < L < D`).
#[derive(Clone, Debug)]
pub struct PathIter {
    length: usize,
    choices: &'static [Step],
    max_height: Option<u32>,
    to: u32,
    start: u32,
    stack: Vec<usize>,
    heights: Vec<u32>,
    started: bool,
    exhausted: bool,
}

impl PathIter {
    fn step_target(&self, h: u32, step: Step, remaining_after: usize) -> Option<u32> {
        let next = h as i64 + step.delta();
        if next < 0 {
            return None;
        }
        let next = next as u32;
        if self.max_height.is_some_and(|m| next > m) {
            return None;
        }
        let gap = (next as i64 - self.to as i64).unsigned_abs() as usize;
        if gap > remaining_after {
            return None;
        }
        if self.choices.len() == 2 && (remaining_after - gap) % 2 != 0 {
            return None;
        }
        Some(next)
    }

    fn extend(&mut self, mut first_choice: usize) -> bool {
        loop {
            let depth = self.stack.len();
            if depth == self.length {
                return true;
            }
            let h = self.heights[depth];
            let remaining_after = self.length - depth - 1;
            let found = (first_choice..self.choices.len()).find_map(|c| {
                self.step_target(h, self.choices[c], remaining_after).map(|t| (c, t))
            });
            match found {
                Some((c, t)) => {
                    self.stack.push(c);
                    self.heights.push(t);
                    first_choice = 0;
                }
                None => {
                    let Some(c) = self.stack.pop() else {
                        return false;
                    };
                    self.heights.pop();
                    first_choice = c + 1;
                }
            }
        }
    }

    fn current(&self) -> LatticePath {
        LatticePath {
            start_height: self.start,
            steps: self.stack.iter().map(|&c| self.choices[c]).collect(),
        }
    }
}

impl Iterator for PathIter {
    type Item = LatticePath;

    fn next(&mut self) -> Option<LatticePath> {
        if self.exhausted {
            return None;
        }
        let ok = if !self.started {
            self.started = true;
            self.extend(0)
        } else {
            match self.stack.pop() {
                Some(c) => {
                    self.heights.pop();
                    self.extend(c + 1)
                }
                None => false,
            }
        };
        if ok {
            Some(self.current())
        } else {
            self.exhausted = true;
            None
        }
    }
}

/// Every path of `kind` with `length` steps from height `from` to height `to`,
/// optionally confined to heights `0..=max_height`.
pub fn enumerate_paths(
    length: usize,
    kind: PathKind,
    max_height: Option<u32>,
    from: u32,
    to: u32,
) -> Result<PathIter> {
    enumerate_paths_bounded(length, kind, max_height, from, to, DEFAULT_PATH_BOUND)
}

pub fn enumerate_paths_bounded(
    length: usize,
    kind: PathKind,
    max_height: Option<u32>,
    from: u32,
    to: u32,
    bound: usize,
) -> Result<PathIter> {
    if length > bound {
        return Err(Error::BoundExceeded {
            what: "path length",
            requested: length,
            bound,
        });
    }
    let choices: &'static [Step] = match kind {
        PathKind::Dyck => &[Step::Up, Step::Down],
        PathKind::Motzkin => &[Step::Up, Step::Level, Step::Down],
    };
    let gap = (from as i64 - to as i64).unsigned_abs() as usize;
    let feasible = gap <= length
        && max_height.map_or(true, |m| from <= m && to <= m)
        && (kind == PathKind::Motzkin || (length - gap.min(length)) % 2 == 0);
    Ok(PathIter {
        length,
        choices,
        max_height,
        to,
        start: from,
        stack: Vec::with_capacity(length),
        heights: vec![from],
        started: false,
        exhausted: !feasible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::catalan;

    const FIG1: &str = "UUDUUUDUDDUDDDUD";

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn peak_heights() {
        let hs = |s: &str| path(s).peaks().into_iter().map(|(_, h)| h).collect::<Vec<_>>();
        assert_eq!(hs(FIG1), [2, 4, 4, 3, 1]);
        assert_eq!(hs("UDUDUD"), [1, 1, 1]);
        assert_eq!(hs("UUUDDD"), [3]);
    }

    #[test]
    fn w1_examples() {
        assert_eq!(weight_w1(3, &path(FIG1)), BigUint::from(8u32));
        assert_eq!(weight_w1(2, &path("UDUD")), BigUint::zero());
        assert_eq!(weight_w1(2, &path("UUDD")), BigUint::one());
    }

    #[test]
    fn w2_examples() {
        assert_eq!(weight_w2(3, &path(FIG1)), BigUint::from(7u32));
        assert_eq!(weight_w2(2, &path("UDUDUD")), BigUint::zero());
        assert_eq!(weight_w2(2, &path("UUUDDD")), BigUint::from(2u32));
    }

    /// Distinct primes per height make a product of weights readable as a
    /// multiset of (kind, height) factors.
    fn primes() -> Vec<i64> {
        vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
    }

    #[test]
    fn motzkin_weight_of_the_figure_two_path() {
        let pr = primes();
        let b = HeightWeights::from_values(0, pr[0..4].iter().map(|&v| q(v)));
        let lambda = HeightWeights::from_values(1, pr[4..8].iter().map(|&v| q(v)));
        let w = WeightSpec::motzkin(b, lambda);
        let fig2 = path("UULDLLUUDDU");
        assert_eq!(fig2.end_height(), 2);
        // b1^2 b2 lambda2^2 lambda3
        let b1 = pr[1];
        let b2 = pr[2];
        let l2 = pr[5];
        let l3 = pr[6];
        assert_eq!(weight_motzkin(&fig2, &w).unwrap(), q(b1 * b1 * b2 * l2 * l2 * l3));
    }

    #[test]
    fn motzkin_weight_trivial_cases() {
        let w = WeightSpec::motzkin(
            HeightWeights::constant(q(0)),
            HeightWeights::from_values(1, [q(5)]),
        );
        assert_eq!(weight_motzkin(&path("UUU"), &w).unwrap(), q(1));
        assert_eq!(weight_motzkin(&path("UD"), &w).unwrap(), q(5));
        assert_eq!(
            weight_motzkin(&path("UUDD"), &w).unwrap_err(),
            Error::MissingWeight {
                kind: "down",
                height: 2
            }
        );
    }

    #[test]
    fn peaked_weight_examples() {
        let pr = primes();
        let nu = HeightWeights::from_values(1, pr[0..4].iter().map(|&v| q(v)));
        let lambda = HeightWeights::from_values(1, pr[4..8].iter().map(|&v| q(v)));
        let w = WeightSpec::peaked(nu, lambda);
        let (n1, n2, n3, n4) = (pr[0], pr[1], pr[2], pr[3]);
        let (l1, l2, l3) = (pr[4], pr[5], pr[6]);
        assert_eq!(
            weight_peaked(&path(FIG1), &w).unwrap(),
            q(n1 * n2 * n3 * n4 * n4 * l1 * l2 * l3)
        );
        assert_eq!(weight_peaked(&path("UD"), &w).unwrap(), q(n1));
        assert_eq!(weight_peaked(&path("UUDD"), &w).unwrap(), q(n2 * l1));
    }

    #[test]
    fn enumeration_examples() {
        let dyck4: Vec<String> = enumerate_paths(4, PathKind::Dyck, None, 0, 0)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(dyck4, ["UUDD", "UDUD"]);
        assert_eq!(enumerate_paths(3, PathKind::Motzkin, None, 0, 0).unwrap().count(), 4);
        let strip: Vec<String> = enumerate_paths(4, PathKind::Dyck, Some(1), 0, 0)
            .unwrap()
            .map(|p| p.to_string())
            .collect();
        assert_eq!(strip, ["UDUD"]);
        assert_eq!(enumerate_paths(0, PathKind::Dyck, None, 0, 0).unwrap().count(), 1);
        assert_eq!(enumerate_paths(3, PathKind::Dyck, None, 0, 0).unwrap().count(), 0);
        assert_eq!(enumerate_paths(2, PathKind::Dyck, Some(0), 0, 0).unwrap().count(), 0);
        assert_eq!(enumerate_paths(2, PathKind::Motzkin, Some(0), 0, 0).unwrap().count(), 1);
    }

    #[test]
    fn enumeration_refuses_beyond_bound() {
        let err = enumerate_paths(25, PathKind::Dyck, None, 0, 0).unwrap_err();
        assert_eq!(
            err,
            Error::BoundExceeded {
                what: "path length",
                requested: 25,
                bound: 24
            }
        );
    }

    #[test]
    fn catalan_and_motzkin_self_test() {
        for n in 0..=10u64 {
            let count = enumerate_paths(2 * n as usize, PathKind::Dyck, None, 0, 0)
                .unwrap()
                .count();
            assert_eq!(BigUint::from(count), catalan(n));
        }
        // Motzkin numbers from M(n) = M(n-1) + Σ M(i) M(n-2-i)
        let mut motzkin = vec![1u64, 1];
        for n in 2..=14 {
            let s: u64 = (0..=n - 2).map(|i| motzkin[i] * motzkin[n - 2 - i]).sum();
            motzkin.push(motzkin[n - 1] + s);
        }
        for (n, &m) in motzkin.iter().enumerate() {
            let count = enumerate_paths(n, PathKind::Motzkin, None, 0, 0).unwrap().count();
            assert_eq!(count as u64, m, "Motzkin {n}");
        }
    }

    #[test]
    fn enumeration_is_sorted_unique_and_respects_bounds() {
        for (kind, len, max, from, to) in [
            (PathKind::Motzkin, 7, Some(2), 1, 0),
            (PathKind::Dyck, 9, Some(3), 2, 1),
            (PathKind::Motzkin, 6, None, 0, 2),
        ] {
            let all: Vec<LatticePath> = enumerate_paths(len, kind, max, from, to).unwrap().collect();
            assert!(!all.is_empty());
            for w in all.windows(2) {
                assert!(w[0].steps() < w[1].steps());
            }
            for p in &all {
                assert_eq!(p.len(), len);
                assert_eq!(p.start_height(), from);
                assert_eq!(p.end_height(), to);
                if let Some(m) = max {
                    assert!(p.max_height() <= m);
                }
                if kind == PathKind::Dyck {
                    assert!(p.is_dyck());
                }
            }
        }
    }

    #[test]
    fn zero_level_unit_down_counts_dyck_paths() {
        let w = WeightSpec::motzkin(HeightWeights::constant(q(0)), HeightWeights::constant(q(1)));
        for p in enumerate_paths(12, PathKind::Dyck, None, 0, 0).unwrap() {
            assert_eq!(weight_motzkin(&p, &w).unwrap(), q(1));
        }
    }

    #[test]
    fn w1_w2_depend_only_on_height_multisets() {
        for len in (0..=20).step_by(2) {
            for p in enumerate_paths(len, PathKind::Dyck, None, 0, 0).unwrap().take(400) {
                let mut downs = p.down_step_heights();
                downs.sort_unstable();
                let mut apexes: Vec<u32> = p.peaks().into_iter().map(|(_, h)| h).collect();
                apexes.sort_unstable();
                for k in 2..=5 {
                    let w1: BigUint = downs.iter().map(|&h| binomial(h as i64 - 1, k - 1)).sum();
                    let w2: BigUint = apexes.iter().map(|&h| binomial(h as i64 - 1, k - 1)).sum();
                    assert_eq!(weight_w1(k as usize, &p), w1);
                    assert_eq!(weight_w2(k as usize, &p), w2);
                }
            }
        }
    }

    #[test]
    fn parse_rejects_below_axis_with_index() {
        assert_eq!("UDD".parse::<LatticePath>().unwrap_err(), Error::BelowAxis { index: 2 });
        assert!("UXD".parse::<LatticePath>().is_err());
        assert_eq!(path(FIG1).to_string(), FIG1);
    }

    #[test]
    fn reflection() {
        let p = path("UDUUUDUUDUDDDUDD");
        assert_eq!(p.reflect().to_string(), FIG1);
        assert_eq!(p.reflect().reflect(), p);
    }
}
