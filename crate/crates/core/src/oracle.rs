//! Exhaustive ground truth: permutation and lattice-path censuses.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::path::{enumerate_paths_bounded, weight_motzkin, weight_peaked, HeightWeights, PathKind, WeightSpec};
use crate::perm::{avoids_slice, count_occurrences_u64, Pattern, Permutation};
use crate::series::TruncatedSeries;

pub const DEFAULT_MAX_N: usize = 11;
pub const DEFAULT_MAX_PATH_LENGTH: usize = 24;
pub const MAX_N_ENV: &str = "PATTERNGF_MAX_N";

/// Enumeration bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_n: usize,
    pub max_path_length: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            max_path_length: DEFAULT_MAX_PATH_LENGTH,
        }
    }
}

impl OracleConfig {
    /// Defaults, with `PATTERNGF_MAX_N` overriding the permutation bound.
    pub fn from_env() -> Result<Self> {
        let mut c = Self::default();
        if let Ok(v) = std::env::var(MAX_N_ENV) {
            c.max_n = v
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_N_ENV}={v:?} is not a nonnegative integer")))?;
        }
        Ok(c)
    }
}

/// Histogram of occurrence counts of `statistic` over the permutations of
/// size `n` that avoid every pattern in `avoid`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub avoid: Vec<Pattern>,
    pub statistic: Pattern,
    pub histogram: BTreeMap<u64, BigUint>,
}

impl Census {
    pub fn total(&self) -> BigUint {
        self.histogram.values().sum()
    }

    /// Number of permutations with exactly `r` occurrences.
    pub fn count(&self, r: u64) -> BigUint {
        self.histogram.get(&r).cloned().unwrap_or_default()
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("occurrences,count\n");
        for (k, v) in &self.histogram {
            let _ = writeln!(s, "{k},{v}");
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "avoid": self.avoid.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
            "count": self.statistic.to_string(),
            "histogram": self.histogram.iter()
                .map(|(k, v)| (k.to_string(), serde_json::Value::String(v.to_string())))
                .collect::<serde_json::Map<_, _>>(),
        })
    }
}

type Histograms = Vec<BTreeMap<u64, BigUint>>;

fn merge(mut a: Histograms, b: Histograms) -> Histograms {
    for (ha, hb) in a.iter_mut().zip(b) {
        for (k, v) in hb {
            *ha.entry(k).or_default() += v;
        }
    }
    a
}

/// Permutations of size `n` starting with `first`, in lexicographic order.
fn branch(n: usize, first: u32, avoid: &[Vec<u32>], stats: &[Vec<u32>]) -> Histograms {
    let mut local: Vec<BTreeMap<u64, u64>> = vec![BTreeMap::new(); stats.len()];
    let mut values: Vec<u32> = std::iter::once(first)
        .chain((1..=n as u32).filter(|&v| v != first))
        .collect();
    loop {
        if avoid.iter().all(|a| avoids_slice(&values, a)) {
            for (h, s) in local.iter_mut().zip(stats) {
                *h.entry(count_occurrences_u64(&values, s)).or_default() += 1;
            }
        }
        if !Permutation::next_lexicographic(&mut values[1..]) {
            break;
        }
    }
    local
        .into_iter()
        .map(|h| h.into_iter().map(|(k, v)| (k, BigUint::from(v))).collect())
        .collect()
}

/// One pass over `S_n` producing a census for each statistic.
pub fn census_many_with(
    config: &OracleConfig,
    n: usize,
    avoid: &[Pattern],
    counts: &[Pattern],
) -> Result<Vec<Census>> {
    if n > config.max_n {
        return Err(Error::BoundExceeded {
            what: "permutation size",
            requested: n,
            bound: config.max_n,
        });
    }
    let avoid_v: Vec<Vec<u32>> = avoid.iter().map(|p| p.values().to_vec()).collect();
    let stats_v: Vec<Vec<u32>> = counts.iter().map(|p| p.values().to_vec()).collect();
    let histograms = if n == 0 {
        let mut h = vec![BTreeMap::new(); counts.len()];
        for (hist, s) in h.iter_mut().zip(&stats_v) {
            hist.insert(count_occurrences_u64(&[], s), BigUint::from(1u32));
        }
        h
    } else {
        (1..=n as u32)
            .into_par_iter()
            .map(|first| branch(n, first, &avoid_v, &stats_v))
            .reduce(|| vec![BTreeMap::new(); counts.len()], merge)
    };
    Ok(counts
        .iter()
        .zip(histograms)
        .map(|(s, histogram)| Census {
            n,
            avoid: avoid.to_vec(),
            statistic: s.clone(),
            histogram,
        })
        .collect())
}

pub fn census_many(n: usize, avoid: &[Pattern], counts: &[Pattern]) -> Result<Vec<Census>> {
    census_many_with(&OracleConfig::from_env()?, n, avoid, counts)
}

pub fn census_with(config: &OracleConfig, n: usize, avoid: &[Pattern], count: &Pattern) -> Result<Census> {
    Ok(census_many_with(config, n, avoid, std::slice::from_ref(count))?.remove(0))
}

/// Census with the default bound (overridable by `PATTERNGF_MAX_N`).
pub fn census(n: usize, avoid: &[Pattern], count: &Pattern) -> Result<Census> {
    census_with(&OracleConfig::from_env()?, n, avoid, count)
}

/// Sum of path weights over every path of `length` steps from `from` to `to`.
/// With peak weights present the paths are Dyck paths weighted by
/// [`weight_peaked`], otherwise Motzkin paths weighted by [`weight_motzkin`].
pub fn path_census(
    length: usize,
    weights: &WeightSpec,
    max_height: Option<u32>,
    from: u32,
    to: u32,
) -> Result<BigRational> {
    path_census_bounded(length, weights, max_height, from, to, DEFAULT_MAX_PATH_LENGTH)
}

pub fn path_census_bounded(
    length: usize,
    weights: &WeightSpec,
    max_height: Option<u32>,
    from: u32,
    to: u32,
    bound: usize,
) -> Result<BigRational> {
    let kind = if weights.peak.is_some() { PathKind::Dyck } else { PathKind::Motzkin };
    let mut acc = BigRational::zero();
    for p in enumerate_paths_bounded(length, kind, max_height, from, to, bound)? {
        acc += match kind {
            PathKind::Dyck => weight_peaked(&p, weights)?,
            PathKind::Motzkin => weight_motzkin(&p, weights)?,
        };
    }
    Ok(acc)
}

/// Transfer-matrix sum over Motzkin paths from `r` to `s` inside `0..=k_max`,
/// coefficient of `x^ℓ` being the total weight of paths of length `ℓ`.
pub fn strip_path_sum(
    b: &HeightWeights,
    lambda: &HeightWeights,
    k_max: usize,
    r: usize,
    s: usize,
    order: usize,
) -> Result<TruncatedSeries> {
    if r > k_max || s > k_max {
        return Err(Error::OutOfHypothesis(format!("endpoints must lie in 0..={k_max}")));
    }
    let mut level = Vec::with_capacity(k_max + 1);
    let mut down = vec![BigRational::zero()];
    for h in 0..=k_max {
        level.push(b.require("level", h)?.clone());
        if h >= 1 {
            down.push(lambda.require("down", h)?.clone());
        }
    }
    let mut state = vec![BigRational::zero(); k_max + 1];
    state[r] = BigRational::from_integer(1.into());
    let mut coeffs = Vec::with_capacity(order + 1);
    for _ in 0..=order {
        coeffs.push(state[s].clone());
        let mut next = vec![BigRational::zero(); k_max + 1];
        for (h, w) in state.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            if h < k_max {
                next[h + 1] += w;
            }
            next[h] += w * &level[h];
            if h >= 1 {
                next[h - 1] += w * &down[h];
            }
        }
        state = next;
    }
    Ok(TruncatedSeries::new(order, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn pat(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    fn hist(c: &Census) -> Vec<(u64, u64)> {
        c.histogram.iter().map(|(&k, v)| (k, u64::try_from(v).unwrap())).collect()
    }

    #[test]
    fn census_examples() {
        let c = census(3, &[pat("132")], &pat("12")).unwrap();
        assert_eq!(hist(&c), vec![(0, 1), (1, 2), (2, 1), (3, 1)]);
        let c = census(3, &[pat("123")], &pat("213")).unwrap();
        assert_eq!(hist(&c), vec![(0, 4), (1, 1)]);
        let c = census(0, &[pat("132")], &pat("12")).unwrap();
        assert_eq!(hist(&c), vec![(0, 1)]);
        assert_eq!(c.to_csv(), "occurrences,count\n0,1\n");
    }

    #[test]
    fn census_bound_and_parallel_merge() {
        let cfg = OracleConfig { max_n: 5, ..Default::default() };
        assert!(matches!(
            census_with(&cfg, 6, &[], &pat("12")),
            Err(Error::BoundExceeded { bound: 5, .. })
        ));
        // Sequential reference over Permutation::all.
        let (avoid, stat) = (pat("132"), pat("123"));
        let mut reference: BTreeMap<u64, BigUint> = BTreeMap::new();
        for p in Permutation::all(7) {
            if crate::perm::avoids(&p, &avoid) {
                *reference.entry(count_occurrences_u64(p.values(), stat.values())).or_default() += 1u32;
            }
        }
        let c = census(7, &[avoid], &stat).unwrap();
        assert_eq!(c.histogram, reference);
        assert_eq!(c.total(), BigUint::from(429u32));
    }

    #[test]
    fn path_census_examples() {
        let dyck = WeightSpec::motzkin(HeightWeights::constant(rat(0)), HeightWeights::constant(rat(1)));
        assert_eq!(path_census(4, &dyck, None, 0, 0).unwrap(), rat(2));
        let peaked = WeightSpec::peaked(HeightWeights::constant(rat(1)), HeightWeights::constant(rat(1)));
        assert_eq!(path_census(4, &peaked, None, 0, 0).unwrap(), rat(2));
        let mot = WeightSpec::motzkin(HeightWeights::constant(rat(1)), HeightWeights::constant(rat(1)));
        // Motzkin numbers: M_5 = 21, M_6 = 51.
        assert_eq!(path_census(5, &mot, None, 0, 0).unwrap(), rat(21));
        assert_eq!(path_census(6, &mot, None, 0, 0).unwrap(), rat(51));
        assert!(path_census(26, &mot, None, 0, 0).is_err());
    }

    #[test]
    fn strip_sum_counts_bounded_paths() {
        let w = (HeightWeights::constant(rat(0)), HeightWeights::constant(rat(1)));
        let s = strip_path_sum(&w.0, &w.1, 1, 0, 0, 6).unwrap();
        assert_eq!(s, TruncatedSeries::from_ints(6, &[1, 0, 1, 0, 1, 0, 1]));
    }
}
