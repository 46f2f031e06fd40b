//! Bijections between 132-avoiding (resp. 123-avoiding) permutations of
//! `{1, …, n}` and closed Dyck paths of length `2n`.
//!
//! `phi` reads the permutation left to right and closes a down-step from
//! height `h_j + 1` to `h_j` for every entry, `h_j` being the number of later
//! larger entries. `psi` encodes the right-to-left maxima decomposition and
//! reflects the result.

use crate::error::{Error, Result};
use crate::path::{LatticePath, Step};
use crate::perm::{require_avoids, Pattern, Permutation};

fn pattern_132() -> Pattern {
    Pattern::new(Permutation::from_vec_unchecked(vec![1, 3, 2])).expect("nonempty")
}

fn pattern_123() -> Pattern {
    Pattern::increasing(3).expect("nonempty")
}

fn closed(steps: Vec<Step>) -> LatticePath {
    let p = LatticePath::new(0, steps).expect("construction keeps heights nonnegative");
    debug_assert!(p.is_closed_dyck());
    p
}

/// Maximal runs `U^{a_1} D^{d_1} … U^{a_s} D^{d_s}` of a closed Dyck path.
fn up_down_runs(p: &LatticePath) -> Vec<(usize, usize)> {
    let mut runs: Vec<(usize, usize)> = Vec::new();
    for s in p.steps() {
        match s {
            Step::Up => match runs.last_mut() {
                Some(last) if last.1 == 0 => last.0 += 1,
                _ => runs.push((1, 0)),
            },
            Step::Down => runs.last_mut().expect("closed Dyck path starts with U").1 += 1,
            Step::Level => unreachable!("caller checked the path is Dyck"),
        }
    }
    runs
}

/// Φ: 132-avoiding permutation to closed Dyck path.
pub fn phi(pi: &Permutation) -> Result<LatticePath> {
    require_avoids(pi, &pattern_132())?;
    let v = pi.values();
    let mut steps = Vec::with_capacity(2 * v.len());
    let mut height = 0usize;
    for (j, &x) in v.iter().enumerate() {
        let later_larger = v[j + 1..].iter().filter(|&&y| y > x).count();
        // 132-avoidance guarantees later_larger + 1 >= height.
        steps.extend(std::iter::repeat(Step::Up).take(later_larger + 1 - height));
        steps.push(Step::Down);
        height = later_larger;
    }
    Ok(closed(steps))
}

/// Φ through the left-to-right minima decomposition `m_1 w_1 … m_s w_s`.
pub fn phi_via_minima(pi: &Permutation) -> Result<LatticePath> {
    require_avoids(pi, &pattern_132())?;
    let n = pi.len();
    let minima = pi.left_to_right_minima();
    let mut steps = Vec::with_capacity(2 * n);
    let mut previous = n as u32 + 1;
    for (i, &(pos, m)) in minima.iter().enumerate() {
        let next_pos = minima.get(i + 1).map_or(n, |&(p, _)| p);
        let gap_len = next_pos - pos - 1;
        steps.extend(std::iter::repeat(Step::Up).take((previous - m) as usize));
        steps.extend(std::iter::repeat(Step::Down).take(gap_len + 1));
        previous = m;
    }
    Ok(closed(steps))
}

/// Φ⁻¹, rebuilt from the up-run/down-run lengths: up-runs give the
/// left-to-right minima, down-runs the gap sizes, and each gap slot takes the
/// smallest unused value above the current minimum.
pub fn phi_inverse(p: &LatticePath) -> Result<Permutation> {
    p.require_closed_dyck()?;
    let n = p.len() / 2;
    let mut used = vec![false; n + 2];
    let mut values = Vec::with_capacity(n);
    let mut minimum = n as u32 + 1;
    for (ups, downs) in up_down_runs(p) {
        minimum -= ups as u32;
        used[minimum as usize] = true;
        values.push(minimum);
        for _ in 1..downs {
            let v = (minimum + 1..=n as u32)
                .find(|&v| !used[v as usize])
                .ok_or_else(|| Error::NotClosedDyck(format!("{p}: no value left")))?;
            used[v as usize] = true;
            values.push(v);
        }
    }
    Permutation::new(values)
}

/// Ψ: 123-avoiding permutation to closed Dyck path.
pub fn psi(pi: &Permutation) -> Result<LatticePath> {
    require_avoids(pi, &pattern_123())?;
    let maxima = pi.right_to_left_maxima();
    let mut steps = Vec::with_capacity(2 * pi.len());
    let mut previous = 0u32;
    // Right to left: m_1 is the last entry.
    for (i, &(pos, m)) in maxima.iter().enumerate().rev() {
        let gap_start = if i == 0 { 0 } else { maxima[i - 1].0 + 1 };
        let gap_len = pos - gap_start;
        steps.extend(std::iter::repeat(Step::Up).take((m - previous) as usize));
        steps.extend(std::iter::repeat(Step::Down).take(gap_len + 1));
        previous = m;
    }
    let raw = LatticePath::new(0, steps).expect("valid before reflection");
    let reflected = raw.reflect();
    debug_assert!(reflected.is_closed_dyck());
    Ok(reflected)
}

/// Ψ⁻¹: undo the reflection, read maxima from up-runs and gap sizes from
/// down-runs; gaps further right receive the smaller values, each in
/// decreasing order.
pub fn psi_inverse(p: &LatticePath) -> Result<Permutation> {
    p.require_closed_dyck()?;
    let raw = p.reflect();
    let runs = up_down_runs(&raw);
    let mut maxima = Vec::with_capacity(runs.len());
    let mut m = 0u32;
    for &(ups, _) in &runs {
        m += ups as u32;
        maxima.push(m);
    }
    let mut is_max = vec![false; p.len() / 2 + 1];
    for &m in &maxima {
        is_max[m as usize] = true;
    }
    let mut rest = (1..is_max.len() as u32).filter(|&v| !is_max[v as usize]);
    // gaps[i] holds w_{i+1}, filled in increasing value order.
    let mut gaps: Vec<Vec<u32>> = Vec::with_capacity(runs.len());
    for (i, &(_, downs)) in runs.iter().enumerate() {
        let mut gap: Vec<u32> = rest.by_ref().take(downs - 1).collect();
        if gap.len() != downs - 1 || gap.last().is_some_and(|&v| v > maxima[i]) {
            return Err(Error::NotClosedDyck(format!("{p}: inconsistent run lengths")));
        }
        gap.reverse();
        gaps.push(gap);
    }
    let mut values = Vec::with_capacity(p.len() / 2);
    for i in (0..runs.len()).rev() {
        values.extend_from_slice(&gaps[i]);
        values.push(maxima[i]);
    }
    Permutation::new(values)
}

/// `Φ⁻¹ ∘ Ψ`: 123-avoiders to 132-avoiders of the same size.
pub fn convert_123_to_132(pi: &Permutation) -> Result<Permutation> {
    phi_inverse(&psi(pi)?)
}
