//! Closed-form generating functions in Chebyshev polynomials.
//!
//! Every function evaluates its formula twice: once as a ratio of
//! `q`-polynomials in `x`, once literally in `t = √x` with `U_n(1/(2t))` taken
//! from the explicit Chebyshev sum. The two must agree coefficient by
//! coefficient, otherwise [`Error::EvaluationMismatch`] is returned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::chebyshev::{q_poly, u_at_inverse_2t};
use crate::combinat::{binomial_general, binomial_u64, catalan};
use crate::error::{Error, Result};
use crate::series::{HalfPowerSeries, TruncatedSeries};

fn q(n: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_poly(&q_poly(n), order)
}

fn xpow(e: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(BigRational::from_integer(1.into()), e, order)
}

fn int(c: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(c.into())
}

/// Retries with a larger relative precision until `t^{2·order}` is known.
fn via_half_power(order: usize, build: impl Fn(usize) -> Result<HalfPowerSeries>) -> Result<TruncatedSeries> {
    let needed = 2 * order as i64 + 1;
    let mut w = 2 * order + 16;
    for _ in 0..8 {
        let s = build(w)?;
        if s.abs_precision() >= needed {
            return s.to_x_series(order);
        }
        w *= 2;
    }
    Err(Error::HalfPowerResidue(format!("could not reach t^{needed}")))
}

fn agree(what: &str, a: TruncatedSeries, b: TruncatedSeries) -> Result<TruncatedSeries> {
    if a != b {
        let n = (0..=a.order()).find(|&n| a.coeff(n) != b.coeff(n)).unwrap_or(0);
        return Err(Error::EvaluationMismatch(format!(
            "{what}: coefficient of x^{n} is {} in one evaluation and {} in the other",
            a.coeff(n),
            b.coeff(n)
        )));
    }
    Ok(a)
}

fn check_k(k: usize, min: usize) -> Result<()> {
    if k < min {
        return Err(Error::OutOfHypothesis(format!("k must be at least {min}, got {k}")));
    }
    Ok(())
}

fn check_r_below_k(k: usize, r: usize) -> Result<()> {
    if r == 0 || r >= k {
        return Err(Error::OutOfHypothesis(format!("r must lie in 1..={}, got {r}", k - 1)));
    }
    Ok(())
}

/// `U_{k−1}(1/(2√x)) / (√x U_k(1/(2√x)))` with `x = t²`.
fn avoiders_half_power(k: usize, order: usize) -> Result<TruncatedSeries> {
    via_half_power(order, |w| {
        let den = u_at_inverse_2t(k, w).mul_t_pow(1);
        u_at_inverse_2t(k - 1, w).div(&den)
    })
}

fn avoiders(what: &str, k: usize, order: usize) -> Result<TruncatedSeries> {
    check_k(k, 2)?;
    let qform = q(k - 1, order).div(&q(k, order))?;
    agree(what, qform, avoiders_half_power(k, order)?)
}

/// 132-avoiders that also avoid `12…k`.
pub fn gf_avoiders_12k(k: usize, order: usize) -> Result<TruncatedSeries> {
    avoiders("avoiders of 132 and 12...k", k, order)
}

/// 123-avoiders that also avoid `(k−1)…1k`.
pub fn gf_avoiders_k1k(k: usize, order: usize) -> Result<TruncatedSeries> {
    avoiders("avoiders of 123 and (k-1)...1k", k, order)
}

/// Solutions `(ℓ₁, ℓ₂, …)` of `Σ ℓ_i C(k−2+i, k−1) = r` together with the
/// binomial product `Π C(ℓ_i + ℓ_{i+1} − 1, ℓ_{i+1})` (falling-factorial
/// binomials, so `C(−1, 0) = 1`). Zero products are kept.
pub fn occurrence_compositions(k: usize, r: usize) -> Vec<(Vec<usize>, BigInt)> {
    let mut weights = Vec::new();
    let mut i = 1;
    loop {
        let c = binomial_u64((k + i - 2) as i64, k as i64 - 1) as usize;
        if c > r {
            break;
        }
        weights.push(c);
        i += 1;
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; weights.len()];
    fn rec(idx: usize, left: usize, w: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if idx == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for l in (0..=left / w[idx]).rev() {
            cur[idx] = l;
            rec(idx + 1, left - l * w[idx], w, cur, out);
        }
        cur[idx] = 0;
    }
    let mut sols = Vec::new();
    rec(0, r, &weights, &mut current, &mut sols);
    for l in sols {
        let mut coeff = BigInt::from(1);
        for i in 0..l.len() {
            let next = l.get(i + 1).copied().unwrap_or(0);
            coeff *= binomial_general(l[i] as i64 + next as i64 - 1, next as u64);
        }
        out.push((l, coeff));
    }
    out
}

/// 132-avoiders with exactly `r ≥ 1` occurrences of `12…k`.
pub fn gf_exactly_r_12k(k: usize, r: usize, order: usize) -> Result<TruncatedSeries> {
    check_k(k, 2)?;
    if r == 0 {
        return Err(Error::OutOfHypothesis("r must be at least 1".into()));
    }
    let terms: Vec<(Vec<usize>, BigInt)> = occurrence_compositions(k, r)
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut qform = TruncatedSeries::zero(order);
    for (l, c) in &terms {
        let (l1, rest) = (l[0], l[1..].iter().sum::<usize>());
        let num = q(k - 1, order).pow(l1 as u32 - 1).shift(k - 1 + l1 + rest).scale(&int(c.clone()));
        qform = qform.add(&num.div(&q(k, order).pow(l1 as u32 + 1))?);
    }
    let half = via_half_power(order, |w| {
        let mut acc = HalfPowerSeries::new(0, vec![], w);
        let (uk1, uk) = (u_at_inverse_2t(k - 1, w), u_at_inverse_2t(k, w));
        for (l, c) in &terms {
            let (l1, rest) = (l[0], l[1..].iter().sum::<usize>());
            let e = (l1 as i64 - 1) + 2 * rest as i64;
            let term = uk1
                .pow(l1 as u32 - 1)
                .div(&uk.pow(l1 as u32 + 1))?
                .mul_t_pow(e)
                .scale(&int(c.clone()));
            acc = acc.add(&term);
        }
        Ok(acc)
    })?;
    agree("exactly r occurrences of 12...k", qform, half)
}

/// 132-avoiders avoiding `23…k1`, assembled from the first-passage
/// decomposition: paths below height `k−1` plus a geometric sum over the
/// number `s` of climbs above it.
pub fn gf_avoiders_23k1(k: usize, order: usize) -> Result<TruncatedSeries> {
    check_k(k, 2)?;
    let a = q(k - 2, order).div(&q(k - 1, order))?;
    let b2 = xpow(k - 2, order).div(&q(k - 1, order).pow(2))?;
    let ratio = a.shift(1);
    let mut qform = a.clone();
    let mut power = TruncatedSeries::one(order);
    for _ in 0..=order {
        qform = qform.add(&b2.mul(&power).shift(1));
        power = power.mul(&ratio);
    }
    let half = via_half_power(order, |w| {
        let den = u_at_inverse_2t(k - 1, w).mul_t_pow(1);
        let a = u_at_inverse_2t(k - 2, w).div(&den)?;
        let b = den.inverse()?;
        let mut acc = a.clone();
        let mut power = HalfPowerSeries::one(w);
        for s in 0..=order as i64 {
            acc = acc.add(&b.mul(&power).mul(&b).mul_t_pow(2 * (s + 1)));
            power = power.mul(&a);
        }
        Ok(acc)
    })?;
    let decomposed = agree("avoiders of 132 and 23...k1", qform, half)?;
    agree(
        "avoiders of 132 and 23...k1 against q_{k-1}/q_k",
        decomposed,
        q(k - 1, order).div(&q(k, order))?,
    )
}

/// 132-avoiders with exactly one occurrence of `23…k1`, from
/// `x / (U_{k−2} U_k)`.
pub fn gf_one_23k1(k: usize, order: usize) -> Result<TruncatedSeries> {
    check_k(k, 3)?;
    let qform = xpow(k, order).div(&q(k - 2, order).mul(&q(k, order)))?;
    let half = via_half_power(order, |w| {
        HalfPowerSeries::t_pow(2, w).div(&u_at_inverse_2t(k - 2, w).mul(&u_at_inverse_2t(k, w)))
    })?;
    agree("exactly one occurrence of 23...k1", qform, half)
}

/// 132-avoiders with exactly `r` occurrences of `23…k1`, `3 ≤ k`,
/// `1 ≤ r ≤ k−1`, as a divisor sum with Catalan weights.
pub fn gf_exactly_r_23k1(k: usize, r: usize, order: usize) -> Result<TruncatedSeries> {
    check_k(k, 3)?;
    check_r_below_k(k, r)?;
    let divisors: Vec<usize> = (1..=r).filter(|l| r % l == 0).collect();
    let mut qform = TruncatedSeries::zero(order);
    let ratio = q(k - 3, order).div(&q(k - 2, order))?;
    for &l in &divisors {
        let m = r / l;
        let term = ratio
            .pow(m as u32)
            .shift(l + m + k - 2)
            .scale(&int(BigInt::from(catalan(l as u64))));
        qform = qform.add(&term);
    }
    qform = qform.div(&q(k - 3, order).mul(&q(k, order)))?;
    let half = via_half_power(order, |w| {
        let (u3, u2) = (u_at_inverse_2t(k - 3, w), u_at_inverse_2t(k - 2, w));
        let ratio = u3.div(&u2)?;
        let mut acc = HalfPowerSeries::new(0, vec![], w);
        for &l in &divisors {
            let m = r / l;
            let e = 2 * l as i64 + m as i64 - 1;
            acc = acc.add(&ratio.pow(m as u32).mul_t_pow(e).scale(&int(BigInt::from(catalan(l as u64)))));
        }
        acc.div(&u3.mul(&u_at_inverse_2t(k, w)))
    })?;
    let general = agree("exactly r occurrences of 23...k1", qform, half)?;
    if r == 1 {
        return agree(
            "single-occurrence formula against the divisor sum",
            general,
            gf_one_23k1(k, order)?,
        );
    }
    Ok(general)
}

/// 123-avoiders with exactly `r` occurrences of `(k−1)…1k`, `1 ≤ r ≤ k−1`.
pub fn gf_exactly_r_k1k(k: usize, r: usize, order: usize) -> Result<TruncatedSeries> {
    check_k(k, 2)?;
    check_r_below_k(k, r)?;
    let qform = q(k - 1, order)
        .pow(r as u32 - 1)
        .shift(r + k - 1)
        .div(&q(k, order).pow(r as u32 + 1))?;
    let half = via_half_power(order, |w| {
        u_at_inverse_2t(k - 1, w)
            .pow(r as u32 - 1)
            .div(&u_at_inverse_2t(k, w).pow(r as u32 + 1))
            .map(|s| s.mul_t_pow(r as i64 - 1))
    })?;
    agree("exactly r occurrences of (k-1)...1k", qform, half)
}
