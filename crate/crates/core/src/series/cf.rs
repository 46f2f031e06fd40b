//! Continued fractions for weighted Motzkin and peak-marked Dyck paths.

use num_rational::BigRational;

use super::{BivariateSeries, Coeff, Series, TruncatedSeries, YPoly};
use crate::combinat::binomial_u64;
use crate::error::{Error, Result};
use crate::path::HeightWeights;

/// `1/(1 − b₀ − λ₁/(1 − b₁ − λ₂/(…/(1 − b_{D−1}))))` to order `order`.
///
/// `depth` defaults to `order + 1`, which is exact when every `λ_h` has zero
/// constant term; that condition is checked in the default case.
pub fn cf_motzkin<C: Coeff>(
    depth: Option<usize>,
    b: impl Fn(usize) -> Result<Series<C>>,
    lambda: impl Fn(usize) -> Result<Series<C>>,
    order: usize,
) -> Result<Series<C>> {
    let depth = match depth {
        Some(0) => return Err(Error::OutOfHypothesis("continued fraction depth must be at least 1".into())),
        Some(d) => d,
        None => {
            let d = order + 1;
            for h in 1..d {
                if !lambda(h)?.coeff(0).is_nil() {
                    return Err(Error::OutOfHypothesis(format!(
                        "default depth needs lambda_{h} without constant term; pass an explicit depth"
                    )));
                }
            }
            d
        }
    };
    let one = Series::<C>::one(order);
    let fit = |s: Series<C>| s.truncate(order).add(&Series::zero(order));
    let mut tail = one.sub(&fit(b(depth - 1)?));
    for h in (1..depth).rev() {
        let frac = fit(lambda(h)?).div(&tail)?;
        tail = one.sub(&fit(b(h - 1)?)).sub(&frac);
    }
    tail.reciprocal()
}

/// `1/(1 − (ν₁ − λ₁) − λ₁/(1 − (ν₂ − λ₂) − λ₂/(…)))`, evaluated as a Motzkin
/// fraction with level weights `ν_{h+1} − λ_{h+1}`.
pub fn cf_peaked_dyck<C: Coeff>(
    depth: Option<usize>,
    nu: impl Fn(usize) -> Result<Series<C>>,
    lambda: impl Fn(usize) -> Result<Series<C>>,
    order: usize,
) -> Result<Series<C>> {
    cf_motzkin(depth, |h| Ok(nu(h + 1)?.sub(&lambda(h + 1)?)), &lambda, order)
}

/// Height function `h ↦ w_h · x^e` over a rational weight table.
pub fn marked_weights<'a>(
    w: &'a HeightWeights,
    kind: &'static str,
    x_exp: usize,
    order: usize,
) -> impl Fn(usize) -> Result<TruncatedSeries> + 'a {
    move |h| Ok(Series::monomial(w.require(kind, h)?.clone(), x_exp, order))
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::OutOfHypothesis(format!("pattern length k must be at least 2, got {k}")));
    }
    Ok(())
}

fn x_y_pow(e: u64, order: usize) -> BivariateSeries {
    Series::monomial(YPoly::y_pow(e), 1, order)
}

/// Σ over 132-avoiders π of `x^{|π|} y^{#occurrences of 12…k}`, via the
/// fraction with numerators `x·y^{C(i−1,k−1)}` and no level terms.
pub fn gf_theorem1(k: usize, order: usize) -> Result<BivariateSeries> {
    check_k(k)?;
    cf_motzkin(
        None,
        |_| Ok(BivariateSeries::zero(order)),
        |i| Ok(x_y_pow(binomial_u64(i as i64 - 1, k as i64 - 1), order)),
        order,
    )
}

/// Σ over 123-avoiders π of `x^{|π|} y^{#occurrences of (k−1)…1k}`: peak
/// weights `x·y^{C(i−1,k−1)}`, other down-steps `x`.
pub fn gf_theorem8(k: usize, order: usize) -> Result<BivariateSeries> {
    check_k(k)?;
    cf_peaked_dyck(
        None,
        |i| Ok(x_y_pow(binomial_u64(i as i64 - 1, k as i64 - 1), order)),
        |_| Ok(x_y_pow(0, order)),
        order,
    )
}

/// Convenience: the y-free series with all weights rational.
pub fn constant_weights(c: BigRational, x_exp: usize, order: usize) -> TruncatedSeries {
    Series::monomial(c, x_exp, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rat;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.to_integers()
            .unwrap()
            .into_iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn catalan_and_motzkin() {
        let n = 8;
        let dyck = cf_motzkin(None, |_| Ok(TruncatedSeries::zero(n)), |_| Ok(constant_weights(rat(1), 2, n)), n).unwrap();
        assert_eq!(ints(&dyck), vec![1, 0, 1, 0, 2, 0, 5, 0, 14]);
        let mot = cf_motzkin(
            None,
            |_| Ok(constant_weights(rat(1), 1, 5)),
            |_| Ok(constant_weights(rat(1), 2, 5)),
            5,
        )
        .unwrap();
        assert_eq!(ints(&mot), vec![1, 1, 2, 4, 9, 21]);
    }

    #[test]
    fn depth_one_and_default_depth_guard() {
        let s = cf_motzkin(Some(1), |_| Ok(TruncatedSeries::zero(4)), |_| Ok(TruncatedSeries::one(4)), 4).unwrap();
        assert_eq!(s, TruncatedSeries::one(4));
        let err = cf_motzkin(None, |_| Ok(TruncatedSeries::zero(4)), |_| Ok(TruncatedSeries::one(4)), 4);
        assert!(matches!(err, Err(Error::OutOfHypothesis(_))));
    }

    #[test]
    fn peaked_examples() {
        let n = 6;
        let x = |_| Ok(constant_weights(rat(1), 1, n));
        let cat = cf_peaked_dyck(None, x, x, n).unwrap();
        assert_eq!(ints(&cat), vec![1, 1, 2, 5, 14, 42, 132]);
        let saw = cf_peaked_dyck(
            None,
            |h| Ok(if h == 1 { constant_weights(rat(1), 1, n) } else { TruncatedSeries::zero(n) }),
            |_| Ok(TruncatedSeries::zero(n)),
            n,
        )
        .unwrap();
        assert_eq!(ints(&saw), vec![1; 7]);
    }

    #[test]
    fn theorem_fractions_small_coefficients() {
        let t1 = gf_theorem1(2, 5).unwrap();
        assert_eq!(t1.coeff(0), YPoly::y_pow(0));
        assert_eq!(t1.coeff(3).to_string(), "y^3 + y^2 + 2*y + 1");
        let t8 = gf_theorem8(3, 5).unwrap();
        assert_eq!(t8.coeff(3).to_string(), "y + 4");
        for k in 2..=5 {
            let cat = gf_theorem1(k, 9).unwrap().eval_y(&rat(1));
            assert_eq!(ints(&cat), vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
            let cat = gf_theorem8(k, 9).unwrap().eval_y(&rat(1));
            assert_eq!(ints(&cat), vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
        }
        assert!(gf_theorem1(1, 3).is_err());
    }
}
