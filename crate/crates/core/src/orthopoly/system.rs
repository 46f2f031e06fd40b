//! Three-term recurrence systems, reciprocal polynomials and bounded-strip
//! path generating functions.

use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::path::HeightWeights;
use crate::poly::Poly;
use crate::series::{expand_rational, TruncatedSeries};

#[derive(Default)]
struct Cache {
    p: Vec<Poly>,
    pstar: Vec<Poly>,
}

/// `p₀ = 1`, `p₁ = x − b₀`, `p_{n+1} = (x − b_n) p_n − λ_n p_{n−1}`.
pub struct PolySystem {
    b: HeightWeights,
    lambda: HeightWeights,
    cache: Mutex<Cache>,
}

impl Clone for PolySystem {
    fn clone(&self) -> Self {
        Self::new(self.b.clone(), self.lambda.clone())
    }
}

impl std::fmt::Debug for PolySystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PolySystem")
            .field("b", &self.b)
            .field("lambda", &self.lambda)
            .finish()
    }
}

impl PolySystem {
    pub fn new(b: HeightWeights, lambda: HeightWeights) -> Self {
        Self {
            b,
            lambda,
            cache: Mutex::new(Cache::default()),
        }
    }

    pub fn b(&self) -> &HeightWeights {
        &self.b
    }

    pub fn lambda(&self) -> &HeightWeights {
        &self.lambda
    }

    /// `S^m`: weights re-indexed by `+m`.
    pub fn shift(&self, m: usize) -> Self {
        Self::new(self.b.shifted(m), self.lambda.shifted(m))
    }

    pub fn eval_pn(&self, n: usize) -> Result<Poly> {
        let mut cache = self.cache.lock().expect("cache lock");
        if cache.p.is_empty() {
            cache.p.push(Poly::one());
        }
        while cache.p.len() <= n {
            let m = cache.p.len() - 1;
            let bm = Poly::constant(self.b.require("level", m)?.clone());
            let mut next = &(&Poly::x() - &bm) * &cache.p[m];
            if m >= 1 {
                let lm = self.lambda.require("down", m)?;
                next = &next - &cache.p[m - 1].scale(lm);
            }
            cache.p.push(next);
        }
        Ok(cache.p[n].clone())
    }

    /// Reciprocal polynomial `x^n p_n(1/x)`, from
    /// `p*_{n+1} = (1 − b_n x) p*_n − λ_n x² p*_{n−1}`.
    pub fn eval_pstar(&self, n: usize) -> Result<Poly> {
        let mut cache = self.cache.lock().expect("cache lock");
        if cache.pstar.is_empty() {
            cache.pstar.push(Poly::one());
        }
        while cache.pstar.len() <= n {
            let m = cache.pstar.len() - 1;
            let bm = self.b.require("level", m)?;
            let factor = Poly::new(vec![BigRational::one(), -bm.clone()]);
            let mut next = &factor * &cache.pstar[m];
            if m >= 1 {
                let lm = self.lambda.require("down", m)?;
                next = &next - &cache.pstar[m - 1].mul_x_pow(2).scale(lm);
            }
            cache.pstar.push(next);
        }
        Ok(cache.pstar[n].clone())
    }
}

/// Weighted Motzkin paths from height `r` to `s` staying within `0..=k_max`,
/// each weighted by `w(P) x^{ℓ(P)}`, to order `order`.
pub fn strip_gf(sys: &PolySystem, k_max: usize, r: usize, s: usize, order: usize) -> Result<TruncatedSeries> {
    if r > k_max || s > k_max {
        return Err(Error::OutOfHypothesis(format!(
            "endpoints r={r}, s={s} must lie in 0..={k_max}"
        )));
    }
    let (lo, hi) = (r.min(s), r.max(s));
    let mut num = sys.eval_pstar(lo)?.mul_x_pow(hi - lo);
    num = &num * &sys.shift(hi + 1).eval_pstar(k_max - hi)?;
    if r > s {
        for i in s + 1..=r {
            num = num.scale(sys.lambda.require("down", i)?);
        }
    }
    let den = sys.eval_pstar(k_max + 1)?;
    expand_rational(&num, &den, order)
}
