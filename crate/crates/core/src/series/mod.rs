//! Exact truncated power series in `x`.

mod cf;
mod half_power;
mod ypoly;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;

pub use cf::{cf_motzkin, cf_peaked_dyck, constant_weights, gf_theorem1, gf_theorem8, marked_weights};
pub use half_power::HalfPowerSeries;
pub use ypoly::YPoly;

/// Coefficient ring of a [`Series`].
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn nil() -> Self;
    fn unit() -> Self;
    fn is_nil(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
    fn from_rational(c: BigRational) -> Self;
    fn to_json(&self) -> serde_json::Value;
}

impl Coeff for BigRational {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        One::one()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn from_rational(c: BigRational) -> Self {
        c
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }
}

/// Power series known modulo `x^{order+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C: Coeff> {
    order: usize,
    coeffs: Vec<C>,
}

pub type TruncatedSeries = Series<BigRational>;
pub type BivariateSeries = Series<YPoly>;

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl<C: Coeff> Series<C> {
    /// Pads with zeros or truncates `coeffs` to `order + 1` entries.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::nil());
        Self { order, coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::unit(), order)
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(order, vec![c])
    }

    /// `c·x^e`.
    pub fn monomial(c: C, e: usize, order: usize) -> Self {
        let mut v = vec![C::nil(); order + 1];
        if e <= order {
            v[e] = c;
        }
        Self { order, coeffs: v }
    }

    pub fn x(order: usize) -> Self {
        Self::monomial(C::unit(), 1, order)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> C {
        self.coeffs.get(n).cloned().unwrap_or_else(C::nil)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_nil)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_nil())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order.min(self.order), self.coeffs[..=order.min(self.order)].to_vec())
    }

    pub fn add(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::new(order, (0..=order).map(|i| self.coeffs[i].plus(&o.coeffs[i])).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        Self::new(order, (0..=order).map(|i| self.coeffs[i].minus(&o.coeffs[i])).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.order, self.coeffs.iter().map(C::negated).collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.order, self.coeffs.iter().map(|a| a.times(c)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let order = self.order.min(o.order);
        let mut v = vec![C::nil(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_nil() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_nil() {
                    v[i + j] = v[i + j].plus(&a.times(b));
                }
            }
        }
        Self { order, coeffs: v }
    }

    /// `1/self`; requires an invertible constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NotInvertible)?;
        let mut r: Vec<C> = Vec::with_capacity(self.order + 1);
        r.push(inv0.clone());
        for n in 1..=self.order {
            let mut acc = C::nil();
            for k in 1..=n {
                if !self.coeffs[k].is_nil() {
                    acc = acc.plus(&self.coeffs[k].times(&r[n - k]));
                }
            }
            r.push(acc.times(&inv0).negated());
        }
        Ok(Self { order: self.order, coeffs: r })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.reciprocal()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplication by `x^e`.
    pub fn shift(&self, e: usize) -> Self {
        let mut v = vec![C::nil(); e.min(self.order + 1)];
        v.extend(self.coeffs.iter().cloned());
        Self::new(self.order, v)
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Series<D> {
        Series::new(self.order, self.coeffs.iter().map(f).collect())
    }

    /// JSON array of the coefficients.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(C::to_json).collect())
    }

    /// Coefficients joined by `", "`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        parts.join(", ")
    }
}

impl TruncatedSeries {
    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::new(order, p.coeffs().iter().take(order + 1).cloned().collect())
    }

    pub fn from_ints(order: usize, c: &[i64]) -> Self {
        Self::new(order, c.iter().map(|&v| rat(v)).collect())
    }

    /// Coefficients as integers if all are integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }
}

impl BivariateSeries {
    /// Substitute a value for `y`.
    pub fn eval_y(&self, y: &BigRational) -> TruncatedSeries {
        self.map(|p| p.eval(y))
    }

    /// Coefficient series of `y^r`.
    pub fn y_stratum(&self, r: u64) -> TruncatedSeries {
        self.map(|p| p.coeff(r))
    }

    pub fn from_rational_series(s: &TruncatedSeries) -> Self {
        s.map(|c| YPoly::constant(c.clone()))
    }
}

impl<C: Coeff> fmt::Display for Series<C> {
    /// `c0 + c1 x + c2 x^2 + … + O(x^{N+1})`; zero terms are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_nil() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let text = c.to_string();
            let text = if text.contains(' ') && e > 0 { format!("({text})") } else { text };
            match e {
                0 => write!(f, "{text}")?,
                1 => write!(f, "{text} x")?,
                _ => write!(f, "{text} x^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(x^{})", self.order + 1)
    }
}

/// Series expansion of `numerator / denominator` to order `order`.
pub fn expand_rational(numerator: &Poly, denominator: &Poly, order: usize) -> Result<TruncatedSeries> {
    let d0 = denominator.coeff(0);
    if d0.is_zero() {
        return Err(Error::NotInvertible);
    }
    let inv = d0.recip();
    let dc = denominator.coeffs();
    let mut c: Vec<BigRational> = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = numerator.coeff(n);
        for (k, dk) in dc.iter().enumerate().take(n + 1).skip(1) {
            if !dk.is_zero() {
                acc -= dk * &c[n - k];
            }
        }
        c.push(acc * &inv);
    }
    Ok(TruncatedSeries::new(order, c))
}
