//! Laurent series in an auxiliary variable `t` with `t² = x`.
//!
//! Values carry a relative precision: the coefficients of
//! `t^v, …, t^{v+len−1}` are known exactly, everything from `t^{v+len}` on is
//! unknown. Products and quotients keep the smaller relative precision, sums
//! the smaller absolute one.

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::poly::Poly;

#[derive(Clone, Debug, PartialEq)]
pub struct HalfPowerSeries {
    min_pow: i64,
    coeffs: Vec<BigRational>,
}

impl HalfPowerSeries {
    /// `Σ coeffs[i] t^{min_pow+i}`, padded with exact zeros to `rel_prec` terms.
    pub fn new(min_pow: i64, mut coeffs: Vec<BigRational>, rel_prec: usize) -> Self {
        coeffs.resize(rel_prec, BigRational::zero());
        let mut s = Self { min_pow, coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(self.coeffs.len());
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_pow += lead as i64;
        }
    }

    pub fn constant(c: BigRational, rel_prec: usize) -> Self {
        Self::new(0, vec![c], rel_prec)
    }

    pub fn one(rel_prec: usize) -> Self {
        Self::constant(BigRational::one(), rel_prec)
    }

    /// `t^e`.
    pub fn t_pow(e: i64, rel_prec: usize) -> Self {
        Self::new(e, vec![BigRational::one()], rel_prec)
    }

    /// `p(x)` with `x = t²`.
    pub fn from_x_poly(p: &Poly, rel_prec: usize) -> Self {
        Self::new(0, p.substitute_square().coeffs().to_vec(), rel_prec.max(2 * p.coeffs().len()))
    }

    /// Exponent of the first known coefficient.
    pub fn min_pow(&self) -> i64 {
        self.min_pow
    }

    /// First exponent whose coefficient is unknown.
    pub fn abs_precision(&self) -> i64 {
        self.min_pow + self.coeffs.len() as i64
    }

    pub fn rel_precision(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, e: i64) -> Option<BigRational> {
        if e >= self.abs_precision() {
            return None;
        }
        if e < self.min_pow {
            return Some(BigRational::zero());
        }
        Some(self.coeffs[(e - self.min_pow) as usize].clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        let len = self.coeffs.len().min(o.coeffs.len());
        let mut v = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                v[i + j] += a * b;
            }
        }
        Self::new(self.min_pow + o.min_pow, v, len)
    }

    pub fn add(&self, o: &Self) -> Self {
        let low = self.min_pow.min(o.min_pow);
        let high = self.abs_precision().min(o.abs_precision());
        if high <= low {
            return Self { min_pow: high, coeffs: Vec::new() };
        }
        let v = (low..high)
            .map(|e| self.coeff(e).unwrap() + o.coeff(e).unwrap())
            .collect::<Vec<_>>();
        let len = v.len();
        Self::new(low, v, len)
    }

    pub fn neg(&self) -> Self {
        Self {
            min_pow: self.min_pow,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let len = self.coeffs.len();
        Self::new(self.min_pow, self.coeffs.iter().map(|a| a * c).collect(), len)
    }

    /// Multiplication by `t^e`.
    pub fn mul_t_pow(&self, e: i64) -> Self {
        Self {
            min_pow: self.min_pow + e,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let Some(lead) = self.coeffs.first() else {
            return Err(Error::NotInvertible);
        };
        let inv0 = lead.recip();
        let len = self.coeffs.len();
        let mut r: Vec<BigRational> = Vec::with_capacity(len);
        r.push(inv0.clone());
        for n in 1..len {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &r[n - k];
                }
            }
            r.push(-acc * &inv0);
        }
        Ok(Self::new(-self.min_pow, r, len))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inverse()?))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.coeffs.len());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Reinterpret as a power series in `x = t²` to order `order`. Fails if a
    /// negative or odd power of `t` survives or the precision is too low.
    pub fn to_x_series(&self, order: usize) -> Result<TruncatedSeries> {
        let needed = 2 * order as i64 + 1;
        if self.abs_precision() < needed {
            return Err(Error::HalfPowerResidue(format!(
                "known only below t^{}, need t^{}",
                self.abs_precision(),
                needed
            )));
        }
        let mut out = Vec::with_capacity(order + 1);
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = self.min_pow + i as i64;
            if e >= needed {
                break;
            }
            if c.is_zero() {
                if e >= 0 && e % 2 == 0 {
                    out.resize(e as usize / 2 + 1, BigRational::zero());
                }
                continue;
            }
            if e < 0 || e % 2 != 0 {
                return Err(Error::HalfPowerResidue(format!("nonzero coefficient {c} at t^{e}")));
            }
            out.resize(e as usize / 2, BigRational::zero());
            out.push(c.clone());
        }
        Ok(TruncatedSeries::new(order, out))
    }
}
