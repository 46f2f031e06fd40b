//! Dense univariate polynomials with exact rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `c·x^e`.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        let mut v = vec![BigRational::zero(); e + 1];
        v[e] = c;
        Self::new(v)
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul_x_pow(&self, e: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); e];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// `x^deg · p(1/x)`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `p(q(x))`.
    pub fn compose(&self, q: &Poly) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, c| &(&acc * q) + &Poly::constant(c.clone()))
    }

    /// `p(x²)`.
    pub fn substitute_square(&self) -> Self {
        let mut v = vec![BigRational::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[2 * i] = c.clone();
        }
        Self::new(v)
    }

    /// Inverse of [`Poly::substitute_square`]; `None` if an odd power is present.
    pub fn unsubstitute_square(&self) -> Option<Self> {
        if self.coeffs.iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&n| n >= dd) else {
            return (Poly::zero(), self.clone());
        };
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] = &rem[i + j] - &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Square-free factorization `p = c · Π f_i^i`; returns `(i, f_i)` for
    /// the nonconstant factors.
    pub fn square_free_factors(&self) -> Vec<(u32, Poly)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        // Yun's algorithm over a field of characteristic zero.
        let d = self.derivative();
        let mut a = self.gcd(&d);
        let mut b = self.div_rem(&a).0;
        let mut c = d.div_rem(&a).0;
        let mut i = 1;
        loop {
            let dd = &c - &b.derivative();
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            a = b.gcd(&dd);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.div_rem(&a).0;
            c = dd.div_rem(&a).0;
            i += 1;
        }
        out
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    /// Coefficients as `[c0, c1, …]` in exact rational text.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (neg, abs) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = e == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{e}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let a = Poly::from_ints(&[1, -1]);
        let b = Poly::from_ints(&[1, 1]);
        assert_eq!(&a * &b, Poly::from_ints(&[1, 0, -1]));
        assert_eq!((&a + &b).to_string(), "2");
        assert_eq!(Poly::from_ints(&[0, -2, 0, 1]).to_string(), "-2*x + x^3");
        assert_eq!(Poly::from_ints(&[1, -1]).to_list_string(), "[1, -1]");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn division_and_gcd() {
        let p = &Poly::from_ints(&[-1, 1]).pow(2) * &Poly::from_ints(&[2, 0, 1]);
        let (q, r) = p.div_rem(&Poly::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(&q * &Poly::from_ints(&[-1, 1]), p);
        assert_eq!(p.gcd(&p.derivative()), Poly::from_ints(&[-1, 1]));
    }

    #[test]
    fn square_free() {
        // (x - 1)^3 (x + 2)
        let p = &Poly::from_ints(&[-1, 1]).pow(3) * &Poly::from_ints(&[2, 1]);
        let f = p.square_free_factors();
        assert_eq!(f, vec![(1, Poly::from_ints(&[2, 1])), (3, Poly::from_ints(&[-1, 1]))]);
        let q = Poly::from_ints(&[1, -2]).pow(2);
        assert_eq!(q.square_free_factors(), vec![(2, Poly::from_ints(&[-1, 2]).monic())]);
    }

    #[test]
    fn reversal_and_composition() {
        let p = Poly::from_ints(&[0, -2, 0, 1]);
        assert_eq!(p.reversed(), Poly::from_ints(&[1, 0, -2]));
        let shift = Poly::from_ints(&[-1, 1]);
        assert_eq!(Poly::from_ints(&[0, 0, 1]).compose(&shift), Poly::from_ints(&[1, -2, 1]));
        assert_eq!(
            Poly::from_ints(&[1, -1]).substitute_square().unsubstitute_square(),
            Some(Poly::from_ints(&[1, -1]))
        );
        assert_eq!(Poly::from_ints(&[1, 1]).unsubstitute_square(), None);
    }
}
