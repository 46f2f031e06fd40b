//! Sparse polynomials in `y` with rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Coeff;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct YPoly {
    terms: BTreeMap<u64, BigRational>,
}

impl YPoly {
    pub fn from_terms(terms: impl IntoIterator<Item = (u64, BigRational)>) -> Self {
        let mut p = YPoly::default();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// `c · y^e`.
    pub fn monomial(c: BigRational, e: u64) -> Self {
        Self::from_terms([(e, c)])
    }

    /// `y^e`.
    pub fn y_pow(e: u64) -> Self {
        Self::monomial(BigRational::one(), e)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    fn add_term(&mut self, e: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn terms(&self) -> &BTreeMap<u64, BigRational> {
        &self.terms
    }

    pub fn coeff(&self, e: u64) -> BigRational {
        self.terms.get(&e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().next_back().copied()
    }

    pub fn eval(&self, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut power = BigRational::one();
        let mut at = 0u64;
        for (&e, c) in &self.terms {
            while at < e {
                power *= y;
                at += 1;
            }
            acc += c * &power;
        }
        acc
    }

    /// Integer coefficients keyed by exponent, if all are integral.
    pub fn to_integer_map(&self) -> Option<BTreeMap<u64, BigInt>> {
        self.terms
            .iter()
            .map(|(&e, c)| c.is_integer().then(|| (e, c.to_integer())))
            .collect()
    }
}

impl Coeff for YPoly {
    fn nil() -> Self {
        YPoly::default()
    }
    fn unit() -> Self {
        YPoly::constant(BigRational::one())
    }
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&e, c) in &o.terms {
            r.add_term(e, c.clone());
        }
        r
    }
    fn minus(&self, o: &Self) -> Self {
        self.plus(&o.negated())
    }
    fn times(&self, o: &Self) -> Self {
        let mut r = YPoly::default();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &o.terms {
                r.add_term(e1 + e2, c1 * c2);
            }
        }
        r
    }
    fn negated(&self) -> Self {
        YPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
    fn try_inverse(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((0, c)) if self.terms.len() == 1 => Some(YPoly::constant(c.recip())),
            _ => None,
        }
    }
    fn from_rational(c: BigRational) -> Self {
        YPoly::constant(c)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Object(
            self.terms
                .iter()
                .map(|(e, c)| (e.to_string(), serde_json::Value::String(c.to_string())))
                .collect(),
        )
    }
}

impl fmt::Display for YPoly {
    /// Highest power first, e.g. `y^3 + y^2 + 2*y + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let (neg, abs) = (c.is_negative(), c.abs());
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let show = e == 0 || !abs.is_one();
            if show {
                write!(f, "{abs}")?;
            }
            let star = if show { "*" } else { "" };
            match e {
                0 => {}
                1 => write!(f, "{star}y")?,
                _ => write!(f, "{star}y^{e}")?,
            }
        }
        Ok(())
    }
}
