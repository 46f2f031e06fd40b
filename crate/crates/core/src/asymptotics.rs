//! Leading-term asymptotics of rational generating functions, the closed
//! trigonometric estimates for counts with `r` occurrences, and a tabular
//! probe of normalized exact counts.

use std::fmt::Write as _;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use nalgebra::DMatrix;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::oracle::census;
use crate::orthopoly::{gf_avoiders_12k, gf_exactly_r_12k};
use crate::perm::Pattern;
use crate::poly::Poly;

pub const DEFAULT_PRECISION: usize = 128;

const RM: RoundingMode = RoundingMode::ToEven;
/// Extra bits carried through intermediate float evaluation.
const GUARD: usize = 64;
/// Relative gap below which two root moduli count as tied.
const TIE_TOLERANCE: f64 = 1e-9;

fn consts() -> Consts {
    Consts::new().expect("astro-float constant cache")
}

fn int_to_float(v: &BigInt, p: usize, cc: &mut Consts) -> BigFloat {
    BigFloat::parse(&v.to_string(), Radix::Dec, p, RM, cc)
}

/// Correctly rounded up to the parse/divide error, which is far below `p` bits.
pub fn rational_to_float(v: &BigRational, p: usize) -> BigFloat {
    let mut cc = consts();
    let n = int_to_float(v.numer(), p + GUARD, &mut cc);
    let d = int_to_float(v.denom(), p + GUARD, &mut cc);
    let mut q = n.div(&d, p + GUARD, RM);
    let _ = q.set_precision(p, RM);
    q
}

/// Nearest `f64`, for screening and display.
pub fn float_to_f64(v: &BigFloat) -> f64 {
    let mut cc = consts();
    v.format(Radix::Dec, RM, &mut cc)
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(f64::NAN)
}

/// Decimal text with `digits` significant digits: plain for moderate
/// magnitudes (`0.00123`, `48`), scientific otherwise (`1.2e25`).
pub fn format_float(v: &BigFloat, digits: usize) -> String {
    if v.is_zero() {
        return "0".into();
    }
    let mut cc = consts();
    let s = match v.format(Radix::Dec, RM, &mut cc) {
        Ok(s) => s,
        Err(_) => return "NaN".into(),
    };
    // astro-float renders as [-]d.ddd…e[+-]x
    let (mant, exp) = s.split_once('e').unwrap_or((&s, "0"));
    let (neg, mant) = mant.strip_prefix('-').map_or((false, mant), |m| (true, m));
    let mut exp: i64 = exp.trim_start_matches('+').parse().unwrap_or(0);
    let all: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).map(|b| b - b'0').collect();
    let mut d: Vec<u8> = all.iter().copied().take(digits.max(1)).collect();
    d.resize(digits.max(1), 0);
    if all.get(d.len()).is_some_and(|&r| r >= 5) {
        let mut i = d.len();
        loop {
            if i == 0 {
                d.insert(0, 1);
                d.pop();
                exp += 1;
                break;
            }
            i -= 1;
            if d[i] == 9 {
                d[i] = 0;
            } else {
                d[i] += 1;
                break;
            }
        }
    }
    while d.len() > 1 && d[d.len() - 1] == 0 {
        d.pop();
    }
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    let digit = |x: &u8| (b'0' + x) as char;
    if (-6..21).contains(&exp) {
        // plain decimal
        let point = exp + 1;
        if point <= 0 {
            out.push_str("0.");
            out.extend(std::iter::repeat('0').take((-point) as usize));
            out.extend(d.iter().map(digit));
        } else {
            let point = point as usize;
            for i in 0..point.max(d.len()) {
                if i == point {
                    out.push('.');
                }
                out.push(d.get(i).map_or('0', digit));
            }
        }
        return out;
    }
    out.push(digit(&d[0]));
    if d.len() > 1 {
        out.push('.');
        out.extend(d[1..].iter().map(digit));
    }
    let _ = write!(out, "e{exp}");
    out
}

fn horner(p: &Poly, x: &BigFloat, prec: usize) -> BigFloat {
    let mut acc = BigFloat::from_u8(0, prec);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(x, prec, RM).add(&rational_to_float(c, prec), prec, RM);
    }
    acc
}

fn factorial(n: u32) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

// ---------------------------------------------------------------- Sturm ---

struct Sturm(Vec<Poly>);

impl Sturm {
    fn new(p: &Poly) -> Self {
        let normalize = |q: Poly| match q.leading() {
            Some(l) => {
                let s = l.abs().recip();
                q.scale(&s)
            }
            None => q,
        };
        let mut seq = vec![normalize(p.clone()), normalize(p.derivative())];
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).1;
            if r.is_zero() {
                break;
            }
            seq.push(normalize(-&r));
        }
        Sturm(seq)
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for p in &self.0 {
            let s = p.eval(x);
            let s = if s.is_positive() {
                1
            } else if s.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Distinct roots in `(lo, hi]`, for `lo` not a root.
    fn count(&self, lo: &BigRational, hi: &BigRational) -> usize {
        self.variations(lo).saturating_sub(self.variations(hi))
    }
}

/// Isolating interval `[lo, hi]` of the smallest positive root of a
/// square-free `p` with `p(0) ≠ 0`, with relative width at most `2^{-bits}`.
/// Returns `lo == hi` when the root is hit exactly at a dyadic point.
fn smallest_positive_root(p: &Poly, bits: usize) -> Option<(BigRational, BigRational)> {
    let deg = p.degree()?;
    if deg == 0 {
        return None;
    }
    let lead = p.leading()?.abs();
    let cauchy = p.coeffs()[..deg]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |m, c| if c > m { c } else { m })
        + BigRational::one();
    let mut hi = BigRational::one();
    while hi < cauchy {
        hi *= BigRational::from_integer(2.into());
    }
    let sturm = Sturm::new(p);
    let mut lo = BigRational::zero();
    if sturm.count(&lo, &hi) == 0 {
        return None;
    }
    let half = BigRational::new(1.into(), 2.into());
    let eps = BigRational::new(1.into(), BigInt::from(1) << bits);
    loop {
        if lo.is_positive() && &hi - &lo <= &lo * &eps && sturm.count(&lo, &hi) == 1 {
            return Some((lo, hi));
        }
        let mid = (&lo + &hi) * &half;
        let below = sturm.count(&lo, &mid);
        if below >= 1 {
            if below == 1 && p.eval(&mid).is_zero() {
                return Some((mid.clone(), mid));
            }
            hi = mid;
        } else {
            lo = mid;
        }
    }
}

fn companion_roots(p: &Poly) -> Result<Vec<(f64, f64)>> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Ok(Vec::new());
    }
    let lead = p.leading().cloned().unwrap_or_else(BigRational::one);
    let mut m = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        let c = (p.coeff(i) / &lead).to_f64().unwrap_or(f64::NAN);
        if !c.is_finite() {
            return Err(Error::RootIsolation(format!("coefficient of x^{i} overflows f64 screening")));
        }
        m[(i, deg - 1)] = -c;
    }
    Ok(m.complex_eigenvalues().iter().map(|z| (z.re, z.im)).collect())
}

// ------------------------------------------------------- leading term ---

/// Leading-term data for the coefficients of `f(x) / ((x − a)^R g(x))`,
/// where `a` is the unique root of minimum modulus of the denominator.
#[derive(Clone, Debug)]
pub struct AsymptoticEstimate {
    pub root: BigFloat,
    /// Exact rational isolating interval for `a` (degenerate if `a` is dyadic).
    pub root_interval: (BigRational, BigRational),
    pub multiplicity: u32,
    /// `f(a)/g(a)`.
    pub constant: BigFloat,
    pub precision: usize,
}

impl AsymptoticEstimate {
    /// `(−1)^R n^{R−1}/(R−1)! · a^{−n−R} · f(a)/g(a)`.
    pub fn estimate(&self, n: u64) -> BigFloat {
        let p = self.precision + GUARD;
        let r = self.multiplicity;
        let inv = self.root.reciprocal(p, RM);
        let mut v = inv.powi((n + r as u64) as usize, p, RM).mul(&self.constant, p, RM);
        if r > 1 {
            let poly = BigFloat::from_u64(n, p).powi((r - 1) as usize, p, RM);
            let mut cc = consts();
            let fact = int_to_float(&factorial(r - 1), p, &mut cc);
            v = v.mul(&poly, p, RM).div(&fact, p, RM);
        }
        if r % 2 == 1 {
            v = v.neg();
        }
        let _ = v.set_precision(self.precision, RM);
        v
    }

    pub fn root_is_exact(&self) -> bool {
        self.root_interval.0 == self.root_interval.1
    }
}

/// Extracts the leading term of the coefficients of `numerator/denominator`.
///
/// The fraction is reduced first. The smallest positive root of the
/// denominator is isolated exactly; every other root, found numerically,
/// must have strictly larger modulus.
pub fn leading_term(numerator: &Poly, denominator: &Poly, precision: usize) -> Result<AsymptoticEstimate> {
    if denominator.is_zero() || denominator.coeff(0).is_zero() {
        return Err(Error::OutOfHypothesis("denominator must have a nonzero constant term".into()));
    }
    if numerator.is_zero() {
        return Err(Error::OutOfHypothesis("numerator is zero".into()));
    }
    let g = numerator.gcd(denominator);
    let (num, den) = (numerator.div_rem(&g).0, denominator.div_rem(&g).0);
    let factors = den.square_free_factors();
    if factors.is_empty() {
        return Err(Error::RootIsolation("denominator has no roots after reduction".into()));
    }

    // Smallest positive root across the square-free parts.
    let mut best: Option<(usize, (BigRational, BigRational))> = None;
    for (i, (_, f)) in factors.iter().enumerate() {
        if let Some(iv) = smallest_positive_root(f, precision + 8) {
            let better = match &best {
                None => true,
                Some((_, b)) => iv.1 < b.0,
            };
            if better {
                best = Some((i, iv));
            }
        }
    }
    let (idx, interval) = best.ok_or_else(|| Error::RootIsolation("denominator has no positive real root".into()))?;
    let multiplicity = factors[idx].0;

    let mid = (&interval.0 + &interval.1) / BigRational::from_integer(2.into());
    let a64 = mid.to_f64().unwrap_or(f64::NAN);
    let mut skipped_self = false;
    for (i, (_, f)) in factors.iter().enumerate() {
        let mut roots = companion_roots(f)?;
        if i == idx {
            // Drop the eigenvalue standing for `a` itself.
            let j = roots
                .iter()
                .enumerate()
                .min_by(|x, y| {
                    let dx = (x.1 .0 - a64).hypot(x.1 .1);
                    let dy = (y.1 .0 - a64).hypot(y.1 .1);
                    dx.total_cmp(&dy)
                })
                .map(|(j, _)| j);
            if let Some(j) = j {
                roots.remove(j);
                skipped_self = true;
            }
        }
        for (re, im) in roots {
            let m = re.hypot(im);
            if m <= a64 * (1.0 + TIE_TOLERANCE) {
                let what = if im.abs() > TIE_TOLERANCE * a64.max(1.0) {
                    "non-real root"
                } else if re < 0.0 {
                    "negative root"
                } else {
                    "second positive root"
                };
                let kind = if (m - a64).abs() <= TIE_TOLERANCE * a64 { "tied" } else { "smaller" };
                return Err(Error::RootIsolation(format!(
                    "{what} {re:.6}{im:+.6}i has {kind} modulus than a = {a64:.6}"
                )));
            }
        }
    }
    debug_assert!(skipped_self);

    let wp = precision + GUARD;
    let root = if interval.0 == interval.1 {
        rational_to_float(&interval.0, wp)
    } else {
        rational_to_float(&mid, wp)
    };
    let mut dr = den.clone();
    for _ in 0..multiplicity {
        dr = dr.derivative();
    }
    let mut cc = consts();
    let fa = horner(&num, &root, wp);
    let ga = horner(&dr, &root, wp).div(&int_to_float(&factorial(multiplicity), wp, &mut cc), wp, RM);
    if ga.is_zero() {
        return Err(Error::RootIsolation("g(a) vanished at working precision".into()));
    }
    let constant = fa.div(&ga, wp, RM);
    Ok(AsymptoticEstimate {
        root,
        root_interval: interval,
        multiplicity,
        constant,
        precision,
    })
}

// ------------------------------------------------- trigonometric form ---

/// `4cos²(π/(k+1))`, exact for `k+1 ∈ {2,3,4,6}`.
pub fn growth_rate(k: usize, precision: usize) -> BigFloat {
    let p = precision + GUARD;
    let mut v = match k + 1 {
        2 => BigFloat::from_u8(0, p),
        3 => BigFloat::from_u8(1, p),
        4 => BigFloat::from_u8(2, p),
        6 => BigFloat::from_u8(3, p),
        m => {
            let mut cc = consts();
            let angle = cc.pi(p, RM).div(&BigFloat::from_u64(m as u64, p), p, RM);
            let c = angle.cos(p, RM, &mut cc);
            c.mul(&c, p, RM).mul(&BigFloat::from_u8(4, p), p, RM)
        }
    };
    let _ = v.set_precision(precision, RM);
    v
}

/// `(4sin²(π/(k+1))/(k+1))^{r+1} · n^r/r! · (4cos²(π/(k+1)))^{n−r}`.
pub fn asymptotic_count(k: usize, r: usize, n: u64, precision: usize) -> Result<BigFloat> {
    if k < 2 {
        return Err(Error::OutOfHypothesis(format!("k = {k}, need k >= 2")));
    }
    let p = precision + GUARD;
    let c = growth_rate(k, p);
    let s = BigFloat::from_u8(4, p).sub(&c, p, RM);
    let mut cc = consts();
    let base = s.div(&BigFloat::from_u64(k as u64 + 1, p), p, RM);
    let mut v = base.powi(r + 1, p, RM);
    if r > 0 {
        v = v
            .mul(&BigFloat::from_u64(n, p).powi(r, p, RM), p, RM)
            .div(&int_to_float(&factorial(r as u32), p, &mut cc), p, RM);
    }
    let growth = if n >= r as u64 {
        c.powi((n - r as u64) as usize, p, RM)
    } else {
        c.reciprocal(p, RM).powi(r - n as usize, p, RM)
    };
    v = v.mul(&growth, p, RM);
    let _ = v.set_precision(precision, RM);
    Ok(v)
}

// ------------------------------------------------------------- probe ---

#[derive(Clone, Debug)]
pub struct ThetaRow {
    pub n: u64,
    pub exact: BigUint,
    /// [`asymptotic_count`] at this `n`.
    pub estimate: BigFloat,
    /// `exact / (4cos²(π/(k+1)))^n`.
    pub ratio: BigFloat,
}

/// Exact counts of 132-avoiders with exactly `r` occurrences of `12…k` for
/// `n = 1..=n_max`, normalized by the conjectured growth rate. Uses the
/// closed form when `r ≤ k−1` and the enumeration oracle otherwise.
pub fn theta_probe(k: usize, r: usize, n_max: usize) -> Result<Vec<ThetaRow>> {
    theta_probe_with(k, r, n_max, DEFAULT_PRECISION)
}

pub fn theta_probe_with(k: usize, r: usize, n_max: usize, precision: usize) -> Result<Vec<ThetaRow>> {
    if k < 2 {
        return Err(Error::OutOfHypothesis(format!("k = {k}, need k >= 2")));
    }
    if n_max == 0 {
        return Ok(Vec::new());
    }
    let exact: Vec<BigUint> = if r + 1 <= k {
        let s = if r == 0 { gf_avoiders_12k(k, n_max)? } else { gf_exactly_r_12k(k, r, n_max)? };
        let ints = s
            .to_integers()
            .ok_or_else(|| Error::EvaluationMismatch("closed form has non-integral coefficients".into()))?;
        ints.into_iter()
            .map(|c| c.to_biguint().ok_or_else(|| Error::EvaluationMismatch("negative count".into())))
            .collect::<Result<_>>()?
    } else {
        let avoid = [Pattern::new(crate::perm::Permutation::new(vec![1, 3, 2])?)?];
        let stat = Pattern::increasing(k)?;
        let mut v = vec![BigUint::zero()];
        for n in 1..=n_max {
            v.push(census(n, &avoid, &stat)?.count(r as u64));
        }
        v
    };
    let p = precision + GUARD;
    let c = growth_rate(k, p);
    let mut cc = consts();
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let e = int_to_float(&BigInt::from(exact[n].clone()), p, &mut cc);
        let mut ratio = e.div(&c.powi(n, p, RM), p, RM);
        let _ = ratio.set_precision(precision, RM);
        rows.push(ThetaRow {
            n: n as u64,
            exact: exact[n].clone(),
            estimate: asymptotic_count(k, r, n as u64, precision)?,
            ratio,
        });
    }
    Ok(rows)
}

/// CSV with header `n,exact,estimate,ratio`; floats to 20 significant digits.
pub fn theta_csv(rows: &[ThetaRow]) -> String {
    let mut s = String::from("n,exact,estimate,ratio\n");
    for r in rows {
        let _ = writeln!(
            s,
            "{},{},{},{}",
            r.n,
            r.exact,
            format_float(&r.estimate, 20),
            format_float(&r.ratio, 20)
        );
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::q_poly;
    use crate::series::{expand_rational, rat};

    fn f(v: &BigFloat) -> f64 {
        float_to_f64(v)
    }

    #[test]
    fn float_formatting() {
        let v = rational_to_float(&BigRational::new(1.into(), 3.into()), 128);
        assert_eq!(format_float(&v, 5), "0.33333");
        assert_eq!(format_float(&BigFloat::from_u64(1024, 64), 20), "1024");
        assert_eq!(format_float(&BigFloat::from_u64(1024, 64), 2), "1000");
        assert_eq!(format_float(&rational_to_float(&rat(-2), 64), 3), "-2");
        assert_eq!(format_float(&rational_to_float(&BigRational::new(2.into(), 3.into()), 64), 2), "0.67");
        assert_eq!(format_float(&rational_to_float(&BigRational::new(3.into(), 200.into()), 64), 4), "0.015");
        assert_eq!(format_float(&BigFloat::from_u64(1, 64).powi(1, 64, RM).mul(&BigFloat::from_f64(1e30, 64), 64, RM), 3), "1e30");
        assert_eq!(format_float(&BigFloat::from_f64(9.96, 64), 2), "10");
        assert!((f(&v) - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn simple_pole() {
        // 1/(x − 1/3)
        let den = Poly::new(vec![BigRational::new((-1).into(), 3.into()), rat(1)]);
        let est = leading_term(&Poly::one(), &den, 128).unwrap();
        assert_eq!(est.multiplicity, 1);
        let exact = expand_rational(&Poly::one(), &den, 12).unwrap();
        for n in 0..=12u64 {
            let e = f(&est.estimate(n));
            let x = exact.coeff(n as usize).to_f64().unwrap();
            assert!((e / x - 1.0).abs() < 1e-12, "n={n}: {e} vs {x}");
        }
    }

    #[test]
    fn avoiders_k3_exact() {
        let est = leading_term(&Poly::from_ints(&[1, -1]), &Poly::from_ints(&[1, -2]), 128).unwrap();
        assert!(est.root_is_exact());
        for n in 1..60u64 {
            assert_eq!(est.estimate(n), BigFloat::from_u64(1, 256).mul(
                &BigFloat::from_u8(2, 64).powi((n - 1) as usize, 256, RM), 256, RM));
        }
    }

    #[test]
    fn double_pole_relative_error() {
        let num = Poly::from_ints(&[0, 0, 0, 1]);
        let den = Poly::from_ints(&[1, -2]).pow(2);
        let est = leading_term(&num, &den, 128).unwrap();
        assert_eq!(est.multiplicity, 2);
        let exact = expand_rational(&num, &den, 50).unwrap().coeff(50).to_f64().unwrap();
        let rel = (f(&est.estimate(50)) / exact - 1.0).abs();
        assert!(rel < 0.05, "relative error {rel}");
    }

    #[test]
    fn rejects_ties_and_complex_minima() {
        // 1 − x²: roots ±1 tie.
        assert!(matches!(
            leading_term(&Poly::one(), &Poly::from_ints(&[1, 0, -1]), 64),
            Err(Error::RootIsolation(_))
        ));
        // (1 + x²)(1 − 2x): a = 1/2 but ±i have modulus 1 > 1/2, fine.
        assert!(leading_term(&Poly::one(), &(&Poly::from_ints(&[1, 0, 1]) * &Poly::from_ints(&[1, -2])), 64).is_ok());
        // (1 + 4x²)(1 − x): ±i/2 beat a = 1.
        let den = &Poly::from_ints(&[1, 0, 4]) * &Poly::from_ints(&[1, -1]);
        assert!(matches!(leading_term(&Poly::one(), &den, 64), Err(Error::RootIsolation(_))));
        // 1 + x: no positive root.
        assert!(leading_term(&Poly::one(), &Poly::from_ints(&[1, 1]), 64).is_err());
        assert!(leading_term(&Poly::one(), &Poly::from_ints(&[0, 1]), 64).is_err());
    }

    #[test]
    fn cancellation_before_root_search() {
        // (1 − 3x)/((1 − 3x)(1 − 2x)) reduces to 1/(1 − 2x).
        let num = Poly::from_ints(&[1, -3]);
        let den = &num * &Poly::from_ints(&[1, -2]);
        let est = leading_term(&num, &den, 64).unwrap();
        assert_eq!(est.root_interval.0, BigRational::new(1.into(), 2.into()));
        assert_eq!(f(&est.estimate(10)), 1024.0);
    }

    #[test]
    fn closed_estimate_exact_cases() {
        for n in 0..40u64 {
            assert_eq!(asymptotic_count(3, 0, n, 128).unwrap(), {
                let mut v = BigFloat::from_u8(1, 256).div(&BigFloat::from_u8(2, 256), 256, RM)
                    .mul(&BigFloat::from_u8(2, 256).powi(n as usize, 256, RM), 256, RM);
                let _ = v.set_precision(128, RM);
                v
            });
            assert_eq!(f(&asymptotic_count(2, 0, n, 128).unwrap()), 1.0);
        }
        let exact = gf_avoiders_12k(4, 10).unwrap().coeff(10).to_f64().unwrap();
        let est = f(&asymptotic_count(4, 0, 10, 128).unwrap());
        assert!((est / exact - 1.0).abs() < 0.12);
    }

    #[test]
    fn q_root_matches_trig() {
        for k in 2..=8 {
            let est = leading_term(&q_poly(k - 1), &q_poly(k), 128).unwrap();
            let want = growth_rate(k, 192).reciprocal(192, RM);
            let diff = est.root.sub(&want, 192, RM).abs();
            assert!(f(&diff) < 1e-20, "k={k}");
        }
    }

    #[test]
    fn probe_examples() {
        assert!(theta_probe(3, 0, 0).unwrap().is_empty());
        let rows = theta_probe(3, 0, 12).unwrap();
        let half = BigFloat::from_u8(1, 64).div(&BigFloat::from_u8(2, 64), 64, RM);
        for r in &rows {
            assert_eq!(r.ratio, half);
        }
        let csv = theta_csv(&rows[..2]);
        assert_eq!(csv, "n,exact,estimate,ratio\n1,1,1,0.5\n2,2,2,0.5\n");
        // r ≥ k falls back to enumeration
        let rows = theta_probe(2, 3, 6).unwrap();
        let from_closed = gf_exactly_r_12k(2, 3, 6).unwrap();
        for r in &rows {
            assert_eq!(BigInt::from(r.exact.clone()), from_closed.coeff(r.n as usize).to_integer());
        }
    }
}
