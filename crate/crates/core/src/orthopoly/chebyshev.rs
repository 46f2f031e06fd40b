//! Chebyshev polynomials of the second kind and the `q_n` normalization
//! `q_n(x) = x^{n/2} U_n(1/(2√x))`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::combinat::binomial;
use crate::poly::Poly;
use crate::series::HalfPowerSeries;

/// `q₀ = q₁ = 1`, `q_{n+1} = q_n − x q_{n−1}`.
pub fn q_poly(n: usize) -> Poly {
    let (mut a, mut b) = (Poly::one(), Poly::one());
    for _ in 1..n {
        let next = &b - &a.mul_x_pow(1);
        a = b;
        b = next;
    }
    b
}

/// Signed coefficients of `U_n(z) = Σ_j (−1)^j C(n−j, j) (2z)^{n−2j}`, as
/// `(n − 2j, coefficient of (2z)^{n−2j})`.
fn explicit_terms(n: usize) -> impl Iterator<Item = (usize, BigInt)> {
    (0..=n / 2).map(move |j| {
        let c = BigInt::from(binomial((n - j) as i64, j as i64));
        (n - 2 * j, if j % 2 == 0 { c } else { -c })
    })
}

/// `U_n(z)` from the explicit sum.
pub fn chebyshev_u(n: usize) -> Poly {
    let mut v = vec![BigRational::from_integer(0.into()); n + 1];
    for (e, c) in explicit_terms(n) {
        v[e] = BigRational::from_integer(c * (BigInt::from(1) << e));
    }
    Poly::new(v)
}

/// `U_n(1/(2t))` as a Laurent polynomial in `t`, from the explicit sum.
pub fn u_at_inverse_2t(n: usize, rel_prec: usize) -> HalfPowerSeries {
    let lowest = -(n as i64);
    let mut v = vec![BigRational::from_integer(0.into()); n + 1];
    for (e, c) in explicit_terms(n) {
        // (2z)^e = t^{−e}
        v[(-(e as i64) - lowest) as usize] = BigRational::from_integer(c);
    }
    HalfPowerSeries::new(lowest, v, rel_prec.max(n + 1))
}
