//! Binomial and Catalan numbers.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

/// `C(a, b)`, defined as 0 whenever `a < b`, `a < 0` or `b < 0`.
pub fn binomial(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || a < b {
        return BigUint::zero();
    }
    let b = b.min(a - b) as u64;
    let a = a as u64;
    let mut acc = BigUint::one();
    for i in 0..b {
        acc = acc * (a - i) / (i + 1);
    }
    acc
}

/// Falling-factorial binomial `a(a−1)…(a−b+1)/b!` for `b ≥ 0`, so that
/// `C(−1, 0) = 1` and `C(−1, b) = (−1)^b`.
pub fn binomial_general(a: i64, b: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..b {
        acc = acc * BigInt::from(a - i as i64) / BigInt::from(i + 1);
    }
    acc
}

pub(crate) fn binomial_u64(a: i64, b: i64) -> u64 {
    u64::try_from(binomial(a, b)).expect("binomial exceeds u64")
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n as i64, n as i64) / (n + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial(5, 2), BigUint::from(10u32));
        assert_eq!(binomial(1, 2), BigUint::zero());
        assert_eq!(binomial(-1, 0), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
        assert_eq!(binomial_general(-1, 0), BigInt::one());
        assert_eq!(binomial_general(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_general(2, 3), BigInt::zero());
        assert_eq!(binomial_general(6, 3), BigInt::from(20));
    }

    #[test]
    fn catalan_numbers() {
        let got: Vec<u64> = (0..10).map(|n| u64::try_from(catalan(n)).unwrap()).collect();
        assert_eq!(got, [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862]);
    }
}
