#![allow(dead_code)]

use num_rational::BigRational;
use patterngf::path::{HeightWeights, LatticePath, Step};
use proptest::prelude::*;

/// Closed Dyck path of semilength `n` steered by `bits`: forced moves at the
/// floor and when the up-steps are used up, free choice otherwise.
pub fn dyck_from_bits(n: usize, bits: &[bool]) -> LatticePath {
    let (mut h, mut ups) = (0usize, 0usize);
    let mut steps = Vec::with_capacity(2 * n);
    for i in 0..2 * n {
        let up = if h == 0 {
            true
        } else if ups == n {
            false
        } else {
            bits[i]
        };
        if up {
            h += 1;
            ups += 1;
            steps.push(Step::Up);
        } else {
            h -= 1;
            steps.push(Step::Down);
        }
    }
    LatticePath::new(0, steps).unwrap()
}

pub fn dyck_path(max_n: usize) -> impl Strategy<Value = LatticePath> {
    (0..=max_n).prop_flat_map(|n| proptest::collection::vec(any::<bool>(), 2 * n).prop_map(move |b| dyck_from_bits(n, &b)))
}

pub fn small_rational() -> impl Strategy<Value = BigRational> {
    (-4i64..=4, 1i64..=4).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

pub fn weight_table(len: usize) -> impl Strategy<Value = HeightWeights> {
    proptest::collection::vec(small_rational(), len).prop_map(|v| HeightWeights::from_values(0, v))
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}
