mod common;

use std::collections::BTreeSet;

use common::dyck_path;
use patterngf::bijection::{convert_123_to_132, phi, phi_inverse, phi_via_minima, psi, psi_inverse};
use patterngf::combinat::catalan;
use patterngf::path::{enumerate_paths, weight_w1, weight_w2, PathKind};
use patterngf::perm::{avoids, count_occurrences, find_occurrence};
use patterngf::{Error, Pattern, Permutation};
use num_bigint::BigUint;
use proptest::prelude::*;

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

/// Longest increasing subsequence starting at position `j`.
fn longest_increasing_from(v: &[u32], j: usize) -> usize {
    let mut best = vec![1usize; v.len()];
    for a in (0..v.len()).rev() {
        for b in a + 1..v.len() {
            if v[b] > v[a] {
                best[a] = best[a].max(best[b] + 1);
            }
        }
    }
    best[j]
}

#[test]
fn bijective_onto_dyck_paths_up_to_ten() {
    // Every closed Dyck path pulls back to a distinct avoider and round trips.
    for n in 0..=10 {
        let paths: Vec<_> = enumerate_paths(2 * n, PathKind::Dyck, None, 0, 0).unwrap().collect();
        assert_eq!(BigUint::from(paths.len()), catalan(n as u64));
        let (mut via_phi, mut via_psi) = (BTreeSet::new(), BTreeSet::new());
        for p in &paths {
            let a = phi_inverse(p).unwrap();
            assert!(avoids(&a, &pat("132")), "{a}");
            assert_eq!(&phi(&a).unwrap(), p);
            assert_eq!(&phi_via_minima(&a).unwrap(), p);
            assert!(via_phi.insert(a.values().to_vec()));
            let b = psi_inverse(p).unwrap();
            assert!(avoids(&b, &pat("123")), "{b}");
            assert_eq!(&psi(&b).unwrap(), p);
            assert!(via_psi.insert(b.values().to_vec()));
            assert_eq!(convert_123_to_132(&b).unwrap(), a);
        }
    }
}

#[test]
fn avoider_counts_agree_for_123_and_132() {
    for n in 0..=9 {
        let (mut a, mut b) = (0u64, 0u64);
        for p in Permutation::all(n) {
            a += avoids(&p, &pat("123")) as u64;
            b += avoids(&p, &pat("132")) as u64;
        }
        assert_eq!(a, b);
        assert_eq!(BigUint::from(a), catalan(n as u64));
    }
}

#[test]
fn down_steps_match_maximal_increasing_runs() {
    // A down-step from height i belongs to an element starting a maximal
    // increasing subsequence of length i.
    for n in 1..=8 {
        for pi in Permutation::all(n).filter(|p| avoids(p, &pat("132"))) {
            let v = pi.values();
            let heights = phi(&pi).unwrap().down_step_heights();
            for (j, &h) in heights.iter().enumerate() {
                let witness: Vec<u32> = std::iter::once(v[j]).chain(v[j + 1..].iter().copied().filter(|&x| x > v[j])).collect();
                assert!(witness.windows(2).all(|w| w[0] < w[1]), "{pi}: {witness:?} not increasing");
                assert_eq!(witness.len(), h as usize, "{pi} at {j}");
                assert_eq!(longest_increasing_from(v, j), h as usize, "{pi} at {j}");
            }
        }
    }
}

#[test]
fn peaks_match_maximal_descent_then_max() {
    // Peaks of psi(pi), left to right, sit at height 1 + (number of smaller
    // elements left of the corresponding right-to-left maximum); those
    // elements and the maximum form a maximal occurrence of (i-1)..1i.
    for n in 1..=8 {
        for pi in Permutation::all(n).filter(|p| avoids(p, &pat("123"))) {
            let v = pi.values();
            let peaks: Vec<u32> = psi(&pi).unwrap().peaks().into_iter().map(|(_, h)| h).collect();
            let maxima = pi.right_to_left_maxima();
            assert_eq!(peaks.len(), maxima.len(), "{pi}");
            for (&h, &(pos, m)) in peaks.iter().zip(&maxima) {
                let mut occ: Vec<u32> = v[..pos].iter().copied().filter(|&x| x < m).collect();
                assert_eq!(occ.len() + 1, h as usize, "{pi}: maximum {m}");
                occ.push(m);
                let occ = Permutation::new(standardize(&occ)).unwrap();
                assert_eq!(occ.values(), Pattern::descent_then_max(h as usize).unwrap().values(), "{pi}");
            }
        }
    }
}

fn standardize(v: &[u32]) -> Vec<u32> {
    let mut sorted = v.to_vec();
    sorted.sort_unstable();
    v.iter().map(|x| sorted.binary_search(x).unwrap() as u32 + 1).collect()
}

#[test]
fn rejects_forbidden_inputs_with_witness() {
    for pi in Permutation::all(6).filter(|p| !avoids(p, &pat("132"))) {
        match phi(&pi) {
            Err(Error::ContainsPattern { positions, .. }) => {
                let w: Vec<u32> = positions.iter().map(|&i| pi.values()[i - 1]).collect();
                assert_eq!(standardize(&w), vec![1, 3, 2]);
            }
            other => panic!("{pi}: {other:?}"),
        }
        assert!(phi_via_minima(&pi).is_err());
    }
    for pi in Permutation::all(6).filter(|p| !avoids(p, &pat("123"))) {
        assert!(matches!(psi(&pi), Err(Error::ContainsPattern { .. })));
        assert!(find_occurrence(&pi, &pat("123")).is_some());
    }
}

proptest! {
    #[test]
    fn statistics_transport_through_both_maps(p in dyck_path(12), k in 2usize..=6) {
        let a = phi_inverse(&p).unwrap();
        prop_assert_eq!(count_occurrences(&a, &Pattern::increasing(k).unwrap()), weight_w1(k, &p));
        let b = psi_inverse(&p).unwrap();
        prop_assert_eq!(count_occurrences(&b, &Pattern::descent_then_max(k).unwrap()), weight_w2(k, &p));
    }

    #[test]
    fn round_trips_on_random_paths(p in dyck_path(14)) {
        let a = phi_inverse(&p).unwrap();
        prop_assert_eq!(phi(&a).unwrap(), p.clone());
        prop_assert_eq!(phi_via_minima(&a).unwrap(), p.clone());
        prop_assert_eq!(psi(&psi_inverse(&p).unwrap()).unwrap(), p);
    }
}
