//! Exact minrank against a plain enumeration of every fitting matrix.

use std::collections::BTreeSet;

use indexcode_core::{minrank_with, IndexCodingProblem, MinrankOptions};
use proptest::prelude::*;

/// Rank of a GF(2) matrix given as u32 row masks.
fn rank(mut rows: Vec<u32>) -> usize {
    let mut r = 0;
    for bit in 0..32 {
        let Some(i) = (r..rows.len()).find(|&i| rows[i] >> bit & 1 == 1) else {
            continue;
        };
        rows.swap(r, i);
        let pivot = rows[r];
        for (j, row) in rows.iter_mut().enumerate() {
            if j != r && *row >> bit & 1 == 1 {
                *row ^= pivot;
            }
        }
        r += 1;
    }
    r
}

/// Enumerates all 2^free fitting matrices and returns the least rank.
fn brute_force(k: usize, known: &[Vec<usize>]) -> usize {
    let slots: Vec<(usize, usize)> = known
        .iter()
        .enumerate()
        .flat_map(|(i, js)| js.iter().map(move |&j| (i, j)))
        .collect();
    let mut best = k;
    for assignment in 0u32..(1 << slots.len()) {
        let mut rows: Vec<u32> = (0..k).map(|i| 1 << i).collect();
        for (b, &(i, j)) in slots.iter().enumerate() {
            if assignment >> b & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        best = best.min(rank(rows));
    }
    best
}

/// Known messages per receiver (0-based), computed from offsets directly.
fn known(k: usize, offsets: &[BTreeSet<usize>]) -> Vec<Vec<usize>> {
    offsets
        .iter()
        .enumerate()
        .map(|(i, set)| set.iter().map(|a| (i + a) % k).collect())
        .collect()
}

fn exact(p: &IndexCodingProblem, early_exit: bool) -> usize {
    minrank_with(
        p,
        MinrankOptions {
            max_free_bits: 24,
            early_exit,
        },
    )
    .value()
    .unwrap()
}

fn small_problem() -> impl Strategy<Value = IndexCodingProblem> {
    (2usize..=6).prop_flat_map(|k| {
        prop::collection::vec(prop::collection::btree_set(1..k, 0..=2), k)
            .prop_map(move |sets| IndexCodingProblem::per_receiver(k, sets).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn search_matches_enumeration(p in small_problem()) {
        let want = brute_force(p.k(), &known(p.k(), p.offset_sets()));
        prop_assert_eq!(exact(&p, false), want);
        prop_assert_eq!(exact(&p, true), want);
    }

    #[test]
    fn more_side_information_never_hurts(p in small_problem(), receiver in 0usize..6, offset in 1usize..6) {
        let k = p.k();
        let mut sets = p.offset_sets().to_vec();
        if offset < k {
            sets[receiver % k].insert(offset);
        }
        let richer = IndexCodingProblem::per_receiver(k, sets).unwrap();
        prop_assert!(exact(&richer, false) <= exact(&p, false));
    }
}

#[test]
fn uniform_patterns_match_enumeration() {
    for k in 2..=7 {
        for mask in 0u32..(1 << (k - 1)) {
            let offsets: BTreeSet<usize> = (1..k).filter(|a| mask >> (a - 1) & 1 == 1).collect();
            if offsets.len() * k > 16 {
                continue;
            }
            let p = IndexCodingProblem::uniform(k, offsets.clone()).unwrap();
            let sets = vec![offsets; k];
            assert_eq!(
                exact(&p, false),
                brute_force(k, &known(k, &sets)),
                "K={k} mask={mask:b}"
            );
        }
    }
}

#[test]
fn consecutive_window_is_k_minus_d() {
    // {1..D}: optimal length K - D
    for k in 2..=6 {
        for d in 1..k {
            let p = IndexCodingProblem::uniform(k, 1..=d).unwrap();
            if p.free_bits() <= 20 {
                assert_eq!(exact(&p, false), k - d, "K={k} D={d}");
            }
        }
    }
}
