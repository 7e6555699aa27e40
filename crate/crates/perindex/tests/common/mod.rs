//! Shared test corpus: deterministic seeded bilinear cocycles over small
//! abelian groups (orders <= 64).

// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use perindex::{BilinearForm, Cocycle, FiniteAbelianGroup};

/// (invariant factors, modulus, seed) triples; 51 instances, |G| <= 64.
pub fn corpus_params() -> Vec<(Vec<u64>, u64, u64)> {
    let shapes: Vec<(Vec<u64>, u64)> = vec![
        (vec![2, 2], 2),
        (vec![2, 2], 4),
        (vec![2, 4], 4),
        (vec![4, 4], 4),
        (vec![4, 4], 8),
        (vec![2, 2, 2], 2),
        (vec![3, 3], 3),
        (vec![3, 9], 9),
        (vec![5, 5], 5),
        (vec![7, 7], 7),
        (vec![2, 6], 6),
        (vec![6, 6], 6),
        (vec![2, 2, 4], 4),
        (vec![2, 2, 2, 2], 2),
        (vec![4, 8], 8),
        (vec![8, 8], 8),
        (vec![2, 2, 3, 3], 6),
    ];
    let mut out = Vec::new();
    for (i, (factors, modulus)) in shapes.into_iter().enumerate() {
        for s in 0..3u64 {
            out.push((factors.clone(), modulus, 1000 * (i as u64 + 1) + s));
        }
    }
    out
}

/// Materialized corpus cocycles.
pub fn corpus_cocycles() -> Vec<Cocycle> {
    corpus_params()
        .into_iter()
        .map(|(factors, modulus, seed)| {
            let group = FiniteAbelianGroup::new(factors).expect("valid factors");
            BilinearForm::random(group, modulus, seed)
                .expect("well-defined form")
                .cocycle()
                .expect("valid cocycle")
        })
        .collect()
}

/// The admissible (period, index) pairs exercised end to end.
pub const TARGET_PAIRS: [(u64, u64); 11] = [
    (2, 2),
    (2, 4),
    (2, 8),
    (2, 16),
    (3, 3),
    (3, 9),
    (4, 4),
    (4, 8),
    (6, 6),
    (6, 12),
    (12, 24),
];
