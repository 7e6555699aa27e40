//! Non-abelian coverage: the nontrivial cocycle class on the dihedral group
//! of order 8, obtained from a section of its order-16 dihedral cover.
//!
//! D4 = <r, s | r^4 = s^2 = 1, srs = r^-1> has a central extension
//! 1 -> Z/2 -> D8 -> D4 -> 1 with kernel <R^4> in D8 = <R, S | R^8 = S^2 = 1,
//! SRS = R^-1>. The section R^i S^j (0 <= i < 4) yields a 2-cocycle whose
//! class is nontrivial: its twisted algebra is a sum of two 2x2 blocks.

use std::sync::Arc;

use perindex::{
    rep_index, Cocycle, Error, FiniteGroup, GroupRef, TwistedAlgebra,
};

/// Dihedral group of order 2n as a Cayley table over pairs (i, j) = r^i s^j,
/// indexed by 2*i + j. Index 0 is the identity.
fn dihedral_table(n: usize) -> Vec<Vec<usize>> {
    let id = |i: usize, j: usize| 2 * (i % n) + (j % 2);
    let mut table = vec![vec![0usize; 2 * n]; 2 * n];
    for i1 in 0..n {
        for j1 in 0..2 {
            for i2 in 0..n {
                for j2 in 0..2 {
                    // r^i1 s^j1 * r^i2 s^j2
                    let (i, j) = if j1 == 0 {
                        (i1 + i2, j2)
                    } else {
                        (i1 + n - i2, 1 + j2)
                    };
                    table[id(i1, j1)][id(i2, j2)] = id(i % n, j % 2);
                }
            }
        }
    }
    table
}

/// The cocycle on D4 carried by the section R^i S^j of D8 -> D8/<R^4>.
fn d4_spin_cocycle() -> (GroupRef, Cocycle) {
    let d8 = FiniteGroup::from_table(&dihedral_table(8)).expect("D8 is a group");
    let d4 = Arc::new(FiniteGroup::from_table(&dihedral_table(4)).expect("D4 is a group"));

    // Element of D8 indexed by (i, j) with 0 <= i < 8; same scheme for D4
    // with 0 <= i < 4. The section lifts (i, j) to (i, j).
    let lift = |x: usize| -> usize {
        let (i, j) = (x / 2, x % 2);
        2 * i + j
    };
    // Project a D8 element to (D4 element, central exponent).
    let project = |x: usize| -> (usize, u64) {
        let (i, j) = (x / 2, x % 2);
        (2 * (i % 4) + j, (i / 4) as u64)
    };

    let n = d4.order();
    let mut entries = vec![0u64; n * n];
    for x in 0..n {
        for y in 0..n {
            let product = d8.mul(lift(x), lift(y));
            let (base, central) = project(product);
            assert_eq!(base, d4.mul(x, y), "section projects correctly");
            entries[x * n + y] = central;
        }
    }
    let cocycle = Cocycle::from_entries(d4.clone(), 2, entries).expect("valid cocycle");
    (d4, cocycle)
}

#[test]
fn d4_spin_class_has_period_two() {
    let (_, cocycle) = d4_spin_cocycle();
    assert!(cocycle.validate());
    let inv = cocycle.period_bruteforce().unwrap();
    assert_eq!(inv.period, 2);
    assert!(!inv.is_trivial);
}

#[test]
fn d4_twisted_algebra_is_two_matrix_blocks() {
    let (d4, cocycle) = d4_spin_cocycle();
    assert!(!d4.is_abelian());
    assert_eq!(d4.conjugacy_classes().len(), 5);

    let alg = TwistedAlgebra::new(cocycle.clone());
    let regular = alg.alpha_regular_classes().unwrap();
    assert_eq!(regular.len(), 2);

    let profile = alg.decompose_degrees(0).unwrap();
    assert_eq!(profile.entries(), &[(2, 2)]);
    assert_eq!(profile.sum_of_squares(), 8);
    assert_eq!(rep_index(&profile), 2);
}

#[test]
fn abelian_closed_forms_refuse_nonabelian_input() {
    let (_, cocycle) = d4_spin_cocycle();
    assert!(matches!(
        cocycle.period_abelian(),
        Err(Error::Unsupported(_))
    ));
    assert!(matches!(cocycle.radical(), Err(Error::Unsupported(_))));
    assert!(matches!(
        cocycle.antisymmetrize(),
        Err(Error::Unsupported(_))
    ));
}

#[test]
fn d4_trivial_cocycle_matches_character_theory() {
    // Ordinary D4: degrees 1, 1, 1, 1, 2.
    let d4 = Arc::new(FiniteGroup::from_table(&dihedral_table(4)).unwrap());
    let trivial = Cocycle::trivial(d4, 2).unwrap();
    let alg = TwistedAlgebra::new(trivial);
    assert_eq!(alg.alpha_regular_classes().unwrap().len(), 5);
    let profile = alg.decompose_degrees(0).unwrap();
    assert_eq!(profile.entries(), &[(1, 4), (2, 1)]);
}
