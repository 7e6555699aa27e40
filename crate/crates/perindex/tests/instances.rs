//! Exhaustive constructor sweep: every admissible (period, index) pair with
//! index at most 16 certifies cleanly with exact targets.

use perindex::{arith, certify};

fn admissible(m: u64, n: u64) -> bool {
    n % m == 0 && arith::prime_support(m) == arith::prime_support(n)
}

#[test]
fn all_admissible_pairs_up_to_index_16() {
    let mut count = 0usize;
    for n in 1..=16u64 {
        for m in 1..=n {
            if !admissible(m, n) {
                continue;
            }
            let cert = certify(m, n, 0).unwrap_or_else(|e| panic!("certify({m}, {n}): {e}"));
            assert!(
                cert.is_valid(),
                "({m}, {n}) failing checks: {:?}",
                cert.checks.iter().filter(|c| !c.passed).collect::<Vec<_>>()
            );
            assert_eq!(cert.computed_period, Some(m), "period for ({m}, {n})");
            assert_eq!(cert.computed_index, Some(n), "index for ({m}, {n})");
            assert_eq!(cert.instance.table.order() as u64, n * n);
            assert_eq!(
                cert.degree_profile.as_ref().unwrap().entries(),
                &[(n, 1)],
                "profile for ({m}, {n})"
            );
            count += 1;
        }
    }
    assert_eq!(count, 24, "expected 24 admissible pairs with n <= 16");
}
