//! Small number-theoretic helpers used throughout the crate.

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0u32;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_support(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn pow_u64(base: u64, exp: u32) -> u64 {
    let mut out = 1u64;
    for _ in 0..exp {
        out = out.checked_mul(base).expect("power overflows u64");
    }
    out
}

/// Exact integer square root, `None` if `n` is not a perfect square.
pub fn isqrt_exact(n: u64) -> Option<u64> {
    if n == 0 {
        return Some(0);
    }
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    if r * r == n {
        Some(r)
    } else {
        None
    }
}

/// All divisors of `n`, ascending.
pub fn divisors_sorted(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Multiplicative order of `v` in Z/`n`, i.e. the least k >= 1 with k*v = 0 mod n.
pub fn additive_order(v: u64, n: u64) -> u64 {
    debug_assert!(n >= 1);
    n / gcd(v % n, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(0, 5), 5);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(1, 1), 1);
    }

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
        assert_eq!(prime_support(24), vec![2, 3]);
    }

    #[test]
    fn isqrt_cases() {
        assert_eq!(isqrt_exact(0), Some(0));
        assert_eq!(isqrt_exact(1), Some(1));
        assert_eq!(isqrt_exact(576), Some(24));
        assert_eq!(isqrt_exact(20), None);
    }

    #[test]
    fn divisors_of_12() {
        assert_eq!(divisors_sorted(12), vec![1, 2, 3, 4, 6, 12]);
    }

    #[test]
    fn additive_orders() {
        assert_eq!(additive_order(0, 4), 1);
        assert_eq!(additive_order(1, 4), 4);
        assert_eq!(additive_order(2, 4), 2);
        assert_eq!(additive_order(6, 4), 2);
    }
}
