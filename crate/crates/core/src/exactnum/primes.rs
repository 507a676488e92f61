//! Small prime utilities for choosing square-root bases.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The `i`-th prime, 1-based: `nth_prime(1) == 2`.
pub fn nth_prime(i: usize) -> u64 {
    assert!(i >= 1, "primes are indexed from 1");
    let mut seen = 0;
    let mut n = 1u64;
    loop {
        n += 1;
        if is_prime(n) {
            seen += 1;
            if seen == i {
                return n;
            }
        }
    }
}

/// Smallest prime `>= n`.
pub fn prime_at_least(n: u64) -> u64 {
    let mut p = n.max(2);
    while !is_prime(p) {
        p += 1;
    }
    p
}
