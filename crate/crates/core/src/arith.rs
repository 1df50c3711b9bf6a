//! Small integer helpers: gcd, primality, prime divisors.

use serde::{Deserialize, Serialize};

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Sorted set of distinct primes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.binary_search(&p).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.0.iter().copied()
    }
}

/// Prime divisors of `n`; empty for `n = 1`.
pub fn prime_divisors(mut n: u64) -> PrimeSet {
    assert!(n >= 1, "prime_divisors requires n >= 1");
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    PrimeSet(out)
}

/// Result of a prime-power test on a positive integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PrimePower {
    /// `n = 1`: the trivial group is a p-group for no particular p.
    Trivial,
    Prime(u64),
}

/// Returns `Some(Prime(p))` when `n = p^k` with `k >= 1`, `Some(Trivial)` for
/// `n = 1`, and `None` otherwise.
pub fn is_prime_power(n: u64) -> Option<PrimePower> {
    assert!(n >= 1, "is_prime_power requires n >= 1");
    if n == 1 {
        return Some(PrimePower::Trivial);
    }
    let primes = prime_divisors(n);
    match primes.as_slice() {
        [p] => Some(PrimePower::Prime(*p)),
        _ => None,
    }
}
