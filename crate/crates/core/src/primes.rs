//! Prime windows `[L+1, 2L]` and small factorization helpers.

use crate::arith::gcd;

/// The primes in `[L+1, 2L]` that are coprime to `n`, in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeWindow {
    l: u64,
    n: u64,
    primes: Vec<u64>,
}

impl PrimeWindow {
    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }
}

/// Primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let limit = limit as usize;
    let mut composite = vec![false; limit + 1];
    let mut out = Vec::new();
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    out
}

fn isqrt(x: u64) -> u64 {
    let mut r = (x as f64).sqrt() as u64;
    while r * r > x {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= x {
        r += 1;
    }
    r
}

/// Segmented sieve over `[lo, hi]`.
pub fn primes_in_range(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let lo = lo.max(2);
    let len = (hi - lo + 1) as usize;
    let mut composite = vec![false; len];
    for p in primes_up_to(isqrt(hi)) {
        let mut m = (p * p).max(lo.div_ceil(p) * p);
        while m <= hi {
            composite[(m - lo) as usize] = true;
            m += p;
        }
    }
    composite
        .iter()
        .enumerate()
        .filter(|(_, &c)| !c)
        .map(|(i, _)| lo + i as u64)
        .collect()
}

/// The prime window of the construction for parameter `l` and modulus `n`.
pub fn primes_in_window(l: u64, n: u64) -> PrimeWindow {
    assert!(l >= 1, "window parameter must be positive");
    let primes = primes_in_range(l + 1, 2 * l)
        .into_iter()
        .filter(|&p| gcd(p, n) == 1)
        .collect();
    PrimeWindow { l, n, primes }
}

/// Distinct prime divisors of `n`, increasing.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Number of distinct primes dividing `n`.
pub fn distinct_prime_divisors(n: u64) -> usize {
    prime_divisors(n).len()
}

/// `counts[x]` is the number of primes `<= x` that are coprime to `n`, for
/// `x` in `0..=limit`. The window size for parameter `L` is then
/// `counts[2L] - counts[L]`.
pub fn coprime_prime_counts(limit: u64, n: u64) -> Vec<u32> {
    let mut counts = vec![0u32; limit as usize + 1];
    let mut primes = primes_up_to(limit).into_iter().filter(|&p| n % p != 0).peekable();
    let mut c = 0;
    for (x, slot) in counts.iter_mut().enumerate() {
        if primes.next_if_eq(&(x as u64)).is_some() {
            c += 1;
        }
        *slot = c;
    }
    counts
}
