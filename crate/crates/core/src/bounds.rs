//! Closed-form size envelopes the constructions are measured against. All
//! logarithms are natural.

fn ln(x: f64) -> f64 {
    x.ln()
}

fn lnln(n: u64) -> f64 {
    ln(ln(n as f64))
}

/// `n (ln n)^{5/2} / (sqrt(k) lnln n)`: size envelope of `D = U ∪ W`.
pub fn dominating_envelope(n: u64, k: usize) -> f64 {
    let nf = n as f64;
    nf * ln(nf).powf(2.5) / ((k as f64).sqrt() * lnln(n))
}

/// `n^2 (ln n)^4 / (|S| |primes|^2 (lnln n)^2)`: bound on the exceptional set.
pub fn exceptional_bound(n: u64, s: usize, prime_count: usize) -> f64 {
    let nf = n as f64;
    let p = prime_count as f64;
    nf * nf * ln(nf).powi(4) / (s as f64 * p * p * lnln(n).powi(2))
}

/// `L (ln n)^2 / lnln n`: bound on the exponential sums over `W`.
pub fn expsum_bound(n: u64, l: u64) -> f64 {
    l as f64 * ln(n as f64).powi(2) / lnln(n)
}

/// `n^2 (ln n)^5 / (k^2 (lnln n)^2)`: size envelope of the universal 2-dominating set.
pub fn two_dominating_envelope(n: u64, k: usize) -> f64 {
    let nf = n as f64;
    let kf = k as f64;
    nf * nf * ln(nf).powi(5) / (kf * kf * lnln(n).powi(2))
}

/// `psi n (ln n)^3 / (sqrt(k) lnln n)`: size budget of the almost-dominating set.
pub fn almost_dominating_budget(n: u64, k: usize, psi: f64) -> f64 {
    let nf = n as f64;
    psi * nf * ln(nf).powi(3) / ((k as f64).sqrt() * lnln(n))
}

/// `n ln n / k`: order of the randomized construction.
pub fn random_envelope(n: u64, k: usize) -> f64 {
    n as f64 * ln(n as f64) / k as f64
}

/// `(ln(k+2) + 1) n / (k+1)`: the set-cover guarantee of greedy on closed
/// neighbourhoods of size `k + 1`.
pub fn greedy_guarantee(n: u64, k: usize) -> f64 {
    let kf = k as f64;
    (ln(kf + 2.0) + 1.0) * n as f64 / (kf + 1.0)
}

/// `(ln n)^5 / (lnln n)^2`: chord counts below this make the dominating
/// envelope exceed `n`, up to the unknown constant.
pub fn nontrivial_chord_threshold(n: u64) -> f64 {
    ln(n as f64).powi(5) / lnln(n).powi(2)
}

/// The envelope a method's output size is compared against.
pub fn method_envelope(method: crate::Method, n: u64, k: usize, psi: f64) -> f64 {
    use crate::Method::*;
    match method {
        Paper => dominating_envelope(n, k),
        Greedy | Random => random_envelope(n, k),
        Universal2 => two_dominating_envelope(n, k),
        AlmostW => almost_dominating_budget(n, k, psi),
    }
}
