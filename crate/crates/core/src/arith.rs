//! Modular arithmetic on `u64` residues and the additive character `e_n`.
//!
//! Residues are plain `u64` values in `[0, n)`; the modulus travels alongside
//! them. Products go through `u128`, so any modulus up to `2^62` is safe.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest supported modulus.
pub const MAX_MODULUS: u64 = 1 << 62;

pub fn check_modulus(n: u64) -> Result<()> {
    if (2..=MAX_MODULUS).contains(&n) {
        Ok(())
    } else {
        Err(Error::InvalidModulus(n))
    }
}

/// Greatest common divisor. `gcd(0, 0)` is defined as 0.
pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[inline]
pub fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    debug_assert!(a < n && b < n);
    let s = a + b;
    if s >= n {
        s - n
    } else {
        s
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Reduces an arbitrary signed integer into `[0, n)`.
#[inline]
pub fn reduce(u: i64, n: u64) -> u64 {
    (u as i128).rem_euclid(n as i128) as u64
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
pub fn mod_inv(a: u64, n: u64) -> Result<u64> {
    check_modulus(n)?;
    let a = a % n;
    let (mut old_r, mut r) = (a as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotInvertible { a, n });
    }
    Ok(old_s.rem_euclid(n as i128) as u64)
}

/// The representative of `u` modulo `n` lying in `(-n/2, n/2]`.
pub fn centered_residue(u: i64, n: u64) -> i64 {
    let r = reduce(u, n);
    // r > n/2  <=>  2r > n
    if 2 * (r as u128) > n as u128 {
        r as i64 - n as i64
    } else {
        r as i64
    }
}

/// `exp(2 pi i z / n)`, evaluated on the reduced residue so that large `z`
/// do not lose phase precision.
pub fn e_n(z: i64, n: u64) -> Complex64 {
    e_n_residue(reduce(z, n), n)
}

#[inline]
pub fn e_n_residue(r: u64, n: u64) -> Complex64 {
    let theta = TAU * (r as f64 / n as f64);
    let (sin, cos) = theta.sin_cos();
    Complex64::new(cos, sin)
}
