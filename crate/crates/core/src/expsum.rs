//! Exponential sums `sum_{w in W} e_n(a w)` and the audit of their maximum
//! over nonzero `a` against `L (ln n)^2 / lnln n`.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::arith::{centered_residue, e_n_residue, mod_inv, mul_mod};
use crate::bounds::expsum_bound;
use crate::construct::{build_w, WSet};
use crate::error::{Error, Result};
use crate::primes::PrimeWindow;

/// Default largest `n` accepted by [`expsum_audit`]; the scan costs `n |W|`.
pub const DEFAULT_AUDIT_CAP: u64 = 1 << 14;

/// Direct summation, one trigonometric evaluation per term.
pub fn exp_sum_w(w: &WSet, a: u64) -> Complex64 {
    let n = w.n();
    let a = a % n;
    w.elements().iter().map(|x| e_n_residue(mul_mod(a, x, n), n)).sum()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExpSumAudit {
    pub n: u64,
    pub l: u64,
    pub w_size: usize,
    /// `max_{a != 0} |sum_w e_n(a w)|`.
    pub max_abs: f64,
    /// Smallest `a` attaining `max_abs`.
    pub argmax_a: u64,
    pub bound: f64,
    pub ratio: f64,
    /// `sum_{a in Z_n} |S(a)|^2`, which must equal `n |W|`.
    pub parseval_sum: f64,
}

impl ExpSumAudit {
    pub fn parseval_rel_err(&self) -> f64 {
        let expect = self.n as f64 * self.w_size as f64;
        (self.parseval_sum - expect).abs() / expect
    }
}

/// Scans every nonzero `a`, including those sharing a factor with `n`.
pub fn expsum_audit(n: u64, l: u64, cap: u64) -> Result<ExpSumAudit> {
    if n > cap {
        return Err(Error::AuditTooLarge { n, cap });
    }
    let w = build_w(n, l)?;
    let size = w.len() as f64;
    let (max_abs, argmax_a, nonzero_sq) = (1..n)
        .into_par_iter()
        .map(|a| {
            let v = exp_sum_w(&w, a).norm();
            (v, a, v * v)
        })
        .reduce(
            || (f64::NEG_INFINITY, u64::MAX, 0.0),
            |x, y| {
                let best = if y.0 > x.0 || (y.0 == x.0 && y.1 < x.1) { (y.0, y.1) } else { (x.0, x.1) };
                (best.0, best.1, x.2 + y.2)
            },
        );
    let bound = expsum_bound(n, l);
    Ok(ExpSumAudit {
        n,
        l,
        w_size: w.len(),
        max_abs,
        argmax_a,
        bound,
        ratio: max_abs / bound,
        parseval_sum: nonzero_sq + size * size,
    })
}

/// `(l, rho_n(a / l))` for every prime of the window.
pub fn centered_profile(n: u64, a: u64, window: &PrimeWindow) -> Result<Vec<(u64, i64)>> {
    window
        .primes()
        .iter()
        .map(|&p| {
            let ratio = mul_mod(a % n, mod_inv(p % n, n)?, n);
            Ok((p, centered_residue(ratio as i64, n)))
        })
        .collect()
}

/// Groups a profile into bands `e^j <= |rho| < e^{j+1}`; returns `(j, count)`
/// pairs in increasing `j`. A zero `rho` falls in band `-1`.
pub fn dyadic_histogram(profile: &[(u64, i64)]) -> Vec<(i32, usize)> {
    let mut bands = std::collections::BTreeMap::new();
    for &(_, rho) in profile {
        let j = if rho == 0 { -1 } else { (rho.unsigned_abs() as f64).ln().floor() as i32 };
        *bands.entry(j).or_insert(0) += 1;
    }
    bands.into_iter().collect()
}
