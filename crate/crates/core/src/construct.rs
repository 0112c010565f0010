//! The modular-ratio set `W = { k/l mod n : 1 <= k <= L, l prime in [L+1, 2L], gcd(l, n) = 1 }`
//! and the constructions built on it:
//!
//! * [`construct_dominating`]: `D = U ∪ W`, where `U` holds the vertices
//!   that `W + S` misses, with `L = ceil(lambda)` balancing `|W|` against the
//!   bound on `|U|`;
//! * [`construct_universal_2dom`]: a single `W` that 2-dominates every
//!   circulant graph with at least `k` chords;
//! * [`almost_dominating_w`]: a single `W` that covers all but a vanishing
//!   fraction of every such graph.

use std::time::Instant;

use crate::arith::{add_mod, mod_inv, mul_mod};
use crate::bounds;
use crate::error::{Error, Result};
use crate::graph::{sumset, ChordSet, CirculantSpec};
use crate::primes::{coprime_prime_counts, primes_in_window, PrimeWindow};
use crate::report::{ConstructionParams, DominationReport, Method};
use crate::vertex_set::VertexSet;

/// Smallest `n` the asymptotic constructions accept.
pub const MIN_N: u64 = 16;

const LAMBDA_TOLERANCE: f64 = 1e-9;
const LAMBDA_MAX_ITERATIONS: usize = 200;
/// How many times an empty prime window may be retried with a doubled `L`.
const MAX_WINDOW_DOUBLINGS: usize = 3;

fn require_size(n: u64) -> Result<()> {
    if n < MIN_N {
        Err(Error::DegenerateInstance { n, min: MIN_N })
    } else {
        crate::arith::check_modulus(n)
    }
}

/// `L < 0.5 sqrt(n)`, tested exactly as `4 L^2 < n`.
pub fn card_hypothesis(n: u64, l: u64) -> bool {
    (4 * (l as u128) * (l as u128)) < n as u128
}

/// Largest `L` with `4 L^2 < n`.
pub fn max_card_l(n: u64) -> u64 {
    let mut r = ((n - 1) as f64).sqrt() as u64;
    while r * r > n - 1 {
        r -= 1;
    }
    while (r + 1) * (r + 1) < n {
        r += 1;
    }
    r / 2
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaSolution {
    pub lambda: f64,
    /// `ceil(lambda)`, lowered to `(n-1)/2` when that is smaller.
    pub l: u64,
    /// `|lhs / rhs - 1|` of the balancing equation at `lambda`.
    pub residual: f64,
    pub l_capped: bool,
}

/// Relative defect of
/// `n^2 (ln lambda)^2 (ln n)^4 / (k lambda^2 (lnln n)^2) = lambda^2 / ln lambda`.
pub fn lambda_residual(n: u64, k: usize, lambda: f64) -> f64 {
    let nf = n as f64;
    let (ln_n, ln_l) = (nf.ln(), lambda.ln());
    let lhs = nf * nf * ln_l * ln_l * ln_n.powi(4) / (k as f64 * lambda * lambda * ln_n.ln().powi(2));
    let rhs = lambda * lambda / ln_l;
    (lhs / rhs - 1.0).abs()
}

/// Solves the balancing equation for `lambda` by bisection on the equivalent
/// monotone form `lambda^4 / (ln lambda)^3 = n^2 (ln n)^4 / (k (lnln n)^2)`,
/// working in `x = ln lambda` where it reads `4x - 3 ln x = target`.
pub fn solve_lambda(n: u64, k: usize) -> Result<LambdaSolution> {
    require_size(n)?;
    if k == 0 || k as u64 >= n {
        return Err(Error::InvalidParameter(format!("chord count {k} must lie in [1, n-1] for n = {n}")));
    }
    let ln_n = (n as f64).ln();
    let target = 2.0 * ln_n + 4.0 * ln_n.ln() - (k as f64).ln() - 2.0 * ln_n.ln().ln();
    let h = |x: f64| 4.0 * x - 3.0 * x.ln();

    let mut lo = ln_n / 4.0;
    let mut hi = ln_n;
    debug_assert!(h(lo) < target);
    while h(hi) < target {
        hi *= 2.0;
    }
    for _ in 0..LAMBDA_MAX_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if h(mid) < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    let lambda = (0.5 * (lo + hi)).exp();
    let residual = lambda_residual(n, k, lambda);
    debug_assert!(residual <= LAMBDA_TOLERANCE, "residual {residual}");

    let max_l = (n - 1) / 2;
    let ceil = lambda.ceil() as u64;
    Ok(LambdaSolution {
        lambda,
        l: ceil.min(max_l),
        residual,
        l_capped: ceil > max_l,
    })
}

/// The set `W` for a given `L`, with the prime window that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WSet {
    elements: VertexSet,
    window: PrimeWindow,
}

impl WSet {
    pub fn elements(&self) -> &VertexSet {
        &self.elements
    }

    pub fn window(&self) -> &PrimeWindow {
        &self.window
    }

    pub fn l(&self) -> u64 {
        self.window.l()
    }

    pub fn n(&self) -> u64 {
        self.window.n()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn prime_count(&self) -> usize {
        self.window.len()
    }

    /// `L |primes|`, the size before duplicates are merged.
    pub fn predicted_len(&self) -> u64 {
        self.l() * self.prime_count() as u64
    }

    pub fn card_hypothesis(&self) -> bool {
        card_hypothesis(self.n(), self.l())
    }
}

/// Builds `W` for parameter `l`. One inversion per prime, then the multiples
/// `k l^{-1}` by repeated addition.
pub fn build_w(n: u64, l: u64) -> Result<WSet> {
    crate::arith::check_modulus(n)?;
    if l == 0 {
        return Err(Error::InvalidParameter("L must be positive".into()));
    }
    let window = primes_in_window(l, n);
    if window.is_empty() {
        return Err(Error::EmptyPrimeWindow { l, n });
    }
    let mut elements = VertexSet::new(n as usize);
    for &p in window.primes() {
        let inv = mod_inv(p % n, n)?;
        let mut acc = 0;
        for _ in 0..l {
            acc = add_mod(acc, inv, n);
            elements.insert(acc);
        }
    }
    Ok(WSet { elements, window })
}

/// The element `k l^{-1} mod n` of `W`.
pub fn w_element(n: u64, k: u64, l: u64) -> Result<u64> {
    Ok(mul_mod(k % n, mod_inv(l % n, n)?, n))
}

/// Vertices not of the form `s + w` with `s ∈ S`, `w ∈ W`.
pub fn exceptional_set(chords: &ChordSet, w: &WSet) -> VertexSet {
    sumset(w.elements(), chords).complement()
}

/// `D = U ∪ W` with `L` from [`solve_lambda`]. Always dominating.
pub fn construct_dominating(spec: &CirculantSpec) -> Result<DominationReport> {
    let n = spec.n();
    require_size(n)?;
    let start = Instant::now();
    let sol = solve_lambda(n, spec.k())?;
    let mut l = sol.l;
    let mut w = build_w(n, l);
    for _ in 0..MAX_WINDOW_DOUBLINGS {
        match w {
            Err(Error::EmptyPrimeWindow { .. }) if 16 * (l as u128) * (l as u128) < n as u128 => {
                l *= 2;
                w = build_w(n, l);
            }
            _ => break,
        }
    }
    let w = w?;
    let u = exceptional_set(spec.chords(), &w);
    let mut d = u.clone();
    d.union_with(w.elements());
    let elapsed = start.elapsed();

    let mut report = DominationReport::new(spec, Method::Paper, d, 1, elapsed);
    report.params = Some(ConstructionParams {
        l,
        prime_count: w.prime_count(),
        w_size: w.len(),
        u_size: Some(u.len()),
        lambda: Some(sol.lambda),
        card_hypothesis: w.card_hypothesis(),
        l_capped: sol.l_capped,
    });
    Ok(report)
}

/// The unspecified absolute constants of the universal 2-dominating
/// construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dom2Constants {
    /// Scale of `L = ceil(c n (ln n)^3 / (k lnln n))`.
    pub c: f64,
    /// Hypothesis `k >= C sqrt(n) (ln n)^3 / lnln n`.
    pub big_c: f64,
    /// Runtime check `|primes| > c0 n (ln n)^2 / (k lnln n)`.
    pub c0: f64,
}

impl Default for Dom2Constants {
    fn default() -> Self {
        Self { c: 1.0, big_c: 1.0, c0: 1.0 }
    }
}

/// Evaluation of every condition the universal 2-dominating construction
/// imposes, for one `(n, k, constants)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Dom2Check {
    pub n: u64,
    pub k: usize,
    pub constants: Dom2Constants,
    pub l: u64,
    /// Window size; only computed when the cardinality hypothesis holds.
    pub prime_count: Option<usize>,
    pub k_threshold: f64,
    pub prime_requirement: f64,
    pub k_ok: bool,
    pub card_ok: bool,
    pub primes_ok: bool,
}

impl Dom2Check {
    pub fn passed(&self) -> bool {
        self.k_ok && self.card_ok && self.primes_ok
    }

    pub fn failure(&self) -> Option<String> {
        let mut reasons = Vec::new();
        if !self.k_ok {
            reasons.push(format!("k = {} is below C sqrt(n) (ln n)^3 / lnln n = {:.6}", self.k, self.k_threshold));
        }
        if !self.card_ok {
            reasons.push(format!("L = {} is not below 0.5 sqrt(n) = {:.6}", self.l, 0.5 * (self.n as f64).sqrt()));
        }
        if self.card_ok && !self.primes_ok {
            reasons.push(format!(
                "|primes| = {} does not exceed c0 n (ln n)^2 / (k lnln n) = {:.6}",
                self.prime_count.unwrap_or(0),
                self.prime_requirement
            ));
        }
        (!reasons.is_empty()).then(|| reasons.join("; "))
    }
}

fn dom2_base(n: u64, k: usize) -> (f64, f64, f64) {
    let nf = n as f64;
    let ln_n = nf.ln();
    let lnln = ln_n.ln();
    let kf = k as f64;
    (
        nf * ln_n.powi(3) / (kf * lnln),
        nf.sqrt() * ln_n.powi(3) / lnln,
        nf * ln_n.powi(2) / (kf * lnln),
    )
}

pub fn dom2_check(n: u64, k: usize, constants: Dom2Constants) -> Result<Dom2Check> {
    require_size(n)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if !(constants.c > 0.0 && constants.big_c >= 0.0 && constants.c0 >= 0.0) {
        return Err(Error::InvalidParameter(format!("invalid constants {constants:?}")));
    }
    let (l_base, k_base, p_base) = dom2_base(n, k);
    let l = ((constants.c * l_base).ceil() as u64).max(1);
    let k_threshold = constants.big_c * k_base;
    let prime_requirement = constants.c0 * p_base;
    let card_ok = card_hypothesis(n, l);
    let prime_count = card_ok.then(|| primes_in_window(l, n).len());
    Ok(Dom2Check {
        n,
        k,
        constants,
        l,
        prime_count,
        k_threshold,
        prime_requirement,
        k_ok: k as f64 >= k_threshold,
        card_ok,
        primes_ok: prime_count.is_some_and(|p| p as f64 > prime_requirement),
    })
}

/// A set `W` that 2-dominates every `C_n(S)` with `|S| >= k`; independent of `S`.
pub fn construct_universal_2dom(n: u64, k: usize, constants: Dom2Constants) -> Result<WSet> {
    let check = dom2_check(n, k, constants)?;
    if let Some(reason) = check.failure() {
        return Err(Error::HypothesisNotMet(reason));
    }
    build_w(n, check.l)
}

/// The constants at the edge of feasibility for one `(n, k)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dom2Calibration {
    /// Largest `L` with `L < 0.5 sqrt(n)`.
    pub l: u64,
    pub prime_count: usize,
    /// Largest `c` whose `L` still satisfies the cardinality hypothesis.
    pub c_max: f64,
    /// The prime check passes for every `c0` strictly below this.
    pub c0_sup: f64,
    /// The `k` hypothesis holds for every `C` up to this.
    pub big_c_max: f64,
}

impl Dom2Calibration {
    /// Constants that pass every check at this `(n, k)`.
    pub fn passing_constants(&self) -> Dom2Constants {
        Dom2Constants {
            c: self.c_max,
            big_c: self.big_c_max * (1.0 - 1e-9),
            c0: self.c0_sup * (1.0 - 1e-9),
        }
    }
}

pub fn calibrate_dom2(n: u64, k: usize) -> Result<Dom2Calibration> {
    require_size(n)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let (l_base, k_base, p_base) = dom2_base(n, k);
    let l = max_card_l(n);
    let mut c_max = l as f64 / l_base;
    while (c_max * l_base).ceil() as u64 > l {
        c_max -= c_max * f64::EPSILON;
    }
    let prime_count = primes_in_window(l, n).len();
    if prime_count == 0 {
        return Err(Error::EmptyPrimeWindow { l, n });
    }
    Ok(Dom2Calibration {
        l,
        prime_count,
        c_max,
        c0_sup: prime_count as f64 / p_base,
        big_c_max: k as f64 / k_base,
    })
}

/// `#{(s, t, w) ∈ S × S × W : s + t + w = u}` by a direct `O(k^2)` loop.
pub fn count_representations(chords: &ChordSet, w: &WSet, u: u64) -> u64 {
    let n = chords.n();
    let s = chords.chords();
    let mut count = 0;
    for &a in s {
        for &b in s {
            // u - a - b mod n
            let target = (u % n + 2 * n - a - b) % n;
            count += w.elements().contains(target) as u64;
        }
    }
    count
}

/// `N(u)` for every `u`, via pair-sum counts convolved with `W`.
pub fn representation_counts(chords: &ChordSet, w: &WSet) -> Vec<u64> {
    let n = chords.n() as usize;
    let mut pairs = vec![0u64; n];
    for &a in chords.chords() {
        for &b in chords.chords() {
            pairs[(a as usize + b as usize) % n] += 1;
        }
    }
    let mut out = vec![0u64; n];
    for shift in w.elements().iter() {
        let shift = shift as usize;
        // out[x + shift] += pairs[x], split at the wrap point.
        let (head, tail) = out.split_at_mut(shift);
        for (o, p) in tail.iter_mut().zip(&pairs[..n - shift]) {
            *o += p;
        }
        for (o, p) in head.iter_mut().zip(&pairs[n - shift..]) {
            *o += p;
        }
    }
    out
}

/// Result of [`almost_dominating_w`].
#[derive(Debug, Clone, PartialEq)]
pub struct AlmostDominating {
    pub w: WSet,
    pub budget: f64,
}

/// A universal `W` of predicted size `L |primes|` at most
/// `psi n (ln n)^3 / (sqrt(k) lnln n)`.
///
/// `L` is bracketed by doubling; inside the bracket the `L` with the largest
/// predicted size within budget wins (ties to the larger `L`). The predicted
/// size is not monotone in `L`, so plain bisection could land on a smaller
/// set than a neighbour and break monotonicity in `psi`.
pub fn almost_dominating_w(n: u64, k: usize, psi: f64) -> Result<AlmostDominating> {
    require_size(n)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let budget = bounds::almost_dominating_budget(n, k, psi);
    if !(budget >= 1.0) {
        return Err(Error::InvalidParameter(format!("size budget {budget} is below 1")));
    }
    let l_cap = n - 1;
    let predicted = |l: u64| l as f64 * primes_in_window(l, n).len() as f64;
    let mut hi = 1;
    while hi < l_cap && predicted(hi) <= budget {
        hi = (2 * hi).min(l_cap);
    }
    let counts = coprime_prime_counts(2 * hi, n);
    let mut best: Option<(u64, u64)> = None;
    for l in 1..=hi {
        let size = l * (counts[2 * l as usize] - counts[l as usize]) as u64;
        if size > 0 && size as f64 <= budget && best.is_none_or(|(_, b)| size >= b) {
            best = Some((l, size));
        }
    }
    let (l, _) = best.ok_or(Error::EmptyPrimeWindow { l: hi, n })?;
    Ok(AlmostDominating { w: build_w(n, l)?, budget })
}

/// Knobs for [`run_method`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MethodOptions {
    pub constants: Dom2Constants,
    pub psi: f64,
    /// Seed of the randomized baseline.
    pub seed: u64,
    /// Chord-count threshold for the universal methods; defaults to `|S|`.
    pub k_threshold: Option<usize>,
    /// Verification radius; defaults to the method's natural radius.
    pub radius: Option<u32>,
}

impl Default for MethodOptions {
    fn default() -> Self {
        Self {
            constants: Dom2Constants::default(),
            psi: 1.0,
            seed: 0,
            k_threshold: None,
            radius: None,
        }
    }
}

/// Runs any construction on `spec` and verifies it.
pub fn run_method(spec: &CirculantSpec, method: Method, opts: &MethodOptions) -> Result<DominationReport> {
    let r = opts.radius.unwrap_or(method.natural_radius());
    if r == 0 {
        return Err(Error::InvalidParameter("radius must be positive".into()));
    }
    let threshold = opts.k_threshold.unwrap_or(spec.k());
    let mut report = match method {
        Method::Paper => construct_dominating(spec)?,
        Method::Greedy => crate::baselines::greedy_dominating(spec),
        Method::Random => crate::baselines::random_dominating(spec, opts.seed),
        Method::Universal2 | Method::AlmostW => {
            let start = Instant::now();
            let w = if method == Method::Universal2 {
                construct_universal_2dom(spec.n(), threshold, opts.constants)?
            } else {
                almost_dominating_w(spec.n(), threshold, opts.psi)?.w
            };
            let elapsed = start.elapsed();
            let mut report = DominationReport::new(spec, method, w.elements().clone(), r, elapsed);
            report.params = Some(ConstructionParams {
                l: w.l(),
                prime_count: w.prime_count(),
                w_size: w.len(),
                u_size: None,
                lambda: None,
                card_hypothesis: w.card_hypothesis(),
                l_capped: false,
            });
            report
        }
    };
    if report.r != r {
        let check = crate::verify::is_dominating(spec, &report.set, r);
        report.r = r;
        report.verified = check.dominated;
        report.uncovered = check.uncovered;
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_examples() {
        // Independent high-precision bisection on lambda^4/(ln lambda)^3 = rhs.
        let sol = solve_lambda(10_000, 64).unwrap();
        assert!((sol.lambda - 923.054_870_773_572_1).abs() < 1e-9 * 923.0, "{}", sol.lambda);
        assert_eq!(sol.l, 924);
        assert!(sol.residual <= 1e-9);
        assert!(!sol.l_capped);
        let wider = solve_lambda(10_000, 256).unwrap();
        assert!((wider.lambda - 624.475_527_652_326_7).abs() < 1e-9 * 624.0);
        assert!(wider.lambda < sol.lambda);
    }

    #[test]
    fn lambda_is_capped_below_half_n() {
        // The root is about 26.8 here, above n.
        let sol = solve_lambda(16, 1).unwrap();
        assert!((sol.lambda - 26.823_653_491_149_96).abs() < 1e-9 * 27.0);
        assert!(sol.residual <= 1e-9);
        assert!(sol.l_capped);
        assert_eq!(sol.l, 7);
    }

    #[test]
    fn lambda_rejects_small_and_bad_k() {
        assert_eq!(solve_lambda(15, 3), Err(Error::DegenerateInstance { n: 15, min: 16 }));
        assert!(matches!(solve_lambda(100, 0), Err(Error::InvalidParameter(_))));
        assert!(matches!(solve_lambda(100, 100), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn lambda_residual_everywhere() {
        for n in [16u64, 17, 100, 1000, 12_345, 1 << 20, 1 << 40, 1 << 62] {
            for k in [1usize, 2, 7, 100, 1000, 1 << 20] {
                if k as u64 >= n {
                    continue;
                }
                let sol = solve_lambda(n, k).unwrap();
                assert!(sol.residual <= 1e-9, "n={n} k={k} residual={}", sol.residual);
                assert!(sol.lambda > (n as f64).powf(0.25));
                assert!(sol.l >= 1 && 2 * sol.l < n);
            }
        }
    }

    #[test]
    fn w_examples() {
        let w = build_w(101, 3).unwrap();
        assert_eq!(w.elements().to_vec(), vec![41, 61, 81]);
        assert_eq!(w.window().primes(), &[5]);
        assert_eq!(w.len(), 3);
        assert!(w.card_hypothesis());
        assert_eq!(build_w(6, 1), Err(Error::EmptyPrimeWindow { l: 1, n: 6 }));
        assert_eq!(w_element(101, 2, 5), Ok(61));
    }

    #[test]
    fn card_hypothesis_boundary() {
        assert!(card_hypothesis(101, 5));
        assert!(!card_hypothesis(100, 5));
        assert_eq!(max_card_l(10_000), 49);
        assert_eq!(max_card_l(10_001), 50);
        assert_eq!(max_card_l(101), 5);
        for n in 2..5000u64 {
            let l = max_card_l(n);
            assert!(l == 0 || card_hypothesis(n, l));
            assert!(!card_hypothesis(n, l + 1));
        }
    }

    #[test]
    fn exceptional_examples() {
        let s = ChordSet::new(5, [1]).unwrap();
        let w = WSet {
            elements: VertexSet::from_members(5, [2]),
            window: primes_in_window(1, 5),
        };
        assert_eq!(exceptional_set(&s, &w).to_vec(), vec![0, 1, 2, 4]);
        let everything = WSet {
            elements: VertexSet::full(5),
            window: primes_in_window(1, 5),
        };
        assert!(exceptional_set(&s, &everything).is_empty());
    }

    #[test]
    fn paper_small_n_is_rejected() {
        let spec = CirculantSpec::from_chords(9, [1, 8]).unwrap();
        assert_eq!(construct_dominating(&spec).unwrap_err(), Error::DegenerateInstance { n: 9, min: 16 });
    }

    #[test]
    fn paper_reports_parameters() {
        let spec = CirculantSpec::from_chords(16, [1, 15]).unwrap();
        let report = construct_dominating(&spec).unwrap();
        assert!(report.verified);
        let p = report.params.clone().unwrap();
        assert_eq!(report.size(), {
            let mut d = VertexSet::new(16);
            let w = build_w(16, p.l).unwrap();
            d.union_with(w.elements());
            d.union_with(&exceptional_set(spec.chords(), &w));
            d.len()
        });
        assert!(p.u_size.unwrap() + p.w_size >= report.size());
    }

    #[test]
    fn representations_small() {
        let s = ChordSet::new(5, [1]).unwrap();
        let w = WSet {
            elements: VertexSet::from_members(5, [2]),
            window: primes_in_window(1, 5),
        };
        let all = representation_counts(&s, &w);
        assert_eq!(all, vec![0, 0, 0, 0, 1]);
        for u in 0..5 {
            assert_eq!(count_representations(&s, &w, u), all[u as usize]);
        }
    }

    #[test]
    fn universal_2dom_default_constants_fail_at_desk_scale() {
        // L = ceil(n (ln n)^3 / (k lnln n)) is about 1760, far above 0.5 sqrt(n) = 50.
        let err = construct_universal_2dom(10_000, 2000, Dom2Constants::default()).unwrap_err();
        assert!(matches!(err, Error::HypothesisNotMet(_)));
        let err = construct_universal_2dom(10_000, 50, Dom2Constants::default()).unwrap_err();
        let Error::HypothesisNotMet(msg) = err else { panic!() };
        assert!(msg.contains("0.5 sqrt(n)"), "{msg}");
    }

    #[test]
    fn calibrated_constants_pass() {
        let cal = calibrate_dom2(10_000, 2000).unwrap();
        assert_eq!(cal.l, 49);
        assert_eq!(cal.prime_count, 10);
        let consts = cal.passing_constants();
        let check = dom2_check(10_000, 2000, consts).unwrap();
        assert!(check.passed(), "{:?}", check.failure());
        assert_eq!(check.l, 49);
        let a = construct_universal_2dom(10_000, 2000, consts).unwrap();
        let b = construct_universal_2dom(10_000, 2000, consts).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 490);
        let worse = Dom2Constants { c0: cal.c0_sup * 1.01, ..consts };
        assert!(!dom2_check(10_000, 2000, worse).unwrap().primes_ok);
    }

    #[test]
    fn almost_w_respects_budget_and_grows_with_psi() {
        let mut last = 0;
        for psi in [1e-4, 2e-4, 1e-3, 1e-2, 0.1, 1.0, 2.0] {
            let a = almost_dominating_w(10_000, 400, psi).unwrap();
            assert!(a.w.len() as f64 <= a.budget);
            assert!(a.w.predicted_len() as f64 <= a.budget);
            assert!(a.w.len() >= last, "psi={psi}");
            last = a.w.len();
        }
    }
}
