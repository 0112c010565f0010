//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use circdom_cli::commands::audit::nu_line;
use circdom_core::bounds::{dominating_envelope, exceptional_bound};
use circdom_core::construct::{card_hypothesis, max_card_l};
use circdom_core::graph::random_chords;
use circdom_core::rng::{chord_rng, trial_rng};
use circdom_core::verify::closed_lower_bound;
use circdom_core::*;
use rand::Rng;
use rayon::prelude::*;

const ENVELOPE_RATIO_MAX: f64 = 16.0;
const PARSEVAL_TOL: f64 = 1e-6;
const SCALING_FACTOR_MAX: f64 = 2.5;
const CORRECTNESS_TIME_LIMIT: Duration = Duration::from_secs(300);
const AUDIT_TIME_LIMIT: Duration = Duration::from_secs(600);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

struct Instance {
    n: u64,
    k: usize,
    report: DominationReport,
}

/// 500 instances, `n` log-spaced over `[16, 10^5]`, `k` uniform in `[1, min(n-1, 1000)]`.
fn correctness_grid() -> (Vec<Instance>, Duration) {
    const COUNT: u64 = 500;
    let start = Instant::now();
    let grid: Vec<Instance> = (0..COUNT)
        .into_par_iter()
        .map(|i| {
            let t = i as f64 / (COUNT - 1) as f64;
            let n = (16.0 * (1e5f64 / 16.0).powf(t)).round() as u64;
            let k_max = (n - 1).min(1000) as usize;
            let k = trial_rng(1, i).random_range(1..=k_max);
            let spec = CirculantSpec::new(random_chords(n, k, &mut chord_rng(2, i)).unwrap()).unwrap();
            let report = construct_dominating(&spec).unwrap();
            Instance { n, k, report }
        })
        .collect();
    (grid, start.elapsed())
}

fn criterion_1(grid: &[Instance], elapsed: Duration) -> Outcome {
    let ok = grid.iter().filter(|g| g.report.verified).count();
    outcome(
        ok == grid.len() && elapsed < CORRECTNESS_TIME_LIMIT,
        format!(
            "{ok}/{} dominating, {:.1} s (limit {} s)",
            grid.len(),
            elapsed.as_secs_f64(),
            CORRECTNESS_TIME_LIMIT.as_secs()
        ),
    )
}

fn criterion_2() -> Outcome {
    let ns = [101u64, 210, 256, 997, 1009, 2310, 4096, 10_007, 30_030, 65_536, 99_991, 100_000];
    let (mut checked, mut failures, mut empty) = (0, 0, 0);
    for &n in &ns {
        let top = max_card_l(n);
        let mut ls: Vec<u64> = [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144].into_iter().filter(|&l| l <= top).collect();
        ls.push(top);
        ls.dedup();
        for l in ls {
            assert!(card_hypothesis(n, l));
            match build_w(n, l) {
                Ok(w) => {
                    checked += 1;
                    failures += (w.len() != l as usize * w.prime_count()) as usize;
                }
                Err(Error::EmptyPrimeWindow { .. }) => empty += 1,
                Err(e) => panic!("{e}"),
            }
        }
    }
    outcome(
        checked >= 50 && failures == 0,
        format!("{checked} (n, L) pairs with L < 0.5 sqrt(n), {failures} mismatches, {empty} empty windows skipped"),
    )
}

fn criterion_3(grid: &[Instance]) -> Outcome {
    let mut max_ratio = 0.0f64;
    let mut arg = (0, 0);
    let mut below_lower = 0;
    for g in grid {
        let ratio = g.report.size() as f64 / dominating_envelope(g.n, g.k);
        if ratio > max_ratio {
            max_ratio = ratio;
            arg = (g.n, g.k);
        }
        below_lower += ((g.report.size() as f64) < closed_lower_bound(g.n, g.k)) as usize;
    }
    outcome(
        max_ratio <= ENVELOPE_RATIO_MAX && below_lower == 0,
        format!(
            "max |D|/envelope = {max_ratio:.4} at (n, k) = {arg:?} (limit {ENVELOPE_RATIO_MAX}); {below_lower} below n/(k+1)"
        ),
    )
}

fn criterion_4(grid: &[Instance]) -> Outcome {
    let mut max_ratio = 0.0f64;
    let mut arg = (0, 0);
    for g in grid {
        let p = g.report.params.as_ref().unwrap();
        let ratio = p.u_size.unwrap() as f64 / exceptional_bound(g.n, g.k, p.prime_count);
        if ratio > max_ratio {
            max_ratio = ratio;
            arg = (g.n, g.k);
        }
    }
    outcome(
        max_ratio <= ENVELOPE_RATIO_MAX,
        format!("max |U|/bound = {max_ratio:.4} at (n, k) = {arg:?} (limit {ENVELOPE_RATIO_MAX})"),
    )
}

fn criterion_5() -> Outcome {
    let ns = [101u64, 210, 1009, 2048, 4096, 9973, 10_007, 16_384];
    let ls = [2u64, 3, 5, 10, 20, 40, 63];
    let start = Instant::now();
    let (mut count, mut failures) = (0, 0);
    let mut max_ratio = 0.0f64;
    let mut max_parseval = 0.0f64;
    for &n in &ns {
        for &l in &ls {
            if 2 * l >= n {
                continue;
            }
            match expsum_audit(n, l, expsum::DEFAULT_AUDIT_CAP) {
                Ok(a) => {
                    count += 1;
                    max_ratio = max_ratio.max(a.ratio);
                    max_parseval = max_parseval.max(a.parseval_rel_err());
                    failures += (a.ratio > ENVELOPE_RATIO_MAX || a.parseval_rel_err() > PARSEVAL_TOL) as usize;
                }
                Err(Error::EmptyPrimeWindow { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        failures == 0 && count > 0 && elapsed < AUDIT_TIME_LIMIT,
        format!(
            "{count} audits with n <= 2^14: max ratio {max_ratio:.4} (limit {ENVELOPE_RATIO_MAX}), max Parseval error {max_parseval:.2e} (limit {PARSEVAL_TOL:e}), {:.1} s",
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_6() -> Outcome {
    let line = nu_line(10_000, 2000, 50, 7, Dom2Constants::default()).unwrap();
    let used = line.constants_used.unwrap();
    outcome(
        line.pass && line.min_nu.is_some_and(|m| m > 0),
        format!(
            "defaults pass: {}; constants used c = {:.6}, C = {:.6}, c0 = {:.6}; |W| = {}; {}/50 2-dominated, {}/50 with min N(u) > 0 (min {})",
            line.hypothesis_met,
            used.c,
            used.big_c,
            used.c0,
            line.w_size.unwrap_or(0),
            line.two_dominating_trials,
            line.nu_positive_trials,
            line.min_nu.unwrap_or(0),
        ),
    )
}

fn criterion_7() -> Outcome {
    let cycle = CirculantSpec::from_chords(9, [1, 8]).unwrap();
    let cycle_gamma = exact_gamma(&cycle).unwrap();
    let (mut instances, mut dominance_failures, mut open_bound_failures, mut closed_failures) = (0, 0, 0, 0);
    let mut first_open_failure = None;
    for n in 2..=18u64 {
        for trial in 0..200u64 {
            let k = trial_rng(70 + n, trial).random_range(1..n) as usize;
            let spec = CirculantSpec::new(random_chords(n, k, &mut chord_rng(7, n * 1000 + trial)).unwrap()).unwrap();
            let gamma = exact_gamma(&spec).unwrap();
            instances += 1;
            for method in Method::ALL {
                if method == Method::Paper && n < construct::MIN_N {
                    continue;
                }
                let opts = MethodOptions {
                    seed: trial,
                    radius: Some(1),
                    ..Default::default()
                };
                if let Ok(r) = run_method(&spec, method, &opts) {
                    if r.verified && (r.size() as u32) < gamma {
                        dominance_failures += 1;
                    }
                }
            }
            if (gamma as f64) < gamma_lower_bound(n, k) {
                open_bound_failures += 1;
                first_open_failure.get_or_insert((n, spec.chords().chords().to_vec(), gamma));
            }
            closed_failures += ((gamma as f64) < closed_lower_bound(n, k)) as usize;
        }
    }
    outcome(
        dominance_failures == 0 && open_bound_failures == 0 && cycle_gamma == 3,
        format!(
            "{instances} instances: {dominance_failures} method outputs below gamma; gamma >= n/k - 1 violated in {open_bound_failures} (first: {first_open_failure:?}); gamma >= n/(k+1) violated in {closed_failures}; gamma(9, {{1, 8}}) = {cycle_gamma}"
        ),
    )
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

fn criterion_8() -> Outcome {
    const K: usize = 1000;
    const SEEDS: u64 = 9;
    const REPEATS: usize = 3;
    let ns = [1u64 << 16, 1 << 17, 1 << 18, 1 << 19];
    let medians: Vec<f64> = ns
        .iter()
        .map(|&n| {
            let mut per_seed: Vec<f64> = (1..=SEEDS)
                .map(|seed| {
                    let spec = CirculantSpec::new(random_chords(n, K, &mut chord_rng(seed, 0)).unwrap()).unwrap();
                    (0..REPEATS)
                        .map(|_| construct_dominating(&spec).unwrap().wall_time.as_secs_f64())
                        .fold(f64::INFINITY, f64::min)
                })
                .collect();
            median(&mut per_seed)
        })
        .collect();
    let factors: Vec<f64> = medians.windows(2).map(|w| w[1] / w[0]).collect();
    let worst = factors.iter().copied().fold(0.0, f64::max);
    outcome(
        worst <= SCALING_FACTOR_MAX,
        format!(
            "k = {K}, n = 2^16..2^19, median ms {:?}, doubling factors {:?} (limit {SCALING_FACTOR_MAX})",
            medians.iter().map(|m| (m * 1e4).round() / 10.0).collect::<Vec<_>>(),
            factors.iter().map(|f| (f * 1000.0).round() / 1000.0).collect::<Vec<_>>()
        ),
    )
}

fn run_cli(args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_circdom"))
        .args(args)
        .env_remove("CIRCDOM_OUT_DIR")
        .output()
        .expect("binary runs");
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    out.stdout
}

fn criterion_9() -> Outcome {
    let runs: [&[&str]; 5] = [
        &["construct", "--n", "10000", "--random-chords", "100", "--seed", "42", "--method", "paper", "--no-timing"],
        &["construct", "--n", "5000", "--random-chords", "30", "--seed", "7", "--method", "random", "--no-timing"],
        &["construct", "--n", "4096", "--random-chords", "64", "--seed", "3", "--method", "almost-w", "--no-timing"],
        &[
            "bench", "--n-list", "1000,2000,4000", "--k-list", "5,50", "--methods", "paper,greedy,random", "--seeds", "0,1,2",
            "--jobs", "4", "--no-timing",
        ],
        &["audit", "--check", "exceptional", "--n-list", "3000,6000", "--k-list", "4,40", "--trials", "3", "--seed", "11"],
    ];
    let mut identical = 0;
    for args in runs {
        identical += (run_cli(args) == run_cli(args)) as usize;
    }
    outcome(
        identical == runs.len(),
        format!("{identical}/{} JSON/CSV outputs byte-identical across two runs", runs.len()),
    )
}

fn main() -> ExitCode {
    // libtest passes flags such as --nocapture or a filter; none apply here.
    let mut failed = 0;
    let mut report = |id: u32, name: &str, o: Outcome| {
        println!("{} [{id}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += !o.pass as u32;
    };
    let (grid, elapsed) = correctness_grid();
    report(1, "correctness", criterion_1(&grid, elapsed));
    report(2, "cardinality", criterion_2());
    report(3, "size envelope", criterion_3(&grid));
    report(4, "exceptional set", criterion_4(&grid));
    drop(grid);
    report(5, "exponential sums", criterion_5());
    report(6, "universal 2-domination", criterion_6());
    report(7, "oracle dominance", criterion_7());
    report(8, "scaling", criterion_8());
    report(9, "determinism", criterion_9());
    println!("{} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
