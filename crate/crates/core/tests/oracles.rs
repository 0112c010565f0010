use circdom_core::bounds::{greedy_guarantee, random_envelope};
use circdom_core::graph::random_chords;
use circdom_core::rng::chord_rng;
use circdom_core::verify::closed_lower_bound;
use circdom_core::*;

fn random_spec(n: u64, seed: u64, trial: u64) -> CirculantSpec {
    let k = 1 + (seed as usize + 5 * trial as usize) % (n as usize - 1);
    CirculantSpec::new(random_chords(n, k, &mut chord_rng(seed, trial)).unwrap()).unwrap()
}

/// Independent domination test: each vertex asks whether some member of `D`
/// reaches it in one step.
fn dominated_by_scan(spec: &CirculantSpec, d: &VertexSet) -> Vec<u64> {
    let n = spec.n();
    (0..n)
        .filter(|&v| !d.iter().any(|x| x == v || spec.chords().contains((v + n - x) % n)))
        .collect()
}

#[test]
fn is_dominating_agrees_with_scan() {
    for trial in 0..60u64 {
        let n = 2 + (trial * 17) % 999;
        let spec = random_spec(n, 3, trial);
        for density in [1u64, 5, 20] {
            let d = VertexSet::from_members(n as usize, (0..n).filter(|v| (v * 7919 + trial) % density.max(1) == 0));
            let check = is_dominating(&spec, &d, 1);
            let uncovered = dominated_by_scan(&spec, &d);
            assert_eq!(check.uncovered.to_vec(), uncovered);
            assert_eq!(check.dominated, uncovered.is_empty());
        }
    }
}

#[test]
fn exact_gamma_below_every_method() {
    for n in 2..=18u64 {
        for trial in 0..40 {
            let spec = random_spec(n, 9, trial);
            let gamma = exact_gamma(&spec).unwrap() as usize;
            let greedy = greedy_dominating(&spec);
            let random = random_dominating(&spec, trial);
            assert!(greedy.verified && random.verified);
            assert!(gamma <= greedy.size() && gamma <= random.size());
            if n >= 16 {
                let paper = construct_dominating(&spec).unwrap();
                assert!(paper.verified && gamma <= paper.size());
            }
        }
    }
}

#[test]
fn exact_gamma_respects_closed_neighbourhood_bound() {
    for n in 2..=24u64 {
        for trial in 0..8 {
            let spec = random_spec(n, 21, trial);
            let gamma = exact_gamma(&spec).unwrap() as f64;
            assert!(gamma >= closed_lower_bound(n, spec.k()), "n={n} k={}", spec.k());
        }
    }
}

#[test]
fn open_neighbourhood_bound_fails_under_self_coverage() {
    // With a vertex covering itself, n/k - 1 is not a lower bound: the 9-cycle
    // has gamma = 3 < 9/2 - 1.
    let spec = CirculantSpec::from_chords(9, [1, 8]).unwrap();
    assert_eq!(exact_gamma(&spec), Ok(3));
    assert_eq!(gamma_lower_bound(9, 2), 3.5);
    assert!(closed_lower_bound(9, 2) <= 3.0);
}

#[test]
fn greedy_meets_set_cover_guarantee() {
    for n in [20u64, 64, 101, 500, 1000, 2048] {
        for trial in 0..10 {
            let spec = random_spec(n, 4, trial);
            let report = greedy_dominating(&spec);
            assert!(report.verified);
            assert!(report.size() as f64 <= greedy_guarantee(n, spec.k()), "n={n} k={}", spec.k());
        }
    }
}

#[test]
fn random_baseline_tracks_n_log_n_over_k() {
    let spec = CirculantSpec::new(random_chords(10_000, 100, &mut chord_rng(42, 0)).unwrap()).unwrap();
    let mut sizes: Vec<usize> = (0..50).map(|seed| random_dominating(&spec, seed).size()).collect();
    sizes.sort_unstable();
    let median = sizes[25] as f64;
    let envelope = random_envelope(10_000, 100);
    assert!(median <= 4.0 * envelope && median >= envelope / 4.0, "median {median} envelope {envelope}");
}
