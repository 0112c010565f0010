//! Comparison constructions: greedy set cover over closed neighbourhoods and
//! uniform random sampling until covered.

use std::time::Instant;

use rand::Rng;

use crate::graph::CirculantSpec;
use crate::report::{DominationReport, Method};
use crate::rng::{sampling_rng, RNG_NAME};
use crate::vertex_set::VertexSet;

/// Repeatedly takes the vertex whose closed neighbourhood `u ∪ (u + S)`
/// holds the most uncovered vertices, smallest index first on ties.
///
/// Gains are kept exact: when `v` becomes covered, every `u` with
/// `v ∈ u ∪ (u + S)`, i.e. `u = v` or `u = v - s`, loses one.
pub fn greedy_dominating(spec: &CirculantSpec) -> DominationReport {
    let start = Instant::now();
    let n = spec.n();
    let chords = spec.chords().chords();
    let mut gain = vec![spec.k() as u32 + 1; n as usize];
    let mut covered = VertexSet::new(n as usize);
    let mut d = VertexSet::new(n as usize);
    while !covered.is_full() {
        let (best, _) = gain
            .iter()
            .enumerate()
            .fold((0, 0), |acc, (u, &g)| if g > acc.1 { (u, g) } else { acc });
        let best = best as u64;
        d.insert(best);
        for v in std::iter::once(best).chain(chords.iter().map(|&s| (best + s) % n)) {
            if covered.insert(v) {
                gain[v as usize] -= 1;
                for &s in chords {
                    gain[((v + n - s) % n) as usize] -= 1;
                }
            }
        }
    }
    DominationReport::new(spec, Method::Greedy, d, 1, start.elapsed())
}

/// Draws vertices uniformly with replacement until everything is covered.
pub fn random_dominating(spec: &CirculantSpec, seed: u64) -> DominationReport {
    let start = Instant::now();
    let n = spec.n();
    let chords = spec.chords().chords();
    let mut rng = sampling_rng(seed, 0);
    let mut covered = VertexSet::new(n as usize);
    let mut d = VertexSet::new(n as usize);
    while !covered.is_full() {
        let u = rng.random_range(0..n);
        if d.insert(u) {
            covered.insert(u);
            for &s in chords {
                covered.insert((u + s) % n);
            }
        }
    }
    let mut report = DominationReport::new(spec, Method::Random, d, 1, start.elapsed());
    report.rng = Some((RNG_NAME, seed));
    report
}
