//! Domination checks, exact domination numbers for tiny graphs, and the
//! counting lower bound.

use crate::error::{Error, Result};
use crate::graph::{coverage, CirculantSpec};
use crate::vertex_set::VertexSet;

/// Largest `n` accepted by [`exact_gamma`].
pub const EXACT_GAMMA_MAX_N: u64 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationCheck {
    pub dominated: bool,
    pub uncovered: VertexSet,
}

impl DominationCheck {
    pub fn uncovered_count(&self) -> usize {
        self.uncovered.len()
    }
}

/// Whether every vertex lies within `r` chord steps of `d`.
pub fn is_dominating(spec: &CirculantSpec, d: &VertexSet, r: u32) -> DominationCheck {
    let uncovered = coverage(spec, d, r).complement();
    DominationCheck {
        dominated: uncovered.is_empty(),
        uncovered,
    }
}

/// `n/k - 1`.
pub fn gamma_lower_bound(n: u64, k: usize) -> f64 {
    assert!(k >= 1);
    n as f64 / k as f64 - 1.0
}

/// `n/(k+1)`: every vertex covers at most `k + 1` vertices including itself.
pub fn closed_lower_bound(n: u64, k: usize) -> f64 {
    n as f64 / (k as f64 + 1.0)
}

/// The domination number by exhaustive search over subsets of increasing size.
pub fn exact_gamma(spec: &CirculantSpec) -> Result<u32> {
    let n = spec.n();
    if n > EXACT_GAMMA_MAX_N {
        return Err(Error::TooLarge { n, max: EXACT_GAMMA_MAX_N });
    }
    let n = n as usize;
    let reach: Vec<u32> = (0..n)
        .map(|u| {
            spec.chords()
                .chords()
                .iter()
                .fold(1u32 << u, |m, &s| m | 1 << ((u + s as usize) % n))
        })
        .collect();
    let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let per_pick = spec.k() as u32 + 1;
    let start = n.div_ceil(per_pick as usize).max(1);
    for size in start..=n {
        if search(&reach, full, per_pick, 0, size, 0) {
            return Ok(size as u32);
        }
    }
    unreachable!("Z_n dominates itself")
}

/// Picks `left` more vertices from `next..` in lexicographic order.
fn search(reach: &[u32], full: u32, per_pick: u32, covered: u32, left: usize, next: usize) -> bool {
    if covered == full {
        return true;
    }
    if left == 0 || (full & !covered).count_ones() > left as u32 * per_pick {
        return false;
    }
    (next..=reach.len() - left).any(|u| search(reach, full, per_pick, covered | reach[u], left - 1, u + 1))
}
