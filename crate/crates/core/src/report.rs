//! The record produced by every construction.

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use crate::graph::CirculantSpec;
use crate::verify::is_dominating;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// `D = U ∪ W` with `L = ceil(lambda)`.
    Paper,
    Greedy,
    Random,
    /// The universal 2-dominating set.
    Universal2,
    /// The universal almost-dominating set.
    AlmostW,
}

impl Method {
    pub const ALL: [Method; 5] = [Method::Paper, Method::Greedy, Method::Random, Method::Universal2, Method::AlmostW];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Paper => "paper",
            Method::Greedy => "greedy",
            Method::Random => "random",
            Method::Universal2 => "universal2",
            Method::AlmostW => "almost-w",
        }
    }

    /// Radius at which the method's output is meant to dominate.
    pub fn natural_radius(self) -> u32 {
        match self {
            Method::Universal2 => 2,
            _ => 1,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method {s:?} (expected paper|greedy|random|universal2|almost-w)"))
    }
}

/// Parameters of the modular-ratio constructions.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionParams {
    pub l: u64,
    pub prime_count: usize,
    pub w_size: usize,
    /// Size of the exceptional set, for the `paper` method only.
    pub u_size: Option<usize>,
    pub lambda: Option<f64>,
    /// Whether `L < 0.5 sqrt(n)`, under which `|W| = L |primes|` exactly.
    pub card_hypothesis: bool,
    /// Whether `L` was lowered to stay below `n/2`.
    pub l_capped: bool,
}

#[derive(Debug, Clone)]
pub struct DominationReport {
    pub method: Method,
    pub n: u64,
    pub k: usize,
    pub r: u32,
    pub set: VertexSet,
    pub verified: bool,
    pub uncovered: VertexSet,
    pub wall_time: Duration,
    pub params: Option<ConstructionParams>,
    /// Generator name and seed, for randomized methods.
    pub rng: Option<(&'static str, u64)>,
}

impl DominationReport {
    /// Verifies `set` at radius `r` and packages the result.
    pub fn new(spec: &CirculantSpec, method: Method, set: VertexSet, r: u32, wall_time: Duration) -> Self {
        let check = is_dominating(spec, &set, r);
        Self {
            method,
            n: spec.n(),
            k: spec.k(),
            r,
            set,
            verified: check.dominated,
            uncovered: check.uncovered,
            wall_time,
            params: None,
            rng: None,
        }
    }

    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn uncovered_count(&self) -> usize {
        self.uncovered.len()
    }
}
