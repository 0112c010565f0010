//! Small dominating sets in circulant graphs `C_n(S)`.
//!
//! The central object is the modular-ratio set
//! `W = { k/l mod n : 1 <= k <= L, l prime in [L+1, 2L], gcd(l, n) = 1 }`.
//! Adding the vertices `W + S` misses gives a dominating set of any
//! `C_n(S)`; with suitable `L`, `W` alone 2-dominates (or almost dominates)
//! every circulant graph with enough chords. Exhaustive and baseline
//! constructions are included for comparison, along with the numerical
//! audits of the exponential sums over `W`.

pub mod arith;
pub mod baselines;
pub mod bounds;
pub mod construct;
pub mod error;
pub mod expsum;
pub mod graph;
pub mod primes;
pub mod report;
pub mod rng;
pub mod verify;
mod vertex_set;

pub use baselines::{greedy_dominating, random_dominating};
pub use construct::{
    almost_dominating_w, build_w, calibrate_dom2, construct_dominating, construct_universal_2dom,
    count_representations, dom2_check, exceptional_set, representation_counts, run_method, solve_lambda,
    AlmostDominating, Dom2Calibration, Dom2Check, Dom2Constants, LambdaSolution, MethodOptions, WSet,
};
pub use error::{Error, Result};
pub use expsum::{centered_profile, exp_sum_w, expsum_audit, ExpSumAudit};
pub use graph::{coverage, symmetrize, ChordSet, CirculantSpec};
pub use primes::{distinct_prime_divisors, primes_in_window, PrimeWindow};
pub use report::{ConstructionParams, DominationReport, Method};
pub use verify::{exact_gamma, gamma_lower_bound, is_dominating, DominationCheck};
pub use vertex_set::VertexSet;
