use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus {0} is out of range (need 2 <= n <= 2^62)")]
    InvalidModulus(u64),
    #[error("{a} is not invertible modulo {n}")]
    NotInvertible { a: u64, n: u64 },
    #[error("chord {value} is not a nonzero residue modulo {n}")]
    InvalidChord { value: u64, n: u64 },
    #[error("chord set is empty")]
    EmptyChordSet,
    #[error("line {line}: {message}")]
    ChordFile { line: usize, message: String },
    #[error("degenerate instance: n = {n} is below the minimum {min}")]
    DegenerateInstance { n: u64, min: u64 },
    #[error("no primes in [{}, {}] coprime to {n}", .l + 1, 2 * .l)]
    EmptyPrimeWindow { l: u64, n: u64 },
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("n = {n} exceeds the exhaustive-search limit {max}")]
    TooLarge { n: u64, max: u64 },
    #[error("n = {n} exceeds the audit cap {cap}")]
    AuditTooLarge { n: u64, cap: u64 },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}
