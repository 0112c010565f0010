//! Circulant graphs `C_n(S)`, chord sets and coverage.
//!
//! A vertex `u` covers itself and `u + s` for every chord `s`. For a
//! symmetric chord set this is the usual closed neighbourhood; for an
//! asymmetric one, pass [`ChordSet::negated`] to get the opposite
//! orientation.

use std::path::Path;

use rand::seq::index;
use rand::Rng;

use crate::arith::check_modulus;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Sorted, duplicate-free nonzero residues modulo `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordSet {
    n: u64,
    chords: Vec<u64>,
    symmetric: bool,
}

impl ChordSet {
    /// Builds a chord set, merging duplicates. Every value must lie in `[1, n-1]`.
    pub fn new<I: IntoIterator<Item = u64>>(n: u64, chords: I) -> Result<Self> {
        check_modulus(n)?;
        let mut chords: Vec<u64> = chords.into_iter().collect();
        if let Some(&bad) = chords.iter().find(|&&c| c == 0 || c >= n) {
            return Err(Error::InvalidChord { value: bad, n });
        }
        chords.sort_unstable();
        chords.dedup();
        let symmetric = chords.iter().all(|&c| chords.binary_search(&(n - c)).is_ok());
        Ok(Self { n, chords, symmetric })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn chords(&self) -> &[u64] {
        &self.chords
    }

    pub fn len(&self) -> usize {
        self.chords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chords.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn contains(&self, v: u64) -> bool {
        self.chords.binary_search(&v).is_ok()
    }

    /// `-S = { n - s }`.
    pub fn negated(&self) -> ChordSet {
        ChordSet::new(self.n, self.chords.iter().map(|&c| self.n - c)).expect("negation preserves validity")
    }
}

/// `T ∪ (n - T)`, rejecting residues congruent to zero.
pub fn symmetrize(t: &[u64], n: u64) -> Result<ChordSet> {
    check_modulus(n)?;
    if let Some(&bad) = t.iter().find(|&&v| v % n == 0) {
        return Err(Error::InvalidChord { value: bad, n });
    }
    ChordSet::new(n, t.iter().flat_map(|&v| [v % n, n - v % n]))
}

/// The graph `C_n(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculantSpec {
    chords: ChordSet,
}

impl CirculantSpec {
    pub fn new(chords: ChordSet) -> Result<Self> {
        if chords.is_empty() {
            return Err(Error::EmptyChordSet);
        }
        Ok(Self { chords })
    }

    pub fn from_chords<I: IntoIterator<Item = u64>>(n: u64, chords: I) -> Result<Self> {
        Self::new(ChordSet::new(n, chords)?)
    }

    pub fn n(&self) -> u64 {
        self.chords.n
    }

    pub fn k(&self) -> usize {
        self.chords.len()
    }

    pub fn chords(&self) -> &ChordSet {
        &self.chords
    }

    pub fn n_usize(&self) -> usize {
        self.chords.n as usize
    }
}

/// The strict sumset `A + S = { a + s }`, without `A` itself.
pub fn sumset(a: &VertexSet, chords: &ChordSet) -> VertexSet {
    assert_eq!(a.universe() as u64, chords.n());
    let mut out = VertexSet::new(a.universe());
    for &s in chords.chords() {
        out.or_rotated_raw(a, s);
    }
    out.recount();
    out
}

/// Every vertex reachable from `d` in at most `r` chord steps, `d` included.
pub fn coverage(spec: &CirculantSpec, d: &VertexSet, r: u32) -> VertexSet {
    assert!(r >= 1, "radius must be positive");
    let mut cur = d.clone();
    for _ in 0..r {
        if cur.is_full() {
            break;
        }
        let mut next = sumset(&cur, spec.chords());
        next.union_with(&cur);
        cur = next;
    }
    cur
}

/// Parses the chord-file format: one decimal residue per line, `#` comments,
/// blank lines ignored. Duplicates are rejected with the offending line.
pub fn parse_chord_file(text: &str, n: u64) -> Result<ChordSet> {
    check_modulus(n)?;
    let mut seen = std::collections::HashMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let value: u64 = body.parse().map_err(|_| Error::ChordFile {
            line,
            message: format!("not a decimal residue: {body:?}"),
        })?;
        if value == 0 || value >= n {
            return Err(Error::ChordFile {
                line,
                message: format!("chord {value} is not in [1, {}]", n - 1),
            });
        }
        if let Some(first) = seen.insert(value, line) {
            return Err(Error::ChordFile {
                line,
                message: format!("duplicate chord {value} (first seen on line {first})"),
            });
        }
    }
    ChordSet::new(n, seen.into_keys())
}

pub fn read_chord_file(path: &Path, n: u64) -> Result<ChordSet> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::ChordFile {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_chord_file(&text, n)
}

/// `k` distinct chords drawn uniformly from `[1, n-1]`.
pub fn random_chords<R: Rng + ?Sized>(n: u64, k: usize, rng: &mut R) -> Result<ChordSet> {
    check_modulus(n)?;
    if k == 0 || k as u64 > n - 1 {
        return Err(Error::InvalidParameter(format!("cannot draw {k} distinct chords modulo {n}")));
    }
    let picks = index::sample(rng, (n - 1) as usize, k);
    ChordSet::new(n, picks.into_iter().map(|i| i as u64 + 1))
}

/// A symmetric chord set with about `k` chords: `ceil(k/2)` draws from
/// `[1, n/2]`, closed under negation.
pub fn random_symmetric_chords<R: Rng + ?Sized>(n: u64, k: usize, rng: &mut R) -> Result<ChordSet> {
    check_modulus(n)?;
    let half = (n / 2) as usize;
    let m = k.div_ceil(2);
    if m == 0 || m > half {
        return Err(Error::InvalidParameter(format!("cannot draw {k} symmetric chords modulo {n}")));
    }
    let picks: Vec<u64> = index::sample(rng, half, m).into_iter().map(|i| i as u64 + 1).collect();
    symmetrize(&picks, n)
}
