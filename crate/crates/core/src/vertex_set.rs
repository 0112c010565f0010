//! Subsets of `Z_n` stored as packed bit arrays.

use std::fmt;

const WORD: usize = 64;

/// A subset of `Z_n`.
///
/// Bits at positions `>= n` in the last word are always zero, and `count`
/// always equals the number of set bits.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
    count: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            words: vec![0; n.div_ceil(WORD)],
            count: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self {
            n,
            words: vec![u64::MAX; n.div_ceil(WORD)],
            count: n,
        };
        s.clear_tail();
        s
    }

    pub fn from_members<I: IntoIterator<Item = u64>>(n: usize, items: I) -> Self {
        let mut s = Self::new(n);
        for v in items {
            s.insert(v);
        }
        s
    }

    /// Universe size `n`.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn is_full(&self) -> bool {
        self.count == self.n
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        let v = v as usize;
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`; returns whether it was newly added.
    #[inline]
    pub fn insert(&mut self, v: u64) -> bool {
        let v = v as usize;
        assert!(v < self.n, "vertex {v} outside Z_{}", self.n);
        let word = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let fresh = *word & bit == 0;
        *word |= bit;
        self.count += fresh as usize;
        fresh
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some((i * WORD + b) as u64)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        self.recount();
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = Self {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
            count: self.n - self.count,
        };
        out.clear_tail();
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.n == other.n && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    /// `self |= other + shift (mod n)`: every member `v` of `other` sets bit
    /// `(v + shift) mod n`. Word-parallel, `O(n / 64)`.
    pub fn or_rotated(&mut self, other: &VertexSet, shift: u64) {
        self.or_rotated_raw(other, shift);
        self.recount();
    }

    /// `or_rotated` without refreshing the cardinality cache. Callers batching
    /// many rotations must call [`VertexSet::recount`] afterwards.
    pub(crate) fn or_rotated_raw(&mut self, other: &VertexSet, shift: u64) {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let s = (shift % n as u64) as usize;
        // [0, n-s) of other lands on [s, n); [n-s, n) wraps onto [0, s).
        or_range(&mut self.words, s, &other.words, 0, n - s);
        or_range(&mut self.words, 0, &other.words, n - s, s);
    }

    pub(crate) fn recount(&mut self) {
        self.count = self.words.iter().map(|w| w.count_ones() as usize).sum();
    }

    fn clear_tail(&mut self) {
        let rem = self.n % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// The 64 bits of `words` starting at bit `pos`; bits past the end read as 0.
#[inline]
fn read64(words: &[u64], pos: usize) -> u64 {
    let (w, b) = (pos / WORD, pos % WORD);
    let lo = words.get(w).copied().unwrap_or(0) >> b;
    if b == 0 {
        lo
    } else {
        lo | words.get(w + 1).copied().unwrap_or(0) << (WORD - b)
    }
}

/// ORs bits `[src_start, src_start + len)` of `src` onto
/// `[dst_start, dst_start + len)` of `dst`.
fn or_range(dst: &mut [u64], dst_start: usize, src: &[u64], src_start: usize, len: usize) {
    let mut done = 0;
    while done < len {
        let d = dst_start + done;
        let off = d % WORD;
        let take = (WORD - off).min(len - done);
        let mask = if take == WORD { u64::MAX } else { (1u64 << take) - 1 };
        dst[d / WORD] |= (read64(src, src_start + done) & mask) << off;
        done += take;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet(n={}, ", self.n)?;
        f.debug_set().entries(self.iter()).finish()?;
        write!(f, ")")
    }
}
