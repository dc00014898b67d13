//! PILLAR backend for plain in-memory strings.
//!
//! All registered strings are concatenated into one corpus. A suffix array
//! with its LCP array and a range-minimum structure answers longest common
//! extension queries between any two corpus positions; a second index over
//! the reversed corpus answers longest common suffix queries.
//!
//! # Algorithm
//!
//! `lcp(s, t)` for fragments starting at corpus positions `i` and `j`:
//! 1. compare up to [`DIRECT_SCAN`] leading bytes directly (most queries
//!    issued by the matchers end within a few characters);
//! 2. otherwise take the minimum of the LCP array strictly between the
//!    ranks of suffixes `i` and `j`;
//! 3. cap the answer at both fragment lengths.
//!
//! # Invariants
//!
//! * Capping at fragment lengths makes separators between the registered
//!   strings unnecessary: an extension that runs across a string boundary is
//!   always cut back to lie within both fragments.
//! * The index is immutable after construction; all queries take `&self`.
//!
//! # Design Notes
//!
//! `ipm` is answered at query time by a Z-function scan over the at most
//! `3|p|` bytes involved (see [`pillar_core::strings::ipm_bytes`]) rather than
//! by a constant-time internal pattern matching structure.

mod rmq;
mod sa;

use std::borrow::Cow;

use pillar_core::{Frag, Pillar};

pub use rmq::BlockRmq;
pub use sa::{inverse, lcp_array, suffix_array};

/// Bytes compared directly before falling back to the range-minimum query.
pub const DIRECT_SCAN: usize = 16;

/// Longest-common-extension index over one byte string.
#[derive(Clone, Debug)]
struct LceIndex {
    rank: Vec<u32>,
    rmq: BlockRmq,
}

impl LceIndex {
    fn new(text: &[u8]) -> Self {
        let sa = suffix_array(text);
        let rank = inverse(&sa);
        let lcp = lcp_array(text, &sa, &rank);
        LceIndex {
            rank,
            rmq: BlockRmq::new(lcp),
        }
    }

    /// Longest common prefix of `text[i..]` and `text[j..]`, both non-empty.
    fn lce(&self, i: usize, j: usize) -> usize {
        let (a, b) = (self.rank[i] as usize, self.rank[j] as usize);
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.rmq.min(lo + 1, hi) as usize
    }
}

/// Suffix-array based index over a collection of strings.
#[derive(Clone, Debug)]
pub struct StandardIndex {
    corpus: Vec<u8>,
    offsets: Vec<usize>,
    forward: LceIndex,
    reverse: LceIndex,
}

impl StandardIndex {
    /// Indexes `strings` and returns one whole-string handle per input.
    pub fn build<S: AsRef<[u8]>>(strings: &[S]) -> (Self, Vec<Frag>) {
        let total: usize = strings.iter().map(|s| s.as_ref().len()).sum();
        let mut corpus = Vec::with_capacity(total);
        let mut offsets = Vec::with_capacity(strings.len() + 1);
        let mut handles = Vec::with_capacity(strings.len());
        for (id, s) in strings.iter().enumerate() {
            let s = s.as_ref();
            offsets.push(corpus.len());
            corpus.extend_from_slice(s);
            handles.push(Frag::new(id as u32, 0, s.len()));
        }
        offsets.push(corpus.len());
        let reversed: Vec<u8> = corpus.iter().rev().copied().collect();
        let index = StandardIndex {
            forward: LceIndex::new(&corpus),
            reverse: LceIndex::new(&reversed),
            corpus,
            offsets,
        };
        (index, handles)
    }

    /// Number of indexed strings.
    pub fn string_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Handle of the whole `id`-th string.
    pub fn handle(&self, id: usize) -> Frag {
        Frag::new(id as u32, 0, self.offsets[id + 1] - self.offsets[id])
    }

    #[inline]
    fn abs(&self, s: Frag) -> usize {
        self.offsets[s.owner as usize] + s.start
    }
}

impl Pillar for StandardIndex {
    #[inline]
    fn access(&self, s: Frag, i: usize) -> u8 {
        assert!(i < s.len(), "access index {i} out of fragment of length {}", s.len());
        self.corpus[self.abs(s) + i]
    }

    fn lcp(&self, s: Frag, t: Frag) -> usize {
        let cap = s.len().min(t.len());
        if cap == 0 {
            return 0;
        }
        let (i, j) = (self.abs(s), self.abs(t));
        if i == j {
            return cap;
        }
        let scan = cap.min(DIRECT_SCAN);
        let a = &self.corpus[i..i + scan];
        let b = &self.corpus[j..j + scan];
        if let Some(x) = a.iter().zip(b).position(|(x, y)| x != y) {
            return x;
        }
        if scan == cap {
            return cap;
        }
        self.forward.lce(i, j).min(cap)
    }

    fn lcp_r(&self, s: Frag, t: Frag) -> usize {
        let cap = s.len().min(t.len());
        if cap == 0 {
            return 0;
        }
        let (ie, je) = (self.abs(s) + s.len(), self.abs(t) + t.len());
        if ie == je {
            return cap;
        }
        let scan = cap.min(DIRECT_SCAN);
        for x in 0..scan {
            if self.corpus[ie - 1 - x] != self.corpus[je - 1 - x] {
                return x;
            }
        }
        if scan == cap {
            return cap;
        }
        let n = self.corpus.len();
        self.reverse.lce(n - ie, n - je).min(cap)
    }

    #[inline]
    fn bytes(&self, s: Frag) -> Cow<'_, [u8]> {
        let a = self.abs(s);
        Cow::Borrowed(&self.corpus[a..a + s.len()])
    }
}
