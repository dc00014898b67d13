//! A resumable Landau–Vishkin computation and the verification routine
//! built on it.
//!
//! The generator aligns prefixes of a string `S` with prefixes of a target
//! `W`. `W` is either a finite fragment or the infinite power `Q^∞` read
//! from some offset. The `c`-th call to [`EditGenerator::next_prefix`]
//! (counting from zero) allows `c` edits. It returns the length of the
//! longest prefix of `S` that can be aligned with some prefix of `W` at that
//! cost, together with the length of that prefix of `W`.
//!
//! # Algorithm
//!
//! The state is a *frontier*. For every diagonal `d` (meaning `W` consumed
//! minus `S` consumed), it stores the furthest `S`-prefix reachable on `d`
//! with the current budget, plus a back-reference describing how it was
//! reached.
//!
//! 1. Call 0: slide along diagonal 0 with one longest-common-extension
//!    query.
//! 2. Call `c > 0`: for each diagonal `d ∈ [-c, c]`, take the best of three
//!    candidates, then slide with one extension query:
//!    * a substitution on `d`;
//!    * an insertion of a `W` character coming from `d - 1`;
//!    * a deletion of an `S` character coming from `d + 1`.
//! 3. Report the furthest frontier entry. Ties go to the largest diagonal,
//!    i.e. the longest prefix of `W`. Once all of `S` is consumed, the state
//!    freezes and every later call repeats the last answer.
//!
//! The reverse generator runs the same recurrence on the reversed strings.
//! It aligns suffixes of `S` with suffixes of `W`, where a periodic target
//! is the left-infinite power of `Q` that ends at a given offset.
//!
//! # Invariants
//!
//! * Frontier entries never decrease from one call to the next.
//! * The `c`-th answer `(r, a)` satisfies `δ_E(S[..r), W[..a)) = c` until
//!   `S` is exhausted. The recorded alignment has exactly that many
//!   operations.
//! * Only extension queries of the backend are used; no character is read
//!   directly.
//!
//! # Design Notes
//!
//! Back-references are stored in an arena of parent-linked nodes, so an
//! alignment is rebuilt by walking one chain. Verification does not need
//! alignments and switches recording off.

use pillar_core::{lcp_power_from, lcs_power_until, Frag, Pillar, UNBOUNDED};
use thiserror::Error;

/// One edit operation between `S` and its target `W`.
///
/// Positions are indices into `S` and into the consumed prefix of `W`. For
/// reverse generators, both count from the right end: index 0 is the last
/// character.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EditOp {
    /// `S[i]` is replaced by `W[j]`.
    Substitute(usize, usize),
    /// `S[i]` is deleted.
    Delete(usize),
    /// `W[j]` is inserted.
    Insert(usize),
}

/// An ordered list of edit operations, left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EditAlignment {
    pub ops: Vec<EditOp>,
}

impl EditAlignment {
    /// Number of operations.
    pub fn cost(&self) -> usize {
        self.ops.len()
    }

    /// Applies the operations to `s`, using `w` for inserted and
    /// substituted characters, and returns the resulting string.
    ///
    /// Characters between operations are copied from `s`. For an alignment
    /// of `s` with `w`, the result equals `w`.
    pub fn replay(&self, s: &[u8], w: &[u8]) -> Vec<u8> {
        let mut out = Vec::with_capacity(w.len());
        let (mut si, mut wi) = (0usize, 0usize);
        for op in &self.ops {
            match *op {
                EditOp::Substitute(i, j) => {
                    out.extend_from_slice(&s[si..i]);
                    out.push(w[j]);
                    si = i + 1;
                    wi = j + 1;
                }
                EditOp::Delete(i) => {
                    out.extend_from_slice(&s[si..i]);
                    wi += i - si;
                    si = i + 1;
                }
                EditOp::Insert(j) => {
                    let copy = j - wi;
                    out.extend_from_slice(&s[si..si + copy]);
                    si += copy;
                    out.push(w[j]);
                    wi = j + 1;
                }
            }
        }
        out.extend_from_slice(&s[si..]);
        out
    }
}

/// Errors raised by generator state queries.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EditError {
    /// `alignment()` was requested before the first call to `next_prefix`.
    #[error("alignment requested before the first call to next_prefix")]
    NotStarted,
    /// The generator was created without alignment recording.
    #[error("alignment recording was disabled for this generator")]
    NotRecorded,
}

#[derive(Clone, Copy, Debug)]
enum Target {
    Text(Frag),
    /// `Q^∞` read from offset `phase`; for reverse generators, the
    /// left-infinite power ending at offset `phase`.
    Power {
        q: Frag,
        phase: usize,
    },
}

const ROOT: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct Node {
    op: EditOp,
    parent: u32,
}

#[derive(Clone, Copy, Debug)]
struct Entry {
    s: usize,
    node: u32,
}

/// A resumable Landau–Vishkin computation; see the module documentation.
pub struct EditGenerator<'a, B: Pillar + ?Sized> {
    backend: &'a B,
    s: Frag,
    target: Target,
    reverse: bool,
    record: bool,
    calls: usize,
    /// Entry for diagonal `d` at index `d + (calls - 1)`.
    frontier: Vec<Option<Entry>>,
    nodes: Vec<Node>,
    best: (usize, usize),
    best_node: u32,
    finished: bool,
}

impl<'a, B: Pillar + ?Sized> EditGenerator<'a, B> {
    fn build(backend: &'a B, s: Frag, target: Target, reverse: bool) -> Self {
        if let Target::Power { q, .. } = target {
            assert!(!q.is_empty(), "power of an empty string");
        }
        Self {
            backend,
            s,
            target,
            reverse,
            record: true,
            calls: 0,
            frontier: Vec::new(),
            nodes: Vec::new(),
            best: (0, 0),
            best_node: ROOT,
            finished: false,
        }
    }

    /// Aligns prefixes of `s` with prefixes of `q^∞`.
    pub fn new(backend: &'a B, s: Frag, q: Frag) -> Self {
        Self::with_offset(backend, s, q, 0)
    }

    /// Aligns prefixes of `s` with prefixes of `rot^j(q)^∞`.
    pub fn with_rotation(backend: &'a B, s: Frag, q: Frag, j: usize) -> Self {
        let ql = q.len();
        Self::with_offset(backend, s, q, (ql - j % ql) % ql)
    }

    /// Aligns prefixes of `s` with prefixes of `q^∞[x..)`, i.e. of
    /// `rot^{-x}(q)^∞`.
    pub fn with_offset(backend: &'a B, s: Frag, q: Frag, x: usize) -> Self {
        Self::build(backend, s, Target::Power { q, phase: x }, false)
    }

    /// Aligns prefixes of `s` with prefixes of the finite fragment `t`.
    pub fn against_text(backend: &'a B, s: Frag, t: Frag) -> Self {
        Self::build(backend, s, Target::Text(t), false)
    }

    /// Aligns suffixes of `s` with suffixes of the left-infinite power of
    /// `q` that ends with a full copy of `q`.
    pub fn reverse(backend: &'a B, s: Frag, q: Frag) -> Self {
        Self::reverse_ending_at(backend, s, q, 0)
    }

    /// Aligns suffixes of `s` with suffixes of the left-infinite power of
    /// `q` that ends just before offset `end` of `q^∞`; its last character
    /// is `q[(end - 1) mod |q|]`.
    pub fn reverse_ending_at(backend: &'a B, s: Frag, q: Frag, end: usize) -> Self {
        Self::build(backend, s, Target::Power { q, phase: end }, true)
    }

    /// Aligns suffixes of `s` with suffixes of the finite fragment `t`.
    pub fn reverse_against_text(backend: &'a B, s: Frag, t: Frag) -> Self {
        Self::build(backend, s, Target::Text(t), true)
    }

    /// Disables alignment recording (saves memory when only lengths are
    /// needed).
    pub fn without_alignment(mut self) -> Self {
        self.record = false;
        self
    }

    /// Number of edits allowed by the most recent call, or `None` before
    /// the first call.
    pub fn edits(&self) -> Option<usize> {
        self.calls.checked_sub(1)
    }

    /// Whether all of `S` has been aligned.
    pub fn is_finished(&self) -> bool {
        self.finished
    }

    fn target_len(&self) -> usize {
        match self.target {
            Target::Text(t) => t.len(),
            Target::Power { .. } => UNBOUNDED,
        }
    }

    /// Longest common extension of the unconsumed parts after consuming
    /// `si` characters of `S` and `wi` characters of `W`.
    fn extend(&self, si: usize, wi: usize) -> usize {
        let sl = self.s.len();
        if si >= sl {
            return 0;
        }
        let b = self.backend;
        match (self.target, self.reverse) {
            (Target::Text(t), false) => {
                if wi >= t.len() {
                    0
                } else {
                    b.lcp(self.s.suffix(si), t.suffix(wi))
                }
            }
            (Target::Text(t), true) => {
                if wi >= t.len() {
                    0
                } else {
                    b.lcp_r(self.s.prefix(sl - si), t.prefix(t.len() - wi))
                }
            }
            (Target::Power { q, phase }, false) => {
                lcp_power_from(b, self.s.suffix(si), q, phase % q.len() + wi % q.len(), UNBOUNDED)
            }
            (Target::Power { q, phase }, true) => {
                let ql = q.len();
                let end = (phase % ql + ql - wi % ql) % ql;
                lcs_power_until(b, self.s.prefix(sl - si), q, end, UNBOUNDED)
            }
        }
    }

    fn push_node(&mut self, op: EditOp, parent: u32) -> u32 {
        if !self.record {
            return ROOT;
        }
        let id = u32::try_from(self.nodes.len()).expect("alignment arena overflow");
        self.nodes.push(Node { op, parent });
        id
    }

    /// The next answer: `(r, a)` such that `S[..r)` is the longest prefix
    /// of `S` alignable with `W[..a)` using as many edits as there were
    /// previous calls.
    pub fn next_prefix(&mut self) -> (usize, usize) {
        if self.finished {
            return self.best;
        }
        let sl = self.s.len();
        let wl = self.target_len();
        let c = self.calls;
        if c == 0 {
            let r = self.extend(0, 0);
            self.frontier = vec![Some(Entry { s: r, node: ROOT })];
            self.best = (r, r);
            self.best_node = ROOT;
        } else {
            let old = std::mem::take(&mut self.frontier);
            let old_at = |d: isize| -> Option<Entry> {
                let idx = d + (c as isize - 1);
                if idx < 0 {
                    return None;
                }
                old.get(idx as usize).copied().flatten()
            };
            let mut new = Vec::with_capacity(2 * c + 1);
            let mut best: Option<(usize, usize, u32)> = None;
            for d in -(c as isize)..=(c as isize) {
                let w_of = |s: usize| (s as isize + d) as usize;
                // Candidate: (consumed S, pending op or keep, parent node).
                let mut cand: Option<(usize, Option<EditOp>, u32)> = None;
                let mut offer = |s: usize, op: Option<EditOp>, parent: u32| {
                    if cand.is_none_or(|(cs, _, _)| s > cs) {
                        cand = Some((s, op, parent));
                    }
                };
                if let Some(e) = old_at(d) {
                    offer(e.s, None, e.node);
                    let w = w_of(e.s);
                    if e.s < sl && w < wl {
                        offer(e.s + 1, Some(EditOp::Substitute(e.s, w)), e.node);
                    }
                }
                if let Some(e) = old_at(d + 1) {
                    if e.s < sl {
                        offer(e.s + 1, Some(EditOp::Delete(e.s)), e.node);
                    }
                }
                if let Some(e) = old_at(d - 1) {
                    let w = (e.s as isize + d - 1) as usize;
                    if w < wl {
                        offer(e.s, Some(EditOp::Insert(w)), e.node);
                    }
                }
                let entry = cand.map(|(s, op, parent)| {
                    let node = match op {
                        Some(op) => self.push_node(op, parent),
                        None => parent,
                    };
                    let s = s + self.extend(s, w_of(s));
                    Entry { s, node }
                });
                if let Some(e) = entry {
                    if best.is_none_or(|(bs, _, _)| e.s >= bs) {
                        best = Some((e.s, w_of(e.s), e.node));
                    }
                }
                new.push(entry);
            }
            self.frontier = new;
            let (r, a, node) = best.expect("diagonal 0 is always reachable");
            self.best = (r, a);
            self.best_node = node;
        }
        self.calls += 1;
        if self.best.0 >= sl {
            self.finished = true;
        }
        self.best
    }

    /// The alignment witnessing the most recent answer.
    pub fn alignment(&self) -> Result<EditAlignment, EditError> {
        if self.calls == 0 {
            return Err(EditError::NotStarted);
        }
        if !self.record {
            return Err(EditError::NotRecorded);
        }
        let mut ops = Vec::new();
        let mut node = self.best_node;
        while node != ROOT {
            let n = self.nodes[node as usize];
            ops.push(n.op);
            node = n.parent;
        }
        ops.reverse();
        Ok(EditAlignment { ops })
    }
}

/// `min_r δ_E(S, W[..r))` if it is at most `k`, where `gen` is a fresh
/// generator for `S` against `W`.
fn min_cost<B: Pillar + ?Sized>(gen: &mut EditGenerator<'_, B>, k: usize) -> Option<usize> {
    let sl = gen.s.len();
    (0..=k).find(|_| gen.next_prefix().0 >= sl)
}

/// A verified occurrence: start position and its minimum cost.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchEntry {
    pub pos: usize,
    pub cost: usize,
}

/// `{(ℓ, min_r δ_E(p, t[ℓ..r))) : ℓ ∈ [lo, hi], cost ≤ k}`.
///
/// Positions beyond `|t|` are ignored.
pub fn verify_ed<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize, lo: usize, hi: usize) -> Vec<MatchEntry> {
    let hi = hi.min(t.len());
    (lo..=hi)
        .filter_map(|pos| {
            let mut gen = EditGenerator::against_text(backend, p, t.suffix(pos)).without_alignment();
            min_cost(&mut gen, k).map(|cost| MatchEntry { pos, cost })
        })
        .collect()
}

/// `min_r δ_E(s, q^∞[x..x+r))` if it is at most `k`.
pub fn cost_to_power<B: Pillar + ?Sized>(backend: &B, s: Frag, q: Frag, x: usize, k: usize) -> Option<usize> {
    let mut gen = EditGenerator::with_offset(backend, s, q, x).without_alignment();
    min_cost(&mut gen, k)
}

/// `min_r δ_E(p, t[pos..r))` if it is at most `k`.
pub fn cost_at<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, pos: usize, k: usize) -> Option<usize> {
    if pos > t.len() {
        return None;
    }
    let mut gen = EditGenerator::against_text(backend, p, t.suffix(pos)).without_alignment();
    min_cost(&mut gen, k)
}
