//! The non-periodic cases: candidate blocks by marking, then verification.
//!
//! With edits, an occurrence of a piece of `P` only pins the pattern start
//! to within `k` positions. So marks go on *blocks* `[πk, (π+1)k)` of start
//! positions, and whole blocks are verified.
//!
//! # Algorithm
//!
//! * Breaks: every exact occurrence of a break `B_i = P[b_i..)` at `τ`
//!   marks the blocks `⌊(τ - b_i + s)/k⌋` for `s ∈ {-k, 0, k, 2k}`. A
//!   `k`-edit occurrence leaves at least `k` of the `2k` disjoint breaks
//!   intact, each displaced by at most `k`. So only blocks with `≥ k` marks
//!   are verified.
//! * Repetitive regions: every `k_i`-edit occurrence of region `R_i` at
//!   `τ`, with `k_i = ⌊c_v·k·|R_i|/m⌋`, marks the same four blocks relative
//!   to `r_i`, with weight `|R_i|`. Each region marks a block at most once.
//!   Blocks with total weight `≥ Σ|R_i| - m/c_v` are verified.
//!
//! # Invariants
//!
//! * No false positives: every reported start passed verification.
//! * Marks at negative block indices, which come from `s = -k` near the
//!   left end of the text, are discarded before counting.
//!
//! # Design Notes
//!
//! Block indices are kept in 64-bit signed arithmetic until the sign check.

use std::collections::{BTreeMap, HashSet};

use pillar_core::{exact_matches, Frag, OccurrenceSet, Pillar};

use crate::analyze::{Break, Region};
use crate::generator::cost_at;
use crate::periodic::periodic_matches_ed;

/// Mark-threshold constant `c_v`.
pub const MARK_CONSTANT: usize = 4;

/// Verifies every start in `[0, n-m+k]`.
pub fn verify_all_ed<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    if n + k < m {
        return OccurrenceSet::new();
    }
    (0..=(n + k - m).min(n))
        .filter(|&x| cost_at(backend, p, t, x, k).is_some())
        .collect()
}

/// The four blocks marked by a piece starting at offset `b` of `P` that
/// occurs at `τ` in the text.
fn marked_blocks(tau: usize, b: usize, k: usize) -> impl Iterator<Item = usize> {
    let (tau, b, k) = (tau as i64, b as i64, k as i64);
    [-k, 0, k, 2 * k]
        .into_iter()
        .map(move |s| tau - b + s)
        .filter(|&v| v >= 0)
        .map(move |v| (v / k) as usize)
}

/// Verifies the starts of block `[πk, (π+1)k)` that lie in `[0, n-m+k]`.
fn verify_block<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize, pi: usize, out: &mut Vec<usize>) {
    let last = t.len() + k - p.len();
    let lo = pi * k;
    let hi = ((pi + 1) * k).min(last + 1);
    out.extend((lo..hi).filter(|&x| cost_at(backend, p, t, x, k).is_some()));
}

/// `Occ^E_k(p, t)` for a pattern with `2k` disjoint breaks.
pub fn break_matches_ed<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    breaks: &[Break],
    k: usize,
) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    if n + k < m {
        return OccurrenceSet::new();
    }
    if k == 0 || breaks.iter().any(|b| b.len == 0) {
        return verify_all_ed(backend, p, t, k);
    }
    let mut marks = Vec::new();
    for b in breaks {
        let occ = exact_matches(backend, p.sub(b.offset, b.offset + b.len), t).expect("non-empty break");
        for ap in occ.progressions() {
            for tau in ap.iter() {
                marks.extend(marked_blocks(tau, b.offset, k));
            }
        }
    }
    marks.sort_unstable();
    let mut out = Vec::new();
    for run in marks.chunk_by(|a, b| a == b) {
        if run.len() >= k {
            verify_block(backend, p, t, k, run[0], &mut out);
        }
    }
    OccurrenceSet::from_positions(out)
}

/// `Occ^E_k(p, t)` for a pattern with disjoint repetitive regions covering
/// at least `3m/8` characters.
pub fn repetitive_matches_ed<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    regions: &[Region],
    k: usize,
) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    if n + k < m {
        return OccurrenceSet::new();
    }
    if k == 0 {
        return verify_all_ed(backend, p, t, k);
    }
    let mut weight: BTreeMap<usize, usize> = BTreeMap::new();
    for r in regions {
        let ki = MARK_CONSTANT * k * r.len / m;
        let di = (8 * k * r.len).div_ceil(m);
        let occ = periodic_matches_ed(backend, p.sub(r.offset, r.offset + r.len), t, ki, di, r.period);
        let mut blocks = HashSet::new();
        for ap in occ.progressions() {
            for tau in ap.iter() {
                blocks.extend(marked_blocks(tau, r.offset, k));
            }
        }
        for blk in blocks {
            *weight.entry(blk).or_default() += r.len;
        }
    }
    let total: usize = regions.iter().map(|r| r.len).sum();
    let mut out = Vec::new();
    for (&blk, &w) in &weight {
        // w >= total - m/c_v, in integers.
        if MARK_CONSTANT * w + m >= MARK_CONSTANT * total {
            verify_block(backend, p, t, k, blk, &mut out);
        }
    }
    OccurrenceSet::from_positions(out)
}
