//! The non-periodic cases: candidate positions by marking, then verification.
//!
//! # Algorithm
//!
//! * Breaks: every exact occurrence of a break `B_i = P[b_i..)` at `τ` places
//!   a mark at `τ - b_i`. A `k`-mismatch occurrence leaves at least `k` of
//!   the `2k` disjoint breaks intact, so only positions with `≥ k` marks are
//!   verified.
//! * Repetitive regions: every `k_i`-mismatch occurrence of region `R_i` at
//!   `τ` places a mark of weight `|R_i|` at `τ - r_i`, where
//!   `k_i = ⌊c_v·k·|R_i|/m⌋`. An occurrence with `k` mismatches can miss at
//!   most `m/c_v` characters of region weight, so positions with total
//!   weight `≥ Σ|R_i| - m/c_v` are verified.
//!
//! # Invariants
//!
//! * No false positives: every reported position passed `verify_hd`.
//! * With `c_v = 4`, `d_i = ⌈8k|R_i|/m⌉ ≥ 2k_i` (as required by the periodic
//!   solver) and the threshold `Σ|R_i| - m/4 ≥ m/8` is positive.
//!
//! # Design Notes
//!
//! Marks are sorted with an ordinary comparison sort.

use pillar_core::{exact_matches, Frag, OccurrenceSet, Pillar};

use crate::analyze::{Break, Region};
use crate::generator::verify_hd;
use crate::periodic::periodic_matches_hd;

/// Mark-threshold constant `c_v`.
pub const MARK_CONSTANT: usize = 4;

/// Verifies every position in `[0, n-m]`.
pub fn verify_all_hd<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    if n < m {
        return OccurrenceSet::new();
    }
    (0..=n - m)
        .filter(|&x| verify_hd(backend, p, t.sub(x, x + m), k))
        .collect()
}

/// `Occ^H_k(p, t)` for a pattern with `2k` disjoint breaks.
pub fn break_matches_hd<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    breaks: &[Break],
    k: usize,
) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    if n < m {
        return OccurrenceSet::new();
    }
    if breaks.iter().any(|b| b.len == 0) {
        return verify_all_hd(backend, p, t, k);
    }
    let mut marks = Vec::new();
    for b in breaks {
        let occ = exact_matches(backend, p.sub(b.offset, b.offset + b.len), t).expect("non-empty break");
        for ap in occ.progressions() {
            marks.extend(ap.iter().filter(|&tau| tau >= b.offset).map(|tau| tau - b.offset));
        }
    }
    marks.sort_unstable();
    let mut out = Vec::new();
    for run in marks.chunk_by(|a, b| a == b) {
        let x = run[0];
        if run.len() >= k && x <= n - m && verify_hd(backend, p, t.sub(x, x + m), k) {
            out.push(x);
        }
    }
    OccurrenceSet::from_positions(out)
}

/// `Occ^H_k(p, t)` for a pattern with disjoint repetitive regions covering
/// at least `3m/8` characters.
pub fn repetitive_matches_hd<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    regions: &[Region],
    k: usize,
) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    if n < m {
        return OccurrenceSet::new();
    }
    let mut marks: Vec<(usize, usize)> = Vec::new();
    for r in regions {
        let ki = MARK_CONSTANT * k * r.len / m;
        let di = (8 * k * r.len).div_ceil(m);
        let occ = periodic_matches_hd(backend, p.sub(r.offset, r.offset + r.len), t, ki, di, r.period);
        for ap in occ.progressions() {
            marks.extend(
                ap.iter()
                    .filter(|&tau| tau >= r.offset)
                    .map(|tau| (tau - r.offset, r.len)),
            );
        }
    }
    marks.sort_unstable();
    let total: usize = regions.iter().map(|r| r.len).sum();
    let mut out = Vec::new();
    for run in marks.chunk_by(|a, b| a.0 == b.0) {
        let x = run[0].0;
        let weight: usize = run.iter().map(|r| r.1).sum();
        // weight >= total - m/c_v, in integers.
        if MARK_CONSTANT * weight + m >= MARK_CONSTANT * total
            && x <= n - m
            && verify_hd(backend, p, t.sub(x, x + m), k)
        {
            out.push(x);
        }
    }
    OccurrenceSet::from_positions(out)
}
