//! The periodic case: occurrences of a pattern that is within a few edits
//! of a substring of `Q^∞` for a short primitive `Q`.
//!
//! # Algorithm
//!
//! 1. `find_relevant_fragment_ed`: for a text with `n < 3m/2 + k`, every
//!    occurrence covers the middle part `T[n-m+k..m-k)`. A witness for that
//!    part fixes the phase of `Q` in the text, and a witness for `P` fixes
//!    it in the pattern. The two phases determine a residue interval `I`
//!    such that every occurrence starts in `I + |Q|ℤ`. The witness is then
//!    extended in both directions with the edit generator, under a budget of
//!    `⌊3d/2⌋` edits, which yields a fragment `T'` containing all occurrences.
//! 2. `synched_matches`: compute locked fragments of `P` and of `T'`. A start
//!    where no locked fragment of `P` meets a locked fragment of `T'` shifts
//!    copies of `Q` onto copies of `Q`. Moving such a start by `|Q|` keeps
//!    its cost, as long as it stays in the same unmarked range. So:
//!    * marked starts, and the starts near `n - m`, are verified one by one;
//!    * each unmarked range is resolved by verifying its first `|Q|`
//!      starts and repeating the hits with step `|Q|`.
//! 3. `periodic_matches_ed`: cut `T` into blocks
//!    `T[⌊im/2⌋ .. min(n, ⌊(i+3)m/2⌋+k-1))`, solve each block, and keep the
//!    starts in `[⌊im/2⌋, ⌊(i+1)m/2⌋)`. The last block keeps everything up
//!    to `n`.
//!
//! # Invariants
//!
//! * Every reported start passed verification, directly or through a
//!   verified representative in the same unmarked range and residue class.
//! * Each start is owned by exactly one block.
//!
//! # Design Notes
//!
//! The structural argument needs the middle part to hold at least
//! `3d + 1` copies of `Q` (or `|Q| = 1`). Some sub-calls do not satisfy
//! this, namely the repetitive-region driver with a small `d`. In that case
//! the relevant-fragment step answers `Unstructured`, and the block's own
//! starts are verified directly.

use pillar_core::{ArithmeticProgression, Frag, OccurrenceSet, Pillar};

use crate::generator::{cost_at, EditGenerator};
use crate::locked::locked;
use crate::witness::find_a_witness;

/// Outcome of [`find_relevant_fragment_ed`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelevantFragment {
    /// The text has no occurrence.
    Empty,
    /// `t[start..end)` contains every occurrence. Occurrence starts,
    /// relative to `start`, lie in `[lo, hi] + |Q|ℤ`.
    Found { start: usize, end: usize, lo: i64, hi: i64 },
    /// The text is too short for the structural argument; the caller must
    /// verify directly.
    Unstructured,
}

/// Locates the part of `t` that can contain occurrences of `p`, and the
/// residues of their starts modulo `|q|`.
///
/// Requires `|t| < 3m/2 + k`, `d ≥ 2k`, a primitive `q`, and
/// `edl(p, q) ≤ d`.
pub fn find_relevant_fragment_ed<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    k: usize,
    d: usize,
    q: Frag,
) -> RelevantFragment {
    let (m, n, ql) = (p.len(), t.len(), q.len());
    if n + k < m {
        return RelevantFragment::Empty;
    }
    let d32 = 3 * d / 2;
    let (mid_lo, mid_hi) = (n + k - m, m.saturating_sub(k));
    if 2 * n >= 3 * m + 2 * k || mid_lo > mid_hi || (ql > 1 && mid_hi - mid_lo < (3 * d + 1) * ql) {
        return RelevantFragment::Unstructured;
    }
    let Some((x, _)) = find_a_witness(backend, d, q, p) else {
        return RelevantFragment::Unstructured;
    };
    let Some((x2, y2)) = find_a_witness(backend, d32, q, t.sub(mid_lo, mid_hi)) else {
        return RelevantFragment::Empty;
    };
    let mut fwd = EditGenerator::with_offset(backend, t.suffix(mid_lo), q, x2).without_alignment();
    let mut lam = 0;
    for _ in 0..=d32 {
        lam = fwd.next_prefix().0;
    }
    let end = mid_lo + lam;
    let mut back = EditGenerator::reverse_ending_at(backend, t.prefix(mid_hi), q, y2).without_alignment();
    let mut lam2 = 0;
    for _ in 0..=d32 {
        lam2 = back.next_prefix().0;
    }
    let start = mid_hi - lam2;
    let center = mid_lo as i64 - start as i64 + x as i64 - x2 as i64;
    RelevantFragment::Found {
        start,
        end,
        lo: center - 3 * d as i64,
        hi: center + 3 * d as i64,
    }
}

/// Merges inclusive integer intervals that overlap or touch.
fn merge_intervals(mut v: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    v.sort_unstable();
    let mut out: Vec<(i64, i64)> = Vec::with_capacity(v.len());
    for (a, b) in v {
        match out.last_mut() {
            Some(last) if a <= last.1 + 1 => last.1 = last.1.max(b),
            _ => out.push((a, b)),
        }
    }
    out
}

/// `Occ^E_k(p, t) ∩ ([lo, hi] + |q|ℤ)`.
///
/// Requires `|t| ≤ 3m/2 + k`, a primitive `q`, `edl(p, q) ≤ d` and
/// `edl(t, q) ≤ d2`.
#[allow(clippy::too_many_arguments)]
pub fn synched_matches<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    lo: i64,
    hi: i64,
    k: usize,
    d: usize,
    d2: usize,
    q: Frag,
) -> OccurrenceSet {
    let (m, n, ql) = (p.len(), t.len(), q.len());
    if n + k < m || hi < lo {
        return OccurrenceSet::new();
    }
    let qi = ql as i64;
    let width = hi - lo;
    let in_class = |pos: i64| width + 1 >= qi || (pos - lo).rem_euclid(qi) <= width;
    let last = (n + k - m) as i64;
    let (mi, ni, ki) = (m as i64, n as i64, k as i64);

    let lp = locked(backend, p, q, d, k);
    let lt = locked(backend, t, q, d2, 0);
    let mut marks = vec![(ni - mi - ki, ni - mi + ki)];
    for &(l, r) in &lp.fragments {
        for &(l2, r2) in &lt.fragments {
            marks.push((l2 as i64 - r as i64 - ki + 1, r2 as i64 - l as i64 + ki - 1));
        }
    }
    let marks: Vec<(i64, i64)> = merge_intervals(
        marks
            .into_iter()
            .map(|(a, b)| (a.max(0), b.min(last)))
            .filter(|(a, b)| a <= b)
            .collect(),
    );

    let verify = |pos: i64| cost_at(backend, p, t, pos as usize, k).is_some();
    let mut progs = Vec::new();
    let mut gaps = Vec::new();
    let mut next = 0i64;
    for &(a, b) in &marks {
        if next < a {
            gaps.push((next, a - 1));
        }
        for pos in (a..=b).filter(|&x| in_class(x)) {
            if verify(pos) {
                progs.push(ArithmeticProgression::new(pos as usize, 1, 1));
            }
        }
        next = b + 1;
    }
    if next <= last {
        gaps.push((next, last));
    }
    for (a, b) in gaps {
        for pos in (a..=b.min(a + qi - 1)).filter(|&x| in_class(x)) {
            if verify(pos) {
                let count = ((b - pos) / qi + 1) as usize;
                progs.push(ArithmeticProgression::new(pos as usize, ql, count));
            }
        }
    }
    OccurrenceSet::from_progressions(progs)
}

/// `Occ^E_k(p, t)` for a pattern with `edl(p, q) ≤ d`, `d ≥ 2k`,
/// `|q| ≤ m/8d`, and `q` primitive.
pub fn periodic_matches_ed<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    k: usize,
    d: usize,
    q: Frag,
) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    assert!(m > 0, "empty pattern");
    if n + k < m {
        return OccurrenceSet::new();
    }
    let blocks = (2 * n / m).max(1);
    let mut progs = Vec::new();
    for i in 0..blocks {
        let lo = i * m / 2;
        let own_end = if i + 1 == blocks { n + 1 } else { (i + 1) * m / 2 };
        let hi = n.min((i + 3) * m / 2 + k - 1);
        if hi + k < lo + m {
            continue;
        }
        let block = t.sub(lo, hi);
        match find_relevant_fragment_ed(backend, p, block, k, d, q) {
            RelevantFragment::Empty => {}
            RelevantFragment::Unstructured => {
                let top = own_end.min(n + k - m + 1);
                progs.extend(
                    (lo..top)
                        .filter(|&pos| cost_at(backend, p, t, pos, k).is_some())
                        .map(|pos| ArithmeticProgression::new(pos, 1, 1)),
                );
            }
            RelevantFragment::Found {
                start,
                end,
                lo: a,
                hi: b,
            } => {
                let occ = synched_matches(backend, p, block.sub(start, end), a, b, k, d, 3 * d, q);
                let shift = lo + start;
                progs.extend(occ.progressions().iter().filter_map(|ap| {
                    let moved = ArithmeticProgression::new(ap.first + shift, ap.diff, ap.count);
                    let kept = moved.restrict(lo, own_end);
                    (!kept.is_empty()).then_some(kept)
                }));
            }
        }
    }
    OccurrenceSet::from_progressions(progs)
}
