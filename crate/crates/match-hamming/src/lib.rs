//! Pattern matching with `k` mismatches over the PILLAR interface.
//!
//! Given a pattern `P` of length `m`, a text `T` of length `n` and a budget
//! `k`, computes `Occ^H_k(P, T)`: every position `p` with
//! `δ_H(P, T[p..p+m)) ≤ k`, as a set of arithmetic progressions. All
//! character-level work goes through a [`Pillar`] backend, so the same code
//! serves plain and grammar-compressed strings.
//!
//! # Algorithm
//!
//! 1. Analyze `P` once: breaks, repetitive regions, or an approximate
//!    period (see [`analyze_hd`]).
//! 2. Cut `T` into overlapping blocks `T[⌊im/2⌋ .. min(n, ⌊(i+3)m/2⌋-1))`,
//!    each shorter than `3m/2`; every occurrence lies fully inside the block
//!    in which it starts in the first half.
//! 3. Per block, run the solver matching the analysis outcome, shift the
//!    result by the block offset and collect everything into one canonical
//!    set.
//!
//! # Invariants
//!
//! * Output equals the brute-force set for every input.
//! * In the non-periodic outcomes, `|Occ^H_k| = O(n/m · k)`; in the periodic
//!   outcome the result has `O(n/m · k²)` progressions with difference `|Q|`.
//!
//! # Design Notes
//!
//! `k = 0` is exact matching and `n < m` has no occurrences; both are
//! answered directly. Budgets `k ≥ m` accept every alignment.

mod analyze;
mod generator;
mod marking;
mod periodic;

pub use analyze::{analyze_hd, Break, PatternAnalysisHD, Region, BREAK_DIVISOR, PERIOD_DIVISOR};
pub use generator::{hamming_capped, mismatches, verify_hd, MismGenerator, MismGeneratorRev};
pub use marking::{break_matches_hd, repetitive_matches_hd, verify_all_hd, MARK_CONSTANT};
pub use periodic::{distances_rle, find_relevant_fragment_hd, find_rotation, periodic_matches_hd, RleDistanceSeq};

use pillar_core::{exact_matches, ArithmeticProgression, Frag, OccurrenceSet, Pillar};

/// Empirical constant bounding `|Occ^H_k| ≤ C_H · (n/m) · k` in the
/// non-periodic outcomes.
pub const OCCURRENCE_BOUND_HD: usize = 1024;

/// `Occ^H_k(p, t)`.
pub fn mismatch_occurrences<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize) -> OccurrenceSet {
    if let Some(direct) = trivial(backend, p, t, k) {
        return direct;
    }
    mismatch_occurrences_with(backend, p, t, k, &analyze_hd(backend, p, k))
}

/// `Occ^H_k(p, t)` reusing an analysis of `p` computed earlier by
/// [`analyze_hd`] for the same `k`.
///
/// The fragments inside `analysis` must address `p` in `backend`; this
/// holds whenever `p` is stored at the same owner and offset as when the
/// analysis ran. This lets many texts share one analysis.
pub fn mismatch_occurrences_with<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    k: usize,
    analysis: &PatternAnalysisHD,
) -> OccurrenceSet {
    if let Some(direct) = trivial(backend, p, t, k) {
        return direct;
    }
    let (m, n) = (p.len(), t.len());
    if analysis.is_degenerate() {
        return verify_all_hd(backend, p, t, k);
    }
    let mut progs = Vec::new();
    for i in 0..=2 * n / m {
        let lo = i * m / 2;
        let hi = n.min((i + 3) * m / 2 - 1);
        if hi < lo + m {
            continue;
        }
        let block = t.sub(lo, hi);
        let occ = match analysis {
            PatternAnalysisHD::Breaks(b) => break_matches_hd(backend, p, block, b, k),
            PatternAnalysisHD::RepetitiveRegions(r) => repetitive_matches_hd(backend, p, block, r, k),
            PatternAnalysisHD::ApproxPeriod(q) => periodic_matches_hd(backend, p, block, k, 8 * k, *q),
        };
        progs.extend(
            occ.progressions()
                .iter()
                .map(|ap| ArithmeticProgression::new(ap.first + lo, ap.diff, ap.count)),
        );
    }
    OccurrenceSet::from_progressions(progs)
}

/// Answers the cases that need no analysis: `n < m`, `k = 0` and `k ≥ m`.
fn trivial<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize) -> Option<OccurrenceSet> {
    let (m, n) = (p.len(), t.len());
    assert!(m > 0, "empty pattern");
    if n < m {
        Some(OccurrenceSet::new())
    } else if k == 0 {
        Some(exact_matches(backend, p, t).expect("non-empty pattern"))
    } else if k >= m {
        Some(OccurrenceSet::from_progressions([ArithmeticProgression::new(
            0,
            1,
            n - m + 1,
        )]))
    } else {
        None
    }
}
