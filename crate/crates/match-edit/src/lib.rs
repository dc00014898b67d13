//! Pattern matching with `k` edits over the PILLAR interface.
//!
//! Given a pattern `P` of length `m`, a text `T` of length `n` and a budget
//! `k`, computes `Occ^E_k(P, T)`. This is every position `ℓ ∈ [0, n]` such
//! that some fragment `T[ℓ..r)` is within edit distance `k` of `P`. The
//! result is a set of arithmetic progressions. All character-level work
//! goes through a [`Pillar`] backend.
//!
//! # Algorithm
//!
//! 1. Analyze `P` once: breaks, repetitive regions, or an approximate
//!    period (see [`analyze_ed`]).
//! 2. Approximate period `Q`: solve the whole text with the periodic driver
//!    ([`periodic_matches_ed`]) using `d = 8k`.
//! 3. Otherwise cut `T` into overlapping blocks
//!    `T[⌊im/2⌋ .. min(n, ⌊(i+3)m/2⌋+k-1))`. Run the break or region driver
//!    on each block and keep the starts in `[⌊im/2⌋, ⌊(i+1)m/2⌋)`. The last
//!    block keeps everything up to `n`.
//!
//! # Invariants
//!
//! * Output equals the brute-force set for every input.
//! * In the non-periodic outcomes, the starts fall into `O(n/m · k)`
//!   length-`k` blocks. In the periodic outcome, every start lies within
//!   `3d` of a multiple of `|Q|` after phase alignment.
//!
//! # Design Notes
//!
//! `k = 0` is exact matching. When `m ≤ k`, every position matches, since
//! deleting all of `P` costs `m`. Verification runs one Landau–Vishkin
//! computation per start, which costs `O(k²)` per start; see
//! [`verify_ed`].

mod analyze;
mod generator;
mod locked;
mod marking;
mod periodic;
mod witness;

pub use analyze::{analyze_ed, Break, PatternAnalysisED, Region, BREAK_DIVISOR, PERIOD_DIVISOR};
pub use generator::{cost_at, cost_to_power, verify_ed, EditAlignment, EditError, EditGenerator, EditOp, MatchEntry};
pub use locked::{locked, LockedFragments};
pub use marking::{break_matches_ed, repetitive_matches_ed, verify_all_ed, MARK_CONSTANT};
pub use periodic::{find_relevant_fragment_ed, periodic_matches_ed, synched_matches, RelevantFragment};
pub use witness::find_a_witness;

use pillar_core::{exact_matches, ArithmeticProgression, Frag, OccurrenceSet, Pillar};

/// Empirical constant bounding the number of length-`k` blocks holding
/// starts by `C_E · (n/m) · k` in the non-periodic outcomes.
pub const OCCURRENCE_BOUND_ED: usize = 4096;

/// `Occ^E_k(p, t)`.
pub fn edit_occurrences<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize) -> OccurrenceSet {
    if let Some(direct) = trivial(backend, p, t, k) {
        return direct;
    }
    edit_occurrences_with(backend, p, t, k, &analyze_ed(backend, p, k))
}

/// `Occ^E_k(p, t)` reusing an analysis of `p` computed earlier by
/// [`analyze_ed`] for the same `k`.
///
/// The fragments inside `analysis` must address `p` in `backend`; this
/// holds whenever `p` is stored at the same owner and offset as when the
/// analysis ran. This lets many texts share one analysis.
pub fn edit_occurrences_with<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    k: usize,
    analysis: &PatternAnalysisED,
) -> OccurrenceSet {
    if let Some(direct) = trivial(backend, p, t, k) {
        return direct;
    }
    let (m, n) = (p.len(), t.len());
    if analysis.is_degenerate() {
        return verify_all_ed(backend, p, t, k);
    }
    if let PatternAnalysisED::ApproxPeriod(q) = analysis {
        return periodic_matches_ed(backend, p, t, k, 8 * k, *q);
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
        let occ = match analysis {
            PatternAnalysisED::Breaks(b) => break_matches_ed(backend, p, block, b, k),
            PatternAnalysisED::RepetitiveRegions(r) => repetitive_matches_ed(backend, p, block, r, k),
            PatternAnalysisED::ApproxPeriod(_) => unreachable!("handled above"),
        };
        progs.extend(occ.progressions().iter().filter_map(|ap| {
            let moved = ArithmeticProgression::new(ap.first + lo, ap.diff, ap.count);
            let kept = moved.restrict(lo, own_end);
            (!kept.is_empty()).then_some(kept)
        }));
    }
    OccurrenceSet::from_progressions(progs)
}

/// Answers the cases that need no analysis: `m ≤ k`, `n + k < m` and
/// `k = 0`.
fn trivial<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, k: usize) -> Option<OccurrenceSet> {
    let (m, n) = (p.len(), t.len());
    if m <= k {
        Some(OccurrenceSet::from_progressions([ArithmeticProgression::new(
            0,
            1,
            n + 1,
        )]))
    } else if n + k < m {
        Some(OccurrenceSet::new())
    } else if k == 0 {
        Some(exact_matches(backend, p, t).expect("non-empty pattern"))
    } else {
        None
    }
}
