//! Structural analysis of the pattern for the edit metric.
//!
//! The pattern is split into *breaks* and *repetitive regions* exactly as
//! for mismatches. The difference is that regions are now grown with the
//! edit generator, so a region's distance to the power of its period is
//! measured in edits.
//!
//! # Algorithm
//!
//! 1. At the current position `j`, take the window `W = P[j..j+L)` with
//!    `L = ⌊m/8k⌋`.
//! 2. If `per(W) > m/128k`, record `W` as a break; return after `2k` breaks.
//! 3. Otherwise let `Q_r = P[j..j+per(W))`. Repeatedly ask the generator
//!    for `P[j..m)` against `Q_r^∞` for one more edit. The `δ`-th answer
//!    `π` moves the region end to `j' = j+π+1`. Stop once
//!    `δ ≥ 8k/m · (j'-j)` or the end of `P` has been passed.
//! 4. If the budget ran out inside `P`, `P[j..j')` is a repetitive region;
//!    return once the regions cover `3m/8` characters.
//! 5. Otherwise the forward alignment ended at offset `π'` of `Q_r^∞`. Run
//!    the reverse generator on all of `P` against the power ending there,
//!    with a fresh budget. It extends left while the region is still right
//!    of `j` or within budget. If it stops inside `P` at `j''`, then
//!    `P[j''..m)` is a single repetitive region. If it passes the start of
//!    `P`, `Q_r` is an approximate period of `P`.
//!
//! # Invariants
//!
//! * Breaks: `2k` disjoint windows of length `⌊m/8k⌋` with period
//!   `> m/128k`.
//! * Forward regions: `δ_E(R_i, Q_i^*) = ⌈8k|R_i|/m⌉`, where the distance is
//!   to a prefix of `Q_i^∞`. Hence `edl(R_i, Q_i) ≤ ⌈8k|R_i|/m⌉`.
//! * Approximate period: primitive `Q`, `|Q| ≤ m/128k`, `edl(P, Q) < 8k`.
//!
//! # Design Notes
//!
//! `edl` is invariant under rotating `Q`, so periods are reported as the
//! fragment `P[j..j+q)` where they were discovered, with no realignment.
//!
//! When `m < 8k` the window length is zero. The analysis then reports `2k`
//! empty breaks, and the drivers verify every position.

use pillar_core::{period, Frag, Pillar};

use crate::generator::EditGenerator;

/// Window length divisor: windows have `⌊m/8k⌋` characters.
pub const BREAK_DIVISOR: usize = 8;
/// Period threshold divisor: breaks have period `> m/128k`.
pub const PERIOD_DIVISOR: usize = 128;

/// A break `P[offset..offset+len)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Break {
    pub offset: usize,
    pub len: usize,
}

/// A repetitive region `P[offset..offset+len)` whose approximate period is
/// `period`, a fragment of `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub offset: usize,
    pub len: usize,
    pub period: Frag,
}

/// Outcome of [`analyze_ed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternAnalysisED {
    Breaks(Vec<Break>),
    RepetitiveRegions(Vec<Region>),
    ApproxPeriod(Frag),
}

impl PatternAnalysisED {
    /// Whether this is the structureless outcome for `m < 8k`.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, PatternAnalysisED::Breaks(b) if b.iter().any(|b| b.len == 0))
    }
}

/// Classifies `p` for `k` edits into breaks, repetitive regions, or an
/// approximate period.
pub fn analyze_ed<B: Pillar + ?Sized>(backend: &B, p: Frag, k: usize) -> PatternAnalysisED {
    assert!(k >= 1, "analysis needs k >= 1");
    let m = p.len();
    let window = m / (BREAK_DIVISOR * k);
    if window == 0 {
        return PatternAnalysisED::Breaks(vec![Break { offset: 0, len: 0 }; 2 * k]);
    }
    let budget = BREAK_DIVISOR * k;
    let mut breaks = Vec::new();
    let mut regions: Vec<Region> = Vec::new();
    let mut covered = 0usize;
    let mut j = 0usize;
    loop {
        let j1 = j + window;
        debug_assert!(j1 <= m);
        let q = match period(backend, p.sub(j, j1)) {
            Some(q) if PERIOD_DIVISOR * k * q <= m => q,
            _ => {
                breaks.push(Break { offset: j, len: window });
                if breaks.len() == 2 * k {
                    return PatternAnalysisED::Breaks(breaks);
                }
                j = j1;
                continue;
            }
        };
        let qr = p.sub(j, j + q);
        let mut gen = EditGenerator::new(backend, p.suffix(j), qr).without_alignment();
        let mut delta = 0usize;
        let mut end = j1;
        let mut reached = 0usize;
        while delta * m < budget * (end - j) && end <= m {
            let (pi, pi2) = gen.next_prefix();
            end = j + pi + 1;
            reached = pi2;
            delta += 1;
        }
        if end <= m {
            regions.push(Region {
                offset: j,
                len: end - j,
                period: qr,
            });
            covered += end - j;
            if 8 * covered >= 3 * m {
                return PatternAnalysisED::RepetitiveRegions(regions);
            }
            j = end;
            continue;
        }
        // The whole suffix P[j..m) is close to a power of Q_r: extend left.
        let mut back = EditGenerator::reverse_ending_at(backend, p, qr, reached).without_alignment();
        let mut start = m as isize;
        let mut delta = 0usize;
        while start >= 0 && (start >= j as isize || delta * m < budget * (m - start as usize)) {
            let (pi, _) = back.next_prefix();
            start = m as isize - pi as isize - 1;
            delta += 1;
        }
        if start >= 0 {
            let start = start as usize;
            return PatternAnalysisED::RepetitiveRegions(vec![Region {
                offset: start,
                len: m - start,
                period: qr,
            }]);
        }
        return PatternAnalysisED::ApproxPeriod(qr);
    }
}
