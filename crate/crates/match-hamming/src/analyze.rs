//! Structural analysis of the pattern for the mismatch metric.
//!
//! The pattern is scanned left to right in windows of `L = ⌊m/8k⌋`
//! characters and split into *breaks* (windows with a long period) and
//! *repetitive regions* (stretches that are close to a short periodic
//! string), until one of three outcomes is certain.
//!
//! # Algorithm
//!
//! 1. At the current position `j`, take the window `W = P[j..j+L)`.
//! 2. If `per(W) > m/128k`, record `W` as a break; return after `2k` breaks.
//! 3. Otherwise let `Q_r = P[j..j+per(W))` and extend `W` to the right, one
//!    mismatch against `Q_r^∞` at a time, until the number of mismatches `δ`
//!    satisfies `δ ≥ 8k/m · |W|`. If that happens, `W` is a repetitive
//!    region; return once the regions cover `3m/8` characters.
//! 4. If the end of `P` is hit first, extend `P[j..m)` to the left with the
//!    reverse generator under the same budget. Reaching the budget yields a
//!    single repetitive region ending at `m`; reaching the start of `P`
//!    proves that `P` is within `8k` mismatches of a power of a rotation of
//!    `Q_r`, which is returned as the approximate period.
//!
//! # Invariants
//!
//! * Breaks: `2k` disjoint windows of length `⌊m/8k⌋` with period
//!   `> m/128k`.
//! * Regions: disjoint, total length `≥ 3m/8`, each of length `≥ m/8k` with
//!   a primitive period `Q_i`, `|Q_i| ≤ m/128k` and
//!   `δ_H(R_i, Q_i^*) = ⌈8k|R_i|/m⌉`.
//! * Approximate period: primitive `Q`, `|Q| ≤ m/128k`, `δ_H(P, Q^*) < 8k`.
//!
//! # Design Notes
//!
//! When `m < 8k` the window length is zero and no structure exists; the
//! analysis then reports `2k` empty breaks, which the drivers interpret as
//! "verify every position" (each verification costs `O(k)` and there are
//! `O(m) = O(k)` candidate positions per block).
//!
//! All comparisons against fractional thresholds are done in integers:
//! `x > m/128k` as `128k·x > m`, `δ < 8k/m·ℓ` as `δ·m < 8k·ℓ`.

use pillar_core::{period, Frag, Pillar};

use crate::generator::{MismGenerator, MismGeneratorRev};

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

/// A repetitive region `P[offset..offset+len)` with approximate period
/// `period` (a fragment of `P`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Region {
    pub offset: usize,
    pub len: usize,
    pub period: Frag,
}

/// Outcome of [`analyze_hd`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternAnalysisHD {
    Breaks(Vec<Break>),
    RepetitiveRegions(Vec<Region>),
    ApproxPeriod(Frag),
}

impl PatternAnalysisHD {
    /// Whether this is the structureless outcome for `m < 8k`.
    pub fn is_degenerate(&self) -> bool {
        matches!(self, PatternAnalysisHD::Breaks(b) if b.iter().any(|b| b.len == 0))
    }
}

/// Classifies `p` for `k` mismatches into breaks, repetitive regions, or an
/// approximate period.
pub fn analyze_hd<B: Pillar + ?Sized>(backend: &B, p: Frag, k: usize) -> PatternAnalysisHD {
    assert!(k >= 1, "analysis needs k >= 1");
    let m = p.len();
    let window = m / (BREAK_DIVISOR * k);
    if window == 0 {
        return PatternAnalysisHD::Breaks(vec![Break { offset: 0, len: 0 }; 2 * k]);
    }
    let budget = BREAK_DIVISOR * k; // δ must reach budget/m · |R|
    let mut breaks = Vec::new();
    let mut regions: Vec<Region> = Vec::new();
    let mut covered = 0usize;
    let mut j = 0usize;
    loop {
        // Breaks use < m/4 and regions < 3m/8 before this point, so the
        // window always fits.
        let mut j1 = j + window;
        debug_assert!(j1 <= m);
        let per = period(backend, p.sub(j, j1));
        let q = match per {
            Some(q) if PERIOD_DIVISOR * k * q <= m => q,
            _ => {
                breaks.push(Break { offset: j, len: window });
                if breaks.len() == 2 * k {
                    return PatternAnalysisHD::Breaks(breaks);
                }
                j = j1;
                continue;
            }
        };
        let qr = p.sub(j, j + q);
        let mut delta = 0usize;
        let mut gen = MismGenerator::new(backend, p.suffix(j), qr);
        while delta * m < budget * (j1 - j) {
            match gen.next() {
                Some(pi) => {
                    j1 = j + pi + 1;
                    delta += 1;
                }
                None => break,
            }
        }
        if delta * m >= budget * (j1 - j) {
            regions.push(Region {
                offset: j,
                len: j1 - j,
                period: qr,
            });
            covered += j1 - j;
            if 8 * covered >= 3 * m {
                return PatternAnalysisHD::RepetitiveRegions(regions);
            }
            j = j1;
            continue;
        }
        // Reached the end of P: extend P[j..m) to the left.
        let mut j2 = j;
        let mut back = MismGeneratorRev::new(backend, p.prefix(j), qr);
        while delta * m < budget * (m - j2) {
            match back.next() {
                Some(pi) => {
                    j2 = pi;
                    delta += 1;
                }
                None => break,
            }
        }
        if delta * m >= budget * (m - j2) {
            let shift = (q - (j - j2) % q) % q;
            return PatternAnalysisHD::RepetitiveRegions(vec![Region {
                offset: j2,
                len: m - j2,
                period: p.sub(j + shift, j + shift + q),
            }]);
        }
        // The whole pattern is close to a power: align the period with P[0].
        let shift = (q - j % q) % q;
        return PatternAnalysisHD::ApproxPeriod(p.sub(j + shift, j + shift + q));
    }
}
