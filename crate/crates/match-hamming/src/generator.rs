//! Mismatch generators against infinite powers, and verification.
//!
//! # Algorithm
//!
//! The forward generator keeps the index `i` just after the last reported
//! mismatch. `next` computes `π = lcp(S[i..), Q^∞[off+i..))` with three
//! primitive `lcp` calls; if `i + π` reaches `|S|` the generator is
//! exhausted, otherwise `i + π` is reported and `i` moves to `i + π + 1`.
//! The reverse generator mirrors this with `lcp_r`, walking leftwards from
//! the end of `S` against the left-infinite power of `Q` that ends at a given
//! offset.
//!
//! # Invariants
//!
//! * Forward positions are strictly increasing, reverse positions strictly
//!   decreasing; both are reported in `S` coordinates.
//! * Once exhausted, a generator stays exhausted (both are fused).

use std::iter::FusedIterator;

use pillar_core::{lcp_power_from, lcs_power_until, Frag, Pillar, UNBOUNDED};

/// Enumerates `Mis(S, Q^∞[off..))` in increasing order.
#[derive(Clone, Debug)]
pub struct MismGenerator<'a, B: Pillar + ?Sized> {
    backend: &'a B,
    s: Frag,
    q: Frag,
    off: usize,
    i: usize,
}

impl<'a, B: Pillar + ?Sized> MismGenerator<'a, B> {
    /// Mismatches between `s` and `q^∞`.
    pub fn new(backend: &'a B, s: Frag, q: Frag) -> Self {
        Self::with_offset(backend, s, q, 0)
    }

    /// Mismatches between `s` and `rot^j(q)^∞`, where `rot` moves the last
    /// character to the front.
    pub fn with_rotation(backend: &'a B, s: Frag, q: Frag, j: usize) -> Self {
        let ql = q.len();
        Self::with_offset(backend, s, q, (ql - j % ql) % ql)
    }

    /// Mismatches between `s` and `q^∞[off..)`.
    pub fn with_offset(backend: &'a B, s: Frag, q: Frag, off: usize) -> Self {
        assert!(!q.is_empty(), "power of an empty string");
        MismGenerator {
            backend,
            s,
            q,
            off: off % q.len(),
            i: 0,
        }
    }
}

impl<B: Pillar + ?Sized> Iterator for MismGenerator<'_, B> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        let n = self.s.len();
        if self.i >= n {
            return None;
        }
        let pi = lcp_power_from(
            self.backend,
            self.s.suffix(self.i),
            self.q,
            self.off + self.i,
            UNBOUNDED,
        );
        let pos = self.i + pi;
        if pos >= n {
            self.i = n;
            return None;
        }
        self.i = pos + 1;
        Some(pos)
    }
}

impl<B: Pillar + ?Sized> FusedIterator for MismGenerator<'_, B> {}

/// Enumerates the mismatches between `S` and the left-infinite power of `Q`
/// aligned so that `S`'s last character faces `Q^∞[end-1]`, in decreasing
/// order of position.
#[derive(Clone, Debug)]
pub struct MismGeneratorRev<'a, B: Pillar + ?Sized> {
    backend: &'a B,
    s: Frag,
    q: Frag,
    end: usize,
    /// Length of the still unexplored prefix of `s`.
    i: usize,
}

impl<'a, B: Pillar + ?Sized> MismGeneratorRev<'a, B> {
    /// Mismatches of `s` against the power of `q` that would continue with
    /// `q[0]` right after `s`.
    pub fn new(backend: &'a B, s: Frag, q: Frag) -> Self {
        Self::ending_at(backend, s, q, 0)
    }

    /// Mismatches of `s` against the power of `q` that would continue with
    /// `q[end mod |q|]` right after `s`.
    pub fn ending_at(backend: &'a B, s: Frag, q: Frag, end: usize) -> Self {
        assert!(!q.is_empty(), "power of an empty string");
        MismGeneratorRev {
            backend,
            s,
            q,
            end: end % q.len(),
            i: s.len(),
        }
    }
}

impl<B: Pillar + ?Sized> Iterator for MismGeneratorRev<'_, B> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.i == 0 {
            return None;
        }
        let ql = self.q.len();
        let consumed = (self.s.len() - self.i) % ql;
        let end = (self.end + ql - consumed) % ql;
        let pi = lcs_power_until(self.backend, self.s.prefix(self.i), self.q, end, UNBOUNDED);
        if pi >= self.i {
            self.i = 0;
            return None;
        }
        let pos = self.i - pi - 1;
        self.i = pos;
        Some(pos)
    }
}

impl<B: Pillar + ?Sized> FusedIterator for MismGeneratorRev<'_, B> {}

/// `Mis(s, q^∞)` in increasing order.
pub fn mismatches<B: Pillar + ?Sized>(backend: &B, s: Frag, q: Frag) -> Vec<usize> {
    MismGenerator::new(backend, s, q).collect()
}

/// `δ_H(s, t)` if it is at most `cap`, otherwise `cap + 1`.
pub fn hamming_capped<B: Pillar + ?Sized>(backend: &B, s: Frag, t: Frag, cap: usize) -> usize {
    assert_eq!(s.len(), t.len(), "Hamming distance needs equal lengths");
    if s.is_empty() {
        return 0;
    }
    MismGenerator::new(backend, s, t).take(cap.saturating_add(1)).count()
}

/// Whether `δ_H(s, t) <= k`; stops after `k + 1` mismatches.
pub fn verify_hd<B: Pillar + ?Sized>(backend: &B, s: Frag, t: Frag, k: usize) -> bool {
    hamming_capped(backend, s, t, k) <= k
}
