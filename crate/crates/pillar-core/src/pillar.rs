//! The backend interface.

use std::borrow::Cow;

use thiserror::Error;

use crate::{strings, ArithmeticProgression, Frag};

/// Errors raised by PILLAR operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PillarError {
    /// A sub-range `[l, r)` does not fit a fragment of length `len`.
    #[error("range [{l}, {r}) out of bounds for fragment of length {len}")]
    Range { l: usize, r: usize, len: usize },
    /// A character index outside `[0, len)`.
    #[error("index {index} out of bounds for fragment of length {len}")]
    Index { index: usize, len: usize },
    /// An operation precondition was violated.
    #[error("contract violation: {0}")]
    Contract(String),
}

/// The primitive operations of the PILLAR model.
///
/// Implementors answer queries about fragments of the strings they own.
/// Handles passed in must have been minted by the same backend.
pub trait Pillar {
    /// The character `s[i]`. Panics when `i >= |s|`.
    fn access(&self, s: Frag, i: usize) -> u8;

    /// Length of the longest common prefix of `s` and `t`.
    fn lcp(&self, s: Frag, t: Frag) -> usize;

    /// Length of the longest common suffix of `s` and `t`.
    fn lcp_r(&self, s: Frag, t: Frag) -> usize;

    /// The characters of `s`, borrowed when the backend stores them plainly.
    fn bytes(&self, s: Frag) -> Cow<'_, [u8]>;

    /// Exact occurrences of `p` in `t`, which may be at most twice as long.
    ///
    /// Three or more occurrences are reported with difference `per(p)`, two
    /// with their distance, zero or one with difference 1.
    fn ipm(&self, p: Frag, t: Frag) -> Result<ArithmeticProgression, PillarError> {
        if p.is_empty() {
            return Err(PillarError::Contract("ipm needs a non-empty pattern".into()));
        }
        if t.len() > 2 * p.len() {
            return Err(PillarError::Contract(format!(
                "ipm text length {} exceeds twice the pattern length {}",
                t.len(),
                p.len()
            )));
        }
        Ok(strings::ipm_bytes(&self.bytes(p), &self.bytes(t)))
    }

    /// `|s|`.
    #[inline]
    fn length(&self, s: Frag) -> usize {
        s.len()
    }

    /// The handle of `s[l..r)`.
    #[inline]
    fn extract(&self, s: Frag, l: usize, r: usize) -> Result<Frag, PillarError> {
        s.extract(l, r)
    }

    /// Checked variant of [`Pillar::access`].
    fn try_access(&self, s: Frag, i: usize) -> Result<u8, PillarError> {
        if i >= s.len() {
            return Err(PillarError::Index { index: i, len: s.len() });
        }
        Ok(self.access(s, i))
    }
}

impl<B: Pillar + ?Sized> Pillar for &B {
    fn access(&self, s: Frag, i: usize) -> u8 {
        (**self).access(s, i)
    }
    fn lcp(&self, s: Frag, t: Frag) -> usize {
        (**self).lcp(s, t)
    }
    fn lcp_r(&self, s: Frag, t: Frag) -> usize {
        (**self).lcp_r(s, t)
    }
    fn bytes(&self, s: Frag) -> Cow<'_, [u8]> {
        (**self).bytes(s)
    }
    fn ipm(&self, p: Frag, t: Frag) -> Result<ArithmeticProgression, PillarError> {
        (**self).ipm(p, t)
    }
}
