//! Fragment handles.

use crate::PillarError;

/// A reference to the substring `owner[start..end)` of a string held by a
/// backend. Handles are plain values: copying one never copies text.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frag {
    /// Backend-assigned identifier of the underlying string.
    pub owner: u32,
    /// Inclusive start offset in the owner string.
    pub start: usize,
    /// Exclusive end offset in the owner string.
    pub end: usize,
}

impl Frag {
    /// Creates a handle; panics if `start > end`.
    pub fn new(owner: u32, start: usize, end: usize) -> Self {
        assert!(start <= end, "fragment start {start} exceeds end {end}");
        Frag { owner, start, end }
    }

    /// Number of characters in the fragment.
    #[inline]
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    /// Whether the fragment is empty.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    /// The sub-fragment `self[l..r)`, or a range error.
    pub fn extract(&self, l: usize, r: usize) -> Result<Frag, PillarError> {
        if l > r || r > self.len() {
            return Err(PillarError::Range { l, r, len: self.len() });
        }
        Ok(Frag {
            owner: self.owner,
            start: self.start + l,
            end: self.start + r,
        })
    }

    /// The sub-fragment `self[l..r)`; panics when out of range.
    ///
    /// Internal algorithms use this where the range is correct by
    /// construction.
    #[inline]
    #[track_caller]
    pub fn sub(&self, l: usize, r: usize) -> Frag {
        debug_assert!(l <= r && r <= self.len(), "sub({l},{r}) of length {}", self.len());
        Frag {
            owner: self.owner,
            start: self.start + l,
            end: self.start + r,
        }
    }

    /// The suffix `self[l..)`.
    #[inline]
    #[track_caller]
    pub fn suffix(&self, l: usize) -> Frag {
        self.sub(l, self.len())
    }

    /// The prefix `self[..r)`.
    #[inline]
    #[track_caller]
    pub fn prefix(&self, r: usize) -> Frag {
        self.sub(0, r)
    }
}
