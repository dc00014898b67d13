//! The PILLAR interface: a small set of primitive string operations over
//! fragment handles, plus the toolbox of derived operations every matching
//! algorithm in this workspace is written against.
//!
//! A backend owns one or more strings and answers the primitives
//! ([`Pillar::access`], [`Pillar::lcp`], [`Pillar::lcp_r`], [`Pillar::ipm`],
//! plus the bookkeeping operations `length` and `extract` that are pure
//! arithmetic on [`Frag`] handles). Everything else — equality, periods,
//! rotations, longest common prefixes against infinite powers, exact pattern
//! matching — is derived here once, generically.
//!
//! # Invariants
//!
//! * A [`Frag`] always satisfies `start <= end`, and the backend that minted
//!   it guarantees `end <= len(owner)`.
//! * Toolbox functions never inspect characters directly except through the
//!   backend, so their output is identical across backends.
//!
//! # Design Notes
//!
//! Generators (resumable enumerations used by the matchers) are modelled as
//! fused [`Iterator`]s: once exhausted they keep returning `None`.

mod frag;
mod occurrences;
mod pillar;
pub mod plain;
pub mod strings;
mod toolbox;

pub use frag::Frag;
pub use occurrences::{ArithmeticProgression, OccurrenceSet};
pub use pillar::{Pillar, PillarError};
pub use toolbox::{
    equal, exact_matches, exact_matches_windowed, lcp_power, lcp_power_from, lcp_r_power, lcs_power_until, period,
    rotations,
};

/// Length value used to request an unbounded extent (e.g. `Q^∞[l..)`).
pub const UNBOUNDED: usize = usize::MAX;
