//! Grammar-compressed strings: straight-line programs, their text format,
//! and a PILLAR backend answering queries without decompression.
//!
//! # Design Notes
//!
//! Longest common extensions use Karp–Rabin style fingerprints over two
//! Mersenne-61 fields in place of recompression-based structures; internal
//! pattern matching extracts the (short) windows involved and scans them.
//! Outputs are identical to decompress-and-scan up to fingerprint collisions,
//! which the boundary confirmation in `lcp` detects.

mod backend;
pub mod fingerprint;
mod grammar;
mod random;

pub use backend::SlpBackend;
pub use grammar::{Rule, Slp, SlpError, MAX_LEN};
pub use random::random_slp;

/// Text of the six-character example grammar `A1→a, A2→b, A3→A1A2,
/// A4→A1A3, A5→A4A4`, generating `aabaab`.
pub const AABAAB_GRAMMAR: &str = "SLP v1 5 5\n1 = 'a'\n2 = 'b'\n3 = 1 2\n4 = 1 3\n5 = 4 4\n";

/// `gen(g)[i]`.
pub fn slp_access(g: &Slp, i: u64) -> Option<u8> {
    g.access(i)
}

/// `gen(g)[l..r)`.
pub fn slp_extract(g: &Slp, l: u64, r: u64) -> Option<Vec<u8>> {
    g.extract(l, r)
}

/// Grammar for `gen(a)·gen(b)`.
pub fn slp_concat(a: &Slp, b: &Slp) -> Result<Slp, SlpError> {
    Slp::concat(a, b)
}

/// `lcp(gen[i..), gen[j..))` capped at `cap`, using fingerprints drawn from
/// `seed`.
pub fn slp_lcp(g: &Slp, i: u64, j: u64, cap: u64, seed: u64) -> u64 {
    let mut b = SlpBackend::new(seed);
    let h = b.add(g.clone());
    let n = h.len() as u64;
    let cap = cap.min(n - i.min(n)).min(n - j.min(n));
    b.lce(h.owner, i as usize, h.owner, j as usize, cap as usize) as u64
}

/// Internal pattern matching between two windows of one grammar's string:
/// occurrences of `gen[p.0..p.1)` starting in `gen[t.0..t.1)`, as an
/// arithmetic progression. Requires `|t| <= 2|p|`.
pub fn slp_ipm(g: &Slp, p: (u64, u64), t: (u64, u64)) -> pillar_core::ArithmeticProgression {
    let pb = g.extract(p.0, p.1).expect("pattern window within grammar");
    let tb = g.extract(t.0, t.1).expect("text window within grammar");
    pillar_core::strings::ipm_bytes(&pb, &tb)
}
