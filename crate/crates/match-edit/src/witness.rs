//! Witnesses for `edl(S, Q) ≤ k`: a fragment `Q^∞[x..y)` with
//! `δ_E(S, Q^∞[x..y)) = edl(S, Q)`.
//!
//! # Algorithm
//!
//! 1. Candidate starts. If `|Q| ≤ 3k+1`, every residue `[0, |Q|)` is a
//!    candidate. Otherwise, split the first `(2k+1)|Q|` characters of `S`
//!    into blocks of length `|Q|`. An alignment with at most `k` edits
//!    leaves at least `k+1` blocks untouched, and an untouched block
//!    `S_i = Q^∞[y..y+|Q|)` pins the start residue to within `k` of `y`.
//!    So collect the residues `y` of all blocks that are rotations of `Q`.
//!    Take the union of all cyclic windows `[p, p+k]` holding at least
//!    `k+1` of them. Such windows pairwise share a residue, so the union
//!    is a single cyclic arc `J` of at most `3k+1` residues.
//! 2. Verify every start `x ∈ J` against `Q^∞[x..)`. Keep the cheapest,
//!    with the lowest `x` on ties.
//! 3. Rerun the generator from the chosen `x` with that many edits. Its
//!    second coordinate is the witness length.
//!
//! # Invariants
//!
//! * The result `(x, y)` has `x ∈ [0, 2|Q|)`, `x ≤ y`, and
//!   `δ_E(S, Q^∞[x..y)) = edl(S, Q) ≤ k`.
//! * `None` is returned exactly when `edl(S, Q) > k`.
//!
//! # Design Notes
//!
//! Starts are verified in increasing order with a shrinking budget. After
//! a start of cost `c` has been found, later starts only need to beat
//! `c`, so each verification stops at `c - 1` edits.
//!
//! When `S` is too short for `2k+1` blocks and `|Q| > 3k+1`, the full
//! residue range is used. The result is the same, only slower.

use pillar_core::{rotations, Frag, Pillar};

use crate::generator::{cost_to_power, EditGenerator};

/// Candidate start residues, as a list of starts in `[0, 2|q|)`.
fn candidate_starts<B: Pillar + ?Sized>(backend: &B, k: usize, q: Frag, s: Frag) -> Vec<usize> {
    let ql = q.len();
    if ql <= 3 * k + 1 || s.len() < (2 * k + 1) * ql {
        return (0..ql).collect();
    }
    let mut res: Vec<usize> = (0..=2 * k)
        .filter_map(|i| {
            let block = s.sub(i * ql, (i + 1) * ql);
            let rots = rotations(backend, block, q).expect("equal lengths");
            // q primitive: at most one rotation maps the block onto q.
            (!rots.is_empty()).then_some(rots.first)
        })
        .collect();
    if res.len() < k + 1 {
        return Vec::new();
    }
    res.sort_unstable();
    let cnt = res.len();
    let unrolled = |i: usize| res[i % cnt] + (i / cnt) * ql;
    // Windows of k+1 consecutive residues spanning at most k.
    let mut arcs: Vec<(isize, isize)> = Vec::new();
    for a in 0..cnt {
        let (lo, hi) = (unrolled(a), unrolled(a + k));
        if hi - lo <= k {
            arcs.push((hi as isize - k as isize, lo as isize + k as isize));
        }
    }
    let Some(&(l0, _)) = arcs.first() else {
        return Vec::new();
    };
    let qi = ql as isize;
    let (mut lo, mut hi) = (isize::MAX, isize::MIN);
    for (l, h) in arcs {
        // Shift by a multiple of |q| so that the arc lies next to the first.
        let shift = (l - l0 + qi / 2).div_euclid(qi) * qi;
        lo = lo.min(l - shift);
        hi = hi.max(h - shift);
    }
    let base = lo.div_euclid(qi) * qi;
    ((lo - base) as usize..=(hi - base) as usize).collect()
}

/// `(x, y)` with `δ_E(s, q^∞[x..y)) = edl(s, q) ≤ k`, or `None` if
/// `edl(s, q) > k`. Requires a primitive `q`.
pub fn find_a_witness<B: Pillar + ?Sized>(backend: &B, k: usize, q: Frag, s: Frag) -> Option<(usize, usize)> {
    assert!(!q.is_empty(), "empty period");
    let mut best: Option<(usize, usize)> = None;
    for x in candidate_starts(backend, k, q, s) {
        let cap = match best {
            Some((_, 0)) => break,
            Some((_, c)) => c - 1,
            None => k,
        };
        if let Some(c) = cost_to_power(backend, s, q, x, cap) {
            best = Some((x, c));
        }
    }
    let (x, cost) = best?;
    let mut gen = EditGenerator::with_offset(backend, s, q, x).without_alignment();
    let mut last = (0, 0);
    for _ in 0..=cost {
        last = gen.next_prefix();
    }
    Some((x, x + last.1))
}
