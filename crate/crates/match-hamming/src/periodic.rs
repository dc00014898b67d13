//! The periodic case: occurrences of a pattern that is close to a power of
//! a short primitive string `Q`.
//!
//! # Algorithm
//!
//! 1. `find_rotation`: the Boyer–Moore majority of the first `2k+1`
//!    length-`|Q|` blocks of `S` is the only rotation of `Q` that can be
//!    within `k` mismatches of `S`; verify it with a mismatch generator and
//!    locate it among the rotations of `Q`.
//! 2. `find_relevant_fragment_hd`: for `m ≤ n ≤ 3m/2`, every occurrence
//!    covers `T[n-m..m)`, so the rotation of `Q` fitting that middle part
//!    fixes the phase of all occurrences. Grow a fragment around it in both
//!    directions while staying within `⌊3d/2⌋` mismatches of the phase-aligned
//!    power of `Q`.
//! 3. `distances_rle`: with `P` and `T'` both aligned to `Q^∞`, the distance
//!    `h_j = δ_H(T'[jq..jq+m), P)` equals the mismatches of the window with
//!    `Q^∞`, plus those of `P`, minus a correction wherever a mismatch of `T'`
//!    meets a mismatch of `P`. All three are expressed as weighted events on
//!    shifts and swept in sorted order to produce runs of equal `h_j`.
//! 4. `periodic_matches_hd`: split `T` into overlapping blocks of length
//!    `< 3m/2`, and report the runs with `h_j ≤ k` as arithmetic progressions
//!    with difference `|Q|`.
//!
//! # Invariants
//!
//! * `distances_rle` run lengths are positive, adjacent runs differ, and the
//!   counts sum to `⌊(|T'|-m)/q⌋ + 1`.
//! * Every block of `periodic_matches_hd` contains each occurrence starting
//!   in `[⌊im/2⌋, ⌊(i+1)m/2⌋)` entirely, so blocks jointly cover every start.
//!
//! # Design Notes
//!
//! When the forward (backward) extension of the relevant fragment never
//! exhausts its mismatch budget, the fragment is extended to the end
//! (start, at the right phase) of the text; a fragment ending at `m` would
//! cut off occurrences that end beyond it.

use pillar_core::{equal, rotations, ArithmeticProgression, Frag, OccurrenceSet, Pillar};

use crate::generator::{mismatches, MismGenerator, MismGeneratorRev};

/// Run-length encoded sequence of distances: `(value, run length)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RleDistanceSeq {
    pub runs: Vec<(usize, usize)>,
}

impl RleDistanceSeq {
    fn push(&mut self, value: usize, count: usize) {
        if count == 0 {
            return;
        }
        match self.runs.last_mut() {
            Some((v, c)) if *v == value => *c += count,
            _ => self.runs.push((value, count)),
        }
    }

    /// The sequence with every run expanded.
    pub fn expand(&self) -> Vec<usize> {
        self.runs.iter().flat_map(|&(v, c)| std::iter::repeat_n(v, c)).collect()
    }

    /// Number of entries.
    pub fn total(&self) -> usize {
        self.runs.iter().map(|r| r.1).sum()
    }
}

/// The unique `j ∈ [0, |q|)` with `δ_H(s, rot^j(q)^*) ≤ k`, if any.
///
/// Requires `q` primitive and `|s| ≥ (2k+1)|q|`.
pub fn find_rotation<B: Pillar + ?Sized>(backend: &B, k: usize, q: Frag, s: Frag) -> Option<usize> {
    let ql = q.len();
    assert!(ql > 0, "empty period");
    assert!(
        s.len() >= (2 * k + 1) * ql,
        "find_rotation needs |s| >= (2k+1)|q| (|s| = {}, k = {k}, |q| = {ql})",
        s.len()
    );
    let block = |i: usize| s.sub(i * ql, (i + 1) * ql);
    // Boyer–Moore majority vote; the earliest block wins ties.
    let mut cand = 0usize;
    let mut votes = 0usize;
    for i in 0..=2 * k {
        if votes == 0 {
            cand = i;
            votes = 1;
        } else if equal(backend, block(cand), block(i)) {
            votes += 1;
        } else {
            votes -= 1;
        }
    }
    let qbar = block(cand);
    let agree = (0..=2 * k).filter(|&i| equal(backend, qbar, block(i))).count();
    if agree < k + 1 {
        return None;
    }
    if MismGenerator::new(backend, s, qbar).nth(k).is_some() {
        return None;
    }
    let rots = rotations(backend, q, qbar).expect("equal lengths");
    if rots.is_empty() {
        None
    } else {
        Some(rots.first)
    }
}

/// A fragment `T' = t[ℓ..r)` with `δ_H(T', Q^*) ≤ 3d` such that, for all
/// `k ≤ d/2`, every `k`-mismatch occurrence of `p` in `t` lies in `T'` and
/// starts at a multiple of `|q|` within it. `None` means there are none.
///
/// Requires `m ≤ n ≤ 3m/2`, `q` primitive, `|q| ≤ m/8d` and
/// `δ_H(p, q^*) ≤ d`.
pub fn find_relevant_fragment_hd<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, d: usize, q: Frag) -> Option<Frag> {
    let (m, n) = (p.len(), t.len());
    assert!(m <= n && 2 * n <= 3 * m, "relevant fragment needs m <= n <= 3m/2");
    let ql = q.len();
    let j = find_rotation(backend, 3 * d / 2, q, t.sub(n - m, m))?;
    // t[base..) is aligned with q^∞.
    let base = n - m + j;
    let within = |delta: usize| 2 * delta <= 3 * d;

    let mut delta = 0usize;
    let mut r = base;
    let mut fwd = MismGenerator::new(backend, t.suffix(base), q);
    while within(delta) {
        match fwd.next() {
            Some(pi) => {
                r = base + pi;
                delta += 1;
            }
            None => break,
        }
    }
    if within(delta) {
        r = n;
    }

    let l0 = base % ql;
    let mut l = base;
    let mut delta = 0usize;
    let mut bwd = MismGeneratorRev::new(backend, t.sub(l0, base), q);
    while within(delta) {
        match bwd.next() {
            Some(pi) => {
                l = l0 + ql * (pi + 1).div_ceil(ql);
                delta += 1;
            }
            None => break,
        }
    }
    if within(delta) {
        l = l0;
    }
    Some(t.sub(l, r))
}

/// Run-length encoding of `h_j = δ_H(t[jq..jq+m), p)` for
/// `0 ≤ j ≤ (n-m)/q`, where `q = |q|` and both `p` and `t` are compared
/// with `q^∞` from their first character.
pub fn distances_rle<B: Pillar + ?Sized>(backend: &B, p: Frag, t: Frag, q: Frag) -> RleDistanceSeq {
    let (m, n, ql) = (p.len() as i64, t.len() as i64, q.len() as i64);
    let mut out = RleDistanceSeq::default();
    if n < m {
        return out;
    }
    let mis_t = mismatches(backend, t, q);
    let mis_p = mismatches(backend, p, q);
    let p_chars: Vec<u8> = mis_p.iter().map(|&x| backend.access(p, x)).collect();
    // Event (i, w): adds w to every shift strictly greater than i.
    let mut events: Vec<(i64, i64)> = Vec::with_capacity(mis_t.len() * (2 + 2 * mis_p.len()));
    for &tau in &mis_t {
        let tc = backend.access(t, tau);
        let tau = tau as i64;
        events.push((tau - m, 1));
        events.push((tau, -1));
        for (&pi, &pc) in mis_p.iter().zip(&p_chars) {
            let w = (pc != tc) as i64;
            let pi = pi as i64;
            events.push((tau - pi - 1, w - 2));
            events.push((tau - pi, 2 - w));
        }
    }
    events.sort_unstable();
    let ceil_div = |a: i64| (a + ql - 1).div_euclid(ql);
    let mut h = mis_p.len() as i64;
    let mut i = 0i64;
    for &(pos, w) in &events {
        if pos < 0 {
            h += w;
            continue;
        }
        if pos >= n - m {
            break;
        }
        out.push(h as usize, (ceil_div(pos + 1) - ceil_div(i)) as usize);
        i = pos + 1;
        h += w;
    }
    out.push(h as usize, (ceil_div(n - m + 1) - ceil_div(i)) as usize);
    out
}

/// `Occ^H_k(p, t)` for a pattern with `δ_H(p, q^*) ≤ d`, as progressions
/// with difference `|q|`.
///
/// Requires `d ≥ 2k`, `q` primitive and `|q| ≤ m/8d`.
pub fn periodic_matches_hd<B: Pillar + ?Sized>(
    backend: &B,
    p: Frag,
    t: Frag,
    k: usize,
    d: usize,
    q: Frag,
) -> OccurrenceSet {
    let (m, n) = (p.len(), t.len());
    if n < m {
        return OccurrenceSet::new();
    }
    let ql = q.len();
    let mut progs = Vec::new();
    for i in 0..2 * n / m {
        let lo = i * m / 2;
        let hi = n.min((i + 3) * m / 2 - 1);
        if hi < lo + m {
            continue;
        }
        let Some(rel) = find_relevant_fragment_hd(backend, p, t.sub(lo, hi), d, q) else {
            continue;
        };
        let base = rel.start - t.start;
        let mut idx = 0usize;
        for &(h, c) in &distances_rle(backend, p, rel, q).runs {
            if h <= k {
                progs.push(ArithmeticProgression::new(base + idx * ql, ql, c));
            }
            idx += c;
        }
    }
    OccurrenceSet::from_progressions(progs)
}
