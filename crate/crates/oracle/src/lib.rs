//! Brute-force reference implementations.
//!
//! Every function here is a literal transcription of a textbook definition
//! (Hamming distance, edit distance, occurrence sets, periods, ...) with no
//! attempt at efficiency and no code shared with the production matchers.
//! They exist so that tests can compare the fast algorithms against an
//! obviously-correct answer.
//!
//! # Invariants
//!
//! * No function in this crate depends on any other workspace crate.
//! * Positions are 0-based; fragments are half-open `[l, r)`.
//! * Edit-distance occurrence starts range over `[0, n]` (an occurrence may
//!   align the pattern against a short, even empty, suffix of the text).
//!
//! # Design Notes
//!
//! The edit oracles restrict dynamic programming to the `2k+1` diagonals
//! that can possibly hold a value `<= k`; this is a pruning of the same
//! recurrence, not a different algorithm.

/// Number of positions at which `a` and `b` differ. Panics if lengths differ.
pub fn hamming(a: &[u8], b: &[u8]) -> usize {
    assert_eq!(a.len(), b.len(), "hamming distance needs equal lengths");
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// Classic unit-cost Levenshtein distance by full dynamic programming.
pub fn edit_distance(a: &[u8], b: &[u8]) -> usize {
    let mut prev: Vec<usize> = (0..=b.len()).collect();
    let mut cur = vec![0; b.len() + 1];
    for (i, &x) in a.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &y) in b.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// All start positions `i` with `hamming(p, t[i..i+m)) <= k`.
pub fn brute_hd_occurrences(p: &[u8], t: &[u8], k: usize) -> Vec<usize> {
    let m = p.len();
    if m > t.len() {
        return Vec::new();
    }
    (0..=t.len() - m).filter(|&i| hamming(p, &t[i..i + m]) <= k).collect()
}

/// `min_r δ_E(p, t[start..r))` if it is at most `k`, otherwise `None`.
///
/// Dynamic programming over pattern prefixes against text prefixes beginning
/// at `start`, limited to cells within `k` of the main diagonal.
pub fn min_edit_from(p: &[u8], t: &[u8], start: usize, k: usize) -> Option<usize> {
    let m = p.len();
    let avail = t.len() - start;
    let width = avail.min(m + k);
    let inf = usize::MAX / 2;
    // row a holds D[a][b] for b in [0, width]
    let mut prev = vec![inf; width + 1];
    for (b, cell) in prev.iter_mut().enumerate().take(k.min(width) + 1) {
        *cell = b;
    }
    for a in 1..=m {
        let mut cur = vec![inf; width + 1];
        let lo = a.saturating_sub(k);
        let hi = (a + k).min(width);
        if lo == 0 && a <= k {
            cur[0] = a;
        }
        for b in lo.max(1)..=hi {
            let sub = prev[b - 1] + usize::from(p[a - 1] != t[start + b - 1]);
            cur[b] = sub.min(prev[b] + 1).min(cur[b - 1] + 1);
        }
        prev = cur;
    }
    let best = prev.iter().copied().min().unwrap_or(inf);
    (best <= k).then_some(best)
}

/// All start positions `i ∈ [0, n]` such that some `j >= i` has
/// `δ_E(p, t[i..j)) <= k`.
pub fn brute_ed_occurrences(p: &[u8], t: &[u8], k: usize) -> Vec<usize> {
    (0..=t.len()).filter(|&i| min_edit_from(p, t, i, k).is_some()).collect()
}

/// The string `q^∞[from..to)`.
pub fn power_window(q: &[u8], from: usize, to: usize) -> Vec<u8> {
    assert!(!q.is_empty());
    (from..to).map(|i| q[i % q.len()]).collect()
}

/// Hamming distance from `s` to the length-`|s|` prefix of `q^∞[off..)`.
pub fn hd_to_power(s: &[u8], q: &[u8], off: usize) -> usize {
    hamming(s, &power_window(q, off, off + s.len()))
}

/// Positions where `s` differs from `q^∞[off..off+|s|)`.
pub fn mismatches_to_power(s: &[u8], q: &[u8], off: usize) -> Vec<usize> {
    let w = power_window(q, off, off + s.len());
    (0..s.len()).filter(|&i| s[i] != w[i]).collect()
}

/// `min_j δ_E(s, w[..j))`: one dynamic-programming table, minimum of its
/// last row.
pub fn distance_to_best_prefix(s: &[u8], w: &[u8]) -> usize {
    let mut prev: Vec<usize> = (0..=w.len()).collect();
    let mut cur = vec![0; w.len() + 1];
    for (i, &x) in s.iter().enumerate() {
        cur[0] = i + 1;
        for (j, &y) in w.iter().enumerate() {
            let sub = prev[j] + usize::from(x != y);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev.into_iter().min().unwrap_or(0)
}

/// Minimum edit distance between `s` and any substring of `q^∞`.
///
/// Every start residue of `q` is tried; the end is free. A cheapest alignment
/// never consumes more than `2|s|` characters of the power (beyond that it
/// would pay more than deleting everything), so that window suffices.
pub fn brute_edl(s: &[u8], q: &[u8]) -> usize {
    (0..q.len())
        .map(|i| distance_to_best_prefix(s, &power_window(q, i, i + 2 * s.len() + 1)))
        .min()
        .unwrap_or(s.len())
}

/// Minimum edit distance between `s` and a prefix of `q^∞[off..)`.
pub fn edit_to_power_prefix(s: &[u8], q: &[u8], off: usize) -> usize {
    distance_to_best_prefix(s, &power_window(q, off, off + 2 * s.len() + 1))
}

/// Length of the longest prefix `s[..r)` with `δ_E(s[..r), w[..j)) <= e` for
/// some `j`, where `w` is the supplied (already expanded) target.
pub fn longest_prefix_within(s: &[u8], w: &[u8], e: usize) -> usize {
    (0..=s.len())
        .rev()
        .find(|&r| (0..=w.len()).any(|j| edit_distance(&s[..r], &w[..j]) <= e))
        .unwrap_or(0)
}

/// Smallest period of `s` (its length when `s` is empty or aperiodic).
pub fn naive_period(s: &[u8]) -> usize {
    (1..=s.len())
        .find(|&p| (p..s.len()).all(|i| s[i] == s[i - p]))
        .unwrap_or(s.len())
}

/// All exact occurrences of `p` in `t` by sliding comparison.
pub fn naive_occurrences(p: &[u8], t: &[u8]) -> Vec<usize> {
    if p.len() > t.len() {
        return Vec::new();
    }
    (0..=t.len() - p.len()).filter(|&i| &t[i..i + p.len()] == p).collect()
}

/// Longest common prefix by character comparison.
pub fn naive_lcp(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Longest common suffix by character comparison.
pub fn naive_lcs(a: &[u8], b: &[u8]) -> usize {
    a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count()
}

/// Whether `s` is primitive (not a proper power of a shorter string).
pub fn is_primitive(s: &[u8]) -> bool {
    let p = naive_period(s);
    !(p < s.len() && s.len().is_multiple_of(p))
}

/// All `j ∈ [0, |s|)` with `t = rot^j(s)`, where `rot` moves the last
/// character to the front.
pub fn naive_rotations(s: &[u8], t: &[u8]) -> Vec<usize> {
    let n = s.len();
    (0..n)
        .filter(|&j| {
            let mut r = s.to_vec();
            r.rotate_right(j);
            r == t
        })
        .collect()
}
