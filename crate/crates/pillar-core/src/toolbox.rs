//! Operations derived from the PILLAR primitives.
//!
//! # Algorithm
//!
//! Longest common prefix against an infinite power `Q^∞` needs at most three
//! primitive `lcp` calls:
//! 1. compare `S` with the rest of the current copy of `Q`;
//! 2. if that copy is fully matched, compare the remainder `S'` with `Q`;
//! 3. if `S'` starts with a full copy of `Q`, the match continues exactly as
//!    far as `S'` agrees with itself shifted by `|Q|`.
//!
//! The suffix variant mirrors this with `lcp_r`.
//!
//! # Invariants
//!
//! * All functions accept any backend and only use its primitives.
//! * Results are capped at the requested extent and never exceed `|S|`.

use crate::{strings, ArithmeticProgression, Frag, OccurrenceSet, Pillar, PillarError};

/// Whether `s` and `t` spell the same string.
pub fn equal<B: Pillar + ?Sized>(b: &B, s: Frag, t: Frag) -> bool {
    s.len() == t.len() && b.lcp(s, t) == s.len()
}

/// `lcp(S, Q^∞[off..off+cap))`.
pub fn lcp_power_from<B: Pillar + ?Sized>(b: &B, s: Frag, q: Frag, off: usize, cap: usize) -> usize {
    let ql = q.len();
    assert!(ql > 0, "power of an empty string");
    let cap = cap.min(s.len());
    if cap == 0 {
        return 0;
    }
    let o = off % ql;
    let head = ql - o;
    let x = b.lcp(s, q.suffix(o));
    if x < head || x >= cap {
        return x.min(cap);
    }
    let s1 = s.suffix(head);
    let y = b.lcp(s1, q);
    if y < ql || head + y >= cap {
        return (head + y).min(cap);
    }
    let z = b.lcp(s1.suffix(ql), s1);
    (head + ql + z).min(cap)
}

/// `lcp(S, Q^∞[l..r))`; pass [`crate::UNBOUNDED`] as `r` for no cap.
pub fn lcp_power<B: Pillar + ?Sized>(b: &B, s: Frag, q: Frag, l: usize, r: usize) -> usize {
    assert!(l <= r, "lcp_power needs l <= r");
    lcp_power_from(b, s, q, l, r - l)
}

/// Longest common suffix of `S` and the left-infinite power of `Q` that ends
/// just before absolute offset `end` of `Q^∞` (i.e. whose last character is
/// `Q[(end - 1) mod |Q|]`), capped at `cap`.
pub fn lcs_power_until<B: Pillar + ?Sized>(b: &B, s: Frag, q: Frag, end: usize, cap: usize) -> usize {
    let ql = q.len();
    assert!(ql > 0, "power of an empty string");
    let cap = cap.min(s.len());
    if cap == 0 {
        return 0;
    }
    let r0 = match end % ql {
        0 => ql,
        r => r,
    };
    let x = b.lcp_r(s, q.prefix(r0));
    if x < r0 || x >= cap {
        return x.min(cap);
    }
    let s1 = s.prefix(s.len() - r0);
    let y = b.lcp_r(s1, q);
    if y < ql || r0 + y >= cap {
        return (r0 + y).min(cap);
    }
    let z = b.lcp_r(s1.prefix(s1.len() - ql), s1);
    (r0 + ql + z).min(cap)
}

/// Longest common suffix of `S` and `Q^∞[l..r)`.
pub fn lcp_r_power<B: Pillar + ?Sized>(b: &B, s: Frag, q: Frag, l: usize, r: usize) -> usize {
    assert!(l <= r, "lcp_r_power needs l <= r");
    lcs_power_until(b, s, q, r, r - l)
}

/// `per(s)` if it is at most `|s|/2`, otherwise `None`.
///
/// Candidates are the occurrences of the first half of `s` in `s[1..)`; the
/// first one whose shift is a period of `s` is the smallest period.
pub fn period<B: Pillar + ?Sized>(b: &B, s: Frag) -> Option<usize> {
    let n = s.len();
    if n < 2 {
        return None;
    }
    let half = n.div_ceil(2);
    let occ = b
        .ipm(s.prefix(half), s.suffix(1))
        .expect("window satisfies ipm precondition");
    for pos in occ.iter() {
        let p = pos + 1;
        if 2 * p > n {
            break;
        }
        if b.lcp(s, s.suffix(p)) == n - p {
            return Some(p);
        }
    }
    None
}

/// All `j ∈ [0, |s|)` with `t = rot^j(s)`, where `rot` moves the last
/// character to the front.
pub fn rotations<B: Pillar + ?Sized>(b: &B, s: Frag, t: Frag) -> Result<ArithmeticProgression, PillarError> {
    let n = s.len();
    if n != t.len() {
        return Err(PillarError::Contract(format!(
            "rotations needs equal lengths, got {} and {}",
            n,
            t.len()
        )));
    }
    if n == 0 {
        return Ok(ArithmeticProgression::new(0, 1, 1));
    }
    let sb = b.bytes(s);
    let mut ss = Vec::with_capacity(2 * n - 1);
    ss.extend_from_slice(&sb);
    ss.extend_from_slice(&sb[..n - 1]);
    // t occurs at `pos` in s·s exactly when t = rot^{(n - pos) mod n}(s).
    let mut js: Vec<usize> = strings::occurrences(&b.bytes(t), &ss)
        .into_iter()
        .map(|pos| (n - pos) % n)
        .collect();
    js.sort_unstable();
    Ok(match js.len() {
        0 => ArithmeticProgression::empty(),
        1 => ArithmeticProgression::new(js[0], 1, 1),
        c => ArithmeticProgression::new(js[0], js[1] - js[0], c),
    })
}

/// All exact occurrences of a non-empty `p` in `t`.
///
/// Conceptually the text is covered by overlapping windows
/// `t[i·m .. min(n, (i+2)m-1))`, each answered by one `ipm` query (see
/// [`exact_matches_windowed`]). Because the query-time `ipm` materializes its
/// windows anyway, this function materializes `p` and `t` once and performs
/// the same search in a single linear scan; the output is identical.
pub fn exact_matches<B: Pillar + ?Sized>(b: &B, p: Frag, t: Frag) -> Result<OccurrenceSet, PillarError> {
    if p.is_empty() {
        return Err(PillarError::Contract("exact_matches needs a non-empty pattern".into()));
    }
    if t.len() < p.len() {
        return Ok(OccurrenceSet::new());
    }
    let pb = b.bytes(p);
    let tb = b.bytes(t);
    Ok(OccurrenceSet::from_positions(strings::occurrences(&pb, &tb)))
}

/// [`exact_matches`] computed literally as one `ipm` query per window.
pub fn exact_matches_windowed<B: Pillar + ?Sized>(b: &B, p: Frag, t: Frag) -> Result<OccurrenceSet, PillarError> {
    let (m, n) = (p.len(), t.len());
    if m == 0 {
        return Err(PillarError::Contract("exact_matches needs a non-empty pattern".into()));
    }
    let mut progs = Vec::new();
    for i in 0..n / m {
        let lo = i * m;
        let hi = n.min((i + 2) * m - 1);
        let ap = b.ipm(p, t.sub(lo, hi))?;
        if !ap.is_empty() {
            progs.push(ArithmeticProgression::new(ap.first + lo, ap.diff, ap.count));
        }
    }
    Ok(OccurrenceSet::from_progressions(progs))
}
