//! Linear-time routines on plain byte slices shared by the backends.
//!
//! These back the query-time realisation of `ipm`: both backends
//! materialise the (at most three pattern-lengths long) windows involved and
//! scan them with the Z-function.

use crate::ArithmeticProgression;

/// The Z-array of `s`: `z[i]` is the length of the longest common prefix of
/// `s` and `s[i..]`, with `z[0] = |s|`.
pub fn z_array(s: &[u8]) -> Vec<usize> {
    let n = s.len();
    let mut z = vec![0; n];
    if n == 0 {
        return z;
    }
    z[0] = n;
    let (mut l, mut r) = (0, 0);
    for i in 1..n {
        let mut len = if i < r { (r - i).min(z[i - l]) } else { 0 };
        while i + len < n && s[len] == s[i + len] {
            len += 1;
        }
        if i + len > r {
            l = i;
            r = i + len;
        }
        z[i] = len;
    }
    z
}

/// For every `i`, the length of the longest common prefix of `t[i..]` and
/// `p`, given the Z-array of `p`.
pub fn match_lengths(p: &[u8], zp: &[usize], t: &[u8]) -> Vec<usize> {
    let (m, n) = (p.len(), t.len());
    let mut ext = vec![0; n];
    let (mut l, mut r) = (0, 0);
    for i in 0..n {
        let mut len = if i < r { (r - i).min(zp[i - l]) } else { 0 };
        if i + len >= r {
            while len < m && i + len < n && t[i + len] == p[len] {
                len += 1;
            }
            if i + len > r {
                l = i;
                r = i + len;
            }
        }
        ext[i] = len;
    }
    ext
}

/// Smallest period of the string whose Z-array is `z`.
pub fn period_from_z(z: &[usize]) -> usize {
    let n = z.len();
    (1..n).find(|&q| q + z[q] == n).unwrap_or(n)
}

/// All exact occurrences of a non-empty `p` in `t`, in increasing order.
pub fn occurrences(p: &[u8], t: &[u8]) -> Vec<usize> {
    assert!(!p.is_empty(), "empty pattern");
    let zp = z_array(p);
    match_lengths(p, &zp, t)
        .into_iter()
        .enumerate()
        .filter(|&(_, l)| l == p.len())
        .map(|(i, _)| i)
        .collect()
}

/// Exact occurrences of a non-empty `p` in `t` as one progression.
///
/// When `|t| <= 2|p|` the occurrences always form an arithmetic progression.
/// With three or more occurrences the difference is `per(p)`; with exactly
/// two it is their distance (a period of `p`, though not necessarily the
/// smallest one, e.g. `aba` in `abaaba`); with fewer it is 1.
pub fn ipm_bytes(p: &[u8], t: &[u8]) -> ArithmeticProgression {
    assert!(!p.is_empty(), "empty pattern");
    let zp = z_array(p);
    let ext = match_lengths(p, &zp, t);
    let hits: Vec<usize> = ext
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l == p.len())
        .map(|(i, _)| i)
        .collect();
    match hits.len() {
        0 => ArithmeticProgression::empty(),
        1 => ArithmeticProgression::new(hits[0], 1, 1),
        c => {
            let diff = hits[1] - hits[0];
            debug_assert!(hits.windows(2).all(|w| w[1] - w[0] == diff));
            debug_assert!(c == 2 || diff == period_from_z(&zp));
            ArithmeticProgression::new(hits[0], diff, c)
        }
    }
}
