//! Suffix array by induced sorting (SA-IS) and the Kasai LCP array.
//!
//! # Algorithm
//!
//! 1. Classify every suffix as S-type (smaller than its successor) or
//!    L-type, and find the leftmost S-type positions (LMS).
//! 2. Place the LMS suffixes at the ends of their first-character buckets
//!    and induce the order of all L-type, then all S-type suffixes.
//! 3. This sorts the LMS substrings. Give equal substrings equal names,
//!    and if the names are not unique, sort the reduced string recursively.
//! 4. Induce once more from the LMS suffixes in their true order.
//!
//! The reduced string is at most half as long, so the total work is linear.
//!
//! # Invariants
//!
//! * `sa` is a permutation of `0..n`; `rank[sa[r]] = r`.
//! * `lcp[r]` is the longest common prefix of suffixes `sa[r-1]` and `sa[r]`
//!   (`lcp[0] = 0`).

/// Marks an empty suffix-array slot during induced sorting.
const NONE: u32 = u32::MAX;

/// Suffix array of `s`.
pub fn suffix_array(s: &[u8]) -> Vec<u32> {
    assert!(s.len() < NONE as usize, "text too long for 32-bit suffix indices");
    let text: Vec<u32> = s.iter().map(|&c| u32::from(c)).collect();
    sa_is(&text, 255)
}

/// SA-IS over the alphabet `[0, upper]`.
fn sa_is(s: &[u32], upper: u32) -> Vec<u32> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }
    let upper = upper as usize;
    // is_s[i]: suffix i is S-type (smaller than suffix i+1). The last
    // suffix is L-type against the virtual sentinel.
    let mut is_s = vec![false; n];
    for i in (0..n - 1).rev() {
        is_s[i] = if s[i] == s[i + 1] { is_s[i + 1] } else { s[i] < s[i + 1] };
    }
    // Bucket boundaries: sum_l[c] is where the L-suffixes of bucket c start,
    // sum_s[c] where its S-suffixes start.
    let mut sum_l = vec![0u32; upper + 2];
    let mut sum_s = vec![0u32; upper + 2];
    for i in 0..n {
        if is_s[i] {
            sum_l[s[i] as usize + 1] += 1;
        } else {
            sum_s[s[i] as usize] += 1;
        }
    }
    for c in 0..=upper {
        sum_s[c] += sum_l[c];
        sum_l[c + 1] += sum_s[c];
    }
    let induce = |lms: &[u32], sa: &mut [u32]| {
        sa.fill(NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            let c = s[d as usize] as usize;
            sa[buf[c] as usize] = d;
            buf[c] += 1;
        }
        let mut buf = sum_l.clone();
        let c = s[n - 1] as usize;
        sa[buf[c] as usize] = n as u32 - 1;
        buf[c] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !is_s[v as usize - 1] {
                let c = s[v as usize - 1] as usize;
                sa[buf[c] as usize] = v - 1;
                buf[c] += 1;
            }
        }
        let mut buf = sum_l.clone();
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && is_s[v as usize - 1] {
                let c = s[v as usize - 1] as usize + 1;
                buf[c] -= 1;
                sa[buf[c] as usize] = v - 1;
            }
        }
    };
    // Leftmost S-type positions, numbered left to right.
    let mut lms_index = vec![NONE; n];
    let lms: Vec<u32> = (1..n).filter(|&i| !is_s[i - 1] && is_s[i]).map(|i| i as u32).collect();
    for (j, &p) in lms.iter().enumerate() {
        lms_index[p as usize] = j as u32;
    }
    let m = lms.len();
    let mut sa = vec![NONE; n];
    induce(&lms, &mut sa);
    if m > 0 {
        // Name the LMS substrings in sorted order and sort them recursively.
        let mut sorted: Vec<u32> = sa.iter().copied().filter(|&v| lms_index[v as usize] != NONE).collect();
        let end_of = |p: u32| -> usize {
            let j = lms_index[p as usize] as usize + 1;
            if j < m {
                lms[j] as usize
            } else {
                n
            }
        };
        let mut names = vec![0u32; m];
        let mut name = 0u32;
        for i in 1..m {
            let (mut l, mut r) = (sorted[i - 1] as usize, sorted[i] as usize);
            let (end_l, end_r) = (end_of(sorted[i - 1]), end_of(sorted[i]));
            let mut same = end_l - l == end_r - r;
            if same {
                while l < end_l && s[l] == s[r] {
                    l += 1;
                    r += 1;
                }
                same = l < n && s[l] == s[r];
            }
            if !same {
                name += 1;
            }
            names[lms_index[sorted[i] as usize] as usize] = name;
        }
        let order = sa_is(&names, name);
        for (slot, &j) in sorted.iter_mut().zip(&order) {
            *slot = lms[j as usize];
        }
        induce(&sorted, &mut sa);
    }
    sa
}

/// Inverse permutation of a suffix array.
pub fn inverse(sa: &[u32]) -> Vec<u32> {
    let mut rank = vec![0u32; sa.len()];
    for (r, &p) in sa.iter().enumerate() {
        rank[p as usize] = r as u32;
    }
    rank
}

/// Kasai et al.'s LCP array.
pub fn lcp_array(s: &[u8], sa: &[u32], rank: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}
