//! Locked fragments: a sparse decomposition of a string that is close to a
//! power of `Q`, isolating every place where the string deviates from the
//! power.
//!
//! Outside the locked fragments, `S` consists of exact copies of `Q` that an
//! optimal alignment matches without error. Two texts that are both close to
//! `Q^∞` can only disagree where a locked fragment of one meets a locked
//! fragment of the other.
//!
//! # Algorithm
//!
//! 1. Find a witness `Q^∞[x..y)` for `edl(S, Q)` and rebuild an optimal
//!    alignment of `S` with `Q^∞[x..)` using the edit generator.
//! 2. Walk the alignment errors in order while maintaining:
//!    * the current copy `Q^∞[ℓ_Q..r_Q)` of `Q`;
//!    * the piece `S[ℓ_S..r_S)` of `S` aligned with that copy;
//!    * the number of errors `Δ` charged to that piece.
//!
//!    An error beyond `r_Q` closes the current piece and queues it with its
//!    budget. Error-free copies in between are skipped, and a new piece
//!    starts at the copy that holds the error. Deletions and insertions
//!    move `r_S` by one. The first piece carries an extra budget of `k+1`.
//!    The end of the alignment is processed as one extra, uncharged error.
//! 3. Merge the queued pieces left to right. A piece absorbs its neighbours
//!    when they touch or overlap. While its budget is positive, it grows by
//!    `|Q|` on each side and pays one unit. A piece with zero budget and no
//!    touching neighbour is final.
//!
//! # Invariants
//!
//! * Fragments are disjoint and sorted. The first is a prefix of `S` and
//!   the last a suffix of `S`. Only a final suffix can be empty, and it
//!   still matters, because it marks the alignments that run off the end
//!   of the string.
//! * `Σ edl(L_i, Q) = edl(S, Q)`, and every inner fragment has a positive
//!   `edl`.
//! * The total length is at most `(5|Q|+1)·d + 2(k+1)|Q|`, where `d ≥
//!   edl(S, Q)` is the caller's bound. With `edl` in place of `d` the bound
//!   can fail: for an error-free `S`, the prefix and suffix pieces shorter
//!   than `|Q|` already exceed `2(k+1)|Q|` when `k = 0`.
//!
//! # Design Notes
//!
//! Merges accept overlap as well as adjacency. Growing a piece by `|Q|`
//! can make it overlap the previous final piece, and such pieces must be
//! united.
//!
//! When no witness exists, which happens only if the caller's bound on
//! `edl(S, Q)` is wrong, all of `S` is returned as a single locked
//! fragment. This is a valid but uninformative decomposition.

use std::collections::VecDeque;

use pillar_core::{Frag, Pillar};

use crate::generator::{EditGenerator, EditOp};
use crate::witness::find_a_witness;

/// Ordered disjoint locked fragments `S[start..end)`, as `(start, end)`
/// pairs relative to `S`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LockedFragments {
    pub fragments: Vec<(usize, usize)>,
}

impl LockedFragments {
    /// Total length of all fragments.
    pub fn total_len(&self) -> usize {
        self.fragments.iter().map(|&(l, r)| r - l).sum()
    }

    /// Number of fragments.
    pub fn len(&self) -> usize {
        self.fragments.len()
    }

    /// Whether there are no fragments.
    pub fn is_empty(&self) -> bool {
        self.fragments.is_empty()
    }
}

/// Locked fragments of `s` with respect to `q`. The first fragment is
/// `k`-locked.
///
/// Requires a primitive `q`, `edl(s, q) ≤ d` and `|s| ≥ (2d+1)|q|`.
pub fn locked<B: Pillar + ?Sized>(backend: &B, s: Frag, q: Frag, d: usize, k: usize) -> LockedFragments {
    let sl = s.len();
    let ql = q.len() as isize;
    let Some((x, _)) = find_a_witness(backend, d, q, s) else {
        return LockedFragments {
            fragments: vec![(0, sl)],
        };
    };
    let mut gen = EditGenerator::with_offset(backend, s, q, x);
    let (mut pi, mut pi2) = gen.next_prefix();
    while pi < sl {
        (pi, pi2) = gen.next_prefix();
    }
    let ops = gen.alignment().expect("generator has been advanced").ops;

    // Phase 1: interesting pieces with budgets.
    let xi = x as isize;
    let mut l_s: isize = 0;
    let mut r_q = ql * (xi + ql - 1).div_euclid(ql);
    let mut r_s = r_q - xi;
    let mut delta = k + 1;
    let mut queue: VecDeque<(isize, isize, usize)> = VecDeque::new();
    let pairs = ops
        .iter()
        .map(|op| match *op {
            EditOp::Substitute(i, j) => (Some(i as isize), Some(j as isize), true),
            EditOp::Delete(i) => (Some(i as isize), None, true),
            EditOp::Insert(j) => (None, Some(j as isize), true),
        })
        .chain(std::iter::once((Some(pi as isize), Some(pi2 as isize), false)));
    for (sp, qp, real) in pairs {
        let sv = sp.unwrap_or_else(|| qp.unwrap() + xi + r_s - r_q - 1);
        let qv = qp.unwrap_or_else(|| sv - xi + r_q - r_s - 1);
        if xi + qv >= r_q {
            queue.push_back((l_s, r_s, delta));
            let l_q = ql * (xi + qv).div_euclid(ql);
            l_s = r_s + l_q - r_q;
            r_q = l_q + ql;
            delta = 0;
        }
        r_s = r_q - xi + sv - qv;
        if real {
            delta += 1;
        }
    }
    queue.push_back((l_s, sl as isize, delta));

    // Phase 2: merge.
    let slen = sl as isize;
    let mut done: Vec<(isize, isize)> = Vec::new();
    while let Some((mut l, mut r, mut budget)) = queue.pop_front() {
        loop {
            if let Some(&(l2, r2)) = done.last() {
                if r2 >= l {
                    l = l.min(l2);
                    r = r.max(r2);
                    done.pop();
                    continue;
                }
            }
            if let Some(&(l2, r2, b2)) = queue.front() {
                if l2 <= r {
                    l = l.min(l2);
                    r = r.max(r2);
                    budget += b2;
                    queue.pop_front();
                    continue;
                }
            }
            if budget > 0 {
                l = (l - ql).max(0);
                r = (r + ql).min(slen);
                budget -= 1;
                continue;
            }
            done.push((l, r));
            break;
        }
    }
    LockedFragments {
        fragments: done
            .into_iter()
            .map(|(l, r)| (l.clamp(0, slen) as usize, r.clamp(0, slen) as usize))
            .collect(),
    }
}
