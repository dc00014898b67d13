//! The PILLAR backend over straight-line programs.
//!
//! # Algorithm
//!
//! * `access`: descent from the start symbol.
//! * `lcp(s, t)`: galloping search over candidate lengths `1, 2, 4, …`
//!   followed by binary search, each probe comparing the fingerprints of
//!   the two length-`L` prefixes; the boundary is then confirmed with two
//!   `access` calls. A detected collision falls back to direct comparison.
//! * `lcp_r`: the same search over suffixes.
//! * Substring fingerprints: `h(gen[l..r)) = F(r) - F(l)·B^{r-l}` where the
//!   prefix fingerprint `F(i)` is accumulated along one root-to-leaf path
//!   from the cached fingerprints of the left siblings.
//!
//! # Invariants
//!
//! * Answers agree with direct comparison unless a fingerprint collision
//!   occurs and goes unnoticed by the boundary check; with two 61-bit fields
//!   this has probability below `10^-12` per query at the supported sizes.
//!
//! # Design Notes
//!
//! Query cost is `O(depth · log N)` per LCE rather than polylogarithmic:
//! the grammar is not recompressed or rebalanced.

use std::borrow::Cow;

use pillar_core::{Frag, Pillar};

use crate::fingerprint::{mul, sub, Bases, Fp};
use crate::grammar::{Rule, Slp};

/// A grammar plus its per-symbol fingerprints.
#[derive(Clone, Debug)]
struct Entry {
    slp: Slp,
    hash: Vec<Fp>,
    pow: Vec<Fp>,
}

/// A collection of grammar-compressed strings answering PILLAR queries.
#[derive(Clone, Debug)]
pub struct SlpBackend {
    bases: Bases,
    entries: Vec<Entry>,
}

impl SlpBackend {
    /// An empty backend whose fingerprint bases are drawn from `seed`.
    pub fn new(seed: u64) -> Self {
        SlpBackend {
            bases: Bases::from_seed(seed),
            entries: Vec::new(),
        }
    }

    /// Registers a grammar and returns the handle of its whole string.
    pub fn add(&mut self, slp: Slp) -> Frag {
        let n = slp.size();
        let mut hash = vec![[0u64; 2]; n];
        let mut pow = vec![[1u64; 2]; n];
        for &v in slp.topological_order() {
            let v = v as usize;
            match slp.rule(v) {
                Rule::Terminal(c) => {
                    hash[v] = self.bases.byte(c);
                    pow[v] = self.bases.0;
                }
                Rule::Pair(a, b) => {
                    let (a, b) = (a as usize, b as usize);
                    hash[v] = self.bases.concat(hash[a], hash[b], pow[b]);
                    pow[v] = [mul(pow[a][0], pow[b][0]), mul(pow[a][1], pow[b][1])];
                }
            }
        }
        let len = slp.len() as usize;
        self.entries.push(Entry { slp, hash, pow });
        Frag::new(self.entries.len() as u32 - 1, 0, len)
    }

    /// The grammar behind a handle's owner.
    pub fn grammar(&self, owner: u32) -> &Slp {
        &self.entries[owner as usize].slp
    }

    /// Fingerprint of `gen[0..i)` of grammar `owner`.
    pub fn prefix_fingerprint(&self, owner: u32, i: u64) -> Fp {
        let e = &self.entries[owner as usize];
        let mut acc: Fp = [0, 0];
        let mut a = e.slp.start();
        let mut rest = i;
        while rest > 0 {
            if rest == e.slp.symbol_len(a) {
                return self.bases.concat(acc, e.hash[a], e.pow[a]);
            }
            match e.slp.rule(a) {
                Rule::Terminal(_) => unreachable!("rest is 0 or 1 at a terminal"),
                Rule::Pair(l, r) => {
                    let (l, r) = (l as usize, r as usize);
                    let ll = e.slp.symbol_len(l);
                    if rest >= ll {
                        acc = self.bases.concat(acc, e.hash[l], e.pow[l]);
                        rest -= ll;
                        a = r;
                    } else {
                        a = l;
                    }
                }
            }
        }
        acc
    }

    /// Fingerprint of `gen[l..r)` of grammar `owner`.
    pub fn fingerprint(&self, owner: u32, l: u64, r: u64) -> Fp {
        let fr = self.prefix_fingerprint(owner, r);
        let fl = self.prefix_fingerprint(owner, l);
        let p = self.bases.power(r - l);
        [sub(fr[0], mul(fl[0], p[0])), sub(fr[1], mul(fl[1], p[1]))]
    }

    /// Bases in use.
    pub fn bases(&self) -> Bases {
        self.bases
    }

    fn char_at(&self, owner: u32, i: usize) -> u8 {
        self.entries[owner as usize]
            .slp
            .access(i as u64)
            .expect("index within grammar")
    }

    /// Largest `L <= cap` for which `probe(L)` holds, given that `probe` is
    /// monotone (true up to some point, then false) and `probe(0)` holds.
    fn gallop(cap: usize, probe: impl Fn(usize) -> bool) -> usize {
        let mut lo = 0usize; // probe(lo) known true
        let mut step = 1usize;
        let mut hi; // probe(hi) known false, or cap + 1
        loop {
            let cand = lo + step;
            if cand > cap {
                hi = cap + 1;
                break;
            }
            if probe(cand) {
                lo = cand;
                step *= 2;
            } else {
                hi = cand;
                break;
            }
        }
        while hi - lo > 1 {
            let mid = lo + (hi - lo) / 2;
            if probe(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    /// `lcp(gen_s[i..), gen_t[j..))` capped at `cap`, between the strings
    /// of grammars `s` and `t`.
    pub fn lce(&self, s: u32, i: usize, t: u32, j: usize, cap: usize) -> usize {
        if cap == 0 {
            return 0;
        }
        if s == t && i == j {
            return cap;
        }
        let eq = |len: usize| {
            self.fingerprint(s, i as u64, (i + len) as u64) == self.fingerprint(t, j as u64, (j + len) as u64)
        };
        let l = Self::gallop(cap, eq);
        if l < cap && self.char_at(s, i + l) == self.char_at(t, j + l) {
            return self.lce_direct(s, i, t, j, cap);
        }
        l
    }

    /// Longest common suffix of `gen_s[..i)` and `gen_t[..j)` capped at `cap`.
    pub fn lce_r(&self, s: u32, i: usize, t: u32, j: usize, cap: usize) -> usize {
        if cap == 0 {
            return 0;
        }
        if s == t && i == j {
            return cap;
        }
        let eq = |len: usize| {
            self.fingerprint(s, (i - len) as u64, i as u64) == self.fingerprint(t, (j - len) as u64, j as u64)
        };
        let l = Self::gallop(cap, eq);
        if l < cap && self.char_at(s, i - l - 1) == self.char_at(t, j - l - 1) {
            return (0..cap)
                .take_while(|&x| self.char_at(s, i - 1 - x) == self.char_at(t, j - 1 - x))
                .count();
        }
        l
    }

    fn lce_direct(&self, s: u32, i: usize, t: u32, j: usize, cap: usize) -> usize {
        (0..cap)
            .take_while(|&x| self.char_at(s, i + x) == self.char_at(t, j + x))
            .count()
    }
}

impl Pillar for SlpBackend {
    fn access(&self, s: Frag, i: usize) -> u8 {
        assert!(i < s.len(), "access index {i} out of fragment of length {}", s.len());
        self.char_at(s.owner, s.start + i)
    }

    fn lcp(&self, s: Frag, t: Frag) -> usize {
        self.lce(s.owner, s.start, t.owner, t.start, s.len().min(t.len()))
    }

    fn lcp_r(&self, s: Frag, t: Frag) -> usize {
        self.lce_r(s.owner, s.end, t.owner, t.end, s.len().min(t.len()))
    }

    fn bytes(&self, s: Frag) -> Cow<'_, [u8]> {
        Cow::Owned(
            self.entries[s.owner as usize]
                .slp
                .extract(s.start as u64, s.end as u64)
                .expect("fragment within grammar"),
        )
    }
}
