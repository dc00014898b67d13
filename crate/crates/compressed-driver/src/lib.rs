//! Approximate pattern matching when both pattern and text are given as
//! straight-line programs.
//!
//! Counts or reports the `k`-mismatch or `k`-edit occurrences of `gen(G_P)`
//! in `gen(G_T)`. The text is never expanded as a whole. Every occurrence
//! either lies inside one child of a rule `A → BC` or crosses the boundary
//! between `B` and `C`. Only crossing occurrences need fresh work, and they
//! live in a short window around the boundary.
//!
//! # Algorithm
//!
//! 1. Expand the pattern once and analyze it for the chosen metric
//!    ([`build_pattern_once`]).
//! 2. For each rule `A → BC` (independently, optionally in parallel),
//!    extract the window around the `B|C` boundary and compute the
//!    occurrences that start in `B` but need characters of `C`:
//!    * Hamming: the window is `gen(A)[|B|-m+1 .. |B|+m-1)`. Every
//!      occurrence inside it crosses.
//!    * Edit: the window is `gen(A)[|B|-m-k+1 .. |B|+m+k-1)`. A start in
//!      `B` crosses when no witness ends inside `B`. So the occurrences
//!      found in the `B` part of the window alone are removed.
//!
//!    A terminal `A → c` is solved directly on the one-character string.
//! 3. Combine bottom-up: `count(A) = count(B) + count(C) + crossing(A)`
//!    ([`CountTable`]).
//! 4. Reporting walks the parse tree from the start symbol. It skips
//!    subtrees with a zero count and shifts the stored crossing sets to
//!    absolute positions.
//!
//! # Invariants
//!
//! * Each occurrence is attributed to exactly one node: the lowest one
//!   whose boundary it crosses, or the terminal it sits in.
//! * `count(start)` equals the size of the reported set, and both equal the
//!   plain pipeline run on the expanded strings.
//!
//! # Design Notes
//!
//! The pattern is expanded (`O(m)` memory). Each window is extracted from
//! the grammar, costing `O(m + k + depth)` per rule, and is solved with
//! the standard backend. So the work is linear in the grammar size times
//! the window length, not polylogarithmic in the text length.
//!
//! The edit windows reach `m + k - 1` characters into each child. A start
//! `ℓ` in `B` may need a witness reaching `ℓ + m + k`, so both sides need
//! the padding.
//!
//! The pattern analysis is computed once. It is valid in every window
//! index because the pattern is always stored first, at the same
//! coordinates.
//!
//! When `m ≤ k` under the edit metric, every position `[0, n]` matches; this
//! is answered without visiting the grammar.

use backend_slp::{Rule, Slp};
use backend_standard::StandardIndex;
use match_edit::{analyze_ed, edit_occurrences_with, PatternAnalysisED};
use match_hamming::{analyze_hd, mismatch_occurrences_with, PatternAnalysisHD};
use pillar_core::{ArithmeticProgression, OccurrenceSet};
use rayon::prelude::*;
use thiserror::Error;

/// Distance used to compare the pattern with text fragments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Metric {
    Hamming,
    Edit,
}

/// Contract violations reported by the driver.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DriverError {
    #[error("the pattern is empty")]
    EmptyPattern,
    #[error("{what} of length {len} does not fit in memory")]
    TooLong { what: &'static str, len: u64 },
}

/// The expanded pattern with its analysis, shared by all windows.
#[derive(Clone, Debug)]
pub struct PatternCache {
    pub bytes: Vec<u8>,
    pub k: usize,
    pub metric: Metric,
    analysis: Analysis,
}

#[derive(Clone, Debug)]
enum Analysis {
    /// `k` is outside the range where the matchers analyze the pattern.
    None,
    Hamming(PatternAnalysisHD),
    Edit(PatternAnalysisED),
}

/// Expands `g_p` and analyzes it for `k` and `metric`.
pub fn build_pattern_once(g_p: &Slp, k: usize, metric: Metric) -> Result<PatternCache, DriverError> {
    let bytes = expand(g_p, "pattern")?;
    if bytes.is_empty() {
        return Err(DriverError::EmptyPattern);
    }
    let m = bytes.len();
    let analysis = if k == 0 || k >= m {
        Analysis::None
    } else {
        let (b, h) = StandardIndex::build(&[&bytes]);
        match metric {
            Metric::Hamming => Analysis::Hamming(analyze_hd(&b, h[0], k)),
            Metric::Edit => Analysis::Edit(analyze_ed(&b, h[0], k)),
        }
    };
    Ok(PatternCache {
        bytes,
        k,
        metric,
        analysis,
    })
}

impl PatternCache {
    pub fn len(&self) -> usize {
        self.bytes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bytes.is_empty()
    }

    /// Occurrences of the pattern in the plain string `t`.
    pub fn occurrences_in(&self, t: &[u8]) -> OccurrenceSet {
        // The pattern is stored first so the cached analysis applies.
        let (b, h) = StandardIndex::build(&[&self.bytes[..], t]);
        match (&self.analysis, self.metric) {
            (Analysis::Hamming(a), _) => mismatch_occurrences_with(&b, h[0], h[1], self.k, a),
            (Analysis::Edit(a), _) => edit_occurrences_with(&b, h[0], h[1], self.k, a),
            (Analysis::None, Metric::Hamming) => match_hamming::mismatch_occurrences(&b, h[0], h[1], self.k),
            (Analysis::None, Metric::Edit) => match_edit::edit_occurrences(&b, h[0], h[1], self.k),
        }
    }

    /// Whether every position of every text matches.
    fn matches_everywhere(&self) -> bool {
        self.metric == Metric::Edit && self.len() <= self.k
    }
}

/// Per-symbol occurrence counts and crossing sets of a text grammar.
#[derive(Clone, Debug)]
pub struct CountTable {
    /// `count[A]`: occurrences inside `gen(A)`, as a standalone string.
    pub count: Vec<u64>,
    /// `crossing[A]`: starts (relative to `gen(A)`) attributed to `A`
    /// itself. For a terminal this is its own (at most one) occurrence.
    pub crossing: Vec<OccurrenceSet>,
}

/// Options for the compressed pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DriverOptions {
    /// Worker threads for the window jobs; `0` or `1` runs sequentially.
    pub jobs: usize,
}

impl Default for DriverOptions {
    fn default() -> Self {
        DriverOptions { jobs: 1 }
    }
}

/// Builds the count table of `g_t` for the cached pattern.
pub fn count_table(g_t: &Slp, pattern: &PatternCache, options: DriverOptions) -> CountTable {
    let symbols = g_t.rules().len();
    let crossing: Vec<OccurrenceSet> = if options.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            (0..symbols)
                .into_par_iter()
                .map(|a| crossing_of(g_t, pattern, a))
                .collect()
        })
    } else {
        (0..symbols).map(|a| crossing_of(g_t, pattern, a)).collect()
    };
    let mut count = vec![0u64; symbols];
    for &a in g_t.topological_order() {
        let a = a as usize;
        let own = crossing[a].len() as u64;
        count[a] = match g_t.rule(a) {
            Rule::Terminal(_) => own,
            Rule::Pair(b, c) => count[b as usize] + count[c as usize] + own,
        };
    }
    CountTable { count, crossing }
}

/// The occurrences attributed to symbol `a` itself.
fn crossing_of(g: &Slp, pattern: &PatternCache, a: usize) -> OccurrenceSet {
    let b = match g.rule(a) {
        Rule::Terminal(ch) => return pattern.occurrences_in(&[ch]),
        Rule::Pair(b, _) => b as usize,
    };
    let (lb, la) = (g.symbol_len(b), g.symbol_len(a));
    let reach = match pattern.metric {
        Metric::Hamming => pattern.len() as u64 - 1,
        Metric::Edit => (pattern.len() + pattern.k) as u64 - 1,
    };
    let lo = lb.saturating_sub(reach);
    let hi = la.min(lb + reach);
    let window = g.extract_in(a, lo, hi).expect("window within the symbol");
    let found = pattern.occurrences_in(&window);
    let split = (lb - lo) as usize;
    let starts_in_b = found.restricted(0, split);
    let crossing = match pattern.metric {
        Metric::Hamming => starts_in_b,
        Metric::Edit => {
            let inside_b = pattern.occurrences_in(&window[..split]).restricted(0, split);
            difference(&starts_in_b, &inside_b)
        }
    };
    crossing.shifted(lo as usize)
}

/// `x \ y` for sets where `y ⊆ x` is not assumed.
fn difference(x: &OccurrenceSet, y: &OccurrenceSet) -> OccurrenceSet {
    if y.is_empty() {
        return x.clone();
    }
    let drop: std::collections::HashSet<usize> = y.to_vec().into_iter().collect();
    OccurrenceSet::from_positions(x.to_vec().into_iter().filter(|p| !drop.contains(p)))
}

fn expand(g: &Slp, what: &'static str) -> Result<Vec<u8>, DriverError> {
    if usize::try_from(g.len()).is_err() || g.len() > isize::MAX as u64 {
        return Err(DriverError::TooLong { what, len: g.len() });
    }
    Ok(g.decompress())
}

/// `|Occ_k(gen(g_p), gen(g_t))|` under `metric`.
pub fn count_occurrences_compressed(g_t: &Slp, g_p: &Slp, k: usize, metric: Metric) -> Result<u64, DriverError> {
    count_with(g_t, &build_pattern_once(g_p, k, metric)?, DriverOptions::default())
}

/// Counting with a prepared pattern and explicit options.
pub fn count_with(g_t: &Slp, pattern: &PatternCache, options: DriverOptions) -> Result<u64, DriverError> {
    if pattern.matches_everywhere() {
        return Ok(g_t.len() + 1);
    }
    Ok(count_table(g_t, pattern, options).count[g_t.start()])
}

/// `Occ_k(gen(g_p), gen(g_t))` under `metric`, as absolute positions.
pub fn report_occurrences_compressed(
    g_t: &Slp,
    g_p: &Slp,
    k: usize,
    metric: Metric,
) -> Result<OccurrenceSet, DriverError> {
    report_with(g_t, &build_pattern_once(g_p, k, metric)?, DriverOptions::default())
}

/// Reporting with a prepared pattern and explicit options.
pub fn report_with(g_t: &Slp, pattern: &PatternCache, options: DriverOptions) -> Result<OccurrenceSet, DriverError> {
    let n = usize::try_from(g_t.len()).map_err(|_| DriverError::TooLong {
        what: "text",
        len: g_t.len(),
    })?;
    if pattern.matches_everywhere() {
        return Ok(OccurrenceSet::from_progressions([ArithmeticProgression::new(
            0,
            1,
            n + 1,
        )]));
    }
    let table = count_table(g_t, pattern, options);
    let mut progs = Vec::new();
    // Explicit stack: grammars may be arbitrarily deep.
    let mut stack = vec![(g_t.start(), 0usize)];
    while let Some((a, offset)) = stack.pop() {
        if table.count[a] == 0 {
            continue;
        }
        progs.extend_from_slice(table.crossing[a].shifted(offset).progressions());
        if let Rule::Pair(b, c) = g_t.rule(a) {
            let (b, c) = (b as usize, c as usize);
            stack.push((b, offset));
            stack.push((c, offset + g_t.symbol_len(b) as usize));
        }
    }
    Ok(OccurrenceSet::from_progressions(progs))
}
