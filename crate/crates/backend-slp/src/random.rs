//! Random grammar generation for tests and benchmarks.

use rand::Rng;

use crate::grammar::{Rule, Slp};

/// A random grammar with at most `max_rules` symbols generating a string of
/// length at most `max_len` over the first `sigma` lowercase letters.
///
/// Terminals come first; each further rule joins two random earlier
/// symbols, preferring recent ones so that lengths grow and substrings
/// repeat. The start symbol is the longest symbol created.
pub fn random_slp<R: Rng + ?Sized>(rng: &mut R, max_rules: usize, max_len: u64, sigma: u8) -> Slp {
    assert!(max_rules >= 1 && max_len >= 1 && (1..=26).contains(&sigma));
    let terminals = (sigma as usize).min(max_rules);
    let mut rules: Vec<Rule> = (0..terminals).map(|i| Rule::Terminal(b'a' + i as u8)).collect();
    let mut lens: Vec<u64> = vec![1; terminals];
    let target = rng.gen_range(terminals..=max_rules);
    let mut attempts = 0;
    while rules.len() < target && attempts < 20 * max_rules {
        attempts += 1;
        let n = rules.len();
        let pick = |rng: &mut R| -> usize {
            if rng.gen_bool(0.6) {
                rng.gen_range(n.saturating_sub(4)..n)
            } else {
                rng.gen_range(0..n)
            }
        };
        let (a, b) = (pick(rng), pick(rng));
        if lens[a] + lens[b] > max_len {
            continue;
        }
        rules.push(Rule::Pair(a as u32, b as u32));
        lens.push(lens[a] + lens[b]);
    }
    let start = (0..rules.len()).max_by_key(|&i| (lens[i], i)).expect("non-empty");
    Slp::from_rules(rules, start, None).expect("construction is acyclic and bounded")
}
