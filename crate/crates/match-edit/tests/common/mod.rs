#![allow(dead_code)]

use backend_standard::StandardIndex;
use pillar_core::Frag;
use rand::Rng;

pub fn index(strings: &[&[u8]]) -> (StandardIndex, Vec<Frag>) {
    StandardIndex::build(strings)
}

pub fn random_string<R: Rng>(rng: &mut R, len: usize, sigma: u8) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

/// A power of a random short string with a few random substitutions.
pub fn noisy_power<R: Rng>(rng: &mut R, len: usize, period: usize, noise: usize, sigma: u8) -> Vec<u8> {
    let q = random_string(rng, period.max(1), sigma);
    let mut s: Vec<u8> = (0..len).map(|i| q[i % q.len()]).collect();
    for _ in 0..noise {
        if len > 0 {
            let i = rng.gen_range(0..len);
            s[i] = b'a' + rng.gen_range(0..sigma);
        }
    }
    s
}

/// A text made by planting noisy copies of `p` into a random background.
pub fn planted_text<R: Rng>(rng: &mut R, p: &[u8], n: usize, k: usize, sigma: u8) -> Vec<u8> {
    let mut t = random_string(rng, n, sigma);
    if p.len() <= n {
        for _ in 0..rng.gen_range(0..4) {
            let at = rng.gen_range(0..=n - p.len());
            t[at..at + p.len()].copy_from_slice(p);
            for _ in 0..rng.gen_range(0..=k + 1) {
                let i = at + rng.gen_range(0..p.len());
                t[i] = b'a' + rng.gen_range(0..sigma);
            }
        }
    }
    t
}

/// A random short primitive string.
pub fn primitive<R: Rng>(rng: &mut R, max_len: usize, sigma: u8) -> Vec<u8> {
    loop {
        let len = rng.gen_range(1..=max_len);
        let q = random_string(rng, len, sigma);
        if oracle::is_primitive(&q) {
            return q;
        }
    }
}

/// Applies `e` random edits (substitution, insertion or deletion).
pub fn random_edits<R: Rng>(rng: &mut R, s: &[u8], e: usize, sigma: u8) -> Vec<u8> {
    let mut v = s.to_vec();
    for _ in 0..e {
        let c = b'a' + rng.gen_range(0..sigma);
        match rng.gen_range(0..3) {
            0 if !v.is_empty() => {
                let i = rng.gen_range(0..v.len());
                v[i] = c;
            }
            1 if !v.is_empty() => {
                let i = rng.gen_range(0..v.len());
                v.remove(i);
            }
            _ => {
                let i = rng.gen_range(0..=v.len());
                v.insert(i, c);
            }
        }
    }
    v
}

/// `q^∞[off..off+len)` with `e` random edits.
pub fn edited_power<R: Rng>(rng: &mut R, q: &[u8], off: usize, len: usize, e: usize, sigma: u8) -> Vec<u8> {
    let base = oracle::power_window(q, off, off + len);
    random_edits(rng, &base, e, sigma)
}

/// The left-infinite power of `q` ending just before offset `end`, read
/// right to left, first `len` characters.
pub fn reversed_power(q: &[u8], end: usize, len: usize) -> Vec<u8> {
    let ql = q.len();
    (0..len)
        .map(|j| q[(end % ql + ql * (j / ql + 1) - 1 - j % ql) % ql])
        .collect()
}
