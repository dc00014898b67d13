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
