//! Polynomial fingerprints over two Mersenne-61 fields.
//!
//! The fingerprint of `s = c_0 … c_{L-1}` is `Σ (c_i + 1)·B^{L-1-i} mod p`
//! with `p = 2^61 - 1`, computed independently for two random bases. The
//! fingerprint of a concatenation is `h(x)·B^{|y|} + h(y)`, so every grammar
//! symbol's fingerprint follows bottom-up from its children.
//!
//! # Invariants
//!
//! * Equal strings always have equal fingerprints; distinct strings of
//!   length `L` collide with probability at most `L / 2^61` per field.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// The Mersenne prime `2^61 - 1`.
pub const MOD: u64 = (1 << 61) - 1;

#[inline]
fn reduce(x: u128) -> u64 {
    let lo = (x as u64) & MOD;
    let hi = (x >> 61) as u64;
    let s = lo + hi;
    let s = (s & MOD) + (s >> 61);
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

/// `a·b mod p`.
#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    reduce(a as u128 * b as u128)
}

/// `a + b mod p`.
#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= MOD {
        s - MOD
    } else {
        s
    }
}

/// `a - b mod p`.
#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + MOD - b
    }
}

/// `x^e mod p`.
pub fn pow(mut x: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(acc, x);
        }
        x = mul(x, x);
        e >>= 1;
    }
    acc
}

/// A pair of fingerprints (one per field).
pub type Fp = [u64; 2];

/// The two random bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bases(pub [u64; 2]);

impl Bases {
    /// Draws two bases in `[256, p - 1)` from a seeded generator.
    pub fn from_seed(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Bases([rng.gen_range(256..MOD - 1), rng.gen_range(256..MOD - 1)])
    }

    /// `B^e` in both fields.
    pub fn power(&self, e: u64) -> Fp {
        [pow(self.0[0], e), pow(self.0[1], e)]
    }

    /// Fingerprint of a single byte.
    pub fn byte(&self, c: u8) -> Fp {
        [c as u64 + 1, c as u64 + 1]
    }

    /// Fingerprint of `x · y` given `B^{|y|}`.
    pub fn concat(&self, x: Fp, y: Fp, pow_y: Fp) -> Fp {
        [add(mul(x[0], pow_y[0]), y[0]), add(mul(x[1], pow_y[1]), y[1])]
    }

    /// Fingerprint of a plain byte string.
    pub fn of_bytes(&self, s: &[u8]) -> Fp {
        let mut h = [0, 0];
        for &c in s {
            let b = self.byte(c);
            h = [add(mul(h[0], self.0[0]), b[0]), add(mul(h[1], self.0[1]), b[1])];
        }
        h
    }
}
