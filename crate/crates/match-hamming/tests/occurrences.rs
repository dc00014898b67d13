mod common;

use common::{index, noisy_power, planted_text, random_string};
use match_hamming::{analyze_hd, break_matches_hd, mismatch_occurrences, repetitive_matches_hd, PatternAnalysisHD};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn occ(p: &[u8], t: &[u8], k: usize) -> Vec<usize> {
    let (b, h) = index(&[p, t]);
    mismatch_occurrences(&b, h[0], h[1], k).to_vec()
}

#[test]
fn small_examples() {
    assert_eq!(occ(b"abab", b"ababab", 1), vec![0, 2]);
    assert_eq!(occ(b"aacc", b"aaaccc", 1), vec![0, 1, 2]);
    assert_eq!(occ(b"abc", b"ab", 1), Vec::<usize>::new());
    assert_eq!(occ(b"abc", b"xabcx", 0), vec![1]);
    assert_eq!(occ(b"ab", b"xyz", 2), vec![0, 1]);
    let p = b"the quick brown fox";
    for k in 0..4 {
        assert!(occ(p, p, k).contains(&0));
    }
}

#[test]
fn break_marking_examples() {
    let p = b"abcdef";
    let (b, h) = index(&[p.as_slice(), b"abcdefab", b"zzzzzzzz"]);
    let breaks = match analyze_hd(&b, h[0], 1) {
        PatternAnalysisHD::Breaks(bs) => bs,
        other => panic!("unexpected {other:?}"),
    };
    assert!(!breaks.iter().any(|x| x.len == 0) || p.len() < 8);
    // Explicit breaks "ab"@0 and "cd"@2.
    let explicit = [
        match_hamming::Break { offset: 0, len: 2 },
        match_hamming::Break { offset: 2, len: 2 },
    ];
    assert_eq!(break_matches_hd(&b, h[0], h[1], &explicit, 1).to_vec(), vec![0]);
    assert_eq!(break_matches_hd(&b, h[0], h[0], &explicit, 1).to_vec(), vec![0]);
    assert!(break_matches_hd(&b, h[0], h[2], &explicit, 1).is_empty());
}

#[test]
fn repetitive_marking_examples() {
    let p: Vec<u8> = (0..256).map(|i| if i % 18 < 16 { b'a' } else { b'b' }).collect();
    let mut t2 = vec![b'a'; 16];
    t2.extend_from_slice(&p[..240]);
    t2.extend(vec![b'a'; 100]);
    let t3 = vec![b'b'; 384];
    let (b, h) = index(&[&p, &t2, &t3]);
    let regions = match analyze_hd(&b, h[0], 2) {
        PatternAnalysisHD::RepetitiveRegions(r) => r,
        other => panic!("unexpected {other:?}"),
    };
    assert!(repetitive_matches_hd(&b, h[0], h[0], &regions, 2).contains(0));
    for (i, t) in [(1, &t2), (2, &t3)] {
        let t_block = h[i].sub(0, t.len().min(384));
        let got = repetitive_matches_hd(&b, h[0], t_block, &regions, 2).to_vec();
        assert_eq!(got, oracle::brute_hd_occurrences(&p, &t[..t.len().min(384)], 2));
    }
}

#[test]
fn shifted_exact_occurrence_construction() {
    // P = a^32 c^32 inside T = a^48 c^48 has exactly 2k+1 k-mismatch occurrences.
    let mut p = vec![b'a'; 32];
    p.extend(vec![b'c'; 32]);
    let mut t = vec![b'a'; 48];
    t.extend(vec![b'c'; 48]);
    for k in 1..=8 {
        let got = occ(&p, &t, k);
        assert_eq!(got.len(), 2 * k + 1);
        assert_eq!(got, oracle::brute_hd_occurrences(&p, &t, k));
    }
}

#[test]
fn random_instances_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD15EA5E);
    let mut outcomes = [0usize; 4];
    for it in 0..3000 {
        let sigma = [2u8, 4, 26][it % 3];
        let structured = it % 5 >= 2;
        let m = if structured {
            rng.gen_range(128..=700)
        } else {
            rng.gen_range(1..=200)
        };
        let k = if structured {
            rng.gen_range(1..=(m / 128).max(1))
        } else {
            rng.gen_range(0..=(m / 4).clamp(1, 16))
        };
        let n = if structured {
            rng.gen_range(m / 2..=3 * m)
        } else {
            rng.gen_range(0..=600)
        };
        let p = match it % 5 {
            0 | 1 => random_string(&mut rng, m, sigma),
            2 => {
                let (per, noise) = (rng.gen_range(1..3), rng.gen_range(0..=6 * k));
                noisy_power(&mut rng, m, per, noise, sigma)
            }
            3 => {
                let mut s = noisy_power(&mut rng, m / 2, 1, k, sigma);
                s.extend(random_string(&mut rng, m - m / 2, sigma));
                s
            }
            _ => {
                let run = rng.gen_range(4..40);
                let mut s: Vec<u8> = (0..m).map(|i| if i % (run + 2) < run { b'a' } else { b'b' }).collect();
                for _ in 0..rng.gen_range(0..=k) {
                    let i = rng.gen_range(0..m);
                    s[i] = b'a' + rng.gen_range(0..sigma);
                }
                s
            }
        };
        let t = if it % 2 == 0 {
            planted_text(&mut rng, &p, n, k, sigma)
        } else {
            let mut t = p.repeat(n / m.max(1) + 1);
            t.truncate(n);
            for _ in 0..rng.gen_range(0..(n / 8).max(1)) {
                if n > 0 {
                    let i = rng.gen_range(0..n);
                    t[i] = b'a' + rng.gen_range(0..sigma);
                }
            }
            t
        };
        if k > 0 {
            let (b, h) = index(&[&p]);
            let a = analyze_hd(&b, h[0], k);
            outcomes[match a {
                _ if a.is_degenerate() => 3,
                PatternAnalysisHD::Breaks(_) => 0,
                PatternAnalysisHD::RepetitiveRegions(_) => 1,
                PatternAnalysisHD::ApproxPeriod(_) => 2,
            }] += 1;
        }
        assert_eq!(
            occ(&p, &t, k),
            oracle::brute_hd_occurrences(&p, &t, k),
            "p={:?} t={:?} k={k}",
            String::from_utf8_lossy(&p),
            String::from_utf8_lossy(&t)
        );
    }
    assert!(outcomes.iter().all(|&c| c > 30), "outcome coverage {outcomes:?}");
}
