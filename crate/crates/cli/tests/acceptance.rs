//! Acceptance suite: one line per criterion, run in order.
//!
//! Run with `cargo test -p cli --test acceptance -- --nocapture` to see the
//! report. Every criterion runs even if an earlier one fails; the test
//! fails at the end if any did.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use backend_slp::{random_slp, Slp, SlpBackend, AABAAB_GRAMMAR};
use backend_standard::StandardIndex;
use compressed_driver::{build_pattern_once, count_with, report_with, DriverOptions, Metric};
use match_edit::{analyze_ed, edit_occurrences, PatternAnalysisED};
use match_hamming::{analyze_hd, mismatch_occurrences, periodic_matches_hd, PatternAnalysisHD};
use oracle::{brute_ed_occurrences, brute_hd_occurrences, hd_to_power, min_edit_from};
use pillar_core::{Frag, Pillar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    };
}

// ---------------------------------------------------------------------------
// Instance generators
// ---------------------------------------------------------------------------

fn random_string(rng: &mut ChaCha8Rng, len: usize, sigma: u8) -> Vec<u8> {
    (0..len).map(|_| b'a' + rng.gen_range(0..sigma)).collect()
}

fn primitive(rng: &mut ChaCha8Rng, min_len: usize, max_len: usize, sigma: u8) -> Vec<u8> {
    loop {
        let len = rng.gen_range(min_len..=max_len);
        let q = random_string(rng, len, sigma);
        if oracle::is_primitive(&q) {
            return q;
        }
    }
}

fn power(q: &[u8], off: usize, len: usize) -> Vec<u8> {
    (off..off + len).map(|i| q[i % q.len()]).collect()
}

fn substitutions(rng: &mut ChaCha8Rng, s: &mut [u8], e: usize, sigma: u8) {
    for _ in 0..e {
        if !s.is_empty() {
            let i = rng.gen_range(0..s.len());
            s[i] = b'a' + rng.gen_range(0..sigma);
        }
    }
}

fn random_edits(rng: &mut ChaCha8Rng, s: &[u8], e: usize, sigma: u8) -> Vec<u8> {
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

/// A pattern/text pair of one of four shapes: unrelated random strings,
/// pattern cut from the text, noisy powers of one short string, or noisy
/// copies planted in a random text. `edits` selects indels as noise.
fn instance(
    rng: &mut ChaCha8Rng,
    shape: usize,
    n: usize,
    m: usize,
    k: usize,
    sigma: u8,
    edits: bool,
) -> (Vec<u8>, Vec<u8>) {
    let noise = |rng: &mut ChaCha8Rng, s: &[u8], e: usize| -> Vec<u8> {
        if edits {
            random_edits(rng, s, e, sigma)
        } else {
            let mut v = s.to_vec();
            substitutions(rng, &mut v, e, sigma);
            v
        }
    };
    match shape {
        0 => (random_string(rng, m, sigma), random_string(rng, n, sigma)),
        1 => {
            let t = random_string(rng, n, sigma);
            let at = rng.gen_range(0..=n.saturating_sub(m));
            let cut = t[at..(at + m).min(n)].to_vec();
            let e = rng.gen_range(0..=k);
            let mut p = noise(rng, &cut, e);
            p.resize(m, b'a');
            (p, t)
        }
        2 => {
            let q = primitive(rng, 1, 4, sigma);
            let (e1, e2) = (rng.gen_range(0..=2 * k + 1), rng.gen_range(0..=3 * k + 1));
            let off = rng.gen_range(0..q.len());
            let mut p = noise(rng, &power(&q, off, m), e1);
            p.resize(m, q[0]);
            let mut t = noise(rng, &power(&q, 0, n), e2);
            t.resize(n, q[0]);
            (p, t)
        }
        _ => {
            let p = random_string(rng, m, sigma);
            let mut t = random_string(rng, n, sigma);
            if m <= n {
                for _ in 0..rng.gen_range(1..6) {
                    let at = rng.gen_range(0..=n - m);
                    let e = rng.gen_range(0..=k + 1);
                    let copy = noise(rng, &p, e);
                    let len = copy.len().min(n - at);
                    t[at..at + len].copy_from_slice(&copy[..len]);
                }
            }
            (p, t)
        }
    }
}

/// `k` skewed towards small values but covering `[1, cap]`.
fn budget(rng: &mut ChaCha8Rng, cap: usize) -> usize {
    if rng.gen_bool(0.3) {
        rng.gen_range(1..=cap)
    } else {
        rng.gen_range(1..=cap.min(6))
    }
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

fn hamming_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let start = Instant::now();
    const INSTANCES: usize = 10_000;
    for it in 0..INSTANCES {
        let sigma = [2u8, 4, 26][it % 3];
        let n = rng.gen_range(1..=1024);
        let m = if rng.gen_bool(0.5) {
            rng.gen_range(1..=n)
        } else {
            rng.gen_range(1..=n.min(160))
        };
        let k = budget(&mut rng, m);
        let (p, t) = instance(&mut rng, it % 4, n, m, k, sigma, false);
        let (b, h) = StandardIndex::build(&[&p, &t]);
        let got = mismatch_occurrences(&b, h[0], h[1], k).to_vec();
        ensure!(
            got == brute_hd_occurrences(&p, &t, k),
            "instance {it} differs (n={n} m={m} k={k})"
        );
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(120), "took {took:?}, limit 120s");
    Ok(format!(
        "{INSTANCES}/{INSTANCES} equal to the oracle in {:.1}s",
        took.as_secs_f64()
    ))
}

fn edit_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let start = Instant::now();
    const INSTANCES: usize = 3_000;
    for it in 0..INSTANCES {
        let sigma = [2u8, 4, 26][it % 3];
        let n = rng.gen_range(0..=512);
        let m = rng.gen_range(1..=256);
        let k = budget(&mut rng, m.min(32));
        let (p, t) = instance(&mut rng, it % 4, n, m, k, sigma, true);
        let (b, h) = StandardIndex::build(&[&p, &t]);
        let got = edit_occurrences(&b, h[0], h[1], k).to_vec();
        ensure!(
            got == brute_ed_occurrences(&p, &t, k),
            "instance {it} differs (n={n} m={m} k={k})"
        );
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(300), "took {took:?}, limit 300s");
    Ok(format!(
        "{INSTANCES}/{INSTANCES} equal to the oracle in {:.1}s",
        took.as_secs_f64()
    ))
}

/// Number of maximal runs `x, x+q, x+2q, …` in a sorted list.
fn runs(positions: &[usize], q: usize) -> usize {
    positions.windows(2).filter(|w| w[1] - w[0] != q).count() + usize::from(!positions.is_empty())
}

fn hamming_periodic_structure() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let (mut accepted, mut attempts, mut nonempty) = (0, 0, 0);
    while accepted < 500 {
        attempts += 1;
        ensure!(
            attempts < 100_000,
            "could not construct instances ({accepted} accepted)"
        );
        let sigma = rng.gen_range(2..=4);
        let k = rng.gen_range(0..=3);
        let d = (2 * k).max(1) + rng.gen_range(0..=2);
        let q = primitive(&mut rng, 1, 5, sigma);
        let m = 8 * d * q.len() + rng.gen_range(0..64);
        let mut p = power(&q, 0, m);
        let e_p = rng.gen_range(0..=d);
        substitutions(&mut rng, &mut p, e_p, sigma);
        // T: a power of Q of length m + j|Q| ≤ 3m/2 carrying the pattern's
        // substitutions at both ends, plus some noise of its own.
        let j = rng.gen_range(0..=m / (2 * q.len()));
        let n = m + j * q.len();
        let mut t = power(&q, 0, n);
        let base = power(&q, 0, m);
        for i in (0..m).filter(|&i| p[i] != base[i]) {
            if rng.gen_bool(0.8) {
                t[i] = p[i];
            }
            if rng.gen_bool(0.8) {
                t[n - m + i] = p[i];
            }
        }
        let e_t = rng.gen_range(0..=k);
        substitutions(&mut rng, &mut t, e_t, sigma);
        if hd_to_power(&p, &q, 0) > d || oracle::hamming(&p, &t[..m]) > k || oracle::hamming(&p, &t[n - m..]) > k {
            continue;
        }
        accepted += 1;
        let (b, h) = StandardIndex::build(&[&p, &t, &q]);
        let occ = periodic_matches_hd(&b, h[0], h[1], k, d, h[2]).to_vec();
        ensure!(
            occ == brute_hd_occurrences(&p, &t, k),
            "instance {accepted}: output differs from the oracle"
        );
        ensure!(
            occ.iter().all(|x| x % q.len() == 0),
            "instance {accepted}: a start is not a multiple of |Q|"
        );
        ensure!(
            hd_to_power(&t, &q, 0) <= 3 * d,
            "instance {accepted}: text farther than 3d from Q*"
        );
        ensure!(
            runs(&occ, q.len()) <= 3 * d * (d + 1),
            "instance {accepted}: too many progressions"
        );
        nonempty += usize::from(occ.len() > 1);
    }
    Ok(format!(
        "500 instances ({nonempty} with several starts), zero violations"
    ))
}

/// `min_φ δ_E(s, prefix of Q^∞[φ..))` restricted to alignments of cost at
/// most `d`; `None` if all cost more. With `phases = 1` only `φ = 0`.
fn banded_edl(s: &[u8], q: &[u8], d: usize, phases: usize) -> Option<usize> {
    (0..phases)
        .filter_map(|phi| min_edit_from(s, &power(q, phi, s.len() + d + 1), 0, d))
        .min()
}

fn edit_periodic_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut accepted, mut attempts, mut checked, mut long_q) = (0, 0, 0, 0);
    while accepted < 300 {
        attempts += 1;
        ensure!(
            attempts < 100_000,
            "could not construct instances ({accepted} accepted)"
        );
        let sigma = rng.gen_range(2..=4);
        let k = rng.gen_range(1..=2);
        let d = 2 * k + rng.gen_range(0..=1);
        // Long periods make the property non-vacuous (|Q| > 6d + 1).
        let q = if rng.gen_bool(0.6) {
            primitive(&mut rng, 6 * d + 2, 6 * d + 16, sigma)
        } else {
            primitive(&mut rng, 1, 6, sigma)
        };
        let m = 8 * d * q.len() + rng.gen_range(0..32);
        let e_p = rng.gen_range(0..=k);
        let p = random_edits(&mut rng, &power(&q, 0, m), e_p, sigma);
        let m = p.len();
        let Some(dist) = banded_edl(&p, &q, d, 1) else { continue };
        if banded_edl(&p, &q, d, q.len()) != Some(dist) || 8 * d * q.len() > m {
            continue;
        }
        let j = rng.gen_range(0..=m / (2 * q.len()));
        let e_t = rng.gen_range(0..=k);
        let t = random_edits(&mut rng, &power(&q, 0, m + j * q.len()), e_t, sigma);
        let n = t.len();
        let rev = |s: &[u8]| s.iter().rev().copied().collect::<Vec<u8>>();
        if 2 * n >= 3 * m + 2 * k
            || min_edit_from(&p, &t, 0, k).is_none()
            || min_edit_from(&rev(&p), &rev(&t), 0, k).is_none()
        {
            continue;
        }
        accepted += 1;
        let (b, h) = StandardIndex::build(&[&p, &t]);
        let occ = edit_occurrences(&b, h[0], h[1], k).to_vec();
        if accepted % 10 == 0 {
            checked += 1;
            ensure!(
                occ == brute_ed_occurrences(&p, &t, k),
                "instance {accepted}: output differs from the oracle"
            );
        }
        let ql = q.len();
        let bad = occ
            .iter()
            .find(|&&x| x % ql > 3 * d && x % ql < ql.saturating_sub(3 * d));
        ensure!(
            bad.is_none(),
            "instance {accepted}: start {} is {} mod {ql} (d={d})",
            bad.unwrap(),
            bad.unwrap() % ql
        );
        long_q += usize::from(ql > 6 * d + 1);
    }
    Ok(format!(
        "300 instances ({long_q} with |Q| > 6d+1, {checked} also checked against the oracle), zero violations"
    ))
}

fn non_periodic_bounds() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut hd_seen, mut ed_seen, mut attempts) = (0, 0, 0);
    let (mut hd_ratio, mut ed_ratio) = (0f64, 0f64);
    while hd_seen < 500 || ed_seen < 500 {
        attempts += 1;
        ensure!(attempts < 20_000, "could not construct instances");
        let sigma = [2u8, 4, 26][attempts % 3];
        let m = rng.gen_range(16..=400);
        let k = rng.gen_range(1..=(m / 16).clamp(1, 6));
        let p = match attempts % 3 {
            0 => random_string(&mut rng, m, sigma),
            1 => {
                // Blocks of one letter: repetitive regions.
                let run = rng.gen_range(8..32);
                (0..m).map(|i| if i % run == 0 { b'b' } else { b'a' }).collect()
            }
            _ => {
                let mut s = power(&primitive(&mut rng, 1, 3, sigma), 0, m / 2);
                s.extend(random_string(&mut rng, m - m / 2, sigma));
                s
            }
        };
        // A text of length ≤ 3m/2 crowded with near-copies of P.
        let n = rng.gen_range(m..=3 * m / 2);
        let mut t = Vec::new();
        while t.len() < n {
            let e = rng.gen_range(0..=k);
            let shift = rng.gen_range(0..=m / 8);
            t.extend(random_edits(&mut rng, &p[shift..], e, sigma));
        }
        t.truncate(n);
        let (b, h) = StandardIndex::build(&[&p, &t]);
        let scale = (n as f64 / m as f64) * k as f64;
        if hd_seen < 500 && !matches!(analyze_hd(&b, h[0], k), PatternAnalysisHD::ApproxPeriod(_)) {
            hd_seen += 1;
            let occ = mismatch_occurrences(&b, h[0], h[1], k).len();
            ensure!(
                occ as f64 <= 1024.0 * scale,
                "Hamming: {occ} occurrences exceed the bound"
            );
            hd_ratio = hd_ratio.max(occ as f64 / scale);
        }
        if ed_seen < 500 && !matches!(analyze_ed(&b, h[0], k), PatternAnalysisED::ApproxPeriod(_)) {
            ed_seen += 1;
            let occ = edit_occurrences(&b, h[0], h[1], k).to_vec();
            let mut blocks: Vec<usize> = occ.iter().map(|x| x / k).collect();
            blocks.dedup();
            ensure!(
                blocks.len() as f64 <= 4096.0 * scale,
                "edit: {} blocks exceed the bound",
                blocks.len()
            );
            ed_ratio = ed_ratio.max(blocks.len() as f64 / scale);
        }
    }
    Ok(format!(
        "500+500 instances; max |Occ|/((n/m)k) = {hd_ratio:.2} (bound 1024), max blocks/((n/m)k) = {ed_ratio:.2} (bound 4096)"
    ))
}

fn shifting_family() -> Outcome {
    let m = 64;
    let p: Vec<u8> = [vec![b'a'; m / 2], vec![b'c'; m / 2]].concat();
    let t: Vec<u8> = [vec![b'a'; 3 * m / 4], vec![b'c'; 3 * m / 4]].concat();
    let (b, h) = StandardIndex::build(&[&p, &t]);
    for k in 1..=8 {
        let occ = mismatch_occurrences(&b, h[0], h[1], k).to_vec();
        ensure!(
            occ.len() == 2 * k + 1,
            "k={k}: {} occurrences, expected {}",
            occ.len(),
            2 * k + 1
        );
        ensure!(occ == brute_hd_occurrences(&p, &t, k), "k={k}: differs from the oracle");
    }
    Ok("|Occ| = 2k+1 for k = 1..8".into())
}

fn quadratic_family() -> Outcome {
    let mut counts = Vec::new();
    for k in 2..=6usize {
        let m = 16 * k * k;
        let n = m + 2 * k * k;
        let unit: Vec<u8> = std::iter::once(b'c').chain(std::iter::repeat_n(b'a', k - 1)).collect();
        let build = |len: usize| -> Vec<u8> {
            let mut s = vec![b'a'; len / 2];
            for _ in 0..len / (2 * k) {
                s.extend(&unit);
            }
            s
        };
        let (p, t) = (build(m), build(n));
        let (b, h) = StandardIndex::build(&[&p, &t]);
        let occ = edit_occurrences(&b, h[0], h[1], k).to_vec();
        ensure!(occ.len() >= k * k, "k={k}: only {} occurrences", occ.len());
        ensure!(occ == brute_ed_occurrences(&p, &t, k), "k={k}: differs from the oracle");
        counts.push(format!("k={k}:{}", occ.len()));
    }
    Ok(format!("|Occ| ≥ k² and equal to the oracle ({})", counts.join(" ")))
}

fn compressed_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut pairs: Vec<(Slp, Slp)> = vec![(Slp::parse(AABAAB_GRAMMAR.as_bytes()).unwrap(), Slp::from_bytes(b"aab"))];
    while pairs.len() < 201 {
        let sigma = rng.gen_range(2..=4);
        let t = random_slp(&mut rng, 100, 100_000, sigma);
        let text = t.decompress();
        let p = if rng.gen_bool(0.5) && text.len() >= 2 {
            let len = rng.gen_range(1..=text.len().min(64));
            let at = rng.gen_range(0..=text.len() - len);
            Slp::from_bytes(&text[at..at + len])
        } else {
            random_slp(&mut rng, 12, 64, sigma)
        };
        pairs.push((t, p));
    }
    let mut checks = 0;
    for (i, (g_t, g_p)) in pairs.iter().enumerate() {
        let (text, pat) = (g_t.decompress(), g_p.decompress());
        let (b, h) = StandardIndex::build(&[&pat, &text]);
        for metric in [Metric::Hamming, Metric::Edit] {
            for k in [1, 2] {
                let want = match metric {
                    Metric::Hamming => mismatch_occurrences(&b, h[0], h[1], k),
                    Metric::Edit => edit_occurrences(&b, h[0], h[1], k),
                };
                let cache = build_pattern_once(g_p, k, metric).map_err(|e| e.to_string())?;
                let got = report_with(g_t, &cache, DriverOptions::default()).map_err(|e| e.to_string())?;
                let count = count_with(g_t, &cache, DriverOptions::default()).map_err(|e| e.to_string())?;
                ensure!(got == want, "pair {i} {metric:?} k={k}: reported set differs");
                ensure!(count == want.len() as u64, "pair {i} {metric:?} k={k}: count differs");
                checks += 1;
            }
        }
    }
    Ok(format!(
        "{} grammar pairs, {checks} count/report checks equal",
        pairs.len()
    ))
}

fn scaling() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (m, k) = (4096, 16);
    let p = random_string(&mut rng, m, 4);
    let mut times = Vec::new();
    for e in 18..=20 {
        let n = 1usize << e;
        let mut t = random_string(&mut rng, n, 4);
        for _ in 0..16 {
            let at = rng.gen_range(0..=n - m);
            t[at..at + m].copy_from_slice(&p);
            let noise = rng.gen_range(0..=k);
            substitutions(&mut rng, &mut t[at..at + m], noise, 4);
        }
        let best = (0..3)
            .map(|_| {
                let start = Instant::now();
                let (b, h) = StandardIndex::build(&[&p, &t]);
                let occ = mismatch_occurrences(&b, h[0], h[1], k);
                std::hint::black_box(occ.len());
                start.elapsed().as_secs_f64()
            })
            .fold(f64::INFINITY, f64::min);
        times.push(best);
    }
    let ratios = [times[1] / times[0], times[2] / times[1]];
    let report = format!(
        "times {:.3}s / {:.3}s / {:.3}s, ratios {:.2} / {:.2}",
        times[0], times[1], times[2], ratios[0], ratios[1]
    );
    ensure!(ratios.iter().all(|&r| r <= 2.5), "ratio above 2.5: {report}");
    ensure!(times[2] < 5.0, "n = 2^20 took over 5s: {report}");
    Ok(report)
}

fn backend_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    // Standard index: lcp and lcp_r against direct comparison.
    let strings: Vec<Vec<u8>> = (0..20)
        .map(|i| match i % 3 {
            0 => random_string(&mut rng, 500, [2, 4, 26][i % 3 + (i / 3) % 2]),
            1 => power(&primitive(&mut rng, 1, 5, 2), 0, 500),
            _ => {
                let mut s = power(b"ab", 0, 500);
                substitutions(&mut rng, &mut s, 5, 2);
                s
            }
        })
        .collect();
    let (b, h) = StandardIndex::build(&strings);
    let frag = |rng: &mut ChaCha8Rng| -> (Frag, usize, usize, usize) {
        let s = rng.gen_range(0..h.len());
        let l = rng.gen_range(0..=500);
        let r = rng.gen_range(l..=500);
        (h[s].sub(l, r), s, l, r)
    };
    for pair in 0..10_000 {
        let (f1, s1, l1, r1) = frag(&mut rng);
        let (f2, s2, l2, r2) = frag(&mut rng);
        let (a, c) = (&strings[s1][l1..r1], &strings[s2][l2..r2]);
        ensure!(
            b.lcp(f1, f2) == oracle::naive_lcp(a, c),
            "standard lcp mismatch at pair {pair}"
        );
        ensure!(
            b.lcp_r(f1, f2) == oracle::naive_lcs(a, c),
            "standard lcp_r mismatch at pair {pair}"
        );
    }
    // Grammar backend: access, extract and lcp against the expansion.
    let mut queries = 0;
    for g in 0..50 {
        let slp = random_slp(&mut rng, 80, 20_000, [2u8, 3, 26][g % 3]);
        let text = slp.decompress();
        let n = text.len();
        let mut backend = SlpBackend::new(g as u64);
        let f = backend.add(slp.clone());
        for _ in 0..200 {
            let i = rng.gen_range(0..n);
            ensure!(backend.access(f, i) == text[i], "grammar {g}: access({i})");
            let l = rng.gen_range(0..=n);
            let r = rng.gen_range(l..=n.min(l + 300));
            ensure!(
                slp.extract(l as u64, r as u64).as_deref() == Some(&text[l..r]),
                "grammar {g}: extract"
            );
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            ensure!(
                backend.lcp(f.suffix(x), f.suffix(y)) == oracle::naive_lcp(&text[x..], &text[y..]),
                "grammar {g}: lcp({x}, {y})"
            );
            ensure!(
                backend.lcp_r(f.prefix(x), f.prefix(y)) == oracle::naive_lcs(&text[..x], &text[..y]),
                "grammar {g}: lcp_r({x}, {y})"
            );
            queries += 4;
        }
    }
    Ok(format!(
        "10000 standard pairs and {queries} grammar queries, zero mismatches"
    ))
}

// ---------------------------------------------------------------------------

fn panic_message(e: Box<dyn std::any::Any + Send>) -> String {
    e.downcast_ref::<String>()
        .cloned()
        .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "panicked".into())
}

type Criterion = (&'static str, fn() -> Outcome);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        ("Hamming oracle equivalence", hamming_equivalence),
        ("edit oracle equivalence", edit_equivalence),
        ("Hamming periodic structure", hamming_periodic_structure),
        ("edit periodic property", edit_periodic_property),
        ("non-periodic occurrence bounds", non_periodic_bounds),
        ("shifting-occurrence family", shifting_family),
        ("quadratic edit-occurrence family", quadratic_family),
        ("compressed equivalence", compressed_equivalence),
        ("scaling sanity", scaling),
        ("backend unit suites", backend_suites),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| Err(panic_message(e)));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail} [{secs:.1}s]", i + 1),
            Err(detail) => {
                println!("criterion {:>2}: FAIL  {name}: {detail} [{secs:.1}s]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
