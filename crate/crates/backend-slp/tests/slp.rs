use backend_slp::{
    random_slp, slp_access, slp_concat, slp_extract, slp_ipm, slp_lcp, Slp, SlpBackend, SlpError, AABAAB_GRAMMAR,
};
use pillar_core::{Frag, Pillar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn aabaab() -> Slp {
    Slp::parse(AABAAB_GRAMMAR.as_bytes()).unwrap()
}

#[test]
fn example_grammar_generates_aabaab() {
    let g = aabaab();
    assert_eq!(g.len(), 6);
    assert_eq!(g.decompress(), b"aabaab");
    assert_eq!(slp_access(&g, 0), Some(b'a'));
    assert_eq!(slp_access(&g, 2), Some(b'b'));
    assert_eq!(slp_access(&g, 6), None);
}

#[test]
fn example_grammar_lcp_and_extract() {
    let g = aabaab();
    assert_eq!(slp_lcp(&g, 0, 3, u64::MAX, 7), 3);
    assert_eq!(slp_lcp(&g, 2, 2, u64::MAX, 7), 4);
    assert_eq!(slp_lcp(&g, 1, 2, u64::MAX, 7), 0);
    assert_eq!(slp_extract(&g, 0, 6).unwrap(), b"aabaab");
    assert_eq!(slp_extract(&g, 3, 6).unwrap(), b"aab");
    assert_eq!(slp_extract(&g, 2, 2).unwrap(), b"");
    assert_eq!(slp_extract(&g, 4, 7), None);
}

#[test]
fn single_terminal() {
    let g = Slp::parse(b"SLP v1 1 1\n1 = 'x'\n").unwrap();
    assert_eq!(g.decompress(), b"x");
    assert_eq!(slp_access(&g, 0), Some(b'x'));
}

#[test]
fn cycles_and_bad_references_are_rejected_with_a_line() {
    let e = Slp::parse(b"SLP v1 2 1\n1 = 1 2\n2 = 'b'\n").unwrap_err();
    assert!(matches!(e, SlpError::Cycle { .. }), "{e:?}");
    assert_eq!(e.line(), Some(2));
    let e = Slp::parse(b"SLP v1 2 1\n1 = 2 3\n2 = 'b'\n").unwrap_err();
    assert!(matches!(e, SlpError::UnknownSymbol { line: 2, .. }), "{e:?}");
    let e = Slp::parse(b"SLP v1 2 1\n1 = 2 2\n").unwrap_err();
    assert!(matches!(e, SlpError::Missing { id: 2 }), "{e:?}");
    let e = Slp::parse(b"SLP v1 2 1\n1 = 2 2\n2 = 'a\n").unwrap_err();
    assert_eq!(e.line(), Some(3));
    assert!(Slp::parse(b"PLS v1 1 1\n1 = 'a'\n").is_err());
}

#[test]
fn forward_references_are_allowed() {
    let g = Slp::parse(b"SLP v1 3 1\n1 = 2 3\n2 = 'p'\n3 = 'q'\n").unwrap();
    assert_eq!(g.decompress(), b"pq");
}

#[test]
fn length_overflow_is_rejected() {
    let mut text = String::from("SLP v1 64 64\n1 = 'a'\n");
    for i in 2..=64 {
        text.push_str(&format!("{i} = {} {}\n", i - 1, i - 1));
    }
    let e = Slp::parse(text.as_bytes()).unwrap_err();
    assert!(matches!(e, SlpError::Overflow { .. }), "{e:?}");
}

#[test]
fn escapes_round_trip() {
    let s = b"a'b\\c\nd ";
    let g = Slp::from_bytes(s);
    let text = g.to_text();
    let back = Slp::parse(&text).unwrap();
    assert_eq!(back.decompress(), s);
    assert_eq!(back.to_text(), text);
}

#[test]
fn concatenation() {
    let ab = Slp::from_bytes(b"ab");
    let c = Slp::terminal(b'c');
    assert_eq!(slp_concat(&ab, &c).unwrap().decompress(), b"abc");
    let g = aabaab();
    let gg = slp_concat(&g, &g).unwrap();
    assert_eq!(gg.decompress(), b"aabaabaabaab");
    assert_eq!(gg.size(), 2 * g.size() + 1);
}

#[test]
fn builders_agree() {
    let s = b"mississippi";
    assert_eq!(Slp::from_bytes(s).decompress(), s);
    assert_eq!(Slp::left_comb(s).decompress(), s);
    assert_eq!(Slp::left_comb(s).depth(), 10);
}

#[test]
fn ipm_on_windows() {
    let g = Slp::from_bytes(b"abababab");
    let ap = slp_ipm(&g, (0, 2), (0, 4));
    assert_eq!(ap.iter().collect::<Vec<_>>(), vec![0, 2]);
    let ap = slp_ipm(&g, (0, 3), (1, 5));
    assert_eq!(ap.iter().collect::<Vec<_>>(), vec![1]);
    let ap = slp_ipm(&g, (0, 2), (1, 2));
    assert!(ap.is_empty());
}

#[test]
fn pillar_interface_across_grammars() {
    let mut b = SlpBackend::new(3);
    let x = b.add(aabaab());
    let y = b.add(Slp::from_bytes(b"baab"));
    assert_eq!(b.lcp(x.suffix(2), y), 4);
    assert_eq!(b.lcp_r(x, y), 4);
    assert_eq!(b.lcp_r(x.prefix(5), y.prefix(3)), 3);
    assert_eq!(b.access(y, 1), b'a');
    assert_eq!(&*b.bytes(Frag::new(x.owner, 1, 4)), b"aba");
}

#[test]
fn random_grammars_match_decompression() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for g_idx in 0..500 {
        let sigma = [2u8, 4, 26][g_idx % 3];
        let g = random_slp(&mut rng, 100, 100_000, sigma);
        let s = g.decompress();
        assert_eq!(s.len() as u64, g.len());
        let mut b = SlpBackend::new(g_idx as u64);
        let h = b.add(g.clone());
        let n = s.len();
        for _ in 0..1000 {
            let i = rng.gen_range(0..n);
            assert_eq!(b.access(h, i), s[i]);
        }
        for _ in 0..20 {
            let l = rng.gen_range(0..=n);
            let r = rng.gen_range(l..=n.min(l + 300));
            assert_eq!(g.extract(l as u64, r as u64).unwrap(), &s[l..r]);
        }
        for _ in 0..1000 {
            let i = rng.gen_range(0..n);
            let j = if rng.gen_bool(0.5) {
                rng.gen_range(0..n)
            } else {
                (i + rng.gen_range(1..=8)) % n
            };
            let want = oracle::naive_lcp(&s[i..], &s[j..]);
            assert_eq!(b.lcp(h.suffix(i), h.suffix(j)), want, "grammar {g_idx}, lcp({i},{j})");
            let want_r = oracle::naive_lcs(&s[..i], &s[..j]);
            assert_eq!(
                b.lcp_r(h.prefix(i), h.prefix(j)),
                want_r,
                "grammar {g_idx}, lcs({i},{j})"
            );
        }
    }
}
