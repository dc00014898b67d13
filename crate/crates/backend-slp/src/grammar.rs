//! Straight-line programs: representation, text format, and expansion.
//!
//! # Algorithm
//!
//! Parsing reads one rule per line, then validates the rule graph:
//! 1. every id in `[1, count]` is defined exactly once and every reference
//!    points into that range (forward references are allowed);
//! 2. an iterative depth-first search orders symbols children-first and
//!    reports any cycle;
//! 3. expansion lengths and parse-tree depths are computed in that order,
//!    rejecting lengths above `2^63 - 1`.
//!
//! # Invariants
//!
//! * `len[A] = len[B] + len[C]` for `A -> BC`; `len[terminal] = 1`.
//! * Every error names the 1-based line (or symbol) it concerns.
//!
//! # Design Notes
//!
//! Symbols are stored 0-based internally (`id - 1`). Access and extraction
//! walk from the start symbol using cached lengths, so they cost
//! `O(depth)` and `O(r - l + depth)` respectively; grammars are not
//! rebalanced.

use thiserror::Error;

/// Largest admissible expansion length.
pub const MAX_LEN: u64 = i64::MAX as u64;

/// One grammar rule (symbol indices are 0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    /// `A -> c`
    Terminal(u8),
    /// `A -> B C`
    Pair(u32, u32),
}

/// Errors from parsing or constructing a grammar.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlpError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: symbol {id} is outside [1, {count}]")]
    UnknownSymbol { line: usize, id: u64, count: usize },
    #[error("line {line}: symbol {id} defined twice")]
    Duplicate { line: usize, id: u64 },
    #[error("symbol {id} has no rule")]
    Missing { id: usize },
    #[error("line {line}: cycle through symbol {id}")]
    Cycle { line: usize, id: usize },
    #[error("line {line}: expansion of symbol {id} exceeds 2^63-1 characters")]
    Overflow { line: usize, id: usize },
}

impl SlpError {
    /// The 1-based input line the error refers to, when there is one.
    pub fn line(&self) -> Option<usize> {
        match self {
            SlpError::Syntax { line, .. }
            | SlpError::UnknownSymbol { line, .. }
            | SlpError::Duplicate { line, .. }
            | SlpError::Cycle { line, .. }
            | SlpError::Overflow { line, .. } => Some(*line),
            SlpError::Missing { .. } => None,
        }
    }
}

/// A validated straight-line program in Chomsky normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slp {
    rules: Vec<Rule>,
    start: u32,
    len: Vec<u64>,
    depth: Vec<u32>,
    /// Symbols ordered so that children precede parents.
    order: Vec<u32>,
}

impl Slp {
    /// Validates `rules` (0-based) with the given start symbol.
    ///
    /// `lines[i]` is the source line of rule `i`, used in error messages.
    pub fn from_rules(rules: Vec<Rule>, start: usize, lines: Option<&[usize]>) -> Result<Slp, SlpError> {
        let count = rules.len();
        let line_of = |i: usize| lines.map_or(i + 2, |l| l[i]);
        if start >= count {
            return Err(SlpError::UnknownSymbol {
                line: 1,
                id: start as u64 + 1,
                count,
            });
        }
        for (i, r) in rules.iter().enumerate() {
            if let Rule::Pair(a, b) = *r {
                for c in [a, b] {
                    if c as usize >= count {
                        return Err(SlpError::UnknownSymbol {
                            line: line_of(i),
                            id: c as u64 + 1,
                            count,
                        });
                    }
                }
            }
        }
        // Iterative DFS: 0 = unvisited, 1 = on stack, 2 = done.
        let mut state = vec![0u8; count];
        let mut order = Vec::with_capacity(count);
        for root in 0..count {
            if state[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, u8)> = vec![(root, 0)];
            state[root] = 1;
            while let Some(&mut (v, ref mut child)) = stack.last_mut() {
                let next = match rules[v] {
                    Rule::Pair(a, b) if *child < 2 => {
                        let c = if *child == 0 { a } else { b } as usize;
                        *child += 1;
                        Some(c)
                    }
                    _ => None,
                };
                match next {
                    Some(c) => match state[c] {
                        0 => {
                            state[c] = 1;
                            stack.push((c, 0));
                        }
                        1 => {
                            return Err(SlpError::Cycle {
                                line: line_of(v),
                                id: c + 1,
                            })
                        }
                        _ => {}
                    },
                    None => {
                        state[v] = 2;
                        order.push(v as u32);
                        stack.pop();
                    }
                }
            }
        }
        let mut len = vec![0u64; count];
        let mut depth = vec![0u32; count];
        for &v in &order {
            let v = v as usize;
            match rules[v] {
                Rule::Terminal(_) => len[v] = 1,
                Rule::Pair(a, b) => {
                    let (a, b) = (a as usize, b as usize);
                    len[v] = len[a]
                        .checked_add(len[b])
                        .filter(|&l| l <= MAX_LEN)
                        .ok_or(SlpError::Overflow {
                            line: line_of(v),
                            id: v + 1,
                        })?;
                    depth[v] = 1 + depth[a].max(depth[b]);
                }
            }
        }
        Ok(Slp {
            rules,
            start: start as u32,
            len,
            depth,
            order,
        })
    }

    /// Parses the line-oriented text format.
    ///
    /// ```text
    /// SLP v1 <symbol_count> <start_id>
    /// <id> = '<byte>'            (escapes: \' \\ \n)
    /// <id> = <left_id> <right_id>
    /// ```
    pub fn parse(input: &[u8]) -> Result<Slp, SlpError> {
        let mut lines = input.split(|&c| c == b'\n').enumerate();
        let (_, header) = lines.next().ok_or(SlpError::Syntax {
            line: 1,
            msg: "empty input".into(),
        })?;
        let header = std::str::from_utf8(header).map_err(|_| SlpError::Syntax {
            line: 1,
            msg: "header is not ASCII".into(),
        })?;
        let fields: Vec<&str> = header.split_ascii_whitespace().collect();
        if fields.len() != 4 || fields[0] != "SLP" || fields[1] != "v1" {
            return Err(SlpError::Syntax {
                line: 1,
                msg: "expected header `SLP v1 <symbol_count> <start_id>`".into(),
            });
        }
        let num = |s: &str, what: &str| -> Result<u64, SlpError> {
            s.parse::<u64>().map_err(|_| SlpError::Syntax {
                line: 1,
                msg: format!("invalid {what} `{s}`"),
            })
        };
        let count = num(fields[2], "symbol count")? as usize;
        let start = num(fields[3], "start id")?;
        if count == 0 {
            return Err(SlpError::Syntax {
                line: 1,
                msg: "grammar must have at least one symbol".into(),
            });
        }
        if start == 0 || start as usize > count {
            return Err(SlpError::UnknownSymbol {
                line: 1,
                id: start,
                count,
            });
        }
        let mut rules: Vec<Option<Rule>> = vec![None; count];
        let mut src_line = vec![0usize; count];
        for (idx, raw) in lines {
            let line = idx + 1;
            if raw.iter().all(|c| c.is_ascii_whitespace()) {
                continue;
            }
            let (id, rule) = parse_rule(raw, line, count)?;
            if rules[id].is_some() {
                return Err(SlpError::Duplicate {
                    line,
                    id: id as u64 + 1,
                });
            }
            rules[id] = Some(rule);
            src_line[id] = line;
        }
        let rules: Vec<Rule> = rules
            .into_iter()
            .enumerate()
            .map(|(i, r)| r.ok_or(SlpError::Missing { id: i + 1 }))
            .collect::<Result<_, _>>()?;
        Slp::from_rules(rules, start as usize - 1, Some(&src_line))
    }

    /// Serialises to the text format accepted by [`Slp::parse`].
    pub fn to_text(&self) -> Vec<u8> {
        let mut out = format!("SLP v1 {} {}\n", self.rules.len(), self.start + 1).into_bytes();
        for (i, r) in self.rules.iter().enumerate() {
            match *r {
                Rule::Terminal(c) => {
                    out.extend_from_slice(format!("{} = '", i + 1).as_bytes());
                    match c {
                        b'\'' => out.extend_from_slice(b"\\'"),
                        b'\\' => out.extend_from_slice(b"\\\\"),
                        b'\n' => out.extend_from_slice(b"\\n"),
                        c => out.push(c),
                    }
                    out.extend_from_slice(b"'\n");
                }
                Rule::Pair(a, b) => out.extend_from_slice(format!("{} = {} {}\n", i + 1, a + 1, b + 1).as_bytes()),
            }
        }
        out
    }

    /// A grammar for a single character.
    pub fn terminal(c: u8) -> Slp {
        Slp::from_rules(vec![Rule::Terminal(c)], 0, None).expect("valid")
    }

    /// A balanced grammar for a non-empty string: one terminal per distinct
    /// byte, then pairs built bottom-up (equal subtrees are shared).
    pub fn from_bytes(s: &[u8]) -> Slp {
        assert!(!s.is_empty(), "an SLP generates a non-empty string");
        let mut rules = Vec::new();
        let mut term = std::collections::HashMap::new();
        let mut pairs = std::collections::HashMap::new();
        let mut level: Vec<u32> = s
            .iter()
            .map(|&c| {
                *term.entry(c).or_insert_with(|| {
                    rules.push(Rule::Terminal(c));
                    rules.len() as u32 - 1
                })
            })
            .collect();
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            for ch in level.chunks(2) {
                if ch.len() == 1 {
                    next.push(ch[0]);
                    continue;
                }
                let id = *pairs.entry((ch[0], ch[1])).or_insert_with(|| {
                    rules.push(Rule::Pair(ch[0], ch[1]));
                    rules.len() as u32 - 1
                });
                next.push(id);
            }
            level = next;
        }
        let start = level[0] as usize;
        Slp::from_rules(rules, start, None).expect("balanced construction is valid")
    }

    /// A left-comb grammar (`((c0 c1) c2) ...`) for a non-empty string.
    pub fn left_comb(s: &[u8]) -> Slp {
        assert!(!s.is_empty(), "an SLP generates a non-empty string");
        let mut rules = vec![Rule::Terminal(s[0])];
        let mut cur = 0u32;
        for &c in &s[1..] {
            rules.push(Rule::Terminal(c));
            let t = rules.len() as u32 - 1;
            rules.push(Rule::Pair(cur, t));
            cur = rules.len() as u32 - 1;
        }
        Slp::from_rules(rules, cur as usize, None).expect("comb construction is valid")
    }

    /// Grammar for `gen(a) · gen(b)`: the rules of `a`, the renumbered rules
    /// of `b`, and one fresh start rule.
    pub fn concat(a: &Slp, b: &Slp) -> Result<Slp, SlpError> {
        let shift = a.rules.len() as u32;
        let mut rules = a.rules.clone();
        rules.extend(b.rules.iter().map(|r| match *r {
            Rule::Pair(x, y) => Rule::Pair(x + shift, y + shift),
            t => t,
        }));
        rules.push(Rule::Pair(a.start, b.start + shift));
        let start = rules.len() - 1;
        Slp::from_rules(rules, start, None)
    }

    /// Number of symbols.
    pub fn size(&self) -> usize {
        self.rules.len()
    }

    /// Start symbol (0-based).
    pub fn start(&self) -> usize {
        self.start as usize
    }

    /// All rules (0-based symbol indices).
    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Rule of symbol `a`.
    pub fn rule(&self, a: usize) -> Rule {
        self.rules[a]
    }

    /// `|gen(a)|`.
    pub fn symbol_len(&self, a: usize) -> u64 {
        self.len[a]
    }

    /// Parse-tree height of symbol `a` (terminals have height 0).
    pub fn symbol_depth(&self, a: usize) -> u32 {
        self.depth[a]
    }

    /// Symbols ordered children-first.
    pub fn topological_order(&self) -> &[u32] {
        &self.order
    }

    /// Length `N` of the generated string.
    pub fn len(&self) -> u64 {
        self.len[self.start as usize]
    }

    /// Always false: grammars generate non-empty strings.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// Parse-tree height of the start symbol.
    pub fn depth(&self) -> u32 {
        self.depth[self.start as usize]
    }

    /// `gen[i]` by descent from the start symbol.
    pub fn access(&self, i: u64) -> Option<u8> {
        self.access_in(self.start as usize, i)
    }

    /// `gen(a)[i]`.
    pub fn access_in(&self, mut a: usize, mut i: u64) -> Option<u8> {
        if i >= self.len[a] {
            return None;
        }
        loop {
            match self.rules[a] {
                Rule::Terminal(c) => return Some(c),
                Rule::Pair(l, r) => {
                    let ll = self.len[l as usize];
                    if i < ll {
                        a = l as usize;
                    } else {
                        i -= ll;
                        a = r as usize;
                    }
                }
            }
        }
    }

    /// `gen[l..r)`; `None` when the range is invalid.
    pub fn extract(&self, l: u64, r: u64) -> Option<Vec<u8>> {
        self.extract_in(self.start as usize, l, r)
    }

    /// `gen(a)[l..r)`.
    pub fn extract_in(&self, a: usize, l: u64, r: u64) -> Option<Vec<u8>> {
        if l > r || r > self.len[a] {
            return None;
        }
        let mut out = Vec::with_capacity((r - l) as usize);
        if l == r {
            return Some(out);
        }
        let mut stack: Vec<(u32, u64)> = vec![(a as u32, 0)];
        while let Some((v, off)) = stack.pop() {
            let end = off + self.len[v as usize];
            if end <= l || off >= r {
                continue;
            }
            match self.rules[v as usize] {
                Rule::Terminal(c) => out.push(c),
                Rule::Pair(x, y) => {
                    stack.push((y, off + self.len[x as usize]));
                    stack.push((x, off));
                }
            }
        }
        Some(out)
    }

    /// The whole generated string.
    pub fn decompress(&self) -> Vec<u8> {
        self.extract(0, self.len()).expect("full range is valid")
    }
}

fn parse_rule(raw: &[u8], line: usize, count: usize) -> Result<(usize, Rule), SlpError> {
    let syntax = |msg: &str| SlpError::Syntax {
        line,
        msg: msg.to_string(),
    };
    let eq = raw
        .windows(3)
        .position(|w| w == b" = ")
        .ok_or_else(|| syntax("expected `<id> = ...`"))?;
    let id = parse_id(&raw[..eq], line, count)?;
    let rhs = &raw[eq + 3..];
    if rhs.first() == Some(&b'\'') {
        let (c, used) = match rhs.get(1) {
            Some(b'\\') => match rhs.get(2) {
                Some(b'\'') => (b'\'', 3),
                Some(b'\\') => (b'\\', 3),
                Some(b'n') => (b'\n', 3),
                _ => return Err(syntax("unknown escape in terminal")),
            },
            Some(b'\'') | None => return Err(syntax("empty terminal")),
            Some(&c) => (c, 2),
        };
        if rhs.get(used) != Some(&b'\'') || rhs[used + 1..].iter().any(|c| !c.is_ascii_whitespace()) {
            return Err(syntax("terminal must be a single quoted byte"));
        }
        return Ok((id, Rule::Terminal(c)));
    }
    let text = std::str::from_utf8(rhs).map_err(|_| syntax("rule body is not ASCII"))?;
    let parts: Vec<&str> = text.split_ascii_whitespace().collect();
    if parts.len() != 2 {
        return Err(syntax("expected `<left_id> <right_id>` or a quoted byte"));
    }
    let l = parse_id(parts[0].as_bytes(), line, count)?;
    let r = parse_id(parts[1].as_bytes(), line, count)?;
    Ok((id, Rule::Pair(l as u32, r as u32)))
}

fn parse_id(s: &[u8], line: usize, count: usize) -> Result<usize, SlpError> {
    let text = std::str::from_utf8(s).unwrap_or("").trim();
    let id: u64 = text.parse().map_err(|_| SlpError::Syntax {
        line,
        msg: format!("invalid symbol id `{}`", String::from_utf8_lossy(s)),
    })?;
    if id == 0 || id as usize > count {
        return Err(SlpError::UnknownSymbol { line, id, count });
    }
    Ok(id as usize - 1)
}
