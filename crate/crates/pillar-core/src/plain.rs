//! A reference backend answering every primitive by direct scanning.
//!
//! Useful for tests and tiny inputs; `lcp` costs time linear in its answer.

use std::borrow::Cow;

use crate::{Frag, Pillar};

/// Plain in-memory strings without any index.
#[derive(Clone, Debug, Default)]
pub struct PlainStrings {
    strings: Vec<Vec<u8>>,
}

impl PlainStrings {
    /// An empty collection.
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds a string and returns the handle covering all of it.
    pub fn add(&mut self, s: &[u8]) -> Frag {
        self.strings.push(s.to_vec());
        Frag::new((self.strings.len() - 1) as u32, 0, s.len())
    }

    /// Builds a collection from several strings at once.
    pub fn build(strings: &[&[u8]]) -> (Self, Vec<Frag>) {
        let mut b = Self::new();
        let handles = strings.iter().map(|s| b.add(s)).collect();
        (b, handles)
    }

    fn slice(&self, s: Frag) -> &[u8] {
        &self.strings[s.owner as usize][s.start..s.end]
    }
}

impl Pillar for PlainStrings {
    fn access(&self, s: Frag, i: usize) -> u8 {
        self.slice(s)[i]
    }

    fn lcp(&self, s: Frag, t: Frag) -> usize {
        let (a, b) = (self.slice(s), self.slice(t));
        a.iter().zip(b).take_while(|(x, y)| x == y).count()
    }

    fn lcp_r(&self, s: Frag, t: Frag) -> usize {
        let (a, b) = (self.slice(s), self.slice(t));
        a.iter().rev().zip(b.iter().rev()).take_while(|(x, y)| x == y).count()
    }

    fn bytes(&self, s: Frag) -> Cow<'_, [u8]> {
        Cow::Borrowed(self.slice(s))
    }
}
