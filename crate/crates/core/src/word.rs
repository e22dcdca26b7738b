//! Words over the infinite alphabet of nonnegative integers.
//!
//! Positions follow the 1-indexed convention `W[j..j']` used throughout the
//! crate; the underlying storage is an ordinary zero-based `Vec`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A symbol of the alphabet. Arithmetic on digits is checked 64-bit.
pub type Digit = u64;

/// A finite sequence of digits.
///
/// Serializes as a plain JSON array of integers, e.g. `[0,1,0,2]`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Digit>);

impl Word {
    pub fn new(symbols: Vec<Digit>) -> Self {
        Word(symbols)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(d: Digit) -> Self {
        Word(vec![d])
    }

    pub fn with_capacity(cap: usize) -> Self {
        Word(Vec::with_capacity(cap))
    }

    pub fn symbols(&self) -> &[Digit] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Digit> {
        self.0
    }

    pub fn push(&mut self, d: Digit) {
        self.0.push(d);
    }

    pub fn extend_from(&mut self, other: &[Digit]) {
        self.0.extend_from_slice(other);
    }

    pub fn truncate(&mut self, len: usize) {
        self.0.truncate(len);
    }

    /// The digit at 1-indexed position `j`.
    pub fn at(&self, j: usize) -> Option<Digit> {
        if j == 0 {
            None
        } else {
            self.0.get(j - 1).copied()
        }
    }

    /// The factor `W[from..=to]`, 1-indexed and inclusive.
    pub fn factor(&self, from: usize, to: usize) -> Result<Word> {
        if from == 0 || to < from || to > self.0.len() {
            return Err(Error::Domain(format!(
                "factor [{from}, {to}] out of range for word of length {}",
                self.0.len()
            )));
        }
        Ok(Word(self.0[from - 1..to].to_vec()))
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len.min(self.0.len())].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn max_digit(&self) -> Option<Digit> {
        self.0.iter().copied().max()
    }

    /// Paper-style rendering: `0`-`9`, then `a`-`z` for 10..=35, then `<d>`.
    pub fn to_paper(&self) -> String {
        let mut s = String::with_capacity(self.0.len());
        for &d in &self.0 {
            push_paper_digit(&mut s, d);
        }
        s
    }

    /// Inverse of [`Word::to_paper`].
    pub fn from_paper(s: &str) -> Result<Word> {
        let mut out = Vec::with_capacity(s.len());
        let mut chars = s.chars();
        while let Some(c) = chars.next() {
            let d = match c {
                '0'..='9' => c as u64 - '0' as u64,
                'a'..='z' => c as u64 - 'a' as u64 + 10,
                '<' => {
                    let mut num = String::new();
                    loop {
                        match chars.next() {
                            Some('>') => break,
                            Some(ch) if ch.is_ascii_digit() => num.push(ch),
                            Some(ch) => {
                                return Err(Error::Parse(format!("unexpected {ch:?} inside <...>")))
                            }
                            None => return Err(Error::Parse("unterminated <...> digit".into())),
                        }
                    }
                    num.parse::<u64>()
                        .map_err(|e| Error::Parse(format!("bad digit <{num}>: {e}")))?
                }
                c if c.is_whitespace() => continue,
                other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
            };
            out.push(d);
        }
        Ok(Word(out))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("a digit vector always serializes")
    }

    pub fn from_json(s: &str) -> Result<Word> {
        serde_json::from_str::<Vec<Digit>>(s)
            .map(Word)
            .map_err(|e| Error::Parse(e.to_string()))
    }
}

fn push_paper_digit(s: &mut String, d: Digit) {
    match d {
        0..=9 => s.push((b'0' + d as u8) as char),
        10..=35 => s.push((b'a' + (d - 10) as u8) as char),
        _ => {
            s.push('<');
            s.push_str(&d.to_string());
            s.push('>');
        }
    }
}

impl Deref for Word {
    type Target = [Digit];

    fn deref(&self) -> &[Digit] {
        &self.0
    }
}

impl From<Vec<Digit>> for Word {
    fn from(v: Vec<Digit>) -> Self {
        Word(v)
    }
}

impl From<&[Digit]> for Word {
    fn from(v: &[Digit]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<Digit> for Word {
    fn from_iter<I: IntoIterator<Item = Digit>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        Word::from_paper(s)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_paper())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({:?})", self.to_paper())
    }
}

/// Shorthand for tests and examples: `w("0102")`.
///
/// Panics on malformed input.
pub fn w(s: &str) -> Word {
    Word::from_paper(s).expect("valid paper-encoded word")
}
