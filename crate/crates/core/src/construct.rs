//! k-bonacci numbers and k-bonacci words over the infinite alphabet.
//!
//! `W_n` is the n-th iterate of the morphism
//! `ki+j -> (ki)(ki+j+1)` for `j < k-1` and `ki+j -> (ki+j+1)` for `j = k-1`,
//! started from the single digit `0`. The same words satisfy
//!
//! ```text
//! W_n = W_{n-1} W_{n-2} ... W_0 n                        (1 <= n <= k-1)
//! W_n = W_{n-1} W_{n-2} ... W_{n-k+1} (k + W_{n-k})       (n >= k)
//! ```
//!
//! and both constructions are exposed so that they can check each other.

use serde::{Deserialize, Serialize};

use crate::error::{overflow, Error, Result};
use crate::word::{Digit, Word};

/// Largest word (in symbols) any constructor produces unless told otherwise.
pub const DEFAULT_LENGTH_CAP: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Iterate the morphism `n` times from `0`.
    Morphism,
    /// Concatenate memoized lower levels.
    Recursion,
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        Err(Error::Parameter(format!("k must be at least 2, got {k}")))
    } else {
        Ok(())
    }
}

/// `f_n^(k)`: `k-1` zeros, then a one, then each term is the sum of the
/// previous `k`.
pub fn kbonacci_number(k: usize, n: usize) -> Result<u64> {
    check_k(k)?;
    if n + 1 < k {
        return Ok(0);
    }
    if n + 1 == k {
        return Ok(1);
    }
    // Sliding window over the last k terms, oldest first.
    let mut window = vec![0u64; k];
    window[k - 1] = 1;
    let mut sum: u64 = 1;
    let mut head = 0usize;
    for m in k..=n {
        let next = sum;
        let oldest = window[head];
        window[head] = next;
        head = (head + 1) % k;
        if m < n {
            sum = (sum - oldest)
                .checked_add(next)
                .ok_or_else(|| overflow(format!("f_{n}^({k}) exceeds 64 bits")))?;
        }
    }
    Ok(window[(head + k - 1) % k])
}

/// `|W_n^(k)| = f_{n+k}^(k)`.
pub fn word_length(k: usize, n: usize) -> Result<u64> {
    kbonacci_number(k, n + k)
}

fn check_cap(what: impl FnOnce() -> String, needed: u64, cap: u64) -> Result<()> {
    if needed > cap {
        Err(Error::Size {
            what: what(),
            needed,
            cap,
        })
    } else {
        Ok(())
    }
}

fn morph_digit(k: Digit, d: Digit, out: &mut Word) -> Result<()> {
    let j = d % k;
    let next = d.checked_add(1).ok_or_else(|| overflow("digit + 1"))?;
    if j + 1 < k {
        out.push(d - j);
    }
    out.push(next);
    Ok(())
}

/// Image of `w` under the morphism for `k`.
pub fn apply_morphism(k: usize, w: &Word) -> Result<Word> {
    check_k(k)?;
    let kd = k as Digit;
    let mut out = Word::with_capacity(w.len() * 2);
    for &d in w.iter() {
        morph_digit(kd, d, &mut out)?;
    }
    Ok(out)
}

/// `W_n^(k)` built with the requested strategy, capped at [`DEFAULT_LENGTH_CAP`].
pub fn finite_word(k: usize, n: usize, strategy: Strategy) -> Result<Word> {
    finite_word_capped(k, n, strategy, DEFAULT_LENGTH_CAP)
}

pub fn finite_word_capped(k: usize, n: usize, strategy: Strategy, cap: u64) -> Result<Word> {
    check_k(k)?;
    let len = word_length(k, n)?;
    check_cap(|| format!("W_{n}^({k})"), len, cap)?;
    match strategy {
        Strategy::Morphism => {
            let mut cur = Word::single(0);
            for _ in 0..n {
                cur = apply_morphism(k, &cur)?;
            }
            Ok(cur)
        }
        Strategy::Recursion => {
            let fam = KBonacciWords::up_to_capped(k, n, cap)?;
            Ok(fam.word(n).clone())
        }
    }
}

/// Length-`len` prefix of the infinite fixed point `W^(k)`.
pub fn infinite_prefix(k: usize, len: usize) -> Result<Word> {
    infinite_prefix_capped(k, len, DEFAULT_LENGTH_CAP)
}

pub fn infinite_prefix_capped(k: usize, len: usize, cap: u64) -> Result<Word> {
    check_k(k)?;
    check_cap(|| format!("prefix of W^({k})"), len as u64, cap)?;
    let mut cur = Word::single(0);
    // phi(prefix) is a prefix of phi(word), so the tail beyond `len` is never needed.
    while cur.len() < len {
        cur.truncate(len);
        cur = apply_morphism(k, &cur)?;
    }
    cur.truncate(len);
    Ok(cur)
}

/// Length-`len` prefix of the finite-alphabet k-bonacci word, the fixed point
/// of `i -> 0(i+1)` for `i < k-1` and `k-1 -> 0`.
pub fn finite_alphabet_prefix(k: usize, len: usize) -> Result<Word> {
    check_k(k)?;
    check_cap(
        || format!("prefix of F^({k})"),
        len as u64,
        DEFAULT_LENGTH_CAP,
    )?;
    let top = (k - 1) as Digit;
    let mut cur = Word::single(0);
    while cur.len() < len {
        cur.truncate(len);
        let mut next = Word::with_capacity(cur.len() * 2);
        for &d in cur.iter() {
            next.push(0);
            if d < top {
                next.push(d + 1);
            }
        }
        cur = next;
    }
    cur.truncate(len);
    Ok(cur)
}

/// The words `W_0, ..., W_top` for one `k`, built bottom-up by concatenation.
///
/// Owned by the caller; nothing is cached globally.
#[derive(Debug, Clone)]
pub struct KBonacciWords {
    k: usize,
    words: Vec<Word>,
}

impl KBonacciWords {
    pub fn up_to(k: usize, n: usize) -> Result<Self> {
        Self::up_to_capped(k, n, DEFAULT_LENGTH_CAP)
    }

    pub fn up_to_capped(k: usize, n: usize, cap: u64) -> Result<Self> {
        check_k(k)?;
        let mut fam = KBonacciWords {
            k,
            words: Vec::with_capacity(n + 1),
        };
        fam.extend_to(n, cap)?;
        Ok(fam)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Highest level built so far.
    pub fn top(&self) -> usize {
        self.words.len() - 1
    }

    pub fn get(&self, n: usize) -> Option<&Word> {
        self.words.get(n)
    }

    /// Panics if level `n` has not been built.
    pub fn word(&self, n: usize) -> &Word {
        &self.words[n]
    }

    pub fn len_of(&self, n: usize) -> usize {
        self.words[n].len()
    }

    pub fn extend_to(&mut self, n: usize, cap: u64) -> Result<()> {
        let k = self.k;
        while self.words.len() <= n {
            let m = self.words.len();
            check_cap(|| format!("W_{m}^({k})"), word_length(k, m)?, cap)?;
            let next = if m == 0 {
                Word::single(0)
            } else {
                let first_child = if m < k { 0 } else { m - k + 1 };
                let mut out = Word::with_capacity(word_length(k, m)? as usize);
                for i in (first_child..m).rev() {
                    out.extend_from(&self.words[i]);
                }
                if m < k {
                    out.push(m as Digit);
                } else {
                    let shift = k as Digit;
                    for &d in self.words[m - k].iter() {
                        out.push(
                            d.checked_add(shift)
                                .ok_or_else(|| overflow("digit shift"))?,
                        );
                    }
                }
                out
            };
            self.words.push(next);
        }
        Ok(())
    }
}
