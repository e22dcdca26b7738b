//! Word algebra: digit shifts, conjugates, fractional powers, factor search
//! and the index of one word inside another.

use crate::error::{overflow, Error, Result};
use crate::rational::Rational;
use crate::word::{Digit, Word};

/// Adds `delta` to every digit. Fails if a digit would become negative.
pub fn shift(w: &Word, delta: i64) -> Result<Word> {
    w.iter()
        .map(|&d| match d.checked_add_signed(delta) {
            Some(v) => Ok(v),
            None if delta < 0 => Err(Error::Domain(format!(
                "cannot subtract {} from digit {d}",
                delta.unsigned_abs()
            ))),
            None => Err(overflow(format!("digit {d} + {delta}"))),
        })
        .collect()
}

/// `C^j(w) = w[j+1..|w|] w[1..j]`, with `j` reduced modulo `|w|`.
pub fn conjugate(w: &Word, j: i64) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::Domain("conjugate of the empty word".into()));
    }
    let j = j.rem_euclid(w.len() as i64) as usize;
    let mut out = Word::with_capacity(w.len());
    out.extend_from(&w[j..]);
    out.extend_from(&w[..j]);
    Ok(out)
}

/// The prefix of length `r|w|` of `www...`.
pub fn fractional_power(w: &Word, r: Rational) -> Result<Word> {
    if w.is_empty() {
        return Err(Error::Domain("fractional power of the empty word".into()));
    }
    if r.is_negative() {
        return Err(Error::Domain(format!("negative exponent {r}")));
    }
    let len = r
        .times_length(w.len() as u64)
        .ok_or_else(|| Error::Domain(format!("{r} * {} is not an integer", w.len())))?;
    Ok(w.iter().copied().cycle().take(len as usize).collect())
}

fn failure_table(pattern: &[Digit]) -> Vec<usize> {
    let mut fail = vec![0usize; pattern.len()];
    let mut k = 0;
    for i in 1..pattern.len() {
        while k > 0 && pattern[i] != pattern[k] {
            k = fail[k - 1];
        }
        if pattern[i] == pattern[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

/// All 1-indexed start positions of `pattern` in `text`, ascending.
///
/// An empty pattern has no reported occurrences.
pub fn find_occurrences(pattern: &[Digit], text: &[Digit]) -> Vec<usize> {
    let mut hits = Vec::new();
    if pattern.is_empty() || pattern.len() > text.len() {
        return hits;
    }
    let fail = failure_table(pattern);
    let mut k = 0;
    for (i, &c) in text.iter().enumerate() {
        while k > 0 && c != pattern[k] {
            k = fail[k - 1];
        }
        if c == pattern[k] {
            k += 1;
        }
        if k == pattern.len() {
            hits.push(i + 2 - k);
            k = fail[k - 1];
        }
    }
    hits
}

pub fn is_factor(pattern: &[Digit], text: &[Digit]) -> bool {
    pattern.is_empty() || !find_occurrences(pattern, text).is_empty()
}

/// `max { r : u^r is a factor of w }`, or `0` when `u[1]` never occurs.
pub fn index_of(u: &Word, w: &Word) -> Result<Rational> {
    if u.is_empty() {
        return Err(Error::Domain("index of the empty word".into()));
    }
    let p = u.len();
    let mut best = 0usize;
    for start in 0..w.len() {
        if w.len() - start <= best {
            break;
        }
        let run = w[start..]
            .iter()
            .zip(u.iter().cycle())
            .take_while(|(a, b)| a == b)
            .count();
        best = best.max(run);
    }
    Rational::from_lengths(best as u64, p as u64)
}

/// Every digit replaced by its residue modulo `k`.
pub fn project_mod(w: &Word, k: usize) -> Result<Word> {
    crate::construct::check_k(k)?;
    Ok(w.iter().map(|&d| d % k as Digit).collect())
}
