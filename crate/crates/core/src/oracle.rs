//! Brute-force ground truth.
//!
//! Nothing here calls into the word algebra or the closed-form square theory:
//! factor tests are done by direct comparison of slices. The `verify_*`
//! functions then put the two sides next to each other.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::construct::{finite_word, word_length, KBonacciWords, Strategy};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::report::{Rendering, VerificationReport, Witness};
use crate::squares::{critical_exponent, critical_factor, squares_of_word, Occurrence};
use crate::word::{Digit, Word};

/// Default bound on `|w|` for [`brute_max_index`].
pub const DEFAULT_ORACLE_GUARD: usize = 200_000;

/// Every occurrence of a square `AA` in `w`, as (start, `|A|`), by naive
/// comparison of the two halves.
pub fn brute_square_occurrences(w: &[Digit]) -> Vec<Occurrence> {
    let mut out = Vec::new();
    for half in 1..=w.len() / 2 {
        for t in 0..=w.len() - 2 * half {
            if w[t..t + half] == w[t + half..t + 2 * half] {
                out.push(Occurrence::new(t + 1, half));
            }
        }
    }
    out
}

/// All distinct `A` with `AA` a factor of `w`.
pub fn brute_square_roots(w: &[Digit]) -> BTreeSet<Word> {
    brute_square_occurrences(w)
        .into_iter()
        .map(|o| Word::from(&w[o.start - 1..o.start - 1 + o.len]))
        .collect()
}

fn contains_slice(hay: &[Digit], needle: &[Digit]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|win| win == needle)
}

/// `INDEX(u, w)` by binary search on the length of the longest prefix of
/// `uuu...` that occurs in `w` (occurrence is monotone in that length).
pub fn brute_index(u: &Word, w: &Word) -> Result<Rational> {
    if u.is_empty() {
        return Err(Error::Domain("index of the empty word".into()));
    }
    let power = |len: usize| -> Vec<Digit> { (0..len).map(|t| u[t % u.len()]).collect() };
    let (mut lo, mut hi) = (0usize, w.len());
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if contains_slice(w, &power(mid)) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Rational::from_lengths(lo as u64, u.len() as u64)
}

/// Largest index over all factors of a word, with the factors attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxIndex {
    pub value: Rational,
    /// False when the word is square-free; `value` is then below 2 and
    /// `roots`/`powers` are empty.
    pub has_square: bool,
    pub roots: BTreeSet<Word>,
    /// The maximal repetitions `roots^value` themselves.
    pub powers: BTreeSet<Word>,
}

pub fn brute_max_index(w: &Word) -> Result<MaxIndex> {
    brute_max_index_guarded(w, DEFAULT_ORACLE_GUARD)
}

pub fn brute_max_index_guarded(w: &Word, guard: usize) -> Result<MaxIndex> {
    if w.len() < 2 {
        return Err(Error::Domain(
            "maximal index needs a word of length at least 2".into(),
        ));
    }
    if w.len() > guard {
        return Err(Error::Size {
            what: "oracle input".into(),
            needed: w.len() as u64,
            cap: guard as u64,
        });
    }
    // Periods above |w|/2 can only give indices below 2, so try the short
    // ones first.
    let half = w.len() / 2;
    let mut best = scan_periods(w, 1..=half);
    if best.0 < Rational::integer(2) {
        let rest = scan_periods(w, half + 1..=w.len() - 1);
        if rest.0 > best.0 {
            best = rest;
        }
    }
    let (value, spans) = best;
    let has_square = value >= Rational::integer(2);
    let mut roots = BTreeSet::new();
    let mut powers = BTreeSet::new();
    if has_square {
        for (start, period, len) in spans {
            roots.insert(Word::from(&w[start..start + period]));
            powers.insert(Word::from(&w[start..start + len]));
        }
    }
    Ok(MaxIndex {
        value,
        has_square,
        roots,
        powers,
    })
}

/// For each period `p`, every maximal stretch with `w[i] = w[i+p]` gives a
/// repetition of length `stretch + p`. Returns the best ratio and the
/// (start, period, length) triples achieving it.
fn scan_periods(
    w: &[Digit],
    periods: impl Iterator<Item = usize>,
) -> (Rational, Vec<(usize, usize, usize)>) {
    let mut best_len = 0usize;
    let mut best_p = 1usize;
    let mut spans = Vec::new();
    let mut consider = |start: usize, p: usize, len: usize, spans: &mut Vec<_>| {
        let lhs = len as u128 * best_p as u128;
        let rhs = best_len as u128 * p as u128;
        if lhs > rhs {
            best_len = len;
            best_p = p;
            spans.clear();
            spans.push((start, p, len));
        } else if lhs == rhs {
            spans.push((start, p, len));
        }
    };
    for p in periods {
        let mut run_start = 0;
        let mut stretch = 0;
        for i in 0..w.len() - p {
            if w[i] == w[i + p] {
                stretch += 1;
            } else {
                consider(run_start, p, stretch + p, &mut spans);
                run_start = i + 1;
                stretch = 0;
            }
        }
        consider(run_start, p, stretch + p, &mut spans);
    }
    let value = Rational::from_lengths(best_len as u64, best_p as u64)
        .expect("lengths are far below i64::MAX");
    (value, spans)
}

fn theory_k(k: usize) -> Result<()> {
    if k < 3 {
        Err(Error::Parameter(format!(
            "verification needs k >= 3, got {k}"
        )))
    } else {
        Ok(())
    }
}

/// Closed-form squares of `W_n` against the naive scan.
pub fn verify_squares(k: usize, n: usize) -> Result<VerificationReport> {
    theory_k(k)?;
    let host = finite_word(k, n, Strategy::Recursion)?;
    let brute = brute_square_roots(&host);
    let closed: BTreeSet<Word> = squares_of_word(k, n)?.into_iter().map(|(_, r)| r).collect();
    let mut witnesses = Vec::new();
    for missing in brute.difference(&closed) {
        witnesses.push(Witness::word(
            "square found by scan but not by closed form",
            missing,
        ));
    }
    for extra in closed.difference(&brute) {
        witnesses.push(Witness::word(
            "closed-form root whose square is absent",
            extra,
        ));
    }
    Ok(VerificationReport::new(
        format!(
            "squares of W_{n}^({k}): closed form = brute force ({} roots)",
            brute.len()
        ),
        Rendering::words(&closed),
        Rendering::words(&brute),
        closed == brute,
        witnesses,
    ))
}

/// Maximal index of `W_n` against the critical exponent, and every
/// maximizing repetition against the critical factors.
pub fn verify_critical(k: usize, n: usize) -> Result<VerificationReport> {
    verify_critical_guarded(k, n, DEFAULT_ORACLE_GUARD)
}

pub fn verify_critical_guarded(k: usize, n: usize, guard: usize) -> Result<VerificationReport> {
    theory_k(k)?;
    if n + 1 < 3 * k {
        return Err(Error::Domain(format!(
            "critical check needs n >= 3k-1 = {}",
            3 * k - 1
        )));
    }
    let host = finite_word(k, n, Strategy::Recursion)?;
    let found = brute_max_index_guarded(&host, guard)?;
    let exponent = critical_exponent(k)?;
    let mut witnesses = Vec::new();
    for power in &found.powers {
        let i = (power[0] / k as Digit) as usize;
        let expected = if i >= 1 {
            critical_factor(k, i).ok()
        } else {
            None
        };
        if expected.as_ref() != Some(power) {
            witnesses.push(Witness::word(
                "maximal repetition that is not a critical factor",
                power,
            ));
        }
    }
    let ok = found.value == exponent && witnesses.is_empty() && !found.powers.is_empty();
    Ok(VerificationReport::new(
        format!("critical exponent of W_{n}^({k})"),
        Rendering::text(exponent.to_string()),
        Rendering::text(found.value.to_string()),
        ok,
        witnesses,
    ))
}

/// Structural checks on `W_n`: length law, morphism/recursion agreement,
/// no `00` factor, and the digit `n` occurring once, at the end.
pub fn verify_invariants(k: usize, n: usize) -> Result<Vec<VerificationReport>> {
    let fam = KBonacciWords::up_to(k, n)?;
    let wn = fam.word(n);
    let by_morphism = finite_word(k, n, Strategy::Morphism)?;
    let expected_len = word_length(k, n)?;
    let mut out = vec![
        VerificationReport::new(
            format!("|W_{n}^({k})| = f_{}^({k})", n + k),
            Rendering::text(expected_len.to_string()),
            Rendering::text(wn.len().to_string()),
            expected_len == wn.len() as u64,
            vec![],
        ),
        VerificationReport::new(
            format!("W_{n}^({k}): morphism and recursion agree"),
            Rendering::word(&by_morphism),
            Rendering::word(wn),
            &by_morphism == wn,
            vec![],
        ),
    ];
    if k >= 3 {
        let zz: Vec<Witness> = wn
            .windows(2)
            .enumerate()
            .filter(|(_, p)| p == &[0, 0])
            .map(|(t, _)| Witness::occurrence("factor 00", Occurrence::new(t + 1, 2)))
            .collect();
        out.push(VerificationReport::new(
            format!("W_{n}^({k}) has no factor 00"),
            Rendering::text("0 occurrences"),
            Rendering::text(format!("{} occurrences", zz.len())),
            zz.is_empty(),
            zz,
        ));
    }
    if n >= 1 {
        let positions: Vec<usize> = wn
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == n as Digit)
            .map(|(t, _)| t + 1)
            .collect();
        let largest = wn.iter().copied().max() == Some(n as Digit);
        out.push(VerificationReport::new(
            format!("digit {n} is largest and occurs only at the end of W_{n}^({k})"),
            Rendering::text(format!("[{}]", wn.len())),
            Rendering::text(format!("{positions:?}")),
            largest && positions == [wn.len()],
            vec![],
        ));
    }
    Ok(out)
}
