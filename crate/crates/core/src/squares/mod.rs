//! Closed-form description of every square factor of the k-bonacci words,
//! the index of each straddling square, and the critical exponent.
//!
//! For `k >= 3` and `n >= 2k-1`, with `m = n-2k+1`:
//!
//! * `V_n` is the alignment word (`W_{n-2k} ... W_0` or `W_{n-2k} ... W_{n-3k+3}`),
//! * `U_n` is the length-`4|W_m|` prefix of `W_m W_{n-k}`,
//! * `P_n = W_m W_m V_n`, whose `k`-shift sits inside `W_n`.
//!
//! The straddling squares of `W_n` are exactly `(C^j(k + W_m))^2` for
//! `0 <= j <= |V_n|`, and every square of `W^(k)` is a further shift of one.

mod classify;

pub use classify::{block_layout, classify_occurrence, Block, Occurrence, OccurrenceClass};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::construct::{word_length, KBonacciWords, DEFAULT_LENGTH_CAP};
use crate::error::{overflow, Error, Result};
use crate::ops::{conjugate, is_factor, shift};
use crate::rational::Rational;
use crate::word::{Digit, Word};

fn check_theory(k: usize, n: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::Parameter(format!(
            "square theory needs k >= 3, got {k}"
        )));
    }
    if n + 1 < 2 * k {
        return Err(Error::Domain(format!(
            "level n = {n} is below 2k-1 = {} for k = {k}",
            2 * k - 1
        )));
    }
    Ok(())
}

/// Levels concatenated (in order) to form `V_n`. Empty for `n = 2k-1`.
fn v_levels(k: usize, n: usize) -> Vec<usize> {
    if n == 2 * k - 1 {
        Vec::new()
    } else if n < 3 * k - 2 {
        (0..=n - 2 * k).rev().collect()
    } else {
        (n + 3 - 3 * k..=n - 2 * k).rev().collect()
    }
}

/// `|V_n|` without building any word.
pub fn v_length(k: usize, n: usize) -> Result<u64> {
    check_theory(k, n)?;
    v_levels(k, n).into_iter().try_fold(0u64, |acc, l| {
        acc.checked_add(word_length(k, l)?)
            .ok_or_else(|| overflow("|V_n|"))
    })
}

fn family_for(k: usize, n: usize) -> Result<KBonacciWords> {
    // U_n reaches up to W_{n-k}; everything else stays below n-2k+2.
    KBonacciWords::up_to_capped(k, n - k, DEFAULT_LENGTH_CAP)
}

fn v_from(fam: &KBonacciWords, n: usize) -> Word {
    let mut out = Word::empty();
    for l in v_levels(fam.k(), n) {
        out.extend_from(fam.word(l));
    }
    out
}

fn p_from(fam: &KBonacciWords, n: usize) -> Word {
    let m = n + 1 - 2 * fam.k();
    let base = fam.word(m);
    let mut out = Word::with_capacity(base.len() * 3);
    out.extend_from(base);
    out.extend_from(base);
    out.extend_from(&v_from(fam, n));
    out
}

pub fn v_word(k: usize, n: usize) -> Result<Word> {
    check_theory(k, n)?;
    Ok(v_from(&family_for(k, n)?, n))
}

/// Length-`4|W_{n-2k+1}|` prefix of `W_{n-2k+1} W_{n-k}`.
pub fn u_word(k: usize, n: usize) -> Result<Word> {
    check_theory(k, n)?;
    let fam = family_for(k, n)?;
    let base = fam.word(n + 1 - 2 * k);
    let tail = fam.word(n - k);
    if tail.len() < 3 * base.len() {
        return Err(Error::Domain(format!(
            "|W_{}| = {} is less than 3|W_{}| = {}",
            n - k,
            tail.len(),
            n + 1 - 2 * k,
            3 * base.len()
        )));
    }
    let mut out = base.concat(tail);
    out.truncate(4 * base.len());
    Ok(out)
}

/// `P_n = W_{n-2k+1} W_{n-2k+1} V_n`.
pub fn p_word(k: usize, n: usize) -> Result<Word> {
    check_theory(k, n)?;
    Ok(p_from(&family_for(k, n)?, n))
}

/// Roots `C^j(k + W_{n-2k+1})` for `j = 0..=|V_n|`, duplicates kept.
pub fn straddling_square_roots(k: usize, n: usize) -> Result<Vec<Word>> {
    check_theory(k, n)?;
    let fam = family_for(k, n)?;
    let base = shift(fam.word(n + 1 - 2 * k), k as i64)?;
    let vlen = v_from(&fam, n).len();
    (0..=vlen).map(|j| conjugate(&base, j as i64)).collect()
}

/// [`straddling_square_roots`] with repeats removed, first occurrence kept.
pub fn distinct_straddling_square_roots(k: usize, n: usize) -> Result<Vec<Word>> {
    let mut seen = std::collections::HashSet::new();
    Ok(straddling_square_roots(k, n)?
        .into_iter()
        .filter(|r| seen.insert(r.clone()))
        .collect())
}

/// Names the square root `ki + C^j(W_{n-2k+1})`.
///
/// Ordered by `(k, n, i, j)`; that order picks the canonical descriptor when
/// several describe the same word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SquareDescriptor {
    pub k: usize,
    pub n: usize,
    pub i: usize,
    pub j: usize,
}

impl SquareDescriptor {
    pub fn new(k: usize, n: usize, i: usize, j: usize) -> Result<Self> {
        check_theory(k, n)?;
        if i == 0 {
            return Err(Error::Domain(
                "shift multiplier i must be at least 1".into(),
            ));
        }
        let vlen = v_length(k, n)?;
        if j as u64 > vlen {
            return Err(Error::Domain(format!(
                "offset j = {j} exceeds |V_{n}| = {vlen}"
            )));
        }
        Ok(SquareDescriptor { k, n, i, j })
    }

    /// Level of the base word, `n - 2k + 1`.
    pub fn base_level(&self) -> usize {
        self.n + 1 - 2 * self.k
    }

    pub fn root_len(&self) -> Result<u64> {
        word_length(self.k, self.base_level())
    }
}

/// A descriptor together with its expanded root, as serialized in JSON output:
/// `{"k":3,"n":8,"i":1,"j":0,"root":[3,4,3,5,3,4,6]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescribedSquare {
    #[serde(flatten)]
    pub descriptor: SquareDescriptor,
    pub root: Word,
}

pub fn expand_descriptor(d: &SquareDescriptor) -> Result<Word> {
    let d = SquareDescriptor::new(d.k, d.n, d.i, d.j)?;
    let fam = KBonacciWords::up_to(d.k, d.base_level())?;
    expand_in(&fam, &d)
}

fn expand_in(fam: &KBonacciWords, d: &SquareDescriptor) -> Result<Word> {
    let delta =
        d.k.checked_mul(d.i)
            .and_then(|v| i64::try_from(v).ok())
            .ok_or_else(|| overflow("k * i"))?;
    shift(&conjugate(fam.word(d.base_level()), d.j as i64)?, delta)
}

/// Every descriptor whose root has length at most `max_root_len` and whose
/// shift multiplier is at most `max_shift`, in descriptor order.
pub fn square_descriptors(
    k: usize,
    max_root_len: usize,
    max_shift: usize,
) -> Result<Vec<(SquareDescriptor, Word)>> {
    let mut out = Vec::new();
    for_each_candidate(k, max_root_len, max_shift, None, |d, root| {
        out.push((d, root));
    })?;
    Ok(out)
}

fn for_each_candidate(
    k: usize,
    max_root_len: usize,
    max_shift: usize,
    max_digit: Option<Digit>,
    mut f: impl FnMut(SquareDescriptor, Word),
) -> Result<()> {
    check_theory(k, 2 * k - 1)?;
    let mut top_base = None;
    let mut m = 0;
    while word_length(k, m)? <= max_root_len as u64 {
        top_base = Some(m);
        m += 1;
    }
    let Some(top_base) = top_base else {
        return Ok(());
    };
    // V_n for base level m only involves levels below m.
    let fam = KBonacciWords::up_to(k, top_base)?;
    for m in 0..=top_base {
        let n = m + 2 * k - 1;
        let vlen = v_from(&fam, n).len();
        for i in 1..=max_shift {
            // The largest digit of ki + C^j(W_m) is ki + m.
            if let Some(cap) = max_digit {
                if (k * i + m) as Digit > cap {
                    break;
                }
            }
            for j in 0..=vlen {
                let d = SquareDescriptor { k, n, i, j };
                let root = expand_in(&fam, &d)?;
                f(d, root);
            }
        }
    }
    Ok(())
}

/// Distinct square roots described by the closed form, optionally restricted
/// to those whose square occurs in `host`. Each word is reported once with
/// its least descriptor.
pub fn enumerate_squares(
    k: usize,
    max_root_len: usize,
    max_shift: usize,
    host: Option<&Word>,
) -> Result<Vec<(SquareDescriptor, Word)>> {
    let max_digit = host.map(|h| h.max_digit().unwrap_or(0));
    let mut best: BTreeMap<Word, SquareDescriptor> = BTreeMap::new();
    for_each_candidate(k, max_root_len, max_shift, max_digit, |d, root| {
        if best.contains_key(&root) {
            return;
        }
        if let Some(h) = host {
            if !is_factor(&root.concat(&root), h) {
                return;
            }
        }
        best.insert(root, d);
    })?;
    let mut out: Vec<(SquareDescriptor, Word)> = best.into_iter().map(|(w, d)| (d, w)).collect();
    out.sort();
    Ok(out)
}

/// All distinct squares of `W_n^(k)` from the closed form.
pub fn squares_of_word(k: usize, n: usize) -> Result<Vec<(SquareDescriptor, Word)>> {
    if k < 3 {
        return Err(Error::Parameter(format!(
            "square theory needs k >= 3, got {k}"
        )));
    }
    let fam = KBonacciWords::up_to(k, n)?;
    let host = fam.word(n);
    enumerate_squares(k, host.len() / 2, n / k, Some(host))
}

/// `INDEX(A, W_n)` of a straddling square root, kept as `3 - numer/denom`
/// with the unreduced parts that the formula produces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexDeficit {
    pub numer: u64,
    pub denom: u64,
}

impl IndexDeficit {
    pub fn value(&self) -> Result<Rational> {
        Rational::integer(3).checked_sub(Rational::from_lengths(self.numer, self.denom)?)
    }

    /// `3-p/q` with the formula's own p and q, or a plain integer when q = 1.
    pub fn to_paper_string(&self) -> String {
        if self.denom == 1 {
            format!("{}", 3 - self.numer as i64)
        } else {
            format!("3-{}/{}", self.numer, self.denom)
        }
    }
}

pub fn straddling_index_parts(k: usize, n: usize) -> Result<IndexDeficit> {
    check_theory(k, n)?;
    let pow2 = |e: usize| {
        1u64.checked_shl(e as u32)
            .filter(|_| e < 64)
            .ok_or_else(|| overflow(format!("2^{e}")))
    };
    if n <= 3 * k - 3 {
        Ok(IndexDeficit {
            numer: 1,
            denom: pow2(n + 1 - 2 * k)?,
        })
    } else if n == 3 * k - 2 {
        Ok(IndexDeficit {
            numer: 1,
            denom: pow2(k - 2)?,
        })
    } else {
        let numer = word_length(k, n + 2 - 3 * k)?
            .checked_add(word_length(k, n + 1 - 3 * k)?)
            .ok_or_else(|| overflow("index numerator"))?;
        Ok(IndexDeficit {
            numer,
            denom: word_length(k, n + 1 - 2 * k)?,
        })
    }
}

pub fn straddling_index(k: usize, n: usize) -> Result<Rational> {
    straddling_index_parts(k, n)?.value()
}

/// `3 - 3/(2^k - 1)`.
pub fn critical_exponent(k: usize) -> Result<Rational> {
    critical_deficit(k)?.value()
}

/// The critical exponent as `3 - 3/(2^k - 1)`, unreduced.
pub fn critical_deficit(k: usize) -> Result<IndexDeficit> {
    if k < 3 {
        return Err(Error::Parameter(format!(
            "critical exponent needs k >= 3, got {k}"
        )));
    }
    if k > 61 {
        return Err(overflow(format!(
            "2^{k} - 1 does not fit the rational bound"
        )));
    }
    Ok(IndexDeficit {
        numer: 3,
        denom: (1u64 << k) - 1,
    })
}

/// `P_{3k-1} + ki`, the critical factor for shift multiplier `i`.
pub fn critical_factor(k: usize, i: usize) -> Result<Word> {
    if k < 3 {
        return Err(Error::Parameter(format!(
            "critical factors need k >= 3, got {k}"
        )));
    }
    if i == 0 {
        return Err(Error::Domain(
            "shift multiplier i must be at least 1".into(),
        ));
    }
    let delta = k
        .checked_mul(i)
        .and_then(|v| i64::try_from(v).ok())
        .ok_or_else(|| overflow("k * i"))?;
    shift(&p_word(k, 3 * k - 1)?, delta)
}
