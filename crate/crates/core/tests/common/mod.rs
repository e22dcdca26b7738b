//! Property checkers shared by the property and acceptance suites. Each
//! returns the list of violations it found; empty means the property holds.

#![allow(dead_code)]

use kbonacci::ops::is_factor;
use kbonacci::oracle::brute_square_occurrences;
use kbonacci::squares::{block_layout, v_length};
use kbonacci::*;

pub type Violations = Vec<String>;

pub fn words(k: usize, n: usize) -> KBonacciWords {
    KBonacciWords::up_to(k, n).unwrap()
}

pub fn length_law(k: usize, max_n: usize) -> Violations {
    let fam = words(k, max_n);
    (0..=max_n)
        .filter_map(|n| {
            let f = kbonacci_number(k, n + k).unwrap();
            (fam.len_of(n) as u64 != f)
                .then(|| format!("k={k} n={n}: |W_n|={} f={f}", fam.len_of(n)))
        })
        .collect()
}

pub fn strategies_agree(k: usize, max_n: usize) -> Violations {
    (0..=max_n)
        .filter(|&n| {
            finite_word(k, n, Strategy::Morphism).unwrap()
                != finite_word(k, n, Strategy::Recursion).unwrap()
        })
        .map(|n| format!("k={k} n={n}: strategies differ"))
        .collect()
}

pub fn no_double_zero(k: usize, n: usize) -> Violations {
    let wn = finite_word(k, n, Strategy::Recursion).unwrap();
    find_occurrences(&[0, 0], &wn)
        .into_iter()
        .map(|p| format!("k={k} n={n}: 00 at {p}"))
        .collect()
}

pub fn last_digit(k: usize, n: usize) -> Violations {
    let wn = finite_word(k, n, Strategy::Recursion).unwrap();
    let hits = find_occurrences(&[n as Digit], &wn);
    let mut v = Violations::new();
    if hits != [wn.len()] {
        v.push(format!(
            "k={k} n={n}: digit {n} at {hits:?}, |W_n|={}",
            wn.len()
        ));
    }
    if wn.max_digit() != Some(n as Digit) {
        v.push(format!("k={k} n={n}: largest digit {:?}", wn.max_digit()));
    }
    v
}

pub fn no_wi_wi(k: usize, n: usize) -> Violations {
    let fam = words(k, n);
    (0..n)
        .filter(|&i| is_factor(&fam.word(i).concat(fam.word(i)), fam.word(n)))
        .map(|i| format!("k={k} n={n}: W_{i}W_{i} occurs"))
        .collect()
}

fn cat(parts: &[&[Digit]]) -> Word {
    parts.iter().flat_map(|p| p.iter().copied()).collect()
}

/// The identities relating `W_m`, `W_{m+1}` and `V_n`, as printed.
pub fn v_prefix_identities(k: usize, n: usize) -> Violations {
    v_identities(k, n, k as Digit)
}

/// Same identities with `W_m = V_n 0 (k-1)` at `n = 3k-2`.
pub fn v_prefix_identities_corrected(k: usize, n: usize) -> Violations {
    v_identities(k, n, (k - 1) as Digit)
}

fn v_identities(k: usize, n: usize, boundary_last: Digit) -> Violations {
    let fam = words(k, n);
    let m = n + 1 - 2 * k;
    let v = v_word(k, n).unwrap();
    let kd = k as Digit;
    let sh = |w: &Word| shift(w, k as i64).unwrap();
    let (next, base) = if n < 3 * k - 2 {
        (
            cat(&[fam.word(m), &v, &[(m + 1) as Digit]]),
            cat(&[&v, &[m as Digit]]),
        )
    } else if n == 3 * k - 2 {
        (
            cat(&[fam.word(m), &v, &[kd]]),
            cat(&[&v, &[0, boundary_last]]),
        )
    } else {
        (
            cat(&[fam.word(m), &v, &sh(fam.word(n + 2 - 3 * k))]),
            cat(&[&v, fam.word(n + 2 - 3 * k), &sh(fam.word(n + 1 - 3 * k))]),
        )
    };
    let mut out = Violations::new();
    if &next != fam.word(m + 1) {
        out.push(format!("k={k} n={n}: W_{{m+1}} identity"));
    }
    if &base != fam.word(m) {
        out.push(format!("k={k} n={n}: W_m identity"));
    }
    out
}

pub fn v_unique_and_follower(k: usize, n: usize) -> Violations {
    let fam = words(k, n);
    let m = n + 1 - 2 * k;
    let v = v_word(k, n).unwrap();
    let hits = find_occurrences(&v, fam.word(m));
    if hits.len() != 1 {
        return vec![format!("k={k} n={n}: V occurs {} times", hits.len())];
    }
    let follower = fam.word(m).at(hits[0] + v.len());
    let expected = if n < 3 * k - 2 { m as Digit } else { 0 };
    if follower != Some(expected) {
        return vec![format!(
            "k={k} n={n}: V followed by {follower:?}, expected {expected}"
        )];
    }
    vec![]
}

/// `U_n` rebuilt from the explicit concatenations for each range of `n`.
pub fn u_by_decomposition(k: usize, n: usize) -> Word {
    let fam = words(k, n);
    let m = n + 1 - 2 * k;
    let wm = fam.word(m);
    let v = v_word(k, n).unwrap();
    let kd = k as Digit;
    let sh = |w: &Word| shift(w, k as i64).unwrap();
    if n < 3 * k - 2 {
        cat(&[wm, wm, &v, &[(m + 1) as Digit], wm])
    } else if n == 3 * k - 2 {
        let tail: Digit = if k == 3 { kd } else { 0 };
        cat(&[wm, wm, &v, &[kd], wm, &[tail]])
    } else if k == 3 {
        cat(&[
            wm,
            wm,
            &v,
            &sh(fam.word(n + 2 - 3 * k)),
            wm,
            &sh(fam.word(n + 1 - 3 * k)),
        ])
    } else {
        cat(&[
            wm,
            wm,
            &v,
            &sh(fam.word(n + 2 - 3 * k)),
            wm,
            fam.word(n + 1 - 3 * k),
        ])
    }
}

pub fn u_decomposition(k: usize, n: usize) -> Violations {
    let u = u_word(k, n).unwrap();
    let wm_len = word_length(k, n + 1 - 2 * k).unwrap() as usize;
    let mut out = Violations::new();
    if u.len() != 4 * wm_len {
        out.push(format!("k={k} n={n}: |U| = {}", u.len()));
    }
    if (word_length(k, n - k).unwrap() as usize) < 3 * wm_len {
        out.push(format!("k={k} n={n}: |W_(n-k)| < 3|W_m|"));
    }
    if u != u_by_decomposition(k, n) {
        out.push(format!("k={k} n={n}: U differs from its decomposition"));
    }
    out
}

/// Straddling square occurrences of `W_n` as (start, |A|), by brute force.
pub fn straddling_squares(k: usize, n: usize) -> Vec<Occurrence> {
    let wn = finite_word(k, n, Strategy::Recursion).unwrap();
    brute_square_occurrences(&wn)
        .into_iter()
        .filter(|o| {
            classify_occurrence(k, n, Occurrence::new(o.start, 2 * o.len)).unwrap()
                == OccurrenceClass::Straddling
        })
        .collect()
}

/// `B = |W_n| - |W_{n-k}|`, the last position before the final block.
fn final_block_offset(k: usize, n: usize) -> usize {
    block_layout(k, n).unwrap().last().unwrap().start - 1
}

/// Centers are compared doubled, so `t + |A| - 1/2` becomes `2t + 2|A| - 1`.
fn doubled_center(o: &Occurrence) -> usize {
    2 * o.start + 2 * o.len - 1
}

/// Lower center bound, start bound, upper bound from the window `W_m`, and
/// the upper bound carried over from `U_n` coordinates:
/// `B < c`, `t > B - |W_m|`, `c <= B + |W_m| + 1/2`, `c <= B + |V_n| + 1/2`.
pub fn center_bounds(k: usize, n: usize) -> Violations {
    let b = final_block_offset(k, n);
    let wm = word_length(k, n + 1 - 2 * k).unwrap() as usize;
    let v = v_length(k, n).unwrap() as usize;
    let mut out = Violations::new();
    for o in straddling_squares(k, n) {
        let c2 = doubled_center(&o);
        if n > k && c2 <= 2 * b {
            out.push(format!("k={k} n={n} {o:?}: center not beyond B={b}"));
        }
        if o.start + wm <= b {
            out.push(format!("k={k} n={n} {o:?}: start not beyond B-|W_m|"));
        }
        if c2 > 2 * (b + wm) + 1 {
            out.push(format!("k={k} n={n} {o:?}: center beyond B+|W_m|+1/2"));
        }
        if c2 > 2 * (b + v) + 1 {
            out.push(format!("k={k} n={n} {o:?}: center beyond B+|V|+1/2"));
        }
    }
    out
}

/// The strict upper bound as stated: `c < B + |V_n|`.
pub fn center_strict_bound(k: usize, n: usize) -> Violations {
    let b = final_block_offset(k, n);
    let v = v_length(k, n).unwrap() as usize;
    straddling_squares(k, n)
        .into_iter()
        .filter(|o| doubled_center(o) >= 2 * (b + v))
        .map(|o| {
            format!(
                "k={k} n={n}: square at t={} |A|={} has center {}/2 >= B+|V| = {}",
                o.start,
                o.len,
                doubled_center(&o),
                b + v
            )
        })
        .collect()
}

pub fn projection(k: usize, len: usize) -> Violations {
    let lhs = project_mod(&infinite_prefix(k, len).unwrap(), k).unwrap();
    let rhs = finite_alphabet_prefix(k, len).unwrap();
    match lhs.iter().zip(rhs.iter()).position(|(a, b)| a != b) {
        None if lhs.len() == len && rhs.len() == len => vec![],
        None => vec![format!("k={k}: lengths {} / {}", lhs.len(), rhs.len())],
        Some(p) => vec![format!("k={k}: first mismatch at {}", p + 1)],
    }
}
