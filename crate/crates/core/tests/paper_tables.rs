//! The library regenerates the published tables exactly.

use std::collections::BTreeSet;

use kbonacci::squares::{critical_deficit, straddling_index_parts};
use kbonacci::tables::{power_table, square_table, square_table_roots};
use kbonacci::{critical_exponent, critical_factor, finite_word, Rational, Strategy, Word};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))).unwrap()
}

fn rows(name: &str) -> Vec<Vec<String>> {
    fixture(name)
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect()
}

/// Parses "2" or "3-p/q" into an exact rational.
fn deficit(s: &str) -> Rational {
    match s.strip_prefix("3-") {
        Some(frac) => Rational::integer(3)
            .checked_sub(frac.parse().unwrap())
            .unwrap(),
        None => s.parse().unwrap(),
    }
}

#[test]
fn w3_11_matches_printed_word() {
    let printed = Word::from_paper(fixture("w3_11.txt").trim()).unwrap();
    assert_eq!(printed.len(), 927);
    assert_eq!(finite_word(3, 11, Strategy::Recursion).unwrap(), printed);
}

#[test]
fn critical_table_rows() {
    for row in rows("table3.txt") {
        let k: usize = row[0].parse().unwrap();
        assert_eq!(critical_factor(k, 1).unwrap().to_paper(), row[1], "k={k}");
        assert_eq!(critical_exponent(k).unwrap(), deficit(&row[2]), "k={k}");
        assert_eq!(critical_deficit(k).unwrap().to_paper_string(), row[2]);
    }
}

#[test]
fn power_table_rows() {
    let table = power_table(5, 9..=17).unwrap();
    let expected = rows("table2.txt");
    assert_eq!(table.len(), expected.len());
    for (got, row) in table.iter().zip(&expected) {
        assert_eq!(got.n.to_string(), row[0]);
        assert_eq!(got.word.to_paper(), row[1], "n={}", got.n);
        assert_eq!(got.index.value().unwrap(), deficit(&row[2]), "n={}", got.n);
        assert_eq!(
            straddling_index_parts(5, got.n).unwrap().to_paper_string(),
            row[2]
        );
    }
}

#[test]
fn square_table_contains_every_printed_entry() {
    let printed: BTreeSet<Word> = rows("table1.txt")
        .iter()
        .flat_map(|r| r[1..].to_vec())
        .filter(|c| c != "-")
        .map(|c| Word::from_paper(&c).unwrap())
        .collect();
    assert_eq!(printed.len(), 69);
    let table = square_table(3, 11, 3).unwrap();
    let ours = square_table_roots(&table);
    let missing: Vec<_> = printed.difference(&ours).collect();
    assert!(missing.is_empty(), "missing {missing:?}");
}
