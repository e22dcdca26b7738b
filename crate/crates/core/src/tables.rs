//! Regenerates the square, power and critical-factor tables from the library
//! and renders them as aligned text, CSV or line-delimited JSON.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::construct::{word_length, KBonacciWords};
use crate::error::{Error, Result};
use crate::ops::{is_factor, shift};
use crate::squares::{
    critical_deficit, critical_factor, expand_descriptor, p_word, straddling_index_parts, v_length,
    IndexDeficit, SquareDescriptor,
};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    #[default]
    Paper,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "paper" => Ok(OutputFormat::Paper),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareRow {
    pub j: usize,
    /// One cell per shift multiplier `i = 1, 2, ...`; `None` when the square
    /// does not occur in the host.
    pub cells: Vec<Option<Word>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareBlock {
    /// Level `m` of the base word `W_m`.
    pub base_level: usize,
    /// Level `n = m + 2k - 1` at which these squares straddle.
    pub n: usize,
    pub rows: Vec<SquareRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquareTable {
    pub k: usize,
    pub host_level: usize,
    pub shifts: usize,
    pub blocks: Vec<SquareBlock>,
}

/// Every `ki + C^j(W_m)` whose square occurs in `W_host^(k)`, for `i <= shifts`.
pub fn square_table(k: usize, host_level: usize, shifts: usize) -> Result<SquareTable> {
    let fam = KBonacciWords::up_to(k, host_level)?;
    let host = fam.word(host_level);
    let mut blocks = Vec::new();
    let mut m = 0;
    while word_length(k, m)? as usize <= host.len() / 2 {
        let n = m + 2 * k - 1;
        let mut rows = Vec::new();
        for j in 0..=v_length(k, n)? as usize {
            let mut cells = Vec::with_capacity(shifts);
            for i in 1..=shifts {
                let root = expand_descriptor(&SquareDescriptor::new(k, n, i, j)?)?;
                cells.push(is_factor(&root.concat(&root), host).then_some(root));
            }
            if cells.iter().any(Option::is_some) {
                rows.push(SquareRow { j, cells });
            }
        }
        if !rows.is_empty() {
            blocks.push(SquareBlock {
                base_level: m,
                n,
                rows,
            });
        }
        m += 1;
    }
    Ok(SquareTable {
        k,
        host_level,
        shifts,
        blocks,
    })
}

/// The distinct roots listed in a [`SquareTable`].
pub fn square_table_roots(t: &SquareTable) -> std::collections::BTreeSet<Word> {
    t.blocks
        .iter()
        .flat_map(|b| b.rows.iter())
        .flat_map(|r| r.cells.iter().flatten().cloned())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerRow {
    pub n: usize,
    /// `P_n + k`.
    pub word: Word,
    pub index: IndexDeficit,
}

pub fn power_table(k: usize, levels: std::ops::RangeInclusive<usize>) -> Result<Vec<PowerRow>> {
    levels
        .map(|n| {
            Ok(PowerRow {
                n,
                word: shift(&p_word(k, n)?, k as i64)?,
                index: straddling_index_parts(k, n)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalRow {
    pub k: usize,
    pub factor: Word,
    pub exponent: IndexDeficit,
}

pub fn critical_table(ks: std::ops::RangeInclusive<usize>) -> Result<Vec<CriticalRow>> {
    ks.map(|k| {
        Ok(CriticalRow {
            k,
            factor: critical_factor(k, 1)?,
            exponent: critical_deficit(k)?,
        })
    })
    .collect()
}

fn cell_text(c: &Option<Word>) -> String {
    c.as_ref()
        .map(Word::to_paper)
        .unwrap_or_else(|| "-".to_string())
}

pub fn render_square_table(t: &SquareTable, format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Paper => {
            let _ = writeln!(s, "Square factors of W_{}^({})", t.host_level, t.k);
            let heads: Vec<String> = (1..=t.shifts).map(|i| format!("i={i}")).collect();
            let _ = writeln!(s, "block | j | {}", heads.join(" | "));
            for b in &t.blocks {
                for r in &b.rows {
                    let cells: Vec<String> = r.cells.iter().map(cell_text).collect();
                    let _ = writeln!(
                        s,
                        "C^({})(ki+W_{}) | {} | {}",
                        r.j,
                        b.base_level,
                        r.j,
                        cells.join(" | ")
                    );
                }
            }
        }
        OutputFormat::Csv => {
            let heads: Vec<String> = (1..=t.shifts).map(|i| format!("i{i}")).collect();
            let _ = writeln!(s, "base_level,n,j,{}", heads.join(","));
            for b in &t.blocks {
                for r in &b.rows {
                    let cells: Vec<String> = r.cells.iter().map(cell_text).collect();
                    let _ = writeln!(s, "{},{},{},{}", b.base_level, b.n, r.j, cells.join(","));
                }
            }
        }
        OutputFormat::Json => {
            for b in &t.blocks {
                for r in &b.rows {
                    let line = json!({
                        "k": t.k,
                        "base_level": b.base_level,
                        "n": b.n,
                        "j": r.j,
                        "roots": r.cells,
                        "paper": r.cells.iter().map(|c| c.as_ref().map(Word::to_paper)).collect::<Vec<_>>(),
                    });
                    let _ = writeln!(s, "{line}");
                }
            }
        }
    }
    s
}

fn deficit_json(d: &IndexDeficit) -> serde_json::Value {
    let value = d.value().map(|r| r.to_string()).unwrap_or_default();
    json!({ "value": value, "paper": d.to_paper_string() })
}

pub fn render_power_table(k: usize, rows: &[PowerRow], format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Paper => {
            let _ = writeln!(s, "Powers of W_(n-{})^({k}) in W_n^({k})", 2 * k - 1);
            let _ = writeln!(s, "n | P_n+k | r");
            for r in rows {
                let _ = writeln!(s, "{} | {} | {}", r.n, r.word, r.index.to_paper_string());
            }
        }
        OutputFormat::Csv => {
            let _ = writeln!(s, "n,word,r,r_paper");
            for r in rows {
                let v = r.index.value().map(|x| x.to_string()).unwrap_or_default();
                let _ = writeln!(s, "{},{},{},{}", r.n, r.word, v, r.index.to_paper_string());
            }
        }
        OutputFormat::Json => {
            for r in rows {
                let line = json!({
                    "k": k, "n": r.n, "word": r.word, "paper": r.word.to_paper(),
                    "r": deficit_json(&r.index),
                });
                let _ = writeln!(s, "{line}");
            }
        }
    }
    s
}

pub fn render_critical_table(rows: &[CriticalRow], format: OutputFormat) -> String {
    let mut s = String::new();
    match format {
        OutputFormat::Paper => {
            let _ = writeln!(s, "Critical exponent and a critical factor of W^(k)");
            let _ = writeln!(s, "k | P_(3k-1)+k | r");
            for r in rows {
                let _ = writeln!(
                    s,
                    "{} | {} | {}",
                    r.k,
                    r.factor,
                    r.exponent.to_paper_string()
                );
            }
        }
        OutputFormat::Csv => {
            let _ = writeln!(s, "k,factor,r,r_paper");
            for r in rows {
                let v = r
                    .exponent
                    .value()
                    .map(|x| x.to_string())
                    .unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{},{},{},{}",
                    r.k,
                    r.factor,
                    v,
                    r.exponent.to_paper_string()
                );
            }
        }
        OutputFormat::Json => {
            for r in rows {
                let line = json!({
                    "k": r.k, "factor": r.factor, "paper": r.factor.to_paper(),
                    "r": deficit_json(&r.exponent),
                });
                let _ = writeln!(s, "{line}");
            }
        }
    }
    s
}
