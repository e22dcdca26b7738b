use serde::{Deserialize, Serialize};

use crate::construct::{check_k, word_length};
use crate::error::{Error, Result};

/// A factor occurrence: 1-indexed start and length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Occurrence {
    pub start: usize,
    pub len: usize,
}

impl Occurrence {
    pub fn new(start: usize, len: usize) -> Self {
        Occurrence { start, len }
    }

    /// Last covered position, inclusive.
    pub fn end(&self) -> usize {
        self.start + self.len - 1
    }
}

/// Position of an occurrence relative to the top-level decomposition of `W_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum OccurrenceClass {
    /// Inside a single block; `child` counts blocks from the left, starting at 0.
    Interior { child: usize },
    /// Spans non-final blocks, starting in block `W_level`.
    Bordering { level: usize },
    /// Starts before the final block and ends inside it.
    Straddling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    /// 1-indexed first position.
    pub start: usize,
    pub len: usize,
    /// `Some(l)` for a copy of `W_l`; `None` for the final block.
    pub level: Option<usize>,
}

/// Blocks of `W_n` for `n >= 1`: `W_{n-1} ... W_0 (n)` when `n < k`,
/// `W_{n-1} ... W_{n-k+1} (k + W_{n-k})` otherwise.
pub fn block_layout(k: usize, n: usize) -> Result<Vec<Block>> {
    check_k(k)?;
    if n == 0 {
        return Err(Error::Domain("W_0 has no block decomposition".into()));
    }
    let lowest = if n < k { 0 } else { n + 1 - k };
    let mut blocks = Vec::with_capacity(k);
    let mut pos = 1;
    for level in (lowest..n).rev() {
        let len = word_length(k, level)? as usize;
        blocks.push(Block {
            start: pos,
            len,
            level: Some(level),
        });
        pos += len;
    }
    let last_len = if n < k {
        1
    } else {
        word_length(k, n - k)? as usize
    };
    blocks.push(Block {
        start: pos,
        len: last_len,
        level: None,
    });
    Ok(blocks)
}

pub fn classify_occurrence(k: usize, n: usize, occ: Occurrence) -> Result<OccurrenceClass> {
    let blocks = block_layout(k, n)?;
    let total = blocks.last().map(|b| b.start + b.len - 1).unwrap_or(0);
    if occ.start == 0 || occ.len == 0 || occ.end() > total {
        return Err(Error::Domain(format!(
            "occurrence [{}, +{}] does not lie in W_{n} of length {total}",
            occ.start, occ.len
        )));
    }
    let block_of = |p: usize| blocks.iter().rposition(|b| b.start <= p).expect("p >= 1");
    let first = block_of(occ.start);
    let last = block_of(occ.end());
    if first == last {
        return Ok(OccurrenceClass::Interior { child: first });
    }
    if blocks[last].level.is_none() {
        return Ok(OccurrenceClass::Straddling);
    }
    // Each crossed boundary W_l | W_{l-1} contributes the factor "l0"; the
    // largest such l is the level of the starting block.
    Ok(OccurrenceClass::Bordering {
        level: blocks[first].level.expect("non-final block"),
    })
}
