//! Structured pass/fail records for verification runs.

use serde::{Deserialize, Serialize};

use crate::squares::Occurrence;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

/// A value shown both as canonical JSON and in the paper-style letter encoding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rendering {
    pub canonical: String,
    pub paper: String,
}

impl Rendering {
    pub fn text(s: impl Into<String>) -> Self {
        let s = s.into();
        Rendering {
            canonical: s.clone(),
            paper: s,
        }
    }

    pub fn word(w: &Word) -> Self {
        Rendering {
            canonical: w.to_json(),
            paper: w.to_paper(),
        }
    }

    pub fn words<'a>(ws: impl IntoIterator<Item = &'a Word>) -> Self {
        let ws: Vec<&Word> = ws.into_iter().collect();
        let canonical = format!(
            "[{}]",
            ws.iter().map(|w| w.to_json()).collect::<Vec<_>>().join(",")
        );
        let paper = format!(
            "{{{}}}",
            ws.iter()
                .map(|w| w.to_paper())
                .collect::<Vec<_>>()
                .join(", ")
        );
        Rendering { canonical, paper }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    Word {
        note: String,
        word: Word,
        paper: String,
    },
    Occurrence {
        note: String,
        start: usize,
        len: usize,
    },
}

impl Witness {
    pub fn word(note: impl Into<String>, w: &Word) -> Self {
        Witness::Word {
            note: note.into(),
            word: w.clone(),
            paper: w.to_paper(),
        }
    }

    pub fn occurrence(note: impl Into<String>, occ: Occurrence) -> Self {
        Witness::Occurrence {
            note: note.into(),
            start: occ.start,
            len: occ.len,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub subject: String,
    pub expected: Rendering,
    pub actual: Rendering,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
}

impl VerificationReport {
    /// `verdict` is derived from `matches`, which the caller computes by exact
    /// comparison of the underlying values.
    pub fn new(
        subject: impl Into<String>,
        expected: Rendering,
        actual: Rendering,
        matches: bool,
        witnesses: Vec<Witness>,
    ) -> Self {
        VerificationReport {
            subject: subject.into(),
            expected,
            actual,
            verdict: if matches {
                Verdict::Pass
            } else {
                Verdict::Fail
            },
            witnesses,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports always serialize")
    }
}
