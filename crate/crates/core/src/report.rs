//! Law-check outcomes in a stable, serializable shape.

use std::fmt;

use serde::Serialize;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    HoldsExhaustive,
    HoldsOnFamily,
    Counterexample,
    Inconclusive,
    Refused,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::HoldsExhaustive => "holds-exhaustive",
            Status::HoldsOnFamily => "holds-on-family",
            Status::Counterexample => "counterexample",
            Status::Inconclusive => "inconclusive",
            Status::Refused => "refused",
        }
    }

    pub fn holds(self) -> bool {
        matches!(self, Status::HoldsExhaustive | Status::HoldsOnFamily)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Witness {
    pub kind: String,
    pub rendering: String,
}

impl Witness {
    pub fn new(kind: &str, rendering: impl fmt::Display) -> Self {
        Witness { kind: kind.to_string(), rendering: rendering.to_string() }
    }

    pub fn set(s: impl fmt::Display) -> Self {
        Self::new("set", s)
    }

    pub fn note(s: impl fmt::Display) -> Self {
        Self::new("note", s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub subjects: Vec<String>,
    pub status: Status,
    pub witnesses: Vec<Witness>,
    pub cases_checked: u64,
    pub seed: u64,
    pub elapsed_ms: u64,
}

impl LawReport {
    pub fn new(law: &str, status: Status) -> Self {
        LawReport {
            law: law.to_string(),
            subjects: Vec::new(),
            status,
            witnesses: Vec::new(),
            cases_checked: 0,
            seed: 0,
            elapsed_ms: 0,
        }
    }

    /// A report for a check that could not run, naming the originating error.
    pub fn refused(law: &str, err: &Error) -> Self {
        let mut r = Self::new(law, Status::Refused);
        r.witnesses.push(Witness::new("error", format!("{}: {err}", err.name())));
        r
    }

    pub fn with_cases(mut self, n: u64) -> Self {
        self.cases_checked = n;
        self
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }

    pub fn with_witnesses(mut self, ws: impl IntoIterator<Item = Witness>) -> Self {
        self.witnesses.extend(ws);
        self
    }

    pub fn with_subjects(mut self, subjects: Vec<String>) -> Self {
        self.subjects = subjects;
        self
    }

    /// The error name when the report is a refusal.
    pub fn refusal_error(&self) -> Option<&str> {
        if self.status != Status::Refused {
            return None;
        }
        self.witnesses.iter().find(|w| w.kind == "error").and_then(|w| w.rendering.split(':').next())
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {} ({} cases)", self.law, self.subjects.join(", "), self.status, self.cases_checked)?;
        for w in &self.witnesses {
            write!(f, "\n  {}: {}", w.kind, w.rendering)?;
        }
        Ok(())
    }
}

/// Exit code for a batch of reports: 1 if any counterexample, else 3 if any
/// inconclusive or refused, else 0.
pub fn exit_code(reports: &[LawReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Counterexample) {
        1
    } else if reports.iter().any(|r| matches!(r.status, Status::Inconclusive | Status::Refused)) {
        3
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_field_order_is_stable() {
        let r = LawReport::new("prox.axioms", Status::HoldsExhaustive).with_cases(64);
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"law":"prox.axioms","subjects":[],"status":"holds-exhaustive","witnesses":[],"cases_checked":64,"seed":0,"elapsed_ms":0}"#
        );
    }

    #[test]
    fn exit_codes() {
        let ok = LawReport::new("a", Status::HoldsOnFamily);
        let bad = LawReport::new("a", Status::Counterexample);
        let unsure = LawReport::new("a", Status::Inconclusive);
        assert_eq!(exit_code(std::slice::from_ref(&ok)), 0);
        assert_eq!(exit_code(&[ok.clone(), unsure.clone()]), 3);
        assert_eq!(exit_code(&[unsure, bad]), 1);
    }

    #[test]
    fn refusal_names_error() {
        let r = LawReport::refused("thm.2.3", &Error::NotZeroDimensional);
        assert_eq!(r.refusal_error(), Some("NotZeroDimensional"));
    }
}
