//! Certificate-carrying answers shared by all solvers.

use crate::set::VertexSet;
use serde::Serialize;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Answer {
    #[serde(rename = "YES")]
    Yes,
    #[serde(rename = "NO")]
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
        })
    }
}

/// Which algorithm path produced a verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Constructive,
    Exhaustive,
    KernelTrivial,
    Step1,
    Step2,
    Step3,
    Oracle,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Constructive => "constructive",
            Provenance::Exhaustive => "exhaustive",
            Provenance::KernelTrivial => "kernel-trivial",
            Provenance::Step1 => "step1",
            Provenance::Step2 => "step2",
            Provenance::Step3 => "step3",
            Provenance::Oracle => "oracle",
        })
    }
}

/// YES/NO answer with an optional witness set.
///
/// Every YES carries a witness that was re-verified against the target
/// predicate before the verdict was built; NO never carries one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub answer: Answer,
    pub witness: Option<VertexSet>,
    pub verified: bool,
    pub provenance: Provenance,
}

impl Verdict {
    pub fn yes(witness: VertexSet, provenance: Provenance) -> Verdict {
        Verdict {
            answer: Answer::Yes,
            witness: Some(witness),
            verified: true,
            provenance,
        }
    }

    pub fn no(provenance: Provenance) -> Verdict {
        Verdict {
            answer: Answer::No,
            witness: None,
            verified: false,
            provenance,
        }
    }

    pub fn is_yes(&self) -> bool {
        self.answer == Answer::Yes
    }
}
