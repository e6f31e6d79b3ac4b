use std::time::Instant;

use serde::Serialize;

/// A certificate attached to a failing case.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// `embedding`, `graph`, `order`, `tree`, `permutation` or `path`.
    pub kind: String,
    pub text: String,
}

impl Witness {
    pub fn new(kind: &str, text: impl Into<String>) -> Witness {
        Witness {
            kind: kind.to_string(),
            text: text.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail { witness: Witness },
    Undecided { note: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub case: String,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Free-form summary such as the number of graphs examined.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl CaseResult {
    pub fn pass(case: impl Into<String>) -> Self {
        CaseResult {
            case: case.into(),
            verdict: Verdict::Pass,
            detail: None,
        }
    }

    pub fn fail(case: impl Into<String>, witness: Witness) -> Self {
        CaseResult {
            case: case.into(),
            verdict: Verdict::Fail { witness },
            detail: None,
        }
    }

    pub fn undecided(case: impl Into<String>, note: impl Into<String>) -> Self {
        CaseResult {
            case: case.into(),
            verdict: Verdict::Undecided { note: note.into() },
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }

    /// Pass when `ok`, otherwise fail with the witness built lazily.
    pub fn check(case: impl Into<String>, ok: bool, witness: impl FnOnce() -> Witness) -> Self {
        if ok {
            CaseResult::pass(case)
        } else {
            CaseResult::fail(case, witness())
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub passed: usize,
    pub failed: usize,
    pub undecided: usize,
    pub wall_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Undecided,
}

impl Status {
    /// Process exit code: fails dominate undecided verdicts.
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Undecided => 3,
        }
    }
}

impl SuiteReport {
    pub fn new(suite: &str, cases: Vec<CaseResult>, started: Instant) -> SuiteReport {
        let count = |f: fn(&Verdict) -> bool| cases.iter().filter(|c| f(&c.verdict)).count();
        SuiteReport {
            suite: suite.to_string(),
            passed: count(|v| matches!(v, Verdict::Pass)),
            failed: count(|v| matches!(v, Verdict::Fail { .. })),
            undecided: count(|v| matches!(v, Verdict::Undecided { .. })),
            cases,
            wall_ms: started.elapsed().as_millis(),
        }
    }

    /// Concatenates reports under a new suite id, prefixing case names.
    pub fn merge(suite: &str, parts: Vec<SuiteReport>, started: Instant) -> SuiteReport {
        let cases = parts
            .into_iter()
            .flat_map(|r| {
                let prefix = r.suite;
                r.cases.into_iter().map(move |mut c| {
                    c.case = format!("{prefix}/{}", c.case);
                    c
                })
            })
            .collect();
        SuiteReport::new(suite, cases, started)
    }

    pub fn status(&self) -> Status {
        if self.failed > 0 {
            Status::Fail
        } else if self.undecided > 0 {
            Status::Undecided
        } else {
            Status::Pass
        }
    }

    pub fn fails(&self) -> impl Iterator<Item = (&str, &Witness)> {
        self.cases.iter().filter_map(|c| match &c.verdict {
            Verdict::Fail { witness } => Some((c.case.as_str(), witness)),
            _ => None,
        })
    }

    /// `ok|FAIL|UNDECIDED suite/case`, one per case.
    pub fn lines(&self) -> Vec<String> {
        self.cases
            .iter()
            .map(|c| {
                let tag = match c.verdict {
                    Verdict::Pass => "ok",
                    Verdict::Fail { .. } => "FAIL",
                    Verdict::Undecided { .. } => "UNDECIDED",
                };
                format!("{tag} {}/{}", self.suite, c.case)
            })
            .collect()
    }

    /// JSON with the wall time zeroed, for byte-level comparisons.
    pub fn to_json_without_time(&self) -> String {
        let mut r = self.clone();
        r.wall_ms = 0;
        serde_json::to_string_pretty(&r).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
