//! Machine-readable check reports shared by the library verifiers and the
//! command-line front end.

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Exactness-first refusal to guess: the precision cap was reached
    /// before the comparison was decided.
    Inconclusive,
}

impl Status {
    pub fn word(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }
}

/// One named check with key/value detail lines (exact values as rational
/// strings) and, on failure, a witness sufficient to reproduce it.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub details: Vec<(String, String)>,
}

impl Check {
    pub fn pass(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Pass, details: Vec::new() }
    }

    pub fn fail(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Fail, details: Vec::new() }
    }

    pub fn inconclusive(id: impl Into<String>) -> Self {
        Check { id: id.into(), status: Status::Inconclusive, details: Vec::new() }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.details.push((key.into(), value.into()));
        self
    }

    pub fn note(&mut self, key: impl Into<String>, value: impl Into<String>) {
        self.details.push((key.into(), value.into()));
    }
}

/// An ordered collection of checks; ordering is stable by construction so
/// identical runs print identical reports.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == Status::Pass)
    }

    pub fn status(&self) -> Status {
        if self.checks.iter().any(|c| c.status == Status::Fail) {
            Status::Fail
        } else if self.checks.iter().any(|c| c.status == Status::Inconclusive) {
            Status::Inconclusive
        } else {
            Status::Pass
        }
    }

    /// Exit code contract: 0 pass, 1 failure, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        match self.status() {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Inconclusive => 2,
        }
    }

    /// One line per check: `<id> <status> k=v k=v ...`.
    pub fn render_lines(&self) -> Vec<String> {
        self.checks
            .iter()
            .map(|c| {
                let mut line = format!("{} {}", c.id, c.status.word());
                for (k, v) in &c.details {
                    line.push_str(&format!(" {k}={v}"));
                }
                line
            })
            .collect()
    }
}
