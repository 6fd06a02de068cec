use std::fmt;
use std::time::Duration;

/// Outcome of comparing a recurrence-built family against its generating function.
#[derive(Clone, Debug, PartialEq)]
pub struct GfReport {
    pub family: String,
    pub orders_checked: usize,
    pub first_mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub order: usize,
    pub expected: String,
    pub got: String,
}

impl GfReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

impl fmt::Display for GfReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_mismatch {
            None => write!(f, "{}: {} orders match", self.family, self.orders_checked),
            Some(m) => write!(
                f,
                "{}: mismatch at order {} (expected {}, got {})",
                self.family, m.order, m.expected, m.got
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Failure {
    pub identifier: String,
    pub expected: String,
    pub got: String,
    pub context: String,
}

/// Result of one identity-check suite. Success iff `failures` is empty.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckReport {
    pub suite: String,
    pub cases_run: usize,
    pub failures: Vec<Failure>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn new(suite: impl Into<String>) -> Self {
        CheckReport {
            suite: suite.into(),
            cases_run: 0,
            failures: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Record one case; `ok == false` appends a failure.
    pub fn case(
        &mut self,
        ok: bool,
        identifier: impl Into<String>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
        context: impl Into<String>,
    ) {
        self.cases_run += 1;
        if !ok {
            self.failures.push(Failure {
                identifier: identifier.into(),
                expected: expected.to_string(),
                got: got.to_string(),
                context: context.into(),
            });
        }
    }

    pub fn absorb_gf(&mut self, gf: &GfReport) {
        self.cases_run += gf.orders_checked.max(1);
        if let Some(m) = &gf.first_mismatch {
            self.failures.push(Failure {
                identifier: format!("{} order {}", gf.family, m.order),
                expected: m.expected.clone(),
                got: m.got.clone(),
                context: "generating function".into(),
            });
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.cases_run += other.cases_run;
        self.failures.extend(other.failures);
    }
}
