use serde::Serialize;

/// One labelled pass/fail comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// An ordered list of checks produced by one verification routine.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub checks: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckOutcome {
            label: label.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records `expected == actual`, rendering both in the detail.
    pub fn expect_eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        label: impl Into<String>,
        expected: T,
        actual: T,
    ) {
        let passed = expected == actual;
        let detail = if passed {
            format!("{actual:?}")
        } else {
            format!("expected {expected:?}, got {actual:?}")
        };
        self.push(label, passed, detail);
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}
