use std::fmt;

use serde_json::{json, Value};

use crate::exactnum::QPi2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        }
    }
}

/// The smallest `n` at which a sweep did not confirm equality.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum Failure {
    /// Both sides evaluated exactly and differ.
    Mismatch { n: u64, lhs: QPi2, rhs: QPi2 },
    /// One side could not be evaluated at this `n` (DSL identities only).
    EvalError { n: u64, message: String },
}

impl Failure {
    pub fn n(&self) -> u64 {
        match self {
            Failure::Mismatch { n, .. } | Failure::EvalError { n, .. } => *n,
        }
    }

    pub fn lhs_text(&self) -> String {
        match self {
            Failure::Mismatch { lhs, .. } => lhs.to_compact_string(),
            Failure::EvalError { .. } => "error".into(),
        }
    }

    pub fn rhs_text(&self) -> String {
        match self {
            Failure::Mismatch { rhs, .. } => rhs.to_compact_string(),
            Failure::EvalError { .. } => "error".into(),
        }
    }
}

/// Outcome of sweeping one identity over an inclusive range of `n`.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub identity: String,
    pub form: Option<String>,
    pub n_lo: u64,
    pub n_hi: u64,
    pub status: Status,
    pub first_failure: Option<Failure>,
    /// Number of `n` values whose verdict is reflected in this report.
    pub values_checked: u64,
    /// Failures seen; more than one only when continuing past failures.
    pub failure_count: u64,
    pub elapsed_ms: f64,
    /// Free-form context shown in the human summary only.
    pub note: Option<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Label such as `raw3.1(printed)`.
    pub fn label(&self) -> String {
        match &self.form {
            Some(f) => format!("{}({f})", self.identity),
            None => self.identity.clone(),
        }
    }

    pub fn to_json(&self) -> Value {
        let first_failure = match &self.first_failure {
            None => Value::Null,
            Some(f @ Failure::Mismatch { .. }) => json!({
                "n": f.n(),
                "lhs": f.lhs_text(),
                "rhs": f.rhs_text(),
            }),
            Some(f @ Failure::EvalError { message, .. }) => json!({
                "n": f.n(),
                "lhs": f.lhs_text(),
                "rhs": f.rhs_text(),
                "error": message,
            }),
        };
        json!({
            "identity": self.identity,
            "form": self.form,
            "range": [self.n_lo, self.n_hi],
            "status": self.status.as_str(),
            "first_failure": first_failure,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub const CSV_HEADER: &'static str = "identity,form,n_lo,n_hi,status,fail_n,lhs,rhs";

    pub fn to_csv_row(&self) -> String {
        let (fail_n, lhs, rhs) = match &self.first_failure {
            Some(f) => (f.n().to_string(), f.lhs_text(), f.rhs_text()),
            None => (String::new(), String::new(), String::new()),
        };
        [
            self.identity.clone(),
            self.form.clone().unwrap_or_default(),
            self.n_lo.to_string(),
            self.n_hi.to_string(),
            self.status.as_str().to_string(),
            fail_n,
            lhs,
            rhs,
        ]
        .iter()
        .map(|f| csv_field(f))
        .collect::<Vec<_>>()
        .join(",")
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_failure {
            None => write!(f, "{}: PASS ({} values)", self.label(), self.values_checked)?,
            Some(fail @ Failure::Mismatch { .. }) => write!(
                f,
                "{}: FAIL at n={} (lhs {}, rhs {})",
                self.label(),
                fail.n(),
                fail.lhs_text(),
                fail.rhs_text()
            )?,
            Some(Failure::EvalError { n, message }) => write!(
                f,
                "{}: FAIL at n={n} (evaluation error: {message})",
                self.label()
            )?,
        }
        if self.failure_count > 1 {
            write!(f, " [{} failures]", self.failure_count)?;
        }
        Ok(())
    }
}
