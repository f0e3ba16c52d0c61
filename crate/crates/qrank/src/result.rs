//! Result types for named verification runs.

use serde::Serialize;

/// Outcome of executing one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    /// Every compared coefficient up to `order` agreed exactly.
    Pass { order: i64 },
    /// First disagreeing exponent with both coefficients rendered exactly.
    Fail { exponent: i64, lhs: String, rhs: String },
    /// The check could not run to completion (non-generic specialization
    /// after rotation, precision shortfall, enumeration bound, ...).
    Error { reason: String },
}

impl CheckOutcome {
    pub fn is_pass(&self) -> bool {
        matches!(self, CheckOutcome::Pass { .. })
    }

    /// Chain: keep the first non-pass outcome, otherwise the later pass.
    pub fn and(self, next: impl FnOnce() -> CheckOutcome) -> CheckOutcome {
        match self {
            CheckOutcome::Pass { order } => match next() {
                CheckOutcome::Pass { order: o2 } => CheckOutcome::Pass { order: order.min(o2) },
                other => other,
            },
            other => other,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

/// One row of a verification report.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    /// One-line statement of the identity or property the check verifies.
    pub statement: String,
    pub status: CheckStatus,
    pub order_checked: i64,
    /// Present exactly when status is FAIL.
    pub first_mismatch: Option<Mismatch>,
    /// Present exactly when status is ERROR.
    pub error: Option<String>,
    pub wall_ms: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

impl CheckResult {
    pub fn from_outcome(
        name: &str,
        statement: &str,
        requested_order: i64,
        outcome: CheckOutcome,
        wall_ms: u64,
    ) -> Self {
        let (status, order_checked, first_mismatch, error) = match outcome {
            CheckOutcome::Pass { order } => (CheckStatus::Pass, order, None, None),
            CheckOutcome::Fail { exponent, lhs, rhs } => (
                CheckStatus::Fail,
                requested_order,
                Some(Mismatch { exponent, lhs, rhs }),
                None,
            ),
            CheckOutcome::Error { reason } => {
                (CheckStatus::Error, requested_order, None, Some(reason))
            }
        };
        CheckResult {
            name: name.to_string(),
            statement: statement.to_string(),
            status,
            order_checked,
            first_mismatch,
            error,
            wall_ms,
        }
    }
}
