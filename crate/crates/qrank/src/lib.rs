//! Verification harness for the Dyson rank congruence identities.
//!
//! Every registered check builds both sides of one named identity through
//! the exact q-series kernel — wherever the underlying material offers two
//! independent routes (sum vs product theta, quotient vs Lambert rank form,
//! direct dissection vs solved linear system), the check computes both — and
//! compares coefficients exactly to a stated truncation order. The checks
//! certify truncations, not proofs.

pub mod checks;
pub mod dyson;
pub mod memo;
pub mod registry;
pub mod report;
pub mod result;
pub mod series_cmd;

pub use memo::Memo;
pub use registry::{find, run_all, run_check, REGISTRY};
pub use result::{CheckOutcome, CheckResult, CheckStatus};
