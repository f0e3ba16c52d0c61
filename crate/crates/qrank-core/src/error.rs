//! Error type shared by the whole kernel.

use alloc::string::String;
use core::fmt;

/// The data-dependent failure modes a verification run has to distinguish.
///
/// Programming errors (mixing coefficient rings, mixing cyclotomic orders)
/// panic instead; they can never arise from the input data of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelError {
    /// Division by zero, inverting a non-unit, or a zero series where a unit
    /// leading coefficient is required.
    NotInvertible(String),
    /// A specialization hit a pole of an Appell-Lerch sum or a zero of a
    /// theta function it divides by.
    NonGeneric(String),
    /// A comparison or operator was asked for more precision than the
    /// operands carry.
    Precision(String),
    /// A lattice enumeration bound failed its boundary assertion, or a
    /// summation spec does not truncate.
    Bound(String),
    /// An operator precondition on the series support failed
    /// (e.g. exponent renormalization on a series with mixed residues).
    Support(String),
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::NotInvertible(m) => write!(f, "not invertible: {m}"),
            KernelError::NonGeneric(m) => write!(f, "non-generic specialization: {m}"),
            KernelError::Precision(m) => write!(f, "insufficient precision: {m}"),
            KernelError::Bound(m) => write!(f, "enumeration bound: {m}"),
            KernelError::Support(m) => write!(f, "support: {m}"),
        }
    }
}
