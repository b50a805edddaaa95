//! The crate-wide error type.
//!
//! Every fallible operation in this crate reports one of the variants below.
//! Contract violations that can only arise from caller bugs (mismatched
//! exponent-vector lengths passed to low-level monomial arithmetic) panic
//! instead; see the individual method docs.

use std::fmt;

use thiserror::Error;

use crate::enumerate::CensusRow;

/// The two ideals for which cover, quotient and classification invariants
/// are undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degeneracy {
    /// The ideal with no generators.
    Zero,
    /// The ideal generated by 1, i.e. the whole ring.
    Unit,
}

impl fmt::Display for Degeneracy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degeneracy::Zero => write!(f, "zero"),
            Degeneracy::Unit => write!(f, "unit"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A generator's exponent vector does not match the ambient variable count.
    #[error("monomial has {found} exponents, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    /// Two ideals that should share an ambient ring do not.
    #[error("ideals live in different ambient rings: n={left} vs n={right}")]
    AmbientMismatch { left: usize, right: usize },

    /// A 1-based variable index outside `1..=n`.
    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    /// An operation that requires all generators to share one degree was given
    /// generators of mixed degrees.
    #[error("generators are not all of one degree")]
    NotEquigenerated,

    /// The zero or unit ideal was passed to an operation whose invariants are
    /// undefined for it.
    #[error("operation undefined for the {0} ideal")]
    Degenerate(Degeneracy),

    /// The descending reverse-lexicographic ordering of the generators does
    /// not have linear quotients; `step` is the first position (2-based, as in
    /// the colon sequence) whose colon ideal needs a generator of degree > 1.
    #[error("no linear quotients in reverse-lexicographic order (first failure at step {step})")]
    NoLinearQuotients { step: usize },

    /// A documented precondition was violated.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A forward exchange required by the exchange property does not exist.
    /// Reported by the exchange-path construction when its input ideal is not
    /// actually polymatroidal: `current` is the stuck monomial being moved
    /// toward `target`, and `index` is the 1-based variable whose surplus
    /// cannot be exchanged away.
    #[error("exchange axiom violated: no balancing exchange for {current} toward {target} at x{index}")]
    ExchangeAxiomViolated {
        current: String,
        target: String,
        index: usize,
    },

    /// An exhaustive search was refused because it would visit too many states.
    #[error("search space of {required} states exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    /// A syntax or range error in the textual or structured input formats.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// Two independently computed invariants disagree in a way that the
    /// classification theorem rules out. This always indicates a bug in the
    /// toolkit (or a falsified theorem) and is never a user error.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),

    /// An exhaustive verification sweep found an ideal violating a checked
    /// property. Carries the full census row of the offending ideal.
    #[error("verification violation: {check}\n{row}")]
    Violation { check: String, row: Box<CensusRow> },
}
