//! Error type shared by the whole crate.

use std::fmt;

use crate::letters::{Letter, LieType};

/// Everything that can go wrong in this crate.
///
/// The zero action of a crystal operator is *not* an error; operators return
/// `Option` instead. Errors split into three families that the CLI maps to
/// exit codes: bad input, property violations (an internal invariant that the
/// theory promises failed to hold), and exhausted budgets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A letter that does not exist in the alphabet of the given type.
    IllegalLetter { letter: Letter, ty: LieType },
    /// `theta` applied to a word containing the letter 0.
    ZeroLetter,
    /// A rank too small for the requested shape or letters.
    RankTooSmall { rank: usize, needed: usize },
    /// Rank escalation failed to stabilize; signals an implementation bug.
    RankInstability { word: String, tried_rank: usize },
    /// An enumeration or closure exceeded its step budget.
    BudgetExceeded { what: &'static str },
    /// A monomial-algebra equality query ran out of budget with the closures
    /// still disjoint: neither `true` nor `false` can be reported.
    Indeterminate,
    /// A recording-tableau increment was not a strip of the required kind.
    StripViolation { detail: String },
    /// P and Q symbols (or inner/outer shapes) do not have matching shapes.
    ShapeMismatch,
    /// Mixed Lie types in a single operation.
    TypeMismatch,
    /// Structurally invalid input (parsing, malformed JSON, bad partition...).
    InvalidInput(String),
    /// An invariant the construction promises did not hold.
    PropertyViolation(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::IllegalLetter { letter, ty } => {
                write!(f, "letter {letter} is not legal for type {ty}")
            }
            Error::ZeroLetter => write!(f, "theta is undefined on the letter 0"),
            Error::RankTooSmall { rank, needed } => {
                write!(f, "rank {rank} too small, need at least {needed}")
            }
            Error::RankInstability { word, tried_rank } => write!(
                f,
                "rank escalation for word '{word}' did not stabilize up to rank {tried_rank}"
            ),
            Error::BudgetExceeded { what } => write!(f, "step budget exceeded in {what}"),
            Error::Indeterminate => {
                write!(
                    f,
                    "budget exhausted with closures still disjoint: indeterminate"
                )
            }
            Error::StripViolation { detail } => write!(f, "strip violation: {detail}"),
            Error::ShapeMismatch => write!(f, "shapes do not match"),
            Error::TypeMismatch => write!(f, "mixed Lie types"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::PropertyViolation(msg) => write!(f, "property violation: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
