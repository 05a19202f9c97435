use alloc::string::String;
use core::fmt;

use crate::arc::{Arc, NotArcReason};
use crate::cyclic::Point;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A point that does not belong to the order it was used with.
    InvalidPoint(Point),
    /// A precondition on the arguments does not hold.
    Domain(String),
    NotAnArc(NotArcReason),
    /// Offset arithmetic left the representable range.
    Overflow,
    /// An arc family description is not valid for every admissible index.
    InvalidFamily(String),
    /// The operation requires a pairwise noncrossing set.
    NotNoncrossing(Arc, Arc),
    CannotFlip(Arc),
    /// The target crosses infinitely many arcs of the set.
    NotReachable(Arc),
    /// An exchange relation produced an inexact division.
    NotLaurent,
    /// An internal invariant was violated; this indicates a bug.
    Invariant(String),
    /// The instance is too large for exhaustive treatment.
    ResourceLimit(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPoint(p) => write!(f, "point {p} does not belong to the order"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::NotAnArc(reason) => write!(f, "not an arc: {reason}"),
            Error::Overflow => f.write_str("offset arithmetic overflowed"),
            Error::InvalidFamily(msg) => write!(f, "invalid arc family: {msg}"),
            Error::NotNoncrossing(p, q) => write!(f, "arcs {p} and {q} cross"),
            Error::CannotFlip(p) => write!(f, "arc {p} is not exchangeable"),
            Error::NotReachable(p) => write!(f, "arc {p} crosses infinitely many arcs"),
            Error::NotLaurent => f.write_str("exchange relation division is not exact"),
            Error::Invariant(msg) => write!(f, "internal invariant violated: {msg}"),
            Error::ResourceLimit(msg) => write!(f, "instance too large: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
