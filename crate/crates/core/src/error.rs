use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::Vertex;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Errors are split in two families: bad input supplied by a caller, and
/// internal invariant violations (`Logic*`), which indicate a bug or a
/// genuine disagreement between two independent computations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    InvalidOrientation {
        position: usize,
        found: char,
    },
    EmptyOrientation,
    VertexOutOfRange {
        vertex: Vertex,
        n: usize,
    },
    MalformedTree {
        position: usize,
        reason: &'static str,
    },
    SizeMismatch {
        expected: usize,
        found: usize,
        what: &'static str,
    },
    CrossSegment,
    GlueOverlap {
        shared: Vec<Vertex>,
    },
    DegreeTooHigh {
        degree: u32,
    },
    ShapeMismatch,
    /// Combining orders produced a cycle; the witness lists the vertices on it.
    LogicOrderCycle {
        witness: Vec<Vertex>,
    },
    LogicCyclicPresentation {
        vertex: Vertex,
    },
    LogicOracleDisagreement {
        detail: String,
    },
    LogicBorelRefused {
        sink: Vertex,
    },
}

impl Error {
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::LogicOrderCycle { .. }
                | Error::LogicCyclicPresentation { .. }
                | Error::LogicOracleDisagreement { .. }
                | Error::LogicBorelRefused { .. }
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrientation { position, found } => {
                write!(f, "orientation character {found:?} at position {position} is not R or L")
            }
            Error::EmptyOrientation => f.write_str("orientation string is empty; use the single-vertex constructor"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} is outside 1..={n}")
            }
            Error::MalformedTree { position, reason } => {
                write!(f, "malformed tree string at byte {position}: {reason}")
            }
            Error::SizeMismatch { expected, found, what } => {
                write!(f, "{what}: expected {expected}, found {found}")
            }
            Error::CrossSegment => f.write_str("intervals do not lie in a single uniformly oriented segment"),
            Error::GlueOverlap { shared } => {
                write!(f, "presentations must share exactly one vertex, they share {shared:?}")
            }
            Error::DegreeTooHigh { degree } => {
                write!(f, "composite of degree {degree} requested; only degrees 0 and 1 exist")
            }
            Error::ShapeMismatch => f.write_str("matrix or dimension vector shapes do not match"),
            Error::LogicOrderCycle { witness } => {
                write!(f, "combined relation is not antisymmetric, cycle through {witness:?}")
            }
            Error::LogicCyclicPresentation { vertex } => {
                write!(f, "presentation quiver has an oriented cycle through vertex {vertex}")
            }
            Error::LogicOracleDisagreement { detail } => {
                write!(f, "independent computations disagree: {detail}")
            }
            Error::LogicBorelRefused { sink } => {
                write!(f, "no regular exact Borel subalgebra: sink {sink} is neither minimal nor maximal")
            }
        }
    }
}

impl core::error::Error for Error {}
