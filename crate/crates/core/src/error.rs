use alloc::string::String;
use core::fmt;

use crate::multipartition::Multipartition;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Internal inconsistencies that can only arise from mismatched sign or
/// ordering conventions between the Fock action, the crystal and the
/// root data. They are never silently tolerated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConventionFault {
    /// A divided power `F_i^(k)` produced a coefficient not divisible by `[k]!`.
    InexactDivision,
    /// The coefficient of `s_mu` in the auxiliary vector of `mu` is not 1.
    NonMonic { mu: Multipartition },
    /// A Mullineux replay hit a residue with no cogood node.
    UndefinedCrystalStep { at: Multipartition, residue: i64 },
    /// The reduction met a non-Kleshchev multipartition as leading violator.
    NonKleshchevLeader {
        mu: Multipartition,
        leader: Multipartition,
    },
    /// Reducing `mu` needed `G^nu` while `nu` was itself waiting on `mu`.
    Triangularity {
        mu: Multipartition,
        nu: Multipartition,
    },
    /// The reduction exceeded its step bound.
    NonTermination { mu: Multipartition },
    /// Defect evaluated to a negative or half-integral number.
    Defect { lambda: Multipartition },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Bad caller input: wrong sizes, wrong levels, invalid `e`.
    Argument(String),
    /// Text did not match the multipartition grammar.
    Parse(String),
    /// An operation that needs a Kleshchev multipartition was given another.
    NotKleshchev(Multipartition),
    Convention(ConventionFault),
    /// A derived quantity (e.g. a simple module dimension) came out non-positive.
    Consistency(String),
}

impl From<ConventionFault> for Error {
    fn from(fault: ConventionFault) -> Self {
        Error::Convention(fault)
    }
}

impl fmt::Display for ConventionFault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConventionFault::InexactDivision => {
                write!(f, "divided power is not integral")
            }
            ConventionFault::NonMonic { mu } => {
                write!(f, "auxiliary vector of {mu} is not monic at s_{mu}")
            }
            ConventionFault::UndefinedCrystalStep { at, residue } => {
                write!(f, "f~_{residue} undefined at {at}")
            }
            ConventionFault::NonKleshchevLeader { mu, leader } => {
                write!(
                    f,
                    "reducing {mu}: leading violator {leader} is not Kleshchev"
                )
            }
            ConventionFault::Triangularity { mu, nu } => {
                write!(f, "reducing {mu}: needs G^{nu}, which depends on G^{mu}")
            }
            ConventionFault::NonTermination { mu } => {
                write!(f, "reduction of {mu} exceeded its step bound")
            }
            ConventionFault::Defect { lambda } => {
                write!(f, "defect of {lambda} is not a non-negative integer")
            }
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Argument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotKleshchev(mu) => write!(f, "{mu} is not Kleshchev"),
            Error::Convention(fault) => write!(f, "convention fault: {fault}"),
            Error::Consistency(msg) => write!(f, "consistency failure: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
