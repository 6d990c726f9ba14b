//! Error type shared by the whole workbench.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong when building or checking the exact
/// algebraic structures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The requested root of unity does not exist in the given field.
    UnsupportedRoot(String),
    /// Scalars (or matrices) over different coefficient fields were mixed.
    FieldMismatch(String),
    /// Matrix or vector dimensions do not line up.
    DimensionMismatch(String),
    /// A Cayley table failed the group laws.
    NotAGroup(String),
    /// A claimed action is not by (Hopf) automorphisms, or not a homomorphism.
    NotAnAction(String),
    /// A cocycle table violates normalization or the cocycle identity.
    InvalidCocycle(String),
    /// A (sigma, tau) pair fails the crossed-coproduct compatibility condition.
    IncompatibleCocycles(String),
    /// A map claimed to be a projective representation has a non-scalar defect.
    NotProjectiveRep(String),
    /// An algebra or Hopf axiom failed during mandatory verification.
    AxiomFailed(String),
    /// A linear problem the caller asserted solvable has no solution.
    NoSolution(String),
    /// The coboundary decision only supports root-of-unity values.
    UnsupportedValues(String),
    /// Freeness of an extension could not be certified, so induction is refused.
    FreenessNotEstablished(String),
    /// The algebra is not local, so the local projectivity test does not apply.
    NotLocal(String),
    /// A computation would exceed the configured size guard.
    ResourceGuard(String),
    /// Any other invalid input.
    InvalidInput(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedRoot(s) => write!(f, "unsupported root of unity: {s}"),
            Error::FieldMismatch(s) => write!(f, "field mismatch: {s}"),
            Error::DimensionMismatch(s) => write!(f, "dimension mismatch: {s}"),
            Error::NotAGroup(s) => write!(f, "not a group: {s}"),
            Error::NotAnAction(s) => write!(f, "not a valid action: {s}"),
            Error::InvalidCocycle(s) => write!(f, "invalid cocycle: {s}"),
            Error::IncompatibleCocycles(s) => write!(f, "incompatible cocycles: {s}"),
            Error::NotProjectiveRep(s) => write!(f, "not a projective representation: {s}"),
            Error::AxiomFailed(s) => write!(f, "axiom check failed: {s}"),
            Error::NoSolution(s) => write!(f, "no solution: {s}"),
            Error::UnsupportedValues(s) => write!(f, "unsupported values: {s}"),
            Error::FreenessNotEstablished(s) => write!(f, "freeness not established: {s}"),
            Error::NotLocal(s) => write!(f, "algebra is not local: {s}"),
            Error::ResourceGuard(s) => write!(f, "resource guard tripped: {s}"),
            Error::InvalidInput(s) => write!(f, "invalid input: {s}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
