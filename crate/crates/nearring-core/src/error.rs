use alloc::string::String;
use core::fmt;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A group of order zero was requested.
    InvalidOrder,
    /// A Cayley table failed validation (Latin square or associativity).
    NotAGroup(String),
    /// The identity of a supplied Cayley table is not at index 0.
    BadLabeling,
    /// A caller-supplied argument is inconsistent with its contract.
    InvalidArgument(String),
    /// A configured size bound was exceeded.
    ResourceLimit(String),
    /// A phi recipe violates one of its invariants.
    InvalidRecipe(String),
    /// A sandwich scheme failed validation.
    InvalidScheme(String),
    /// Restriction map is not an isomorphism; carries a witness description.
    NotIsomorphic(String),
    /// The action is not type-1 shaped, so no invariant representative
    /// set exists.
    NotType1,
    /// The action is not embeddable (not faithful or not type 1).
    NotEmbeddable(String),
    /// A construction produced data violating a theorem guarantee.
    /// Signals a bug, never user error.
    InternalInconsistency(String),
    /// Theorem-side and direct-side primitivity verdicts disagree.
    TheoremMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidOrder => write!(f, "group order must be positive"),
            Error::NotAGroup(why) => write!(f, "not a group: {why}"),
            Error::BadLabeling => write!(f, "identity element must be at index 0"),
            Error::InvalidArgument(why) => write!(f, "invalid argument: {why}"),
            Error::ResourceLimit(why) => write!(f, "resource limit exceeded: {why}"),
            Error::InvalidRecipe(why) => write!(f, "invalid phi recipe: {why}"),
            Error::InvalidScheme(why) => write!(f, "invalid sandwich scheme: {why}"),
            Error::NotIsomorphic(why) => write!(f, "not isomorphic: {why}"),
            Error::NotType1 => write!(f, "action is not of type 1"),
            Error::NotEmbeddable(why) => write!(f, "not embeddable: {why}"),
            Error::InternalInconsistency(why) => write!(f, "internal inconsistency: {why}"),
            Error::TheoremMismatch(why) => write!(f, "theorem/direct verdict mismatch: {why}"),
        }
    }
}
