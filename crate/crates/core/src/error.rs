use thiserror::Error;

/// Everything that can go wrong while validating input or checking a
/// structural identity.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // group construction
    #[error("empty multiplication table")]
    EmptyTable,
    #[error("table is not square: row {row} has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("NotClosed: table[{row}][{col}] = {value} is outside 0..{order}")]
    NotClosed { row: usize, col: usize, value: usize, order: usize },
    #[error("NoIdentity: no element acts as a two-sided identity")]
    NoIdentity,
    #[error("MissingInverse: element {element} has no two-sided inverse")]
    MissingInverse { element: usize },
    #[error("NotAssociative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("declared order {declared} does not match table size {actual}")]
    OrderMismatch { declared: usize, actual: usize },

    // maps and subgroups
    #[error("NotAHomomorphism: f({x}*{y}) != f({x})*f({y})")]
    NotAHomomorphism { x: usize, y: usize },
    #[error("map has length {len}, expected {expected}")]
    WrongLength { len: usize, expected: usize },
    #[error("element index {value} out of range 0..{order}")]
    OutOfRange { value: usize, order: usize },
    #[error("NotASubgroup: {reason}")]
    NotASubgroup { reason: String },
    #[error("NotNormal: {g} * {n} * {g}^-1 leaves the subgroup")]
    NotNormal { g: usize, n: usize },
    #[error("NotAnIsomorphism: {reason}")]
    NotAnIsomorphism { reason: String },

    // actions
    #[error("NotAnAutomorphism: image of acting element {sigma} is not an automorphism ({reason})")]
    NotAnAutomorphism { sigma: usize, reason: String },
    #[error("NotAHomomorphism: action of {sigma}*{tau} differs from the composite")]
    ActionNotHomomorphic { sigma: usize, tau: usize },
    #[error("InconsistentGeneratorExtension: generator images violate a relation at acting element {sigma}")]
    InconsistentGeneratorExtension { sigma: usize },
    #[error("Underdetermined: the given acting elements do not generate the acting group")]
    Underdetermined,
    #[error("NotInvariant: acting element {sigma} moves subgroup member {n} outside the subgroup")]
    NotInvariant { sigma: usize, n: usize },
    #[error("MismatchedActingGroup")]
    MismatchedActingGroup,
    #[error("basepoint {point} is moved by acting element {sigma}")]
    BasepointMoved { sigma: usize, point: usize },

    // cohomology
    #[error("NotACocycle: identity fails at ({sigma1}, {sigma2})")]
    NotACocycle { sigma1: usize, sigma2: usize },
    #[error("ActionMismatch: {reason}")]
    ActionMismatch { reason: String },
    #[error("TargetNotAbelian")]
    TargetNotAbelian,
    #[error("NotEquivariant: fails at acting element {sigma}, point {x}")]
    NotEquivariant { sigma: usize, x: usize },
    #[error("NotWellDefined: {reason}")]
    NotWellDefined { reason: String },
    #[error("NotAWitness: b = {b} does not relate the cocycles at acting element {sigma}")]
    NotAWitness { b: usize, sigma: usize },

    // forms
    #[error("LemmaViolation: {identity} fails at {indices:?}")]
    LemmaViolation { identity: &'static str, indices: Vec<usize> },
    #[error("IntertwineFailure: f(sigma(m)) != sigma*f(m) at sigma = {sigma}, m = {m}")]
    IntertwineFailure { sigma: usize, m: usize },
    #[error("BaseMismatch")]
    BaseMismatch,

    // torsors
    #[error("NotRegular: {reason}")]
    NotRegular { reason: String },
    #[error("not a torsor: {reason}")]
    NotATorsor { reason: String },

    #[error("SizeLimitExceeded: {what} needs {needed} candidates, limit is {limit}")]
    SizeLimitExceeded { what: &'static str, needed: u128, limit: u128 },

    #[error("unknown catalog group {0:?}")]
    UnknownGroup(String),
    #[error("{0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
