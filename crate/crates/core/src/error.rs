use alloc::string::String;

/// Errors raised by constructors and generators.
///
/// Topology-axiom failures are not errors; the checkers return a
/// [`Violation`](crate::topology::Violation) or an
/// [`AxiomReport`](crate::separation::AxiomReport) instead.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("universe must contain at least one point")]
    EmptyUniverse,
    #[error("parameter set must contain at least one parameter")]
    EmptyParameters,
    #[error("duplicate point label `{0}`")]
    DuplicatePoint(String),
    #[error("duplicate parameter `{0}`")]
    DuplicateParameter(String),
    #[error("parameter `{0}` has no assigned set")]
    MissingParameter(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("unknown parameter `{0}`")]
    UnknownParameter(String),
    #[error("context too large: {points} points and {parameters} parameters (at most 64 points and 128 point-parameter bits)")]
    ContextTooLarge { points: usize, parameters: usize },
    #[error("operands belong to different contexts")]
    ContextMismatch,
    #[error("size guard exceeded: {bits} bits requested, limit is {limit} (use the large-size override)")]
    SizeGuardExceeded { bits: usize, limit: usize },
    #[error("base family contains a set that is not open in the topology")]
    NotASubfamily,
    #[error("family given for parameter `{0}` is not a base of any topology")]
    NotABase(String),
    #[error("crisp system must give exactly one topology per parameter")]
    IncompleteSystem,
    #[error("family is not a topology: {0}")]
    NotATopology(String),
    #[error("sweep bounds exceeded: {0}")]
    BoundExceeded(String),
    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),
    #[error("`{0}` is not a converse claim")]
    NotAConverse(String),
    #[error("no counterexample for `{0}` within the given bounds")]
    NotFound(String),
}
