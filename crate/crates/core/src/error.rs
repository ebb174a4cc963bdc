use thiserror::Error;

/// Errors raised by the set calculus, the cardinal orders, the parser and the audit harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The inverse powerset was applied to something denoting the empty set.
    #[error("domain error: {0}")]
    Domain(String),

    /// `P` or `P^-1` was applied to a union form.
    #[error("unsupported operand: {0}")]
    UnsupportedOperand(String),

    /// A subset or subset-membership relation was asked between incompatible levels.
    #[error("relation undefined: {0}")]
    RelationUndefined(String),

    /// The term does not normalize to a single Zermelo set or single component.
    #[error("level undefined: {0}")]
    UndefinedLevel(String),

    /// CH-cardinality was requested for a term outside the level-one fragment.
    #[error("outside EZF: {0}")]
    OutsideEzf(String),

    /// A density witness was requested for a pair that is not strictly ordered.
    #[error("ordering error: {0}")]
    Ordering(String),

    /// Every witness candidate strips to the empty set.
    #[error("witness unavailable: {0}")]
    WitnessUnavailable(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("syntax error at {line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    /// A set literal contains a subexpression that is not a Zermelo set.
    #[error("structural error at {line}:{column}: {message}")]
    Structural { line: usize, column: usize, message: String },

    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
