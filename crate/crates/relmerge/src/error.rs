use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// Formula text that does not match the grammar.
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    /// A variable outside a fixed universe.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A source name that does not occur in the source set.
    #[error("unknown source `{0}`")]
    UnknownSource(String),

    /// Model enumeration over too many variables.
    #[error("universe has {actual} variables, above the cap of {cap}")]
    UniverseTooLarge { actual: usize, cap: usize },

    /// Enumeration over too many sources.
    #[error("{actual} sources, above the cap of {cap}")]
    SourceCapExceeded { actual: usize, cap: usize },

    /// An operation that needs a satisfiable formula got one without models.
    #[error("formula `{0}` is unsatisfiable")]
    UnsatisfiableFormula(String),

    /// A merge constraint without models.
    #[error("constraint is unsatisfiable")]
    UnsatisfiableConstraint,

    /// A maxset family in which one member contains another.
    #[error("maxset family is not an antichain: {{{smaller}}} is contained in {{{larger}}}")]
    NotAntichain { smaller: String, larger: String },

    /// A letter that occurs in no maxset of a synthesis spec.
    #[error("letter `{0}` occurs in no maxset")]
    UncoveredLetter(String),

    /// A graph spec that cannot be realized.
    #[error("malformed graph spec: {0}")]
    MalformedSpec(String),

    /// Any other invalid input: bad problem files, bad partition
    /// expressions, non-positive weights, and the like.
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
