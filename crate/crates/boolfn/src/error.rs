use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("input has {got} bits, function expects {expected}")]
    InputShape { expected: usize, got: usize },

    #[error("variable index {var} out of range for {n} variables")]
    VarOutOfRange { var: usize, n: usize },

    #[error("{what} supports at most {cap} variables, got {n}")]
    TooLarge {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("invalid family parameters: {0}")]
    FamilyParams(String),

    #[error("truth table parse error: {0}")]
    ParseTable(String),

    #[error("decision tree parse error: {0}")]
    ParseTree(String),

    #[error("malformed decision tree: {0}")]
    MalformedTree(String),

    #[error("algorithm does not compute the given function (differs at input index {at})")]
    DoesNotCompute { at: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
