use thiserror::Error;

/// Errors reported by library operations.
///
/// Pure combinatorial predicates return plain values; `Result` is reserved
/// for precondition violations, malformed encodings and resource caps.
#[derive(Debug, Error)]
pub enum FabalError {
    #[error("invalid interval ({0},{1}): need 1 <= top <= socle")]
    InvalidInterval(usize, usize),

    #[error("interval ({0},{1}) is out of range or not allowed for the presentation (n={2})")]
    NotAllowed(usize, usize, usize),

    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("module is not faithfully balanced")]
    NotFaithfullyBalanced,

    #[error("module is not minimal faithfully balanced")]
    NotMinimal,

    #[error("module is not in fb(n): {0}")]
    NotInFbN(String),

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("malformed self-bounded function: {0}")]
    MalformedFunction(String),

    #[error("malformed tableau: {0}")]
    MalformedTableau(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),
}

impl FabalError {
    /// Exit status the command line front end maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            FabalError::ResourceCap(_) => 3,
            _ => 2,
        }
    }
}
