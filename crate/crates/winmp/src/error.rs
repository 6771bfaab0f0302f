use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("game has no vertices")]
    EmptyGame,
    #[error("vertex {0} has no outgoing edge")]
    DeadlockVertex(usize),
    #[error("edge {edge} has {found} weights, expected {expected}")]
    DimensionMismatch { edge: usize, expected: usize, found: usize },
    #[error("edge {edge} refers to unknown vertex {vertex}")]
    BadEndpoint { edge: usize, vertex: usize },
    #[error("set is not closed at vertex {vertex}: {reason}")]
    NotClosed { vertex: usize, reason: String },
    #[error("dimension {0} out of range")]
    BadDimension(usize),
    #[error("syntax error at {pos}: expected {expected}")]
    SyntaxError { pos: usize, expected: String },
    #[error("window size must be positive, got {0}")]
    BadWindow(i64),
    #[error("product would exceed the node budget ({budget})")]
    ProductTooLarge { budget: usize },
    #[error("objective contains a WMP atom")]
    NotIsl,
    #[error("objective outside the fragment: {0}")]
    FragmentMismatch(String),
    #[error("enumeration budget exceeded ({0} candidates)")]
    BudgetExceeded(u128),
    #[error("sequence shorter than the window")]
    TooShort,
    #[error("{line}:{col}: {msg}")]
    ParseError { line: usize, col: usize, msg: String },
    #[error(transparent)]
    IoError(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
