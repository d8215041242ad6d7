use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed permutation: {0}")]
    Malformed(String),
    #[error("ambiguous digit form: {0} letters, use comma-separated form for n > 9")]
    Ambiguous(usize),
    #[error("size {n} too small for {family}")]
    Size { family: &'static str, n: usize },
    #[error("subexcedant entry j_{index} = {value} outside [1, {index}]")]
    Range { index: usize, value: usize },
    #[error("unknown statistic: {0}")]
    UnknownName(String),
    #[error("n = {n} exceeds the enumeration ceiling {ceiling}")]
    TooLarge { n: usize, ceiling: usize },
    #[error("invalid pattern: {0}")]
    Pattern(String),
    #[error("unknown group element: {0}")]
    GroupElement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
