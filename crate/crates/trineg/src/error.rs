use thiserror::Error;

/// Errors from degree construction and fuzzy-set operations.
#[derive(Debug, Error)]
pub enum ScoiError {
    #[error("membership degree {0} outside [0, 1]")]
    DegreeOutOfRange(f64),
    #[error("lambda {0} outside the open interval (0, 1)")]
    LambdaOutOfRange(f64),
    #[error("duplicate universe element {0:?}")]
    DuplicateElement(String),
    #[error("universe mismatch: only in left {left:?}, only in right {right:?}")]
    UniverseMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("declared kind {declared:?} does not match membership values")]
    KindMismatch { declared: String },
    #[error("negative tolerance {0}")]
    NegativeTolerance(f64),
}

/// Errors from crisp-set trichotomy construction.
#[derive(Debug, Error)]
pub enum TrichotomyError {
    #[error("subset element {0:?} is not in the universe")]
    NotInUniverse(String),
    #[error("positive and opposite subsets overlap on {0:?}")]
    Overlap(String),
}
