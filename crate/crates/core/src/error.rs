use crate::grid::Point;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("the collection of cells is not a polyomino")]
    NotAPolyomino,
    #[error("the polyomino is not a path")]
    NotAPath,
    #[error("the polyomino is not a closed path")]
    NotAClosedPath,
    #[error("the polyomino is not convex")]
    NotConvex,
    #[error("cell {0} is not in the collection")]
    CellNotInCollection(Point),
    #[error("{what} budget of {budget} exceeded")]
    BudgetExceeded { what: &'static str, budget: u64 },
    #[error("zig-zag search budget of {0} states exceeded; result indeterminate")]
    SearchBudgetExceeded(u64),
    #[error("ideal is not homogeneous")]
    NotHomogeneous,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid zig-zag walk: {0}")]
    InvalidWalk(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("linear forms did not give an Artinian reduction")]
    NotArtinianAfterReduction,
    #[error("unimplemented: {0}")]
    Unimplemented(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
