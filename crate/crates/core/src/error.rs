use std::time::Duration;

use thiserror::Error;

use crate::generators::FamilyKind;
use crate::solver::Quantity;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid colouring: {0}")]
    InvalidColouring(String),

    #[error("search budget exhausted after {nodes} nodes ({elapsed:?})")]
    BudgetExhausted { nodes: u64, elapsed: Duration },

    #[error("no closed form for {quantity} on {family}")]
    NotInPaper {
        family: FamilyKind,
        quantity: Quantity,
    },

    #[error("no {0}-colouring satisfies the requested property")]
    NoColouring(usize),

    #[error("graph has {0} vertices; exact solvers support at most 64")]
    TooLarge(usize),

    #[error("unknown report format `{0}`")]
    UnknownFormat(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
