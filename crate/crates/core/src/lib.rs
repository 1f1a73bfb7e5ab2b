//! Exact chromatic and b-chromatic sums for wheel-derived and cycle-derived
//! graph families, with a harness that checks them against closed forms.

pub mod colouring;
pub mod error;
pub mod export;
pub mod formulas;
pub mod generators;
pub mod graph;
pub mod solver;
pub mod verification;

pub use colouring::{Colouring, Direction, Partition};
pub use error::{Error, Result};
pub use generators::{Family, FamilyKind};
pub use graph::{Graph, Vertex};
pub use solver::{solve, Quantity, SearchBudget, SumResult};
