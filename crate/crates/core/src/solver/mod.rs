//! Exact solvers for the chromatic number, the chromatic sums over minimum
//! colourings, the b-chromatic number and the b-chromatic sums.
//!
//! The optimised solvers live in [`search`]; [`oracle`] is a plain exhaustive
//! enumeration kept deliberately separate so it can audit them.

mod budget;
pub mod oracle;
pub mod search;

use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use budget::{Meter, SearchBudget};
pub use oracle::brute_force_oracle;
pub use search::{b_chromatic_number, b_sum, chi_sum, chromatic_number};

use crate::colouring::{Colouring, Direction};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Bumped whenever a change could alter a value, witness or node count.
pub const SOLVER_VERSION: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Quantity {
    Chi,
    ChiSumMin,
    ChiSumMax,
    BChromatic,
    BSumMin,
    BSumMax,
}

impl Quantity {
    pub const ALL: [Quantity; 6] = [
        Quantity::Chi,
        Quantity::ChiSumMin,
        Quantity::ChiSumMax,
        Quantity::BChromatic,
        Quantity::BSumMin,
        Quantity::BSumMax,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::Chi => "chi",
            Quantity::ChiSumMin => "chi_sum_min",
            Quantity::ChiSumMax => "chi_sum_max",
            Quantity::BChromatic => "b_chromatic",
            Quantity::BSumMin => "b_sum_min",
            Quantity::BSumMax => "b_sum_max",
        }
    }

    /// Quantities defined through b-colourings.
    pub fn is_b_family(self) -> bool {
        matches!(
            self,
            Quantity::BChromatic | Quantity::BSumMin | Quantity::BSumMax
        )
    }

    /// Sum quantities carry a direction; `chi` and `b_chromatic` count colours.
    pub fn direction(self) -> Option<Direction> {
        match self {
            Quantity::ChiSumMin | Quantity::BSumMin => Some(Direction::Min),
            Quantity::ChiSumMax | Quantity::BSumMax => Some(Direction::Max),
            Quantity::Chi | Quantity::BChromatic => None,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown quantity `{s}`")))
    }
}

/// A solved quantity together with a witness colouring and search statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawResult", into = "RawResult")]
pub struct SumResult {
    pub quantity: Quantity,
    pub value: u64,
    pub witness: Colouring,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

#[derive(Serialize, Deserialize)]
struct RawResult {
    quantity: Quantity,
    value: u64,
    witness: Colouring,
    nodes: u64,
    millis: u64,
}

impl From<RawResult> for SumResult {
    fn from(r: RawResult) -> Self {
        SumResult {
            quantity: r.quantity,
            value: r.value,
            witness: r.witness,
            nodes_explored: r.nodes,
            elapsed: Duration::from_millis(r.millis),
        }
    }
}

impl From<SumResult> for RawResult {
    fn from(r: SumResult) -> Self {
        let millis = r.millis();
        RawResult {
            quantity: r.quantity,
            value: r.value,
            witness: r.witness,
            nodes: r.nodes_explored,
            millis,
        }
    }
}

impl SumResult {
    pub fn millis(&self) -> u64 {
        self.elapsed.as_millis() as u64
    }

    /// Re-checks the witness against the colouring predicates.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        use crate::colouring::{colouring_sum, is_b_colouring, is_proper};
        let w = &self.witness;
        let fail = |why: &str| Err(Error::InvalidColouring(format!("{}: {why}", self.quantity)));
        if !is_proper(g, w) {
            return fail("witness is not proper");
        }
        if self.quantity.is_b_family() && !is_b_colouring(g, w) {
            return fail("witness is not a b-colouring");
        }
        let expected = match self.quantity.direction() {
            Some(_) => colouring_sum(w),
            None => w.k() as u64,
        };
        if expected != self.value {
            return fail("witness does not reproduce the value");
        }
        Ok(())
    }
}

/// Solves one quantity with the optimised search.
pub fn solve(g: &Graph, quantity: Quantity, budget: &SearchBudget) -> Result<SumResult> {
    match quantity {
        Quantity::Chi => chromatic_number(g, budget),
        Quantity::ChiSumMin => chi_sum(g, Direction::Min, budget),
        Quantity::ChiSumMax => chi_sum(g, Direction::Max, budget),
        Quantity::BChromatic => b_chromatic_number(g, budget),
        Quantity::BSumMin => b_sum(g, Direction::Min, budget),
        Quantity::BSumMax => b_sum(g, Direction::Max, budget),
    }
}

/// Largest `i` with at least `i` vertices of degree `>= i - 1`; bounds the
/// b-chromatic number from above.
pub fn m_bound(g: &Graph) -> usize {
    let mut d = g.degrees();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d.iter()
        .enumerate()
        .take_while(|&(i, &deg)| deg >= i)
        .count()
}
