use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Limits for a single solve. Running out aborts the solve with
/// [`Error::BudgetExhausted`]; it never yields a value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_time: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: 100_000_000,
            max_time: Duration::from_secs(300),
        }
    }
}

impl SearchBudget {
    pub fn nodes(max_nodes: u64) -> Self {
        SearchBudget {
            max_nodes,
            ..Default::default()
        }
    }
}

/// Counts search nodes against a budget.
#[derive(Debug)]
pub struct Meter {
    budget: SearchBudget,
    start: Instant,
    nodes: u64,
}

impl Meter {
    pub fn new(budget: &SearchBudget) -> Self {
        Meter {
            budget: *budget,
            start: Instant::now(),
            nodes: 0,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes
            || (self.nodes & 0x3ff == 0 && self.start.elapsed() > self.budget.max_time)
        {
            return Err(Error::BudgetExhausted {
                nodes: self.nodes,
                elapsed: self.start.elapsed(),
            });
        }
        Ok(())
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    pub fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }
}
