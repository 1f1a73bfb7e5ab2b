//! Published closed forms for the colouring sums of the cycle-derived families.
//!
//! Each entry is a piecewise function of the cycle parameter `n`, including
//! the small-`n` special cases. Where two printed branches overlap for the
//! closed helm, even `n >= 8` takes the first form and odd `n >= 7` the second.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::FamilyKind;
use crate::solver::Quantity;

#[derive(Clone, Copy, Debug, Serialize)]
pub struct FormulaEntry {
    pub family: FamilyKind,
    pub quantity: Quantity,
    pub source: &'static str,
    #[serde(skip)]
    predictor: fn(u64) -> u64,
}

impl FormulaEntry {
    pub fn predict(&self, n: usize) -> Result<u64> {
        if n < self.family.min_n() {
            return Err(Error::InvalidParameter(format!(
                "{} needs n >= {}, got {n}",
                self.family,
                self.family.min_n()
            )));
        }
        Ok((self.predictor)(n as u64))
    }
}

fn even(n: u64) -> bool {
    n.is_multiple_of(2)
}

fn parity(n: u64, if_even: u64, if_odd: u64) -> u64 {
    if even(n) {
        if_even
    } else {
        if_odd
    }
}

fn small_or(n: u64, small: &[u64], general: u64) -> u64 {
    small.get((n - 3) as usize).copied().unwrap_or(general)
}

// Shared by helm and closed helm.
fn chi_min_rim(n: u64) -> u64 {
    parity(n, 3 * (n + 1), 3 * n + 7)
}

fn chi_max_rim(n: u64) -> u64 {
    parity(n, 5 * n + 1, 7 * n - 2)
}

fn web_chi_max(n: u64) -> u64 {
    if even(n) {
        7 * n / 2
    } else {
        (15 * n - 9) / 2
    }
}

fn web_b_max(n: u64) -> u64 {
    match n {
        3 => 27,
        4 => 35,
        5 => 45,
        _ if even(n) => 13 * n - 21,
        _ => 13 * n - 18,
    }
}

const TABLE: [FormulaEntry; 21] = [
    FormulaEntry {
        family: FamilyKind::DoubleWheel,
        quantity: Quantity::ChiSumMin,
        source: "Prop 2.1",
        predictor: |n| parity(n, 3 * (n + 1), 3 * n + 7),
    },
    FormulaEntry {
        family: FamilyKind::DoubleWheel,
        quantity: Quantity::ChiSumMax,
        source: "Prop 2.2",
        predictor: |n| parity(n, 5 * n + 1, 7 * n - 2),
    },
    FormulaEntry {
        family: FamilyKind::DoubleWheel,
        quantity: Quantity::BSumMin,
        source: "Thm 2.3",
        predictor: |n| if n == 4 { 15 } else { parity(n, 3 * n + 10, 3 * n + 7) },
    },
    FormulaEntry {
        family: FamilyKind::DoubleWheel,
        quantity: Quantity::BSumMax,
        source: "Thm 2.4",
        predictor: |n| if n == 4 { 21 } else { parity(n, 7 * n - 5, 7 * n - 2) },
    },
    FormulaEntry {
        family: FamilyKind::Helm,
        quantity: Quantity::ChiSumMin,
        source: "Thm 2.5",
        predictor: chi_min_rim,
    },
    FormulaEntry {
        family: FamilyKind::Helm,
        quantity: Quantity::ChiSumMax,
        source: "Thm 2.6",
        predictor: chi_max_rim,
    },
    FormulaEntry {
        family: FamilyKind::Helm,
        quantity: Quantity::BSumMin,
        source: "Thm 2.7",
        predictor: |n| small_or(n, &[14, 25, 21, 30], 3 * n + 13),
    },
    FormulaEntry {
        family: FamilyKind::Helm,
        quantity: Quantity::BSumMax,
        source: "Thm 2.8",
        predictor: |n| small_or(n, &[21, 29, 34, 48], 9 * n - 7),
    },
    FormulaEntry {
        family: FamilyKind::ClosedHelm,
        quantity: Quantity::ChiSumMin,
        source: "Thm 2.9",
        predictor: chi_min_rim,
    },
    FormulaEntry {
        family: FamilyKind::ClosedHelm,
        quantity: Quantity::ChiSumMax,
        source: "Thm 2.10",
        predictor: chi_max_rim,
    },
    FormulaEntry {
        family: FamilyKind::ClosedHelm,
        quantity: Quantity::BSumMin,
        source: "Thm 2.11",
        predictor: |n| small_or(n, &[16, 25, 22, 32], parity(n, 3 * (n + 5), 3 * n + 16)),
    },
    FormulaEntry {
        family: FamilyKind::ClosedHelm,
        quantity: Quantity::BSumMax,
        source: "Thm 2.12",
        predictor: |n| small_or(n, &[19, 29, 33, 47], parity(n, 9 * (n - 1), 9 * n - 10)),
    },
    FormulaEntry {
        family: FamilyKind::Sunlet,
        quantity: Quantity::ChiSumMin,
        source: "Prop 2.13",
        predictor: |n| parity(n, 3 * n, 3 * (n + 1)),
    },
    FormulaEntry {
        family: FamilyKind::Sunlet,
        quantity: Quantity::ChiSumMax,
        source: "Prop 2.14",
        predictor: |n| parity(n, 3 * n, 5 * n - 3),
    },
    FormulaEntry {
        family: FamilyKind::Sunlet,
        quantity: Quantity::BSumMin,
        source: "Thm 2.15",
        predictor: |n| small_or(n, &[10, 20, 17], 3 * n + 8),
    },
    FormulaEntry {
        family: FamilyKind::Sunlet,
        quantity: Quantity::BSumMax,
        source: "Thm 2.16",
        predictor: |n| small_or(n, &[14, 20, 23], 7 * n - 8),
    },
    FormulaEntry {
        family: FamilyKind::Web,
        quantity: Quantity::ChiSumMin,
        source: "Prop 2.17",
        predictor: |n| if even(n) { 7 * n / 2 } else { (9 * n + 9) / 2 },
    },
    FormulaEntry {
        family: FamilyKind::Web,
        quantity: Quantity::ChiSumMax,
        source: "Prop 2.18",
        predictor: web_chi_max,
    },
    FormulaEntry {
        family: FamilyKind::Web,
        quantity: Quantity::BChromatic,
        source: "Thm 2.19",
        predictor: |n| if n <= 4 { 4 } else { 5 },
    },
    FormulaEntry {
        family: FamilyKind::Web,
        quantity: Quantity::BSumMin,
        source: "Thm 2.20",
        predictor: |n| small_or(n, &[18, 25, 45], parity(n, 5 * n + 21, 5 * n + 18)),
    },
    FormulaEntry {
        family: FamilyKind::Web,
        quantity: Quantity::BSumMax,
        source: "Thm 2.21",
        predictor: web_b_max,
    },
];

/// Every (family, quantity) pair that has a published closed form.
pub fn coverage_table() -> &'static [FormulaEntry] {
    &TABLE
}

pub fn entry(family: FamilyKind, quantity: Quantity) -> Option<&'static FormulaEntry> {
    TABLE
        .iter()
        .find(|e| e.family == family && e.quantity == quantity)
}

pub fn predict(family: FamilyKind, quantity: Quantity, n: usize) -> Result<u64> {
    entry(family, quantity)
        .ok_or(Error::NotInPaper { family, quantity })?
        .predict(n)
}
