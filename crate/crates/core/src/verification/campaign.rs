use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::formulas;
use crate::generators::FamilyKind;
use crate::solver::{solve, Quantity, SearchBudget, SumResult};

use super::cache::{CacheKey, ResultsCache};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    #[serde(rename = "match")]
    Match,
    #[serde(rename = "mismatch")]
    Mismatch,
    #[serde(rename = "aborted")]
    Aborted,
    #[serde(rename = "not-in-paper")]
    NotInPaper,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::Aborted => "aborted",
            Status::NotInPaper => "not-in-paper",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRow {
    pub family: FamilyKind,
    pub n: usize,
    pub quantity: Quantity,
    pub predicted: Option<u64>,
    pub computed: Option<u64>,
    pub status: Status,
    pub witness_path: Option<String>,
    pub nodes: u64,
    pub millis: u64,
    #[serde(skip)]
    pub witness: Option<Colouring>,
}

/// Largest graphs the campaign will solve, by quantity kind. Rows above the
/// cap are reported as aborted without being attempted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DeskCaps {
    pub b_max_vertices: usize,
    pub chi_max_vertices: usize,
}

impl Default for DeskCaps {
    fn default() -> Self {
        DeskCaps {
            b_max_vertices: 16,
            chi_max_vertices: 17,
        }
    }
}

impl DeskCaps {
    pub fn allows(&self, quantity: Quantity, order: usize) -> bool {
        if quantity.is_b_family() {
            order <= self.b_max_vertices
        } else {
            order <= self.chi_max_vertices
        }
    }
}

#[derive(Clone, Debug)]
pub struct Campaign {
    pub families: Vec<FamilyKind>,
    pub n_min: usize,
    pub n_max: usize,
    pub quantities: Vec<Quantity>,
    pub budget: SearchBudget,
    pub caps: DeskCaps,
    /// Worker threads; `None` uses the available parallelism.
    pub jobs: Option<usize>,
    /// Also solve pairs without a closed form (status `not-in-paper`).
    pub include_uncovered: bool,
}

impl Campaign {
    pub fn new(families: Vec<FamilyKind>, n_min: usize, n_max: usize, quantities: Vec<Quantity>) -> Self {
        Campaign {
            families,
            n_min,
            n_max,
            quantities,
            budget: SearchBudget::default(),
            caps: DeskCaps::default(),
            jobs: None,
            include_uncovered: false,
        }
    }
}

pub fn witness_file_name(family: FamilyKind, n: usize, quantity: Quantity) -> String {
    format!("witnesses/{family}-{n}-{quantity}.json")
}

struct Job {
    family: FamilyKind,
    n: usize,
    quantity: Quantity,
    predicted: Option<u64>,
}

enum Outcome {
    Solved(SumResult),
    Aborted,
}

fn plan(c: &Campaign) -> Result<Vec<Job>> {
    let mut families = c.families.clone();
    families.sort();
    families.dedup();
    let mut quantities = c.quantities.clone();
    quantities.sort();
    quantities.dedup();
    let mut jobs = Vec::new();
    for &family in &families {
        if c.n_min < family.min_n() {
            return Err(Error::InvalidParameter(format!(
                "{family} needs n >= {}, got n_min = {}",
                family.min_n(),
                c.n_min
            )));
        }
        for n in c.n_min..=c.n_max {
            for &quantity in &quantities {
                let predicted = match formulas::entry(family, quantity) {
                    Some(e) => Some(e.predict(n)?),
                    None if c.include_uncovered => None,
                    None => continue,
                };
                jobs.push(Job {
                    family,
                    n,
                    quantity,
                    predicted,
                });
            }
        }
    }
    Ok(jobs)
}

fn run_job(job: &Job, budget: &SearchBudget) -> Outcome {
    let g = job.family.build(job.n).expect("planned parameters are in range");
    match solve(&g, job.quantity, budget) {
        Ok(r) => {
            debug_assert!(r.validate(&g).is_ok());
            Outcome::Solved(r)
        }
        Err(Error::BudgetExhausted { nodes, elapsed }) => {
            log::warn!(
                "{}:{} {}: budget exhausted after {nodes} nodes ({elapsed:?})",
                job.family,
                job.n,
                job.quantity
            );
            Outcome::Aborted
        }
        Err(e) => panic!("solver failed on {}:{} {}: {e}", job.family, job.n, job.quantity),
    }
}

fn row(job: &Job, outcome: Option<&SumResult>) -> VerificationRow {
    let Some(r) = outcome else {
        return VerificationRow {
            family: job.family,
            n: job.n,
            quantity: job.quantity,
            predicted: job.predicted,
            computed: None,
            status: Status::Aborted,
            witness_path: None,
            nodes: 0,
            millis: 0,
            witness: None,
        };
    };
    let status = match job.predicted {
        None => Status::NotInPaper,
        Some(p) if p == r.value => Status::Match,
        Some(_) => Status::Mismatch,
    };
    VerificationRow {
        family: job.family,
        n: job.n,
        quantity: job.quantity,
        predicted: job.predicted,
        computed: Some(r.value),
        status,
        witness_path: Some(witness_file_name(job.family, job.n, job.quantity)),
        nodes: r.nodes_explored,
        millis: r.millis(),
        witness: Some(r.witness.clone()),
    }
}

/// Solves every planned row, reusing cached results, and returns rows in
/// (family, n, quantity) order. New results are added to `cache` after all
/// workers finish.
pub fn run_campaign(c: &Campaign, cache: &mut ResultsCache) -> Result<Vec<VerificationRow>> {
    let jobs = plan(c)?;
    let pending: Vec<usize> = (0..jobs.len())
        .filter(|&i| {
            let j = &jobs[i];
            c.caps.allows(j.quantity, j.family.order(j.n))
                && cache.get(j.family, j.n, j.quantity).is_none()
        })
        .collect();

    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = c.jobs {
        builder = builder.num_threads(n.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| Error::InvalidParameter(format!("worker pool: {e}")))?;
    let solved: Vec<(usize, Outcome)> = pool.install(|| {
        pending
            .par_iter()
            .map(|&i| (i, run_job(&jobs[i], &c.budget)))
            .collect()
    });

    for (i, outcome) in solved {
        if let Outcome::Solved(r) = outcome {
            let j = &jobs[i];
            cache.insert(CacheKey::current(j.family, j.n, j.quantity), r);
        }
    }

    Ok(jobs
        .iter()
        .map(|j| {
            let hit = if c.caps.allows(j.quantity, j.family.order(j.n)) {
                cache.get(j.family, j.n, j.quantity)
            } else {
                None
            };
            row(j, hit)
        })
        .collect())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub matches: usize,
    pub mismatches: usize,
    pub aborted: usize,
    pub not_in_paper: usize,
}

impl Summary {
    pub fn of(rows: &[VerificationRow]) -> Summary {
        let mut s = Summary::default();
        for r in rows {
            match r.status {
                Status::Match => s.matches += 1,
                Status::Mismatch => s.mismatches += 1,
                Status::Aborted => s.aborted += 1,
                Status::NotInPaper => s.not_in_paper += 1,
            }
        }
        s
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "matches={} mismatches={} aborted={}",
            self.matches, self.mismatches, self.aborted
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sunlet_chi_rows() {
        let c = Campaign::new(vec![FamilyKind::Sunlet], 3, 6, vec![Quantity::ChiSumMin]);
        let rows = run_campaign(&c, &mut ResultsCache::in_memory()).unwrap();
        assert_eq!(rows.len(), 4);
        assert_eq!(rows[0].predicted, Some(12));
        assert!(rows.iter().all(|r| r.status != Status::Aborted));
    }

    #[test]
    fn double_wheel_special_case() {
        let c = Campaign::new(vec![FamilyKind::DoubleWheel], 4, 4, vec![Quantity::BSumMin]);
        let rows = run_campaign(&c, &mut ResultsCache::in_memory()).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].predicted, Some(15));
    }

    #[test]
    fn empty_quantities() {
        let c = Campaign::new(vec![FamilyKind::Helm], 3, 5, vec![]);
        assert!(run_campaign(&c, &mut ResultsCache::in_memory()).unwrap().is_empty());
    }

    #[test]
    fn uncovered_pairs() {
        let mut c = Campaign::new(vec![FamilyKind::Wheel, FamilyKind::Sunlet], 3, 4, vec![Quantity::Chi]);
        assert!(run_campaign(&c, &mut ResultsCache::in_memory()).unwrap().is_empty());
        c.include_uncovered = true;
        let rows = run_campaign(&c, &mut ResultsCache::in_memory()).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.status == Status::NotInPaper && r.computed.is_some()));
        assert_eq!(rows[0].computed, Some(4)); // wheel(3) = K_4
    }

    #[test]
    fn over_cap_rows_abort() {
        let mut c = Campaign::new(vec![FamilyKind::Web], 3, 4, vec![Quantity::BChromatic]);
        c.caps.b_max_vertices = 10;
        let rows = run_campaign(&c, &mut ResultsCache::in_memory()).unwrap();
        assert_eq!(rows[0].status, Status::Match);
        assert_eq!(rows[1].status, Status::Aborted);
        assert_eq!(rows[1].computed, None);
    }

    #[test]
    fn budget_abort_is_a_row() {
        let mut c = Campaign::new(vec![FamilyKind::Web], 5, 5, vec![Quantity::BSumMin]);
        c.budget = SearchBudget::nodes(10);
        let mut cache = ResultsCache::in_memory();
        let rows = run_campaign(&c, &mut cache).unwrap();
        assert_eq!(rows[0].status, Status::Aborted);
        assert!(cache.is_empty());
    }

    #[test]
    fn rejects_small_n_min() {
        let c = Campaign::new(vec![FamilyKind::Helm], 2, 5, vec![Quantity::ChiSumMin]);
        assert!(run_campaign(&c, &mut ResultsCache::in_memory()).is_err());
    }

    #[test]
    fn ordering_is_canonical() {
        let c = Campaign::new(
            vec![FamilyKind::Web, FamilyKind::Helm],
            3,
            4,
            vec![Quantity::BSumMax, Quantity::ChiSumMin],
        );
        let rows = run_campaign(&c, &mut ResultsCache::in_memory()).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.family, r.n, r.quantity)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(rows[0].family, FamilyKind::Helm);
    }
}
