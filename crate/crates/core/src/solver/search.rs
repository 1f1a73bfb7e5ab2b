//! Pruned backtracking over colour-class partitions.
//!
//! Sum searches walk canonical partitions (restricted-growth strings over the
//! natural vertex order) into exactly `k` independent classes and label each
//! leaf with [`optimal_labeling`]. Leaves are visited in lexicographic RGS
//! order and only strict improvements replace the incumbent, so the reported
//! witness is the lexicographically smallest optimum and the bound may prune
//! on ties.

use crate::colouring::{labelled_sum, optimal_labeling, Colouring, Direction, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{m_bound, Meter, Quantity, SearchBudget, SumResult};

/// Adjacency as `u64` masks.
struct Masks {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<u32>,
}

impl Masks {
    fn new(g: &Graph) -> Result<Masks> {
        let n = g.n_vertices();
        if n > 64 {
            return Err(Error::TooLarge(n));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("graph has no vertices".into()));
        }
        let adj: Vec<u64> = (0..n).map(|v| g.adj(v).as_u64()).collect();
        let deg = adj.iter().map(|m| m.count_ones()).collect();
        Ok(Masks { n, adj, deg })
    }
}

fn colouring_from_rgs(rgs: &[usize]) -> Colouring {
    Colouring::new(rgs.iter().map(|&b| b + 1).collect()).expect("rgs uses every block")
}

/// Relabels colours by first occurrence in vertex order.
fn canonical(colors: &[usize]) -> Vec<usize> {
    let mut map = vec![usize::MAX; colors.len() + 1];
    let mut next = 0;
    colors
        .iter()
        .map(|&c| {
            if map[c] == usize::MAX {
                map[c] = next;
                next += 1;
            }
            map[c]
        })
        .collect()
}

/// DSATUR-ordered test for a proper `k`-colouring.
struct Dsatur<'a> {
    m: &'a Masks,
    k: usize,
    colour: Vec<Option<usize>>,
    class: Vec<u64>,
    meter: &'a mut Meter,
}

impl Dsatur<'_> {
    fn saturation(&self, v: usize, used: usize) -> u32 {
        self.class[..used]
            .iter()
            .filter(|&&c| c & self.m.adj[v] != 0)
            .count() as u32
    }

    fn pick(&self, used: usize) -> usize {
        let uncoloured: u64 = (0..self.m.n)
            .filter(|&v| self.colour[v].is_none())
            .fold(0, |acc, v| acc | 1 << v);
        (0..self.m.n)
            .filter(|&v| self.colour[v].is_none())
            .max_by_key(|&v| {
                (
                    self.saturation(v, used),
                    (self.m.adj[v] & uncoloured).count_ones(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("called with an uncoloured vertex")
    }

    fn run(&mut self, coloured: usize, used: usize) -> Result<bool> {
        self.meter.tick()?;
        if coloured == self.m.n {
            return Ok(true);
        }
        let v = self.pick(used);
        for c in 0..(used + 1).min(self.k) {
            if self.class[c] & self.m.adj[v] != 0 {
                continue;
            }
            self.colour[v] = Some(c);
            self.class[c] |= 1 << v;
            if self.run(coloured + 1, used.max(c + 1))? {
                return Ok(true);
            }
            self.class[c] &= !(1 << v);
            self.colour[v] = None;
        }
        Ok(false)
    }
}

fn chromatic_inner(m: &Masks, meter: &mut Meter) -> Result<Colouring> {
    for k in 1..=m.n {
        let mut d = Dsatur {
            m,
            k,
            colour: vec![None; m.n],
            class: vec![0; k],
            meter: &mut *meter,
        };
        if d.run(0, 0)? {
            let colors: Vec<usize> = d.colour.iter().map(|c| c.unwrap()).collect();
            return Ok(colouring_from_rgs(&canonical(&colors)));
        }
    }
    unreachable!("n colours always suffice")
}

/// Exact chromatic number by iterative deepening on `k`.
pub fn chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<SumResult> {
    let m = Masks::new(g)?;
    let mut meter = Meter::new(budget);
    let witness = chromatic_inner(&m, &mut meter)?;
    Ok(SumResult {
        quantity: Quantity::Chi,
        value: witness.k() as u64,
        witness,
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    /// Extremal sum over proper partitions.
    Sum(Direction),
    /// Extremal sum over b-colourings.
    BSum(Direction),
    /// Any b-colouring.
    BExists,
}

impl Goal {
    fn needs_b(self) -> bool {
        !matches!(self, Goal::Sum(_))
    }

    fn direction(self) -> Option<Direction> {
        match self {
            Goal::Sum(d) | Goal::BSum(d) => Some(d),
            Goal::BExists => None,
        }
    }
}

struct PartitionSearch<'a> {
    m: &'a Masks,
    k: usize,
    goal: Goal,
    rgs: Vec<usize>,
    class: Vec<u64>,
    size: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
    meter: &'a mut Meter,
}

impl<'a> PartitionSearch<'a> {
    fn new(m: &'a Masks, k: usize, goal: Goal, meter: &'a mut Meter) -> Self {
        PartitionSearch {
            m,
            k,
            goal,
            rgs: vec![0; m.n],
            class: vec![0; k],
            size: vec![0; k],
            best: None,
            meter,
        }
    }

    /// `false` when no completion of the current prefix can beat the incumbent.
    fn bound_allows(&self, v: usize, used: usize) -> bool {
        let (Some(dir), Some((best, _))) = (self.goal.direction(), &self.best) else {
            return true;
        };
        let fresh = self.k - used;
        let rest = (self.m.n - v - fresh) as u64;
        let mut sizes = self.size[..used].to_vec();
        sizes.resize(self.k, 1);
        let base = labelled_sum(&sizes, dir);
        // every further vertex adds at least 1 and at most k to the labelled sum
        match dir {
            Direction::Min => base + rest < *best,
            Direction::Max => base + rest * self.k as u64 > *best,
        }
    }

    /// Every opened class still has a vertex that could become its b-vertex,
    /// and enough high-degree unassigned vertices remain for unopened classes.
    fn b_feasible(&self, v: usize, used: usize) -> bool {
        let need = self.k as u32 - 1;
        let free: u64 = if v >= 64 { 0 } else { !0u64 << v } & full_mask(self.m.n);
        let capable_free = ones(free).filter(|&u| self.m.deg[u] >= need).count();
        if capable_free < self.k - used {
            return false;
        }
        (0..used).all(|c| {
            let members = self.class[c];
            let existing = ones(members).any(|x| {
                let seen = (0..used)
                    .filter(|&o| o != c && self.class[o] & self.m.adj[x] != 0)
                    .count() as u32;
                need - seen <= (self.m.adj[x] & free).count_ones()
            });
            existing
                || ones(free)
                    .any(|u| self.m.deg[u] >= need && self.m.adj[u] & members == 0)
        })
    }

    fn is_b_leaf(&self) -> bool {
        (0..self.k).all(|c| {
            ones(self.class[c]).any(|x| {
                (0..self.k).all(|o| o == c || self.class[o] & self.m.adj[x] != 0)
            })
        })
    }

    fn leaf(&mut self) -> bool {
        if self.goal.needs_b() && !self.is_b_leaf() {
            return false;
        }
        let value = match self.goal.direction() {
            Some(dir) => labelled_sum(&self.size, dir),
            None => {
                self.best = Some((self.k as u64, self.rgs.clone()));
                return true;
            }
        };
        let better = match (&self.best, self.goal.direction()) {
            (None, _) => true,
            (Some((b, _)), Some(Direction::Min)) => value < *b,
            (Some((b, _)), _) => value > *b,
        };
        if better {
            self.best = Some((value, self.rgs.clone()));
        }
        false
    }

    /// Returns `true` once the search can stop early.
    fn run(&mut self, v: usize, used: usize) -> Result<bool> {
        self.meter.tick()?;
        if v == self.m.n {
            return Ok(used == self.k && self.leaf());
        }
        if used + (self.m.n - v) < self.k || !self.bound_allows(v, used) {
            return Ok(false);
        }
        if self.goal.needs_b() && !self.b_feasible(v, used) {
            return Ok(false);
        }
        for c in 0..(used + 1).min(self.k) {
            if self.class[c] & self.m.adj[v] != 0 {
                continue;
            }
            self.rgs[v] = c;
            self.class[c] |= 1 << v;
            self.size[c] += 1;
            let stop = self.run(v + 1, used.max(c + 1))?;
            self.size[c] -= 1;
            self.class[c] &= !(1 << v);
            if stop {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        !0
    } else {
        (1u64 << n) - 1
    }
}

fn ones(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            return None;
        }
        let t = mask.trailing_zeros() as usize;
        mask &= mask - 1;
        Some(t)
    })
}

fn search(m: &Masks, k: usize, goal: Goal, meter: &mut Meter) -> Result<Option<(u64, Vec<usize>)>> {
    let mut s = PartitionSearch::new(m, k, goal, meter);
    s.run(0, 0)?;
    Ok(s.best)
}

/// Extremal colouring sum over proper colourings using exactly χ(G) colours.
pub fn chi_sum(g: &Graph, direction: Direction, budget: &SearchBudget) -> Result<SumResult> {
    let m = Masks::new(g)?;
    let mut meter = Meter::new(budget);
    let chi = chromatic_inner(&m, &mut meter)?.k();
    let (value, rgs) =
        search(&m, chi, Goal::Sum(direction), &mut meter)?.ok_or(Error::NoColouring(chi))?;
    let witness = optimal_labeling(&Partition::from_rgs(&rgs), direction);
    Ok(SumResult {
        quantity: match direction {
            Direction::Min => Quantity::ChiSumMin,
            Direction::Max => Quantity::ChiSumMax,
        },
        value,
        witness,
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

fn b_chromatic_inner(m: &Masks, bound: usize, meter: &mut Meter) -> Result<Colouring> {
    for k in (1..=bound).rev() {
        if let Some((_, rgs)) = search(m, k, Goal::BExists, meter)? {
            return Ok(colouring_from_rgs(&rgs));
        }
    }
    // any χ-colouring is a b-colouring, so k = 1.. cannot all fail
    Err(Error::NoColouring(1))
}

/// Largest `k <= m(G)` admitting a b-colouring with `k` colours.
pub fn b_chromatic_number(g: &Graph, budget: &SearchBudget) -> Result<SumResult> {
    let m = Masks::new(g)?;
    let mut meter = Meter::new(budget);
    let witness = b_chromatic_inner(&m, m_bound(g), &mut meter)?;
    Ok(SumResult {
        quantity: Quantity::BChromatic,
        value: witness.k() as u64,
        witness,
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

/// Extremal colouring sum over b-colourings using exactly φ(G) colours.
pub fn b_sum(g: &Graph, direction: Direction, budget: &SearchBudget) -> Result<SumResult> {
    let m = Masks::new(g)?;
    let mut meter = Meter::new(budget);
    let phi = b_chromatic_inner(&m, m_bound(g), &mut meter)?.k();
    let (value, rgs) =
        search(&m, phi, Goal::BSum(direction), &mut meter)?.ok_or(Error::NoColouring(phi))?;
    // b-colourings are closed under relabelling, so the sorted labelling stays one
    let witness = optimal_labeling(&Partition::from_rgs(&rgs), direction);
    Ok(SumResult {
        quantity: match direction {
            Direction::Min => Quantity::BSumMin,
            Direction::Max => Quantity::BSumMax,
        },
        value,
        witness,
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}
