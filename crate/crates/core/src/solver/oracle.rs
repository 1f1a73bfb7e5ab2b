//! Exhaustive reference solver.
//!
//! Walks every restricted-growth string and rejects a partial string only when
//! it is already improper. Leaves are judged with the predicates in
//! [`crate::colouring`], never with the optimised solver's bitmask code.

use crate::colouring::{colouring_sum, is_b_colouring, is_proper, optimal_labeling, Colouring, Partition};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{Meter, Quantity, SearchBudget, SumResult};

struct Enumerator<'a, F: FnMut(&[usize]) -> bool> {
    g: &'a Graph,
    k: usize,
    rgs: Vec<usize>,
    visit: F,
    meter: &'a mut Meter,
}

impl<F: FnMut(&[usize]) -> bool> Enumerator<'_, F> {
    /// Returns `Ok(true)` when `visit` asked to stop.
    fn walk(&mut self, v: usize, blocks: usize) -> Result<bool> {
        self.meter.tick()?;
        let n = self.g.n_vertices();
        if v == n {
            return Ok(blocks == self.k && (self.visit)(&self.rgs));
        }
        for b in 0..(blocks + 1).min(self.k) {
            let clash = (0..v).any(|u| self.rgs[u] == b && self.g.has_edge(u, v));
            if clash {
                continue;
            }
            self.rgs[v] = b;
            if self.walk(v + 1, blocks.max(b + 1))? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Calls `visit` on every proper partition into exactly `k` classes, in
/// lexicographic order, until it returns `true`.
fn each_proper_partition<F>(g: &Graph, k: usize, meter: &mut Meter, visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut e = Enumerator {
        g,
        k,
        rgs: vec![0; g.n_vertices()],
        visit,
        meter,
    };
    e.walk(0, 0)?;
    Ok(())
}

fn first_with<P>(g: &Graph, k: usize, meter: &mut Meter, accept: P) -> Result<Option<Colouring>>
where
    P: Fn(&Colouring) -> bool,
{
    let mut found = None;
    each_proper_partition(g, k, meter, |rgs| {
        let c = Colouring::new(rgs.iter().map(|&b| b + 1).collect()).unwrap();
        if accept(&c) {
            found = Some(c);
            true
        } else {
            false
        }
    })?;
    Ok(found)
}

/// Brute-force answer for `quantity`.
///
/// For the four sum quantities `k` is the exact number of colours. For `chi`
/// it is the largest colour count tried (the smallest feasible count in `1..=k`
/// is returned), and for `b_chromatic` the largest feasible count in `1..=k`
/// is returned.
pub fn brute_force_oracle(
    g: &Graph,
    quantity: Quantity,
    k: usize,
    budget: &SearchBudget,
) -> Result<SumResult> {
    if g.n_vertices() == 0 {
        return Err(Error::InvalidParameter("graph has no vertices".into()));
    }
    let mut meter = Meter::new(budget);
    let b_only = quantity.is_b_family();
    let accept = |c: &Colouring| is_proper(g, c) && (!b_only || is_b_colouring(g, c));

    let (value, witness) = match quantity.direction() {
        None => {
            let counts: Vec<usize> = match quantity {
                Quantity::Chi => (1..=k).collect(),
                _ => (1..=k).rev().collect(),
            };
            let mut hit = None;
            for kk in counts {
                if let Some(c) = first_with(g, kk, &mut meter, accept)? {
                    hit = Some(c);
                    break;
                }
            }
            let c = hit.ok_or(Error::NoColouring(k))?;
            (c.k() as u64, c)
        }
        Some(dir) => {
            let mut best: Option<(u64, Colouring)> = None;
            each_proper_partition(g, k, &mut meter, |rgs| {
                let raw = Colouring::new(rgs.iter().map(|&b| b + 1).collect()).unwrap();
                if !accept(&raw) {
                    return false;
                }
                let labelled = optimal_labeling(&Partition::from_rgs(rgs), dir);
                let s = colouring_sum(&labelled);
                let better = match &best {
                    None => true,
                    Some((b, _)) => match dir {
                        crate::colouring::Direction::Min => s < *b,
                        crate::colouring::Direction::Max => s > *b,
                    },
                };
                if better {
                    best = Some((s, labelled));
                }
                false
            })?;
            best.ok_or(Error::NoColouring(k))?
        }
    };
    Ok(SumResult {
        quantity,
        value,
        witness,
        nodes_explored: meter.nodes(),
        elapsed: meter.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::wheel;

    fn oracle(g: &Graph, q: Quantity, k: usize) -> u64 {
        let r = brute_force_oracle(g, q, k, &SearchBudget::default()).unwrap();
        r.validate(g).unwrap();
        r.value
    }

    #[test]
    fn examples() {
        let c5 = Graph::cycle(5).unwrap();
        let r = brute_force_oracle(&c5, Quantity::ChiSumMin, 3, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 9);
        assert_eq!(r.witness.theta().0, vec![2, 2, 1]);
        assert_eq!(oracle(&Graph::complete(3), Quantity::BSumMin, 3), 6);
        let w = wheel(4).unwrap();
        let r = brute_force_oracle(&w, Quantity::ChiSumMin, 3, &SearchBudget::default()).unwrap();
        assert_eq!(r.value, 9);
        assert_eq!(r.witness.theta().0, vec![2, 2, 1]);
    }

    #[test]
    fn colour_counts() {
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(oracle(&c5, Quantity::Chi, 5), 3);
        assert_eq!(oracle(&c5, Quantity::BChromatic, 3), 3);
        assert_eq!(oracle(&Graph::path(4), Quantity::BChromatic, 3), 2);
    }

    #[test]
    fn infeasible_k() {
        let k4 = Graph::complete(4);
        assert!(matches!(
            brute_force_oracle(&k4, Quantity::ChiSumMin, 3, &SearchBudget::default()),
            Err(Error::NoColouring(3))
        ));
        assert!(brute_force_oracle(&k4, Quantity::Chi, 3, &SearchBudget::default()).is_err());
    }
}
