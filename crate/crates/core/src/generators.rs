//! Named constructors for the cycle-derived families.
//!
//! Vertex ids are assigned hub first, then the inner cycle `v_1..v_n`, then the
//! outer cycle `u_1..u_n`, then pendants, so witnesses are comparable across runs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    attach_pendants, cartesian_product, corona_k1, disjoint_union, join, Graph, RoleKind,
    VertexRole,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Wheel,
    DoubleWheel,
    Helm,
    ClosedHelm,
    Sunlet,
    Web,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 6] = [
        FamilyKind::Wheel,
        FamilyKind::DoubleWheel,
        FamilyKind::Helm,
        FamilyKind::ClosedHelm,
        FamilyKind::Sunlet,
        FamilyKind::Web,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::Wheel => "wheel",
            FamilyKind::DoubleWheel => "double_wheel",
            FamilyKind::Helm => "helm",
            FamilyKind::ClosedHelm => "closed_helm",
            FamilyKind::Sunlet => "sunlet",
            FamilyKind::Web => "web",
        }
    }

    pub fn min_n(self) -> usize {
        3
    }

    /// Vertex count of the family member with cycle parameter `n`.
    pub fn order(self, n: usize) -> usize {
        match self {
            FamilyKind::Wheel => n + 1,
            FamilyKind::DoubleWheel | FamilyKind::Helm | FamilyKind::ClosedHelm => 2 * n + 1,
            FamilyKind::Sunlet => 2 * n,
            FamilyKind::Web => 3 * n,
        }
    }

    pub fn build(self, n: usize) -> Result<Graph> {
        match self {
            FamilyKind::Wheel => wheel(n),
            FamilyKind::DoubleWheel => double_wheel(n),
            FamilyKind::Helm => helm(n),
            FamilyKind::ClosedHelm => closed_helm(n),
            FamilyKind::Sunlet => sunlet(n),
            FamilyKind::Web => web(n),
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

/// A family member, written `<kind>:<n>` on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Family {
    pub kind: FamilyKind,
    pub n: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Family> {
        check_n(kind, n)?;
        Ok(Family { kind, n })
    }

    pub fn build(&self) -> Result<Graph> {
        self.kind.build(self.n)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.kind, self.n)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, n) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected <kind>:<n>, got `{s}`")))?;
        let n = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad cycle parameter `{n}`")))?;
        Family::new(kind.parse()?, n)
    }
}

fn check_n(kind: FamilyKind, n: usize) -> Result<()> {
    if n < kind.min_n() {
        return Err(Error::InvalidParameter(format!(
            "{kind} needs n >= {}, got {n}",
            kind.min_n()
        )));
    }
    Ok(())
}

fn cycle_roles(role: RoleKind, n: usize) -> impl Iterator<Item = VertexRole> {
    (1..=n).map(move |i| VertexRole::new(role, i))
}

fn hub() -> VertexRole {
    VertexRole::new(RoleKind::Hub, 0)
}

pub fn wheel(n: usize) -> Result<Graph> {
    check_n(FamilyKind::Wheel, n)?;
    let g = join(&Graph::single_vertex(), &Graph::cycle(n)?);
    let roles = std::iter::once(hub())
        .chain(cycle_roles(RoleKind::InnerCycle, n))
        .collect();
    Ok(g.with_family(FamilyKind::Wheel, n, roles))
}

/// `2C_n + K_1`; the first cycle is tagged inner (`v_i`), the second outer (`u_i`).
pub fn double_wheel(n: usize) -> Result<Graph> {
    check_n(FamilyKind::DoubleWheel, n)?;
    let c = Graph::cycle(n)?;
    let g = join(&Graph::single_vertex(), &disjoint_union(&c, &c));
    let roles = std::iter::once(hub())
        .chain(cycle_roles(RoleKind::InnerCycle, n))
        .chain(cycle_roles(RoleKind::OuterCycle, n))
        .collect();
    Ok(g.with_family(FamilyKind::DoubleWheel, n, roles))
}

fn helm_graph(n: usize) -> Result<Graph> {
    let w = join(&Graph::single_vertex(), &Graph::cycle(n)?);
    let rim: Vec<usize> = (1..=n).collect();
    Ok(attach_pendants(&w, &rim))
}

/// Wheel with pendant `u_i` hanging off each rim vertex `v_i`.
pub fn helm(n: usize) -> Result<Graph> {
    check_n(FamilyKind::Helm, n)?;
    let roles = std::iter::once(hub())
        .chain(cycle_roles(RoleKind::InnerCycle, n))
        .chain(cycle_roles(RoleKind::Pendant, n))
        .collect();
    Ok(helm_graph(n)?.with_family(FamilyKind::Helm, n, roles))
}

/// Helm whose pendants are joined into an outer cycle `u_1 .. u_n`.
pub fn closed_helm(n: usize) -> Result<Graph> {
    check_n(FamilyKind::ClosedHelm, n)?;
    let outer = (0..n).map(|i| (n + 1 + i, n + 1 + (i + 1) % n));
    let g = helm_graph(n)?.with_extra_edges(outer);
    let roles = std::iter::once(hub())
        .chain(cycle_roles(RoleKind::InnerCycle, n))
        .chain(cycle_roles(RoleKind::OuterCycle, n))
        .collect();
    Ok(g.with_family(FamilyKind::ClosedHelm, n, roles))
}

/// `C_n ⊙ K_1`.
pub fn sunlet(n: usize) -> Result<Graph> {
    check_n(FamilyKind::Sunlet, n)?;
    let g = corona_k1(&Graph::cycle(n)?);
    let roles = cycle_roles(RoleKind::InnerCycle, n)
        .chain(cycle_roles(RoleKind::Pendant, n))
        .collect();
    Ok(g.with_family(FamilyKind::Sunlet, n, roles))
}

/// Prism `C_n □ P_2` (inner `v_i`, outer `u_i`) with pendant `w_i` on each `u_i`.
pub fn web(n: usize) -> Result<Graph> {
    check_n(FamilyKind::Web, n)?;
    let prism = cartesian_product(&Graph::cycle(n)?, &Graph::path(2));
    let outer: Vec<usize> = (n..2 * n).collect();
    let g = attach_pendants(&prism, &outer);
    let roles = cycle_roles(RoleKind::InnerCycle, n)
        .chain(cycle_roles(RoleKind::OuterCycle, n))
        .chain(cycle_roles(RoleKind::Pendant, n))
        .collect();
    Ok(g.with_family(FamilyKind::Web, n, roles))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted_degrees(g: &Graph) -> Vec<usize> {
        let mut d = g.degrees();
        d.sort_unstable();
        d
    }

    #[test]
    fn double_wheel_examples() {
        let g = double_wheel(4).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (9, 16));
        assert_eq!(double_wheel(3).unwrap().degree(0).unwrap(), 6);
    }

    #[test]
    fn helm_examples() {
        let g = helm(3).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (7, 9));
        let h4 = helm(4).unwrap();
        assert_eq!(h4.degrees().iter().filter(|&&d| d == 1).count(), 4);
    }

    #[test]
    fn closed_helm_examples() {
        let g = closed_helm(3).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (7, 12));
        let g5 = closed_helm(5).unwrap();
        let d = g5.degrees();
        assert_eq!(d[0], 5);
        assert!(d[1..=5].iter().all(|&x| x == 4));
        assert!(d[6..].iter().all(|&x| x == 3));
        assert_eq!(closed_helm(4).unwrap().n_vertices(), helm(4).unwrap().n_vertices());
    }

    #[test]
    fn sunlet_and_web_examples() {
        let s = sunlet(3).unwrap();
        assert_eq!((s.n_vertices(), s.n_edges()), (6, 6));
        assert_eq!(s.degrees().iter().filter(|&&d| d == 1).count(), 3);

        let w = web(3).unwrap();
        assert_eq!((w.n_vertices(), w.n_edges()), (9, 12));
        assert_eq!(web(4).unwrap().max_degree(), 4);
        assert_eq!(
            sorted_degrees(&web(4).unwrap()),
            [vec![1; 4], vec![3; 4], vec![4; 4]].concat()
        );
    }

    #[test]
    fn wheel_examples() {
        let w = wheel(4).unwrap();
        assert_eq!((w.n_vertices(), w.n_edges()), (5, 8));
        assert_eq!(wheel(3).unwrap().edges(), Graph::complete(4).edges());
    }

    #[test]
    fn rejects_small_n() {
        for kind in FamilyKind::ALL {
            assert!(matches!(kind.build(2), Err(Error::InvalidParameter(_))));
        }
    }

    #[test]
    fn family_spec_strings() {
        let f: Family = "helm:7".parse().unwrap();
        assert_eq!(f, Family { kind: FamilyKind::Helm, n: 7 });
        assert_eq!(f.to_string(), "helm:7");
        assert!("helm".parse::<Family>().is_err());
        assert!("gear:5".parse::<Family>().is_err());
        assert!("web:x".parse::<Family>().is_err());
        assert!("web:2".parse::<Family>().is_err());
    }

    #[test]
    fn role_counts_and_inner_cycle() {
        for kind in FamilyKind::ALL {
            for n in 3..=8 {
                let g = kind.build(n).unwrap();
                let roles = g.roles().unwrap();
                assert_eq!(roles.len(), g.n_vertices());
                assert_eq!(g.family(), Some((kind, n)));
                let inner: Vec<usize> = (0..g.n_vertices())
                    .filter(|&v| roles[v].role == RoleKind::InnerCycle)
                    .collect();
                assert_eq!(inner.len(), n);
                let sub = g.induced(&inner).unwrap();
                assert_eq!(sub.n_edges(), n);
                assert!(sub.is_connected() && sub.degrees().iter().all(|&d| d == 2));
                for (v, r) in roles.iter().enumerate() {
                    if r.role == RoleKind::Pendant {
                        assert_eq!(g.degree(v).unwrap(), 1);
                    }
                }
            }
        }
    }
}
