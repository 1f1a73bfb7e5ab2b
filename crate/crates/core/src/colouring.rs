//! Colourings, colour-class partitions and the weighted colouring sum.
//!
//! Colour indices are 1-based: the sum weights colour `i` by `i`. A
//! [`Colouring`] never has an empty colour class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Which extremum of the colouring sum is wanted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Min,
    Max,
}

/// Total vertex → colour map using every colour in `1..=k`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColouring", into = "RawColouring")]
pub struct Colouring {
    colors: Vec<usize>,
    k: usize,
}

#[derive(Serialize, Deserialize)]
struct RawColouring {
    k: usize,
    colors: Vec<usize>,
}

impl TryFrom<RawColouring> for Colouring {
    type Error = Error;

    fn try_from(raw: RawColouring) -> Result<Self> {
        let c = Colouring::new(raw.colors)?;
        if c.k != raw.k {
            return Err(Error::InvalidColouring(format!(
                "declared k={} but colours use 1..={}",
                raw.k, c.k
            )));
        }
        Ok(c)
    }
}

impl From<Colouring> for RawColouring {
    fn from(c: Colouring) -> Self {
        RawColouring {
            k: c.k,
            colors: c.colors,
        }
    }
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Colouring(k={}, {:?})", self.k, self.colors)
    }
}

impl Colouring {
    /// `colors[v]` is the 1-based colour of vertex `v`; `k` is the largest colour.
    pub fn new(colors: Vec<usize>) -> Result<Colouring> {
        if colors.contains(&0) {
            return Err(Error::InvalidColouring("colour indices start at 1".into()));
        }
        let k = colors.iter().copied().max().unwrap_or(0);
        let mut used = vec![false; k];
        for &c in &colors {
            used[c - 1] = true;
        }
        if let Some(missing) = used.iter().position(|u| !u) {
            return Err(Error::InvalidColouring(format!(
                "colour {} is never used",
                missing + 1
            )));
        }
        Ok(Colouring { colors, k })
    }

    /// Colours classes in order: `classes[i]` receives colour `i + 1`.
    pub fn from_classes(n: usize, classes: &[Vec<Vertex>]) -> Result<Colouring> {
        let p = Partition::new(n, classes.to_vec())?;
        Ok(p.colouring_in_order())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n_vertices(&self) -> usize {
        self.colors.len()
    }

    pub fn colour(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn colours(&self) -> &[usize] {
        &self.colors
    }

    pub fn theta(&self) -> ThetaVector {
        let mut t = vec![0; self.k];
        for &c in &self.colors {
            t[c - 1] += 1;
        }
        ThetaVector(t)
    }

    pub fn class(&self, colour: usize) -> Vec<Vertex> {
        (0..self.colors.len())
            .filter(|&v| self.colors[v] == colour)
            .collect()
    }

    pub fn partition(&self) -> Partition {
        let classes = (1..=self.k).map(|c| self.class(c)).collect();
        Partition { classes }
    }
}

/// Class sizes `θ(c_1) .. θ(c_k)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ThetaVector(pub Vec<usize>);

impl ThetaVector {
    pub fn weighted_sum(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &t)| (i as u64 + 1) * t as u64)
            .sum()
    }
}

/// Ordered list of disjoint non-empty classes covering `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    classes: Vec<Vec<Vertex>>,
}

impl Partition {
    pub fn new(n: usize, mut classes: Vec<Vec<Vertex>>) -> Result<Partition> {
        let mut seen = vec![false; n];
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::InvalidColouring("empty colour class".into()));
            }
            class.sort_unstable();
            for &v in class.iter() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidColouring(format!(
                        "vertex {v} appears in two classes"
                    )));
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidColouring(format!("vertex {v} is uncoloured")));
        }
        Ok(Partition { classes })
    }

    /// Classes from a restricted-growth string (`rgs[v]` is the 0-based block of `v`).
    pub fn from_rgs(rgs: &[usize]) -> Partition {
        let k = rgs.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut classes = vec![Vec::new(); k];
        for (v, &b) in rgs.iter().enumerate() {
            classes[b].push(v);
        }
        classes.retain(|c| !c.is_empty());
        Partition { classes }
    }

    pub fn classes(&self) -> &[Vec<Vertex>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn n_vertices(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.classes
            .iter()
            .all(|c| g.is_independent(c).unwrap_or(false))
    }

    fn colouring_in_order(&self) -> Colouring {
        let mut colors = vec![0; self.n_vertices()];
        for (i, class) in self.classes.iter().enumerate() {
            for &v in class {
                colors[v] = i + 1;
            }
        }
        Colouring {
            colors,
            k: self.classes.len(),
        }
    }
}

pub fn is_proper(g: &Graph, c: &Colouring) -> bool {
    c.n_vertices() == g.n_vertices() && g.edges().iter().all(|&(a, b)| c.colour(a) != c.colour(b))
}

pub fn colouring_sum(c: &Colouring) -> u64 {
    c.theta().weighted_sum()
}

/// Labels the classes so the colouring sum is extremal: for `Min` larger
/// classes get smaller colours, for `Max` the reverse. Equal sizes are ordered
/// by their smallest vertex.
pub fn optimal_labeling(p: &Partition, direction: Direction) -> Colouring {
    let mut order: Vec<&Vec<Vertex>> = p.classes.iter().collect();
    order.sort_by(|a, b| {
        let by_size = match direction {
            Direction::Min => b.len().cmp(&a.len()),
            Direction::Max => a.len().cmp(&b.len()),
        };
        by_size.then(a[0].cmp(&b[0]))
    });
    let mut colors = vec![0; p.n_vertices()];
    for (i, class) in order.iter().enumerate() {
        for &v in class.iter() {
            colors[v] = i + 1;
        }
    }
    Colouring {
        colors,
        k: order.len(),
    }
}

/// Sum achieved by [`optimal_labeling`] for the given class sizes.
pub(crate) fn labelled_sum(sizes: &[usize], direction: Direction) -> u64 {
    let mut s = sizes.to_vec();
    match direction {
        Direction::Min => s.sort_unstable_by(|a, b| b.cmp(a)),
        Direction::Max => s.sort_unstable(),
    }
    ThetaVector(s).weighted_sum()
}

/// `v` sees every colour other than its own among its neighbours.
pub fn is_b_vertex(g: &Graph, c: &Colouring, v: Vertex) -> bool {
    let mut seen = vec![false; c.k() + 1];
    for u in g.adj(v).iter() {
        seen[c.colour(u)] = true;
    }
    let own = c.colour(v);
    (1..=c.k()).all(|col| col == own || seen[col])
}

pub fn is_b_colouring(g: &Graph, c: &Colouring) -> bool {
    if !is_proper(g, c) {
        return false;
    }
    let mut has_b = vec![false; c.k() + 1];
    for v in 0..g.n_vertices() {
        if !has_b[c.colour(v)] && is_b_vertex(g, c, v) {
            has_b[c.colour(v)] = true;
        }
    }
    has_b[1..].iter().all(|&b| b)
}
