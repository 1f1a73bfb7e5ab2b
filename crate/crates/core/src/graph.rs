//! Simple undirected graphs and the binary operators the families are built from.
//!
//! A [`Graph`] is immutable once built: every operator returns a fresh value.
//! Vertex ids are dense `0..n`. Adjacency is kept both as a sorted edge list and
//! as one [`VertexSet`] bitset per vertex.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generators::FamilyKind;

pub type Vertex = usize;

/// Fixed-capacity bitset over vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: Vec<u64>,
}

impl VertexSet {
    pub fn with_capacity(n: usize) -> Self {
        VertexSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn from_iter_with_capacity<I: IntoIterator<Item = Vertex>>(n: usize, it: I) -> Self {
        let mut s = Self::with_capacity(n);
        for v in it {
            s.insert(v);
        }
        s
    }

    pub fn insert(&mut self, v: Vertex) {
        let w = v / 64;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << (v % 64);
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.words
            .get(v / 64)
            .is_some_and(|w| w & (1 << (v % 64)) != 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + t)
            })
        })
    }

    /// Low 64 bits; only meaningful when every member is `< 64`.
    pub fn as_u64(&self) -> u64 {
        self.words.first().copied().unwrap_or(0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Position of a vertex inside a generated family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
#[serde(rename_all = "snake_case")]
pub enum RoleKind {
    Hub,
    InnerCycle,
    OuterCycle,
    Pendant,
}

/// Role plus the 1-based index on its cycle (`v_i`, `u_i`, `w_i`). Hubs use index 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexRole {
    pub role: RoleKind,
    pub index: usize,
}

impl VertexRole {
    pub fn new(role: RoleKind, index: usize) -> Self {
        VertexRole { role, index }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adjacency: Vec<VertexSet>,
    family: Option<(FamilyKind, usize)>,
    roles: Option<Vec<VertexRole>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        list.dedup();
        let mut adjacency = vec![VertexSet::with_capacity(n); n];
        for &(a, b) in &list {
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        Ok(Graph {
            n,
            edges: list,
            adjacency,
            family: None,
            roles: None,
        })
    }

    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, []).expect("edgeless graph is always valid")
    }

    pub fn single_vertex() -> Graph {
        Graph::empty(1)
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::from_edges(n, edges).expect("complete graph is always valid")
    }

    pub fn path(n: usize) -> Graph {
        let edges = (1..n).map(|i| (i - 1, i));
        Graph::from_edges(n, edges).expect("path is always valid")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub(crate) fn with_family(mut self, kind: FamilyKind, n: usize, roles: Vec<VertexRole>) -> Graph {
        debug_assert_eq!(roles.len(), self.n);
        self.family = Some((kind, n));
        self.roles = Some(roles);
        self
    }

    pub(crate) fn with_extra_edges<I>(&self, extra: I) -> Graph
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        Graph::from_edges(self.n, self.edges.iter().copied().chain(extra))
            .expect("extra edges must stay in range")
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(low, high)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn family(&self) -> Option<(FamilyKind, usize)> {
        self.family
    }

    pub fn roles(&self) -> Option<&[VertexRole]> {
        self.roles.as_deref()
    }

    pub fn role(&self, v: Vertex) -> Option<VertexRole> {
        self.roles.as_ref().and_then(|r| r.get(v).copied())
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn neighbours(&self, v: Vertex) -> Result<&VertexSet> {
        self.check(v)?;
        Ok(&self.adjacency[v])
    }

    /// Panics on an out-of-range vertex; internal hot paths use this.
    pub(crate) fn adj(&self, v: Vertex) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && self.adjacency[a].contains(b)
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        self.check(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(VertexSet::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for u in self.adjacency[v].iter() {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    queue.push_back(u);
                }
            }
        }
        count == self.n
    }

    pub fn is_independent(&self, set: &[Vertex]) -> Result<bool> {
        for &v in set {
            self.check(v)?;
        }
        Ok(set
            .iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| !self.has_edge(a, b))))
    }

    /// Subgraph induced by `vertices`, relabelled to `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Graph> {
        for &v in vertices {
            self.check(v)?;
        }
        let mut edges = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(vertices.len(), edges)
    }
}

/// Disjoint union; `h`'s vertices are shifted by `|V(g)|`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n;
    let edges = g
        .edges
        .iter()
        .copied()
        .chain(h.edges.iter().map(|&(a, b)| (a + off, b + off)));
    Graph::from_edges(g.n + h.n, edges).expect("union of valid graphs is valid")
}

/// Join `g + h`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let off = g.n;
    let cross = (0..g.n).flat_map(|a| (0..h.n).map(move |b| (a, b + off)));
    disjoint_union(g, h).with_extra_edges(cross)
}

/// Attaches a new pendant vertex to each listed vertex; pendants get ids
/// `n, n+1, ...` in the order given.
pub(crate) fn attach_pendants(g: &Graph, at: &[Vertex]) -> Graph {
    let n = g.n;
    let edges = g
        .edges
        .iter()
        .copied()
        .chain(at.iter().enumerate().map(|(i, &v)| (v, n + i)));
    Graph::from_edges(n + at.len(), edges).expect("pendant attachment stays in range")
}

/// Corona `g ⊙ K_1`: one pendant per vertex, pendant of `v` has id `|V(g)| + v`.
pub fn corona_k1(g: &Graph) -> Graph {
    let all: Vec<Vertex> = (0..g.n).collect();
    attach_pendants(g, &all)
}

/// Cartesian product `g □ h`. Vertex `(a, b)` gets id `b * |V(g)| + a`, so each
/// copy of `g` occupies a contiguous block.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Graph {
    let ng = g.n;
    let mut edges = Vec::with_capacity(g.n_edges() * h.n + h.n_edges() * g.n);
    for b in 0..h.n {
        for &(x, y) in &g.edges {
            edges.push((b * ng + x, b * ng + y));
        }
    }
    for &(x, y) in &h.edges {
        for a in 0..ng {
            edges.push((x * ng + a, y * ng + a));
        }
    }
    Graph::from_edges(ng * h.n, edges).expect("product of valid graphs is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_bipartite(g: &Graph) -> bool {
        let mut side = vec![None; g.n_vertices()];
        for s in 0..g.n_vertices() {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                let sv = side[v].unwrap();
                for u in g.adj(v).iter() {
                    match side[u] {
                        None => {
                            side[u] = Some(!sv);
                            q.push_back(u);
                        }
                        Some(su) if su == sv => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    #[test]
    fn cycle_basics() {
        let c3 = Graph::cycle(3).unwrap();
        assert_eq!((c3.n_vertices(), c3.n_edges()), (3, 3));
        assert_eq!(Graph::cycle(4).unwrap().degrees(), vec![2, 2, 2, 2]);
        assert!(is_bipartite(&Graph::cycle(6).unwrap()));
        assert!(!is_bipartite(&c3));
        assert!(matches!(Graph::cycle(2), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn join_examples() {
        let w = join(&Graph::single_vertex(), &Graph::cycle(4).unwrap());
        assert_eq!(w.n_vertices(), 5);
        assert_eq!(w.degree(0).unwrap(), 4);

        let e = join(&Graph::empty(1), &Graph::empty(1));
        assert_eq!(e.edges(), &[(0, 1)]);

        let c3 = Graph::cycle(3).unwrap();
        let dw = join(&disjoint_union(&c3, &c3), &Graph::single_vertex());
        assert_eq!((dw.n_vertices(), dw.n_edges()), (7, 12));
    }

    #[test]
    fn corona_examples() {
        let s3 = corona_k1(&Graph::cycle(3).unwrap());
        assert_eq!((s3.n_vertices(), s3.n_edges()), (6, 6));
        assert_eq!(corona_k1(&Graph::single_vertex()).n_edges(), 1);
        let mut d = corona_k1(&Graph::cycle(5).unwrap()).degrees();
        d.sort_unstable();
        assert_eq!(d, vec![1, 1, 1, 1, 1, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn product_examples() {
        let prism = cartesian_product(&Graph::cycle(3).unwrap(), &Graph::path(2));
        assert_eq!((prism.n_vertices(), prism.n_edges()), (6, 9));

        let h = Graph::cycle(5).unwrap();
        let p = cartesian_product(&Graph::single_vertex(), &h);
        // identity: with a single-vertex left factor the ids line up exactly
        assert_eq!(p.edges(), h.edges());

        let cube = cartesian_product(&Graph::cycle(4).unwrap(), &Graph::path(2));
        assert!(cube.degrees().iter().all(|&d| d == 3));
        assert!(is_bipartite(&cube));
    }

    #[test]
    fn queries() {
        let w = join(&Graph::single_vertex(), &Graph::cycle(6).unwrap());
        assert_eq!(w.max_degree(), 6);
        let c4 = Graph::cycle(4).unwrap();
        assert!(c4.is_independent(&[0, 2]).unwrap());
        assert!(!c4.is_independent(&[0, 1]).unwrap());
        let c3 = Graph::cycle(3).unwrap();
        assert!(!disjoint_union(&c3, &c3).is_connected());
        assert!(matches!(c4.degree(4), Err(Error::VertexOutOfRange { .. })));
        assert!(c4.is_independent(&[9]).is_err());
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        let g = Graph::from_edges(3, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.n_edges(), 1);
    }

    #[test]
    fn vertex_set_ops() {
        let s = VertexSet::from_iter_with_capacity(130, [0, 5, 64, 129]);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 5, 64, 129]);
        assert_eq!(s.len(), 4);
        assert!(s.contains(64) && !s.contains(63));
        assert!(!s.contains(1000));
    }
}
