//! Simple undirected graphs on at most [`HARD_MAX_N`] vertices.

use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::HARD_MAX_N;

/// A set of vertices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= HARD_MAX_N);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        core::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {n} vertices, above the limit of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A finite simple undirected graph with vertices `0..n`.
///
/// Only closed neighbourhoods are stored; `N(v)` is `N[v]` minus `v`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    closed: Vec<VertexSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > HARD_MAX_N {
            return Err(GraphError::TooManyVertices { n, max: HARD_MAX_N });
        }
        Ok(Graph {
            closed: (0..n).map(VertexSet::singleton).collect(),
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds the edge `uv`, rejecting loops, repeats and unknown vertices.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        self.closed[u].insert(v);
        self.closed[v].insert(u);
        Ok(())
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.closed[u].insert(v);
        self.closed[v].insert(u);
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.closed.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.closed.iter().map(|c| c.len() - 1).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.closed[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.closed[v].len() - 1
    }

    /// Open neighbourhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.closed[v];
        s.remove(v);
        s
    }

    /// Closed neighbourhood `N[v]`.
    #[inline]
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.closed[v]
    }

    pub fn closed_neighborhoods(&self) -> &[VertexSet] {
        &self.closed
    }

    /// `N[S]`, the union of `N[v]` over `v` in `set`.
    pub fn closed_neighborhood_of(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.closed[v]))
    }

    pub fn is_dominating(&self, set: VertexSet) -> bool {
        self.closed_neighborhood_of(set) == self.vertices()
    }

    /// Vertices reachable from `start`.
    pub fn reachable_from(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = VertexSet(self.closed_neighborhood_of(frontier).0 & !seen.0);
            seen = seen.union(next);
            frontier = next;
        }
        seen
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.reachable_from(0) == self.vertices()
    }

    /// Subgraph induced on `vertices`, relabelled in increasing order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut position = [usize::MAX; HARD_MAX_N];
        for (i, &v) in vertices.iter().enumerate() {
            position[v] = i;
        }
        let mut sub = Graph {
            closed: (0..vertices.len()).map(VertexSet::singleton).collect(),
        };
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v).iter() {
                let j = position[w];
                if j != usize::MAX && j > i {
                    sub.add_edge_unchecked(i, j);
                }
            }
        }
        sub
    }

    /// Connected components ordered by their smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let mut remaining = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = remaining.iter().next() {
            let part = self.reachable_from(v);
            remaining = VertexSet(remaining.0 & !part.0);
            let vertices: Vec<usize> = part.iter().collect();
            out.push(Component {
                graph: self.induced_subgraph(&vertices),
                vertices,
            });
        }
        out
    }

    /// Degree counts for the coefficient identities; `gamma` comes from a search.
    pub fn stats_with_gamma(&self, gamma: usize) -> CoeffStats {
        let n = self.n();
        let mut stats = CoeffStats {
            n,
            gamma,
            ..CoeffStats::default()
        };
        for v in 0..n {
            match self.degree(v) {
                0 => stats.r += 1,
                1 => {
                    stats.t += 1;
                    let w = self.neighbors(v).iter().next().unwrap_or(v);
                    if self.degree(w) == 1 && v < w {
                        stats.s += 1;
                    }
                }
                _ => {}
            }
            if self.degree(v) + 1 == n {
                stats.universal += 1;
            }
        }
        stats
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let offset = self.n();
        let mut g = Graph::empty(offset + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(u + offset, v + offset);
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        let offset = self.n();
        for u in 0..self.n() {
            for v in 0..other.n() {
                g.add_edge_unchecked(u, offset + v);
            }
        }
        Ok(g)
    }

    /// Corona `self ∘ other`: vertex `i` of `self` is joined to every vertex
    /// of the `i`-th copy of `other`. Copy `i` occupies
    /// `n + i*m .. n + (i+1)*m` where `m = other.n()`.
    pub fn corona(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n();
        let m = other.n();
        let mut g = Graph::empty(n + n * m)?;
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for i in 0..n {
            let base = n + i * m;
            for (u, v) in other.edges() {
                g.add_edge_unchecked(base + u, base + v);
            }
            for u in 0..m {
                g.add_edge_unchecked(i, base + u);
            }
        }
        Ok(g)
    }

    /// One pendant vertex per vertex; pendant of `i` is `n + i`.
    pub fn corona_k1(&self) -> Result<Graph, GraphError> {
        self.corona(&Graph::empty(1)?)
    }

    pub fn path(n: usize) -> Result<Graph, GraphError> {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::path(n)?;
        g.add_edge(n - 1, 0)?;
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(n)?;
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        Ok(g)
    }

    pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph, GraphError> {
        Graph::empty(m)?.join(&Graph::empty(n)?)
    }

    /// `K_{1,n}`: centre `0` and `n` leaves.
    pub fn star(n: usize) -> Result<Graph, GraphError> {
        Graph::complete_bipartite(1, n)
    }

    /// `W_n = C_{n-1} ∨ K_1` on `n` vertices; the hub is vertex `n - 1`.
    pub fn wheel(n: usize) -> Result<Graph, GraphError> {
        Graph::cycle(n - 1)?.join(&Graph::empty(1)?)
    }
}

/// A connected component together with its original vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub graph: Graph,
    /// `vertices[i]` is the original label of component vertex `i`.
    pub vertices: Vec<usize>,
}

/// Structural counts used by the coefficient identities.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CoeffStats {
    pub n: usize,
    /// Isolated vertices.
    pub r: usize,
    /// Vertices of degree one.
    pub t: usize,
    /// Components isomorphic to `K_2`.
    pub s: usize,
    /// Vertices of degree `n - 1`.
    pub universal: usize,
    /// Domination number (0 for the empty graph).
    pub gamma: usize,
}
