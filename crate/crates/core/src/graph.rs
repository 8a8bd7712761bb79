//! Simple undirected graphs with bitset adjacency rows.
//!
//! A [`Graph`] is the red graph of a two-coloring of `K_N`; its complement is
//! the blue graph. Every row is a fixed-width [`VertexSet`] so that common
//! neighborhoods reduce to word-wise `AND`.

use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {vertex} out of range for order {order}")]
    EndpointOutOfRange { vertex: usize, order: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
}

/// An undirected edge stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop edge at vertex {a}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn try_new(a: usize, b: usize) -> Result<Self, GraphError> {
        if a == b {
            return Err(GraphError::LoopEdge(a));
        }
        Ok(Edge::new(a, b))
    }

    pub fn contains(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint opposite to `x`, if `x` is an endpoint.
    pub fn other(&self, x: usize) -> Option<usize> {
        if self.u == x {
            Some(self.v)
        } else if self.v == x {
            Some(self.u)
        } else {
            None
        }
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[usize; 2]> for Edge {
    type Error = GraphError;
    fn try_from(p: [usize; 2]) -> Result<Self, Self::Error> {
        Edge::try_new(p[0], p[1])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

#[inline]
fn words_for(universe: usize) -> usize {
    universe.div_ceil(64)
}

/// A set of vertex indices below a fixed universe size.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet::new(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(universe);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    /// Builds a set from vertex indices; panics if any index is `>= universe`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(universe: usize, vertices: I) -> Self {
        let mut s = VertexSet::new(universe);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v >> 6] &= !(1u64 << (v & 63));
        }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && (self.words[v >> 6] >> (v & 63)) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `|self ∩ other|` without allocating.
    #[inline]
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitAnd for &VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(rhs);
        out
    }
}

impl BitOr for &VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(rhs);
        out
    }
}

impl Sub for &VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(rhs);
        out
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Immutable simple graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        if order > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(order));
        }
        Ok(Graph {
            order,
            rows: vec![VertexSet::new(order); order],
        })
    }

    pub fn complete(order: usize) -> Result<Self, GraphError> {
        Ok(Graph::empty(order)?.complement())
    }

    /// Builds a graph from an edge list; duplicate edges collapse.
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(order)?;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= order {
                    return Err(GraphError::EndpointOutOfRange { vertex: x, order });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            g.add_edge(a, b);
        }
        Ok(g)
    }

    /// Builds a graph whose edge `uv` (`u < v`) is present iff `adjacent(u, v)`.
    pub fn from_fn<F>(order: usize, mut adjacent: F) -> Result<Self, GraphError>
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut g = Graph::empty(order)?;
        for u in 0..order {
            for v in u + 1..order {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, a: usize, b: usize) {
        self.rows[a].insert(b);
        self.rows[b].insert(a);
    }

    #[inline]
    pub(crate) fn remove_edge(&mut self, a: usize, b: usize) {
        self.rows[a].remove(b);
        self.rows[b].remove(a);
    }

    /// Copy of `self` with edge `ab` added.
    pub fn with_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(a, b);
        g
    }

    /// Copy of `self` with edge `ab` removed.
    pub fn without_edge(&self, a: usize, b: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(a, b);
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Blue adjacency: distinct and not joined in `self`.
    #[inline]
    pub fn has_complement_edge(&self, u: usize, v: usize) -> bool {
        u != v && !self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Neighbors of `v` in the complement.
    pub fn complement_neighbors(&self, v: usize) -> VertexSet {
        let mut s = &self.vertices() - &self.rows[v];
        s.remove(v);
        s
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order)
    }

    /// Common neighborhood of all of `vs` (all vertices when `vs` is empty).
    pub fn common_neighbors(&self, vs: &[usize]) -> VertexSet {
        let mut s = self.vertices();
        for &v in vs {
            s.intersect_with(&self.rows[v]);
        }
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    #[inline]
    pub fn complement_degree(&self, v: usize) -> usize {
        self.order - 1 - self.degree(v)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degree of `v` inside the induced subgraph on `within`.
    pub fn degree_in(&self, v: usize, within: &VertexSet) -> usize {
        self.rows[v].intersection_len(within)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.order).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| Edge { u, v }))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let rows = (0..self.order)
            .map(|v| {
                let mut r = &full - &self.rows[v];
                r.remove(v);
                r
            })
            .collect();
        Graph {
            order: self.order,
            rows,
        }
    }

    /// Induced subgraph on `s`; the returned map sends new indices to old ones.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let map = s.to_vec();
        let mut back = vec![usize::MAX; self.order];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let mut g = Graph {
            order: map.len(),
            rows: vec![VertexSet::new(map.len()); map.len()],
        };
        for (i, &v) in map.iter().enumerate() {
            for w in self.rows[v].iter() {
                let j = back.get(w).copied().unwrap_or(usize::MAX);
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Induced subgraph of the complement on `s`.
    pub fn complement_induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let (g, map) = self.induced(s);
        (g.complement(), map)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order);
        let mut g = Graph::empty(self.order).expect("order already validated");
        for e in self.edges() {
            g.add_edge(perm[e.u], perm[e.v]);
        }
        g
    }

    /// Checks symmetry, loop-freeness and the row width.
    pub fn audit(&self) -> bool {
        self.rows.len() == self.order
            && (0..self.order).all(|u| {
                let row = &self.rows[u];
                row.universe() == self.order
                    && !row.contains(u)
                    && row.iter().all(|v| v < self.order && self.rows[v].contains(u))
            })
    }

    /// Bit-packed upper triangle, row-major over `(u, v)` with `u < v`.
    pub fn edge_mask_index(order: usize, u: usize, v: usize) -> usize {
        debug_assert!(u < v && v < order);
        u * (2 * order - u - 1) / 2 + (v - u - 1)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order)?;
        f.debug_list().entries(self.edges().map(|e| (e.u, e.v))).finish()?;
        write!(f, ")")
    }
}
