//! Maximum cardinality matching in general graphs.
//!
//! [`maximum_matching`] is Edmonds' blossom algorithm in its `O(V^3)`
//! BFS formulation: a greedy pass seeds the matching, then each exposed
//! vertex (ascending) grows an alternating tree, shrinking odd cycles into
//! their base vertex until an augmenting path is found or the tree is
//! exhausted. [`brute_force_maximum_matching`] is the exhaustive oracle used
//! in tests.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, VertexSet};

/// Largest order accepted by the exhaustive oracle.
pub const ORACLE_MAX_ORDER: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("order {0} too large for the brute-force oracle (max {ORACLE_MAX_ORDER})")]
    OrderTooLargeForOracle(usize),
}

/// A set of pairwise vertex-disjoint edges, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new() -> Self {
        Matching::default()
    }

    /// Wraps an edge list, sorting it. Does not validate disjointness.
    pub fn from_edges(mut edges: Vec<Edge>) -> Self {
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }

    pub fn push(&mut self, e: Edge) {
        let at = self.edges.partition_point(|x| *x < e);
        self.edges.insert(at, e);
    }

    /// Keeps the first `k` edges.
    pub fn truncate(&mut self, k: usize) {
        self.edges.truncate(k);
    }

    /// Covered vertices over a universe of size `order`.
    pub fn vertex_set(&self, order: usize) -> VertexSet {
        VertexSet::from_vertices(order, self.edges.iter().flat_map(|e| [e.u, e.v]))
    }

    pub fn covers(&self, v: usize) -> bool {
        self.edges.iter().any(|e| e.contains(v))
    }

    /// Translates indices through `map` (typically the map of an induced subgraph).
    pub fn mapped(&self, map: &[usize]) -> Matching {
        Matching::from_edges(self.edges.iter().map(|e| Edge::new(map[e.u], map[e.v])).collect())
    }

    pub fn is_disjoint(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges.iter().all(|e| seen.insert(e.u) && seen.insert(e.v))
    }

    /// Disjoint, and every edge present in `g` (or in its complement when `blue`).
    pub fn is_valid_in(&self, g: &Graph, blue: bool) -> bool {
        self.is_disjoint()
            && self.edges.iter().all(|e| {
                e.v < g.order()
                    && if blue {
                        g.has_complement_edge(e.u, e.v)
                    } else {
                        g.has_edge(e.u, e.v)
                    }
            })
    }
}

const NONE: usize = usize::MAX;

struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn greedy(&mut self) {
        for u in 0..self.g.order() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(v) = self.g.neighbors(u).iter().find(|&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
            }
        }
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the exposed endpoint of
    /// an augmenting path if one exists.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let g = self.g;
            for to in g.neighbors(v).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Matching {
        self.greedy();
        for v in 0..self.g.order() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        let edges = (0..self.g.order())
            .filter(|&v| self.mate[v] != NONE && v < self.mate[v])
            .map(|v| Edge::new(v, self.mate[v]))
            .collect();
        Matching::from_edges(edges)
    }
}

/// A maximum cardinality matching of `g`. Deterministic for a given input.
pub fn maximum_matching(g: &Graph) -> Matching {
    Blossom::new(g).run()
}

/// A matching with exactly `k` edges, if `g` has one.
pub fn matching_of_size(g: &Graph, k: usize) -> Option<Matching> {
    if k == 0 {
        return Some(Matching::new());
    }
    if 2 * k > g.order() {
        return None;
    }
    let mut m = maximum_matching(g);
    if m.len() < k {
        return None;
    }
    m.truncate(k);
    Some(m)
}

/// Exhaustive maximum matching for `order <= 16`.
pub fn brute_force_maximum_matching(g: &Graph) -> Result<Matching, MatchingError> {
    let n = g.order();
    if n > ORACLE_MAX_ORDER {
        return Err(MatchingError::OrderTooLargeForOracle(n));
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();

    struct Search<'a> {
        adj: &'a [u32],
        current: Vec<Edge>,
        best: Vec<Edge>,
    }

    impl Search<'_> {
        fn go(&mut self, free: u32) {
            // vertices that still have a free neighbour
            let live = (0..self.adj.len())
                .filter(|&v| free >> v & 1 == 1 && self.adj[v] & free != 0)
                .count();
            if self.current.len() + live / 2 <= self.best.len() {
                return;
            }
            let v = (0..self.adj.len())
                .find(|&v| free >> v & 1 == 1 && self.adj[v] & free != 0)
                .expect("live > 0 here");
            let rest = free & !(1 << v);
            let mut cand = self.adj[v] & rest;
            while cand != 0 {
                let w = cand.trailing_zeros() as usize;
                cand &= cand - 1;
                self.current.push(Edge::new(v, w));
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
                self.go(rest & !(1 << w));
                self.current.pop();
            }
            self.go(rest);
        }
    }

    let mut s = Search {
        adj: &adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    s.go((1u32 << n) - 1);
    Ok(Matching::from_edges(s.best))
}

/// A system of distinct representatives for `sets`, via augmenting paths.
///
/// Each set is tried in order and its members in ascending order, so the
/// result is deterministic. Returns the chosen representative per set.
pub fn distinct_representatives(sets: &[VertexSet]) -> Option<Vec<usize>> {
    let universe = sets.iter().map(VertexSet::universe).max().unwrap_or(0);
    let mut owner = vec![NONE; universe];
    let mut choice = vec![NONE; sets.len()];

    fn try_assign(i: usize, sets: &[VertexSet], owner: &mut [usize], choice: &mut [usize], seen: &mut [bool]) -> bool {
        for x in sets[i].iter() {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            if owner[x] == NONE || try_assign(owner[x], sets, owner, choice, seen) {
                owner[x] = i;
                choice[i] = x;
                return true;
            }
        }
        false
    }

    for i in 0..sets.len() {
        let mut seen = vec![false; universe];
        if !try_assign(i, sets, &mut owner, &mut choice, &mut seen) {
            return None;
        }
    }
    Some(choice)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    #[test]
    fn small_known_sizes() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(maximum_matching(&p4).len(), 2);
        assert_eq!(maximum_matching(&cycle(5)).len(), 2);
        assert_eq!(maximum_matching(&petersen()).len(), 5);
        assert_eq!(brute_force_maximum_matching(&petersen()).unwrap().len(), 5);
        assert_eq!(
            brute_force_maximum_matching(&Graph::complete(6).unwrap())
                .unwrap()
                .len(),
            3
        );
        assert_eq!(brute_force_maximum_matching(&cycle(7)).unwrap().len(), 3);
    }

    #[test]
    fn blossom_needed() {
        // greedy takes 0-1 and 2-3 first, leaving 4 and 5 exposed around an odd cycle
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 5)]).unwrap();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 3);
        assert!(m.is_valid_in(&g, false));
    }

    #[test]
    fn of_size() {
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(matching_of_size(&k4, 2).unwrap().len(), 2);
        let star = Graph::from_edges(6, (1..6).map(|i| (0, i))).unwrap();
        assert!(matching_of_size(&star, 2).is_none());
        assert_eq!(matching_of_size(&star, 0), Some(Matching::new()));
    }

    #[test]
    fn oracle_refuses_large() {
        let g = Graph::empty(17).unwrap();
        assert_eq!(
            brute_force_maximum_matching(&g),
            Err(MatchingError::OrderTooLargeForOracle(17))
        );
    }

    #[test]
    fn sdr_basic() {
        let s = |v: &[usize]| VertexSet::from_vertices(5, v.iter().copied());
        assert_eq!(
            distinct_representatives(&[s(&[0, 1]), s(&[0]), s(&[1, 2])]),
            Some(vec![1, 0, 2])
        );
        assert_eq!(distinct_representatives(&[s(&[0]), s(&[0])]), None);
        assert_eq!(distinct_representatives(&[]), Some(vec![]));
    }
}
