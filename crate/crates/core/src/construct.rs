//! Extremal lower-bound graphs and exact chromatic data for small graphs.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_ORDER};

/// Exact chromatic data is only computed up to this order.
pub const CHROMATIC_MAX_ORDER: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("n = {n} has the wrong parity (expected {expected})")]
    ParityError { n: usize, expected: &'static str },
    #[error("order {0} exceeds the maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("order {0} too large for exact chromatic computation (max {CHROMATIC_MAX_ORDER})")]
    OrderTooLargeForExact(usize),
}

impl From<GraphError> for ConstructionError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::OrderTooLarge(n) => ConstructionError::OrderTooLarge(n),
            other => ConstructionError::InvalidParameters(other.to_string()),
        }
    }
}

/// Chromatic number and chromatic surplus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticInfo {
    pub chi: usize,
    pub surplus: usize,
}

/// Complete multipartite graph; parts are laid out in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, ConstructionError> {
    let order: usize = parts.iter().sum();
    let mut part_of = Vec::with_capacity(order);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, size));
    }
    Ok(Graph::from_fn(order, |u, v| part_of[u] != part_of[v])?)
}

/// `(chi - 1)` parts of size `target_order - 1` followed by one part of size
/// `s - 1`: the general Ramsey lower-bound coloring for a red graph with
/// chromatic number `chi` and surplus `s` against a connected blue graph on
/// `target_order` vertices.
pub fn burr_construction(chi: usize, s: usize, target_order: usize) -> Result<Graph, ConstructionError> {
    if chi < 2 || s < 1 || target_order < s {
        return Err(ConstructionError::InvalidParameters(format!(
            "need chi >= 2, s >= 1, target_order >= s (got chi={chi}, s={s}, target_order={target_order})"
        )));
    }
    let mut parts = vec![target_order - 1; chi - 1];
    parts.push(s - 1);
    complete_multipartite(&parts)
}

/// The Ramsey lower bound `(chi - 1)(target_order - 1) + s`.
pub fn burr_threshold(chi: usize, s: usize, target_order: usize) -> usize {
    (chi - 1) * (target_order - 1) + s
}

/// `K_{n,n,1}` on `2n + 1` vertices, for even `n >= 2`.
pub fn star_even_lower(n: usize) -> Result<Graph, ConstructionError> {
    if !n.is_multiple_of(2) {
        return Err(ConstructionError::ParityError { n, expected: "even" });
    }
    if n < 2 {
        return Err(ConstructionError::InvalidParameters(format!("n must be >= 2, got {n}")));
    }
    burr_construction(3, 2, n + 1)
}

/// `(lK_2) + (lK_2)` with `l = (n + 1) / 2`, for odd `n >= 3`.
///
/// Side one holds vertices `0..2l` matched as `(0,1), (2,3), ...`; side two
/// holds `2l..4l` matched the same way; every cross pair is an edge.
pub fn star_odd_lower(n: usize) -> Result<Graph, ConstructionError> {
    if n % 2 != 1 {
        return Err(ConstructionError::ParityError { n, expected: "odd" });
    }
    if n < 3 {
        return Err(ConstructionError::InvalidParameters(format!("n must be >= 3, got {n}")));
    }
    let half = n + 1;
    Ok(Graph::from_fn(2 * half, |u, v| {
        let cross = (u < half) != (v < half);
        cross || u / 2 == v / 2
    })?)
}

/// `K_{2n,2n,1}` on `4n + 1` vertices.
pub fn fan_lower(n: usize) -> Result<Graph, ConstructionError> {
    if n < 1 {
        return Err(ConstructionError::InvalidParameters("n must be >= 1".into()));
    }
    burr_construction(3, 2, 2 * n + 1)
}

pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph, ConstructionError> {
    let k = g.order();
    let order = k + h.order();
    if order > MAX_ORDER {
        return Err(ConstructionError::OrderTooLarge(order));
    }
    let edges = g
        .edges()
        .map(|e| (e.u, e.v))
        .chain(h.edges().map(|e| (e.u + k, e.v + k)));
    Ok(Graph::from_edges(order, edges)?)
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph, ConstructionError> {
    let k = g.order();
    let order = k + h.order();
    if order > MAX_ORDER {
        return Err(ConstructionError::OrderTooLarge(order));
    }
    Ok(Graph::from_fn(order, |u, v| {
        if u < k && v < k {
            g.has_edge(u, v)
        } else if u >= k && v >= k {
            h.has_edge(u - k, v - k)
        } else {
            true
        }
    })?)
}

/// `copies` disjoint copies of `g`.
pub fn repeat(g: &Graph, copies: usize) -> Result<Graph, ConstructionError> {
    let mut out = Graph::empty(0)?;
    for _ in 0..copies {
        out = disjoint_union(&out, g)?;
    }
    Ok(out)
}

/// Triangle `0 1 2` with apexes `3` (on `01`), `4` (on `02`), `5` (on `12`).
pub fn hajos_graph() -> Graph {
    Graph::from_edges(
        6,
        [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (2, 4), (1, 5), (2, 5)],
    )
    .expect("static edge list")
}

/// `K_1 + nK_2`, centre `0`.
pub fn fan_graph(n: usize) -> Result<Graph, ConstructionError> {
    join(&Graph::empty(1)?, &repeat(&Graph::complete(2)?, n)?)
}

/// `K_1 + nK_1`, centre `0`.
pub fn star_graph(n: usize) -> Result<Graph, ConstructionError> {
    join(&Graph::empty(1)?, &Graph::empty(n)?)
}

/// `W_4`: hub `0`, rim `1 2 3 4`.
pub fn wheel_w4() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (4, 1)]).expect("static edge list")
}

/// Exact chromatic number and surplus by exhaustive coloring (order <= 12).
pub fn chromatic_info(g: &Graph) -> Result<ChromaticInfo, ConstructionError> {
    let n = g.order();
    if n > CHROMATIC_MAX_ORDER {
        return Err(ConstructionError::OrderTooLargeForExact(n));
    }
    if n == 0 {
        return Err(ConstructionError::InvalidParameters("graph has no vertices".into()));
    }
    let adj: Vec<u16> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u16, |m, w| m | 1 << w))
        .collect();
    for k in 1..=n {
        let mut classes = vec![0u16; k];
        let mut best = None;
        enumerate_colorings(&adj, 0, 0, &mut classes, &mut best);
        if let Some(surplus) = best {
            return Ok(ChromaticInfo { chi: k, surplus });
        }
    }
    unreachable!("n colors always suffice")
}

/// Walks every partition of the vertices into `classes.len()` nonempty
/// independent sets (classes opened in order, so each partition is seen
/// once) and records the smallest class size seen.
fn enumerate_colorings(adj: &[u16], v: usize, used: usize, classes: &mut [u16], best: &mut Option<usize>) {
    let k = classes.len();
    let n = adj.len();
    if k - used > n - v {
        return;
    }
    if v == n {
        let smallest = classes.iter().map(|c| c.count_ones() as usize).min().unwrap_or(0);
        if best.is_none_or(|b| smallest < b) {
            *best = Some(smallest);
        }
        return;
    }
    for c in 0..(used + 1).min(k) {
        if classes[c] & adj[v] == 0 {
            classes[c] |= 1 << v;
            enumerate_colorings(adj, v + 1, used.max(c + 1), classes, best);
            classes[c] &= !(1 << v);
        }
    }
}
