//! Exhaustive certification of small cases and seeded random sweeps.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::{self, ConstructionError};
use crate::detect::{find_blue_fan, find_blue_star, find_hajos, verify_witness};
use crate::extract::{arrow_witness, replay_trace, ExtractError, Target};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6;

/// Exhaustive scans are limited to `2^28` colorings.
pub const MAX_SCAN_EDGES: usize = 28;
/// At most this many counterexamples are stored in a report.
pub const MAX_COUNTEREXAMPLES: usize = 16;
/// Largest order accepted by [`enumerate_path_cycle_graphs`].
pub const PATH_CYCLE_MAX_ORDER: usize = 32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("{edges} edges means 2^{edges} colorings (max 2^{MAX_SCAN_EDGES})")]
    TooManyColorings { edges: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub statement: String,
    pub total: u64,
    pub passed: u64,
    pub failed: u64,
    /// graph6 strings of failing instances, in scan order.
    pub counterexamples: Vec<String>,
    pub case_histogram: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl VerificationReport {
    fn new(statement: impl Into<String>) -> Self {
        VerificationReport {
            statement: statement.into(),
            ..Default::default()
        }
    }

    pub fn certified(&self) -> bool {
        self.failed == 0 && self.total > 0
    }

    /// Same report with the timing field cleared.
    pub fn without_timing(mut self) -> Self {
        self.wall_ms = None;
        self
    }

    fn record(&mut self, ok: bool, case: &str, g: impl FnOnce() -> String) {
        self.total += 1;
        *self.case_histogram.entry(case.to_string()).or_default() += 1;
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
                self.counterexamples.push(g());
            }
        }
    }

    /// Appends `other`, keeping scan order.
    fn merge(mut self, other: VerificationReport) -> Self {
        self.total += other.total;
        self.passed += other.passed;
        self.failed += other.failed;
        for (k, v) in other.case_histogram {
            *self.case_histogram.entry(k).or_default() += v;
        }
        let room = MAX_COUNTEREXAMPLES - self.counterexamples.len();
        self.counterexamples
            .extend(other.counterexamples.into_iter().take(room));
        self
    }

    fn timed(mut self, start: Instant) -> Self {
        self.wall_ms = Some(start.elapsed().as_millis() as u64);
        self
    }
}

/// Graph on `order` vertices whose edges are the set bits of `mask`, edge
/// `(u, v)` at its lexicographic index.
pub fn graph_from_mask(order: usize, mask: u64) -> Graph {
    let mut i = 0;
    Graph::from_fn(order, |_, _| {
        let bit = mask >> i & 1 == 1;
        i += 1;
        bit
    })
    .expect("order within range")
}

/// Red Hajós or the blue target, whichever the detectors find first.
fn classify(g: &Graph, target: Target) -> &'static str {
    if find_hajos(g).is_some() {
        return "red_hajos";
    }
    let blue = match target {
        Target::Star(n) => find_blue_star(g, n).is_some(),
        Target::Fan(n) => find_blue_fan(g, n).is_some(),
    };
    if blue {
        match target {
            Target::Star(_) => "blue_star",
            Target::Fan(_) => "blue_fan",
        }
    } else {
        "avoids_both"
    }
}

/// Checks every red/blue coloring of `K_order` for a red Hajós graph or the
/// blue target.
pub fn verify_all_colorings(order: usize, target: Target) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let edges = order * order.saturating_sub(1) / 2;
    if edges > MAX_SCAN_EDGES {
        return Err(VerifyError::TooManyColorings { edges });
    }
    if target.n() == 0 {
        return Err(VerifyError::Unsupported("target size must be positive".into()));
    }
    let statement = format!("every coloring of K_{order} has a red Hajos graph or a blue {target}");
    let total: u64 = 1 << edges;
    const CHUNK: u64 = 1 << 12;
    let chunks = total.div_ceil(CHUNK);
    let report = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut r = VerificationReport::default();
            for mask in c * CHUNK..((c + 1) * CHUNK).min(total) {
                let g = graph_from_mask(order, mask);
                let case = classify(&g, target);
                r.record(case != "avoids_both", case, || graph6::encode(&g));
            }
            r
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(VerificationReport::new(statement), VerificationReport::merge);
    Ok(report.timed(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// A disjoint union of paths and cycles, components listed cycles first,
/// each kind by nonincreasing size.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentShape {
    pub components: Vec<(ComponentKind, usize)>,
}

impl ComponentShape {
    pub fn order(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    /// Representative graph, components laid out left to right.
    pub fn graph(&self) -> Graph {
        let mut edges = Vec::new();
        let mut base = 0;
        for &(kind, size) in &self.components {
            edges.extend((1..size).map(|i| (base + i - 1, base + i)));
            if kind == ComponentKind::Cycle {
                edges.push((base, base + size - 1));
            }
            base += size;
        }
        Graph::from_edges(base, edges).expect("shape sizes are valid")
    }

    /// Number of labelled graphs with this shape.
    pub fn labelled_count(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        let mut denom: u128 = 1;
        for &(kind, size) in &self.components {
            denom *= match (kind, size) {
                (ComponentKind::Path, 1) => 1,
                (ComponentKind::Path, _) => 2,
                (ComponentKind::Cycle, k) => 2 * k as u128,
            };
        }
        let mut i = 0;
        while i < self.components.len() {
            let j = i + self.components[i..]
                .iter()
                .take_while(|c| **c == self.components[i])
                .count();
            denom *= fact(j - i);
            i = j;
        }
        fact(self.order()) / denom
    }
}

/// Integer partitions of `total` into parts `>= min_part`, each
/// nonincreasing, in reverse lexicographic order.
fn partitions(total: usize, min_part: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (min..=max.min(left)).rev() {
            cur.push(p);
            go(left - p, p, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, min_part, &mut Vec::new(), &mut out);
    out
}

/// Every isomorphism class of graphs with maximum degree at most two on
/// `order` vertices, as shapes.
pub fn path_cycle_shapes(order: usize) -> Result<Vec<ComponentShape>, VerifyError> {
    if order > PATH_CYCLE_MAX_ORDER {
        return Err(VerifyError::Unsupported(format!(
            "order {order} above {PATH_CYCLE_MAX_ORDER}"
        )));
    }
    let mut out = Vec::new();
    for in_cycles in 0..=order {
        for cycles in partitions(in_cycles, 3) {
            for paths in partitions(order - in_cycles, 1) {
                let components = cycles
                    .iter()
                    .map(|&s| (ComponentKind::Cycle, s))
                    .chain(paths.iter().map(|&s| (ComponentKind::Path, s)))
                    .collect();
                out.push(ComponentShape { components });
            }
        }
    }
    Ok(out)
}

pub fn enumerate_path_cycle_graphs(order: usize) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    Ok(path_cycle_shapes(order)?.into_iter().map(|s| s.graph()))
}

/// Sum of [`ComponentShape::labelled_count`] over all shapes.
pub fn labelled_path_cycle_count(order: usize) -> Result<u128, VerifyError> {
    Ok(path_cycle_shapes(order)?.iter().map(|s| s.labelled_count()).sum())
}

/// All perfect and partial matchings on `order` labelled vertices.
fn all_matchings(order: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(
        v: usize,
        order: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if v == order {
            out.push(cur.clone());
            return;
        }
        if used[v] {
            return go(v + 1, order, used, cur, out);
        }
        go(v + 1, order, used, cur, out);
        for w in v + 1..order {
            if !used[w] {
                used[w] = true;
                cur.push((v, w));
                go(v + 1, order, used, cur, out);
                cur.pop();
                used[w] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(0, order, &mut vec![false; order], &mut Vec::new(), &mut out);
    out
}

/// Upper bound for `K_{1,2}` (order 6) or `K_{1,3}` (order 9) through the
/// structure of the blue graph: blue degree below `n` forces a matching or
/// a union of paths and cycles.
pub fn verify_star_upper_via_structure(n: usize) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let order = Target::Star(n).threshold_order();
    let blues: Vec<Graph> = match n {
        2 => all_matchings(order)
            .into_iter()
            .map(|m| Graph::from_edges(order, m).expect("valid matching"))
            .collect(),
        3 => enumerate_path_cycle_graphs(order)?.collect(),
        _ => {
            return Err(VerifyError::Unsupported(format!(
                "structure check covers n = 2, 3 (got {n})"
            )))
        }
    };
    let statement = format!("every graph on {order} vertices with blue degree below {n} has a red Hajos graph");
    let mut report = VerificationReport::new(statement);
    for blue in blues {
        let red = blue.complement();
        let ok = find_hajos(&red).is_some();
        report.record(ok, if ok { "red_hajos" } else { "avoids_both" }, || {
            graph6::encode(&red)
        });
    }
    Ok(report.timed(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConstructionKind {
    StarEven,
    StarOdd,
    Fan,
}

/// Checks that a lower-bound construction has the right order and avoids
/// both patterns.
pub fn verify_construction(n: usize, kind: ConstructionKind) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let (g, expected, name) = match kind {
        ConstructionKind::StarEven => (construct::star_even_lower(n)?, 2 * n + 1, "star_even"),
        ConstructionKind::StarOdd => (construct::star_odd_lower(n)?, 2 * n + 2, "star_odd"),
        ConstructionKind::Fan => (construct::fan_lower(n)?, 4 * n + 1, "fan"),
    };
    let target = match kind {
        ConstructionKind::Fan => Target::Fan(n),
        _ => Target::Star(n),
    };
    let mut report = VerificationReport::new(format!(
        "{name} construction for n = {n} has order {expected} and avoids a red Hajos graph and a blue {target}"
    ));
    let case = classify(&g, target);
    let ok = g.order() == expected && case == "avoids_both";
    report.record(ok, if g.order() == expected { case } else { "wrong_order" }, || {
        graph6::encode(&g)
    });
    Ok(report.timed(start))
}

/// The host graph of one sweep trial: `G(order, p)` with `p` cycling
/// through `0.1, 0.2, ..., 0.9`, drawn from a ChaCha stream keyed by
/// `(seed, trial)`.
pub fn sweep_graph(target: Target, trial: u64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let p = (trial % 9 + 1) as f64 / 10.0;
    Graph::from_fn(target.threshold_order(), |_, _| rng.random_bool(p)).expect("order checked by caller")
}

/// Runs the extractor on `trials` random hosts at the threshold order and
/// re-validates every witness and trace.
pub fn random_sweep(target: Target, trials: u64, seed: u64) -> Result<VerificationReport, VerifyError> {
    let start = Instant::now();
    let order = target.threshold_order();
    if order > MAX_ORDER {
        return Err(VerifyError::Unsupported(format!(
            "threshold order {order} above {MAX_ORDER}"
        )));
    }
    if target.n() < 2 {
        return Err(VerifyError::Unsupported("target size must be at least 2".into()));
    }
    let statement = format!("extraction yields a valid witness for {trials} random hosts on {order} vertices (target {target}, seed {seed})");
    let report = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let g = sweep_graph(target, trial, seed);
            let mut r = VerificationReport::default();
            let (ok, case) = match arrow_witness(&g, target) {
                Ok(out) => {
                    let ok = verify_witness(&g, &out.witness, target.n()) && replay_trace(&g, &out.trace);
                    let case = out.trace.terminal.map_or("no_terminal", |t| t.as_str());
                    (ok, if ok { case } else { "invalid_witness" })
                }
                Err(ExtractError::ProofGap(_)) => (false, "proof_gap"),
                Err(_) => (false, "rejected_input"),
            };
            r.record(ok, case, || graph6::encode(&g));
            r
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(VerificationReport::new(statement), VerificationReport::merge);
    Ok(report.timed(start))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mask_layout_is_lexicographic() {
        let g = graph_from_mask(4, 0b100001);
        assert!(g.has_edge(0, 1) && g.has_edge(2, 3));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(Graph::edge_mask_index(4, 2, 3), 5);
    }

    #[test]
    fn small_shape_counts() {
        assert_eq!(path_cycle_shapes(3).unwrap().len(), 4);
        assert_eq!(path_cycle_shapes(4).unwrap().len(), 7);
        assert_eq!(labelled_path_cycle_count(3).unwrap(), 8);
        assert!(path_cycle_shapes(33).is_err());
    }

    #[test]
    fn seventy_six_matchings() {
        assert_eq!(all_matchings(6).len(), 76);
    }

    #[test]
    fn construction_reports() {
        assert!(verify_construction(2, ConstructionKind::StarEven).unwrap().certified());
        assert!(verify_construction(3, ConstructionKind::StarOdd).unwrap().certified());
        assert!(matches!(
            verify_construction(3, ConstructionKind::StarEven),
            Err(VerifyError::Construction(ConstructionError::ParityError { .. }))
        ));
    }

    #[test]
    fn scan_limit() {
        assert_eq!(
            verify_all_colorings(9, Target::Star(2)),
            Err(VerifyError::TooManyColorings { edges: 36 })
        );
    }
}
