//! Audit trail of an extraction.
//!
//! Every event carries named vertex arrays (`payload`) and a list of
//! [`Check`]s over those names. [`replay_trace`] recomputes each check
//! against the host graph, so a trace is evidence rather than a log.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::detect::{verify_witness, FanWitness, HajosEmbedding, StarWitness, Witness};
use crate::graph::{Edge, Graph, VertexSet};

/// Which branch of which argument produced the final witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CaseTag {
    /// Some vertex already has complement degree `>= n`.
    StarDirectBlue,
    StarSpecialN2,
    StarCase1NoK4,
    StarCase2K5e,
    StarCase3K4Even,
    StarCase3K4Odd,
    FanCase1BigBlueDegree,
    FanCase2MinDegree,
    /// No `W_4` in the red graph; a blue fan was found directly instead.
    FanNoW4DirectBlue,
}

impl CaseTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            CaseTag::StarDirectBlue => "star_direct_blue",
            CaseTag::StarSpecialN2 => "star_special_n2",
            CaseTag::StarCase1NoK4 => "star_case1_no_k4",
            CaseTag::StarCase2K5e => "star_case2_k5e",
            CaseTag::StarCase3K4Even => "star_case3_k4_even",
            CaseTag::StarCase3K4Odd => "star_case3_k4_odd",
            CaseTag::FanCase1BigBlueDegree => "fan_case1_big_blue_degree",
            CaseTag::FanCase2MinDegree => "fan_case2_min_degree",
            CaseTag::FanNoW4DirectBlue => "fan_no_w4_direct_blue",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EventKind {
    CaseEntered,
    ClaimChecked,
    SetBuilt,
    MatchingBuilt,
    WitnessAssembled,
    Reroute,
    ProofGap,
}

/// A named payload entry: either vertices or vertex pairs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PayloadValue {
    Vertices(Vec<usize>),
    Pairs(Vec<Edge>),
}

/// A re-checkable statement about payload entries, referenced by name.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "check", rename_all = "snake_case")]
pub enum Check {
    /// Every pair is a red edge.
    RedEdges {
        pairs: String,
    },
    /// Every pair is a blue edge.
    BlueEdges {
        pairs: String,
    },
    /// The vertices are pairwise red-adjacent.
    RedClique {
        set: String,
    },
    /// The vertices are pairwise distinct.
    Distinct {
        set: String,
    },
    /// `set` equals the common red neighborhood of `of`, minus `excluding`.
    CommonNeighbors {
        set: String,
        of: String,
        excluding: Option<String>,
    },
    /// `set` equals the blue neighborhood of the single vertex in `center`.
    ComplementNeighbors {
        set: String,
        center: String,
    },
    Disjoint {
        a: String,
        b: String,
    },
    Subset {
        a: String,
        b: String,
    },
    /// Pairs are vertex-disjoint edges of the red (or blue) graph.
    Matching {
        pairs: String,
        blue: bool,
    },
    /// The red graph induced on `set` has maximum degree `<= at_most`.
    MaxDegreeWithin {
        set: String,
        at_most: usize,
    },
    /// Every component of the red graph induced on `set` is a star or a
    /// single vertex.
    StarForest {
        set: String,
    },
    SizeAtLeast {
        set: String,
        min: usize,
    },
    SizeAtMost {
        set: String,
        max: usize,
    },
    /// Every vertex of `vertices` is red-adjacent to every other member of `set`.
    AdjacentToAll {
        vertices: String,
        set: String,
    },
    /// Every vertex of `vertices` is blue-adjacent to every other member of `set`.
    NonAdjacentToAll {
        vertices: String,
        set: String,
    },
    /// Minimum red degree of the host is at least `at_least`.
    MinDegreeAtLeast {
        at_least: usize,
    },
    /// Maximum blue degree of the host is at most `at_most`.
    MaxComplementDegreeAtMost {
        at_most: usize,
    },
    /// The single vertex in `vertex` has the maximum blue degree.
    MaxComplementDegreeAt {
        vertex: String,
    },
    /// `hub` and `rim` form a red `W_4`.
    Wheel {
        hub: String,
        rim: String,
    },
    /// `triangle` and `apexes` form a red Hajós graph.
    Hajos {
        triangle: String,
        apexes: String,
    },
    /// `center` and `leaves` form a blue `K_{1,n}`.
    BlueStar {
        center: String,
        leaves: String,
        n: usize,
    },
    /// `center` and `blades` form a blue `F_n`.
    BlueFan {
        center: String,
        blades: String,
        n: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEvent {
    #[serde(rename = "event")]
    pub kind: EventKind,
    pub note: String,
    pub payload: BTreeMap<String, PayloadValue>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub checks: Vec<Check>,
}

impl TraceEvent {
    pub fn vertices<I: IntoIterator<Item = usize>>(&mut self, name: &str, vs: I) -> &mut Self {
        self.payload
            .insert(name.to_string(), PayloadValue::Vertices(vs.into_iter().collect()));
        self
    }

    pub fn set(&mut self, name: &str, s: &VertexSet) -> &mut Self {
        self.vertices(name, s.iter())
    }

    pub fn pairs<I: IntoIterator<Item = Edge>>(&mut self, name: &str, es: I) -> &mut Self {
        self.payload
            .insert(name.to_string(), PayloadValue::Pairs(es.into_iter().collect()));
        self
    }

    pub fn check(&mut self, c: Check) -> &mut Self {
        self.checks.push(c);
        self
    }

    fn vertex_list(&self, name: &str) -> Option<&[usize]> {
        match self.payload.get(name)? {
            PayloadValue::Vertices(v) => Some(v),
            PayloadValue::Pairs(p) if p.is_empty() => Some(&[]),
            PayloadValue::Pairs(_) => None,
        }
    }

    fn pair_list(&self, name: &str) -> Option<Vec<Edge>> {
        match self.payload.get(name)? {
            PayloadValue::Pairs(p) => Some(p.clone()),
            PayloadValue::Vertices(v) if v.is_empty() => Some(Vec::new()),
            PayloadValue::Vertices(_) => None,
        }
    }

    fn single(&self, name: &str) -> Option<usize> {
        match self.vertex_list(name)? {
            [v] => Some(*v),
            _ => None,
        }
    }

    /// Re-evaluates every check of this event against `g`.
    pub fn holds_in(&self, g: &Graph) -> bool {
        self.checks.iter().all(|c| self.check_holds(g, c).unwrap_or(false))
    }

    fn set_of(&self, g: &Graph, name: &str) -> Option<VertexSet> {
        let vs = self.vertex_list(name)?;
        if vs.iter().any(|&v| v >= g.order()) {
            return None;
        }
        Some(VertexSet::from_vertices(g.order(), vs.iter().copied()))
    }

    fn check_holds(&self, g: &Graph, c: &Check) -> Option<bool> {
        let n = g.order();
        let in_range = |vs: &[usize]| vs.iter().all(|&v| v < n);
        Some(match c {
            Check::RedEdges { pairs } => {
                let ps = self.pair_list(pairs)?;
                ps.iter().all(|e| e.v < n && g.has_edge(e.u, e.v))
            }
            Check::BlueEdges { pairs } => {
                let ps = self.pair_list(pairs)?;
                ps.iter().all(|e| e.v < n && g.has_complement_edge(e.u, e.v))
            }
            Check::RedClique { set } => {
                let vs = self.vertex_list(set)?;
                in_range(vs)
                    && distinct(vs)
                    && vs
                        .iter()
                        .enumerate()
                        .all(|(i, &a)| vs[..i].iter().all(|&b| g.has_edge(a, b)))
            }
            Check::Distinct { set } => distinct(self.vertex_list(set)?),
            Check::CommonNeighbors { set, of, excluding } => {
                let of = self.vertex_list(of)?;
                if !in_range(of) {
                    return None;
                }
                let mut expect = g.common_neighbors(of);
                if let Some(ex) = excluding {
                    expect.difference_with(&self.set_of(g, ex)?);
                }
                let got = self.vertex_list(set)?;
                got.len() == expect.len() && got.iter().copied().eq(expect.iter())
            }
            Check::ComplementNeighbors { set, center } => {
                let v = self.single(center)?;
                if v >= n {
                    return None;
                }
                let got = self.vertex_list(set)?;
                got.iter().copied().eq(g.complement_neighbors(v).iter())
            }
            Check::Disjoint { a, b } => !self.set_of(g, a)?.intersects(&self.set_of(g, b)?),
            Check::Subset { a, b } => self.set_of(g, a)?.is_subset(&self.set_of(g, b)?),
            Check::Matching { pairs, blue } => {
                let ps = self.pair_list(pairs)?;
                ps.iter().all(|e| e.v < n) && crate::matching::Matching::from_edges(ps).is_valid_in(g, *blue)
            }
            Check::MaxDegreeWithin { set, at_most } => {
                let s = self.set_of(g, set)?;
                s.iter().all(|v| g.degree_in(v, &s) <= *at_most)
            }
            Check::StarForest { set } => is_star_forest(g, &self.set_of(g, set)?),
            Check::SizeAtLeast { set, min } => self.vertex_list(set)?.len() >= *min,
            Check::SizeAtMost { set, max } => self.vertex_list(set)?.len() <= *max,
            Check::AdjacentToAll { vertices, set } => {
                let vs = self.vertex_list(vertices)?;
                let s = self.set_of(g, set)?;
                in_range(vs) && vs.iter().all(|&v| s.iter().all(|x| x == v || g.has_edge(v, x)))
            }
            Check::NonAdjacentToAll { vertices, set } => {
                let vs = self.vertex_list(vertices)?;
                let s = self.set_of(g, set)?;
                in_range(vs)
                    && vs
                        .iter()
                        .all(|&v| s.iter().all(|x| x == v || g.has_complement_edge(v, x)))
            }
            Check::MinDegreeAtLeast { at_least } => g.min_degree() >= *at_least,
            Check::MaxComplementDegreeAtMost { at_most } => (0..n).all(|v| g.complement_degree(v) <= *at_most),
            Check::MaxComplementDegreeAt { vertex } => {
                let v = self.single(vertex)?;
                v < n && (0..n).all(|w| g.complement_degree(w) <= g.complement_degree(v))
            }
            Check::Wheel { hub, rim } => {
                let hub = self.single(hub)?;
                let rim: [usize; 4] = self.vertex_list(rim)?.try_into().ok()?;
                crate::detect::W4Embedding { hub, rim }.is_valid_in(g)
            }
            Check::Hajos { triangle, apexes } => {
                let triangle: [usize; 3] = self.vertex_list(triangle)?.try_into().ok()?;
                let apexes: [usize; 3] = self.vertex_list(apexes)?.try_into().ok()?;
                HajosEmbedding { triangle, apexes }.is_valid_in(g)
            }
            Check::BlueStar { center, leaves, n: k } => {
                let w = Witness::BlueStar(StarWitness {
                    center: self.single(center)?,
                    leaves: self.vertex_list(leaves)?.to_vec(),
                });
                verify_witness(g, &w, *k)
            }
            Check::BlueFan { center, blades, n: k } => {
                let w = Witness::BlueFan(FanWitness {
                    center: self.single(center)?,
                    blades: self.pair_list(blades)?,
                });
                verify_witness(g, &w, *k)
            }
        })
    }
}

fn distinct(vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, v)| !vs[..i].contains(v))
}

/// Every component of `G[s]` has at most one vertex of degree above one and
/// no cycle, i.e. is a single vertex or a star.
pub fn is_star_forest(g: &Graph, s: &VertexSet) -> bool {
    components(g, s).iter().all(|comp| {
        let cs = VertexSet::from_vertices(g.order(), comp.iter().copied());
        let degrees: Vec<usize> = comp.iter().map(|&v| g.degree_in(v, &cs)).collect();
        let edges: usize = degrees.iter().sum::<usize>() / 2;
        edges + 1 == comp.len() && degrees.iter().filter(|&&d| d > 1).count() <= 1
    })
}

/// Connected components of `G[s]`, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph, s: &VertexSet) -> Vec<Vec<usize>> {
    let mut left = s.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        left.remove(start);
        let mut comp = vec![start];
        let mut i = 0;
        while i < comp.len() {
            let nb = g.neighbors(comp[i]) & &left;
            for w in nb.iter() {
                left.remove(w);
                comp.push(w);
            }
            i += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Ordered event log of one extraction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub n: usize,
    pub events: Vec<TraceEvent>,
    pub terminal: Option<CaseTag>,
    pub witness: Option<Witness>,
}

/// Final JSON-lines record of a trace.
#[derive(Serialize)]
struct TerminalRecord<'a> {
    case: Option<CaseTag>,
    witness: Option<&'a Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    proof_gap: Option<&'a str>,
}

impl ProofTrace {
    pub fn new(n: usize) -> Self {
        ProofTrace {
            n,
            events: Vec::new(),
            terminal: None,
            witness: None,
        }
    }

    pub fn push(&mut self, kind: EventKind, note: impl Into<String>) -> &mut TraceEvent {
        self.events.push(TraceEvent {
            kind,
            note: note.into(),
            payload: BTreeMap::new(),
            checks: Vec::new(),
        });
        self.events.last_mut().expect("just pushed")
    }

    /// The note of the final event when it is a proof-gap marker.
    pub fn gap_note(&self) -> Option<&str> {
        self.events
            .last()
            .filter(|e| e.kind == EventKind::ProofGap)
            .map(|e| e.note.as_str())
    }

    /// One JSON object per event, then the terminal record.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.events {
            out.push_str(&serde_json::to_string(e).expect("trace events serialize"));
            out.push('\n');
        }
        let rec = TerminalRecord {
            case: self.terminal,
            witness: self.witness.as_ref(),
            proof_gap: self.gap_note(),
        };
        out.push_str(&serde_json::to_string(&rec).expect("terminal record serializes"));
        out.push('\n');
        out
    }
}

/// Re-validates every event of `trace` against `g`.
///
/// The trace must end in either an assembled witness (which must itself be
/// valid) or a proof-gap marker.
pub fn replay_trace(g: &Graph, trace: &ProofTrace) -> bool {
    let ends_properly = match trace.events.last().map(|e| e.kind) {
        Some(EventKind::WitnessAssembled) => trace.witness.as_ref().is_some_and(|w| verify_witness(g, w, trace.n)),
        Some(EventKind::ProofGap) => trace.witness.is_none(),
        _ => false,
    };
    ends_properly && trace.events.iter().all(|e| e.holds_in(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn star_forest_recognition() {
        let star = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (4, 5)]).unwrap();
        assert!(is_star_forest(&star, &star.vertices()));
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(!is_star_forest(&p4, &p4.vertices()));
        let k3 = Graph::complete(3).unwrap();
        assert!(!is_star_forest(&k3, &k3.vertices()));
        assert!(is_star_forest(&k3, &VertexSet::from_vertices(3, [0, 1])));
    }

    #[test]
    fn check_roundtrip_and_failure() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap();
        let mut t = ProofTrace::new(1);
        t.push(EventKind::SetBuilt, "common")
            .vertices("of", [0, 2])
            .vertices("set", [1])
            .check(Check::CommonNeighbors {
                set: "set".into(),
                of: "of".into(),
                excluding: None,
            });
        assert!(t.events[0].holds_in(&g));
        let mut bad = t.clone();
        bad.events[0].vertices("set", [3]);
        assert!(!bad.events[0].holds_in(&g));
        let text = serde_json::to_string(&t.events[0]).unwrap();
        let back: TraceEvent = serde_json::from_str(&text).unwrap();
        assert_eq!(back, t.events[0]);
    }

    #[test]
    fn missing_names_fail() {
        let g = Graph::empty(3).unwrap();
        let mut t = ProofTrace::new(1);
        t.push(EventKind::ClaimChecked, "x")
            .check(Check::RedClique { set: "nope".into() });
        assert!(!t.events[0].holds_in(&g));
    }
}
