//! Constructive witness extraction at the exact Ramsey threshold.
//!
//! Each extractor walks the case analysis for its target, recording every
//! intermediate object in a [`ProofTrace`]. When a step that should always
//! succeed does not, the extractor stops with [`ExtractError::ProofGap`]
//! carrying the trace so far.

mod fan;
mod star;
pub mod trace;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use fan::extract_fan;
pub use star::extract_star;
pub use trace::{replay_trace, CaseTag, Check, EventKind, PayloadValue, ProofTrace, TraceEvent};

use crate::detect::{find_hajos_within, verify_witness, Witness};
use crate::graph::{Graph, VertexSet};

/// The blue pattern an extraction is aimed at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "target", content = "n", rename_all = "snake_case")]
pub enum Target {
    Star(usize),
    Fan(usize),
}

impl Target {
    pub fn n(&self) -> usize {
        match *self {
            Target::Star(n) | Target::Fan(n) => n,
        }
    }

    /// Order of the host graph the extractor expects.
    pub fn threshold_order(&self) -> usize {
        match *self {
            Target::Star(n) => 2 * n + 2 + n % 2,
            Target::Fan(n) => 4 * n + 2,
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Star(n) => write!(f, "K_1,{n}"),
            Target::Fan(n) => write!(f, "F_{n}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtractError {
    #[error("host has order {found}, extractor needs exactly {expected}")]
    InputSize { expected: usize, found: usize },
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("proof gap: {}", .0.gap_note().unwrap_or("unknown step"))]
    ProofGap(Box<ProofTrace>),
}

/// A witness together with the trace that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub witness: Witness,
    pub trace: ProofTrace,
}

pub fn arrow_witness(g: &Graph, target: Target) -> Result<Extraction, ExtractError> {
    match target {
        Target::Star(n) => extract_star(g, n),
        Target::Fan(n) => extract_fan(g, n),
    }
}

fn check_input(g: &Graph, target: Target) -> Result<(), ExtractError> {
    if target.n() < 2 {
        return Err(ExtractError::InvalidTarget(format!("{target}: n must be at least 2")));
    }
    let expected = target.threshold_order();
    if g.order() != expected {
        return Err(ExtractError::InputSize {
            expected,
            found: g.order(),
        });
    }
    Ok(())
}

type Outcome = Result<Extraction, ExtractError>;

/// Mutable state shared by the extractors.
struct Run<'g> {
    g: &'g Graph,
    trace: ProofTrace,
}

impl<'g> Run<'g> {
    fn new(g: &'g Graph, n: usize) -> Self {
        Run {
            g,
            trace: ProofTrace::new(n),
        }
    }

    fn n(&self) -> usize {
        self.trace.n
    }

    fn event(&mut self, kind: EventKind, note: impl Into<String>) -> &mut TraceEvent {
        self.trace.push(kind, note)
    }

    fn set(&self, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_vertices(self.g.order(), vs)
    }

    fn gap(&mut self, note: impl Into<String>) -> ExtractError {
        self.trace.push(EventKind::ProofGap, note);
        let n = self.n();
        ExtractError::ProofGap(Box::new(std::mem::replace(&mut self.trace, ProofTrace::new(n))))
    }

    fn finish(&mut self, tag: CaseTag, witness: Witness) -> Outcome {
        let n = self.n();
        debug_assert!(verify_witness(self.g, &witness, n));
        let ev = self.trace.push(EventKind::WitnessAssembled, tag.as_str());
        match &witness {
            Witness::RedHajos(h) => {
                ev.vertices("triangle", h.triangle)
                    .vertices("apexes", h.apexes)
                    .check(Check::Hajos {
                        triangle: "triangle".into(),
                        apexes: "apexes".into(),
                    });
            }
            Witness::BlueStar(s) => {
                ev.vertices("center", [s.center])
                    .vertices("leaves", s.leaves.iter().copied())
                    .check(Check::BlueStar {
                        center: "center".into(),
                        leaves: "leaves".into(),
                        n,
                    });
            }
            Witness::BlueFan(f) => {
                ev.vertices("center", [f.center])
                    .pairs("blades", f.blades.iter().copied())
                    .check(Check::BlueFan {
                        center: "center".into(),
                        blades: "blades".into(),
                        n,
                    });
            }
        }
        self.trace.terminal = Some(tag);
        self.trace.witness = Some(witness.clone());
        let trace = std::mem::replace(&mut self.trace, ProofTrace::new(n));
        Ok(Extraction { witness, trace })
    }

    /// Finishes with a Hajós embedding inside `G[vs]`, or a gap if the
    /// named vertices do not carry one.
    fn hajos_from(&mut self, tag: CaseTag, vs: &[usize], note: &str) -> Outcome {
        let within = self.set(vs.iter().copied());
        self.event(EventKind::SetBuilt, note).set("support", &within);
        match find_hajos_within(self.g, &within) {
            Some(h) => self.finish(tag, Witness::RedHajos(h)),
            None => Err(self.gap(format!("{note}: support carries no Hajos graph"))),
        }
    }
}
