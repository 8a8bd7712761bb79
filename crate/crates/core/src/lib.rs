//! Ramsey numbers of the Hajós graph against stars and fans.
//!
//! The red graph of a two-coloring of `K_N` is a [`Graph`]; blue is its
//! complement. The crate provides
//!
//! - [`construct`]: the extremal lower-bound colorings and exact chromatic data,
//! - [`detect`]: detectors for the Hajós graph, `K_4`, `K_5 - e`, `W_4`,
//!   blue stars and blue fans, plus witness validation,
//! - [`extract`]: constructive witness extraction at the Ramsey threshold
//!   for `R(H_a, K_{1,n})` and `R(H_a, F_n)`, with an auditable trace,
//! - [`verify`]: exhaustive and randomized certification,
//! - [`sat`]: DIMACS emission for the star arrowing question,
//! - [`cli`]: the batch command-line surface.

pub mod cli;
pub mod construct;
pub mod detect;
pub mod extract;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod sat;
pub mod verify;

pub use detect::{FanWitness, HajosEmbedding, StarWitness, W4Embedding, Witness};
pub use graph::{Edge, Graph, GraphError, VertexSet, MAX_ORDER};
pub use matching::Matching;
