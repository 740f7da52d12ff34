//! Exact-arithmetic tooling for lower bounds on the average degree of
//! list-critical graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: graph type, edge-list format, block decomposition and the
//!   brute-force oracles (α, mic, χ, clique vertices);
//! * [`gallai`]: Gallai-tree recognition, enumeration and statistics;
//! * [`quadruple`]: the quadruple registry, sufficient-condition checker and
//!   exhaustive tree verifier;
//! * [`bounds`]: the average-degree bound formulas and the comparison table;
//! * [`lp`]: exact rational simplex, Charnes–Cooper transformation and the
//!   per-k quadruple optimizer;
//! * [`reducibility`]: Alon–Tarsi checks, degeneracy peeling, auxiliary
//!   bipartite graphs and the inequality audits.

pub mod bounds;
pub mod error;
pub mod gallai;
pub mod graph;
pub mod limits;
pub mod lp;
pub mod quadruple;
pub mod rational;
pub mod reducibility;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use limits::Limits;
pub use rational::Rational;
