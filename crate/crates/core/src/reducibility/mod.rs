//! Reducibility machinery and inequality audits on concrete graphs:
//! Alon–Tarsi checks, AT-reduction search, degeneracy peeling, the
//! component and auxiliary bipartite graphs, and the audit battery.

mod at;
mod audits;
mod bipartite;
mod choosability;
mod configurations;
mod reduce;

pub use at::{is_fat, is_fat_with, ATVerdict};
pub use audits::{
    audit_average_degree, audit_beta_lemma, audit_counting_identities, audit_kernel_magic,
    audit_q_lemma, check_alpha_bound, establish_irreducibility, AuditContext, AuditReport,
    Extraction, IrreducibilityBasis,
};
pub use bipartite::{
    build_auxiliary_f, build_component_bipartite, A2Stub, AuxiliaryBipartite, ComponentBipartite,
};
pub use choosability::{choosability_brute_force, choosability_brute_force_with};
pub use configurations::{
    check_configuration_type_one, check_lopsided_configuration, check_multiple_high_configuration,
    HypothesisReport,
};
pub use reduce::{at_reducible, at_reducible_with, at_reducible_within, peel_degenerate, AtReduction};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// List sizes `f(v)` for every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListSizeAssignment {
    f: Vec<usize>,
}

impl ListSizeAssignment {
    pub fn new(f: Vec<usize>) -> Self {
        ListSizeAssignment { f }
    }

    pub fn constant(n: usize, c: usize) -> Self {
        ListSizeAssignment { f: vec![c; n] }
    }

    /// `f_H(v) = δ(G) + d_H(v) - d_G(v)` on the vertices of `H = G[vertices]`
    /// (ascending vertex order, as in [`Graph::induced`]), clamped at zero.
    pub fn reduction_target(g: &Graph, vertices: &[usize]) -> Self {
        let delta = g.min_degree().unwrap_or(0);
        let h = g.induced(vertices.iter().copied());
        let f = h
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (delta + h.graph.degree(i)).saturating_sub(g.degree(v)))
            .collect();
        ListSizeAssignment { f }
    }

    pub fn get(&self, v: usize) -> usize {
        self.f[v]
    }

    pub fn values(&self) -> &[usize] {
        &self.f
    }

    pub fn total(&self) -> usize {
        self.f.iter().sum()
    }

    pub fn max(&self) -> usize {
        self.f.iter().copied().max().unwrap_or(0)
    }

    pub(crate) fn check_covers(&self, g: &Graph) -> Result<()> {
        if self.f.len() != g.order() {
            return Err(Error::Invalid(format!(
                "list sizes given for {} vertices, graph has {}",
                self.f.len(),
                g.order()
            )));
        }
        Ok(())
    }

    /// Parses lines `v f(v)`; `#` starts a comment line. Every vertex in
    /// `0..n` must appear exactly once.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let mut f: Vec<Option<usize>> = vec![None; n];
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 2 {
                return Err(err(format!("expected `v f(v)`, found `{line}`")));
            }
            let v: usize = fields[0]
                .parse()
                .map_err(|_| err(format!("bad vertex `{}`", fields[0])))?;
            let value: usize = fields[1]
                .parse()
                .map_err(|_| err(format!("bad list size `{}`", fields[1])))?;
            if v >= n {
                return Err(err(format!("vertex {v} out of range for n = {n}")));
            }
            if f[v].replace(value).is_some() {
                return Err(err(format!("vertex {v} listed twice")));
            }
        }
        f.into_iter()
            .enumerate()
            .map(|(v, x)| {
                x.ok_or_else(|| Error::Invalid(format!("no list size given for vertex {v}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(ListSizeAssignment::new)
    }

    pub fn to_text(&self) -> String {
        self.f
            .iter()
            .enumerate()
            .map(|(v, x)| format!("{v} {x}\n"))
            .collect()
    }
}
