//! Hypothesis checkers for the reducible configurations used when
//! extracting an AT-reduction from a violated inequality.

use serde::{Deserialize, Serialize};

use super::{build_component_bipartite, is_fat_with, ATVerdict, ListSizeAssignment};
use crate::error::{Error, Result};
use crate::gallai::is_gallai_forest;
use crate::graph::{contains_clique, Graph, VertexSet};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub configuration: String,
    pub holds: bool,
    /// One entry per failed hypothesis.
    pub failures: Vec<String>,
    /// The conclusion's list sizes on the whole input, when it names a
    /// fixed assignment.
    pub f: Option<ListSizeAssignment>,
}

impl HypothesisReport {
    fn new(configuration: &str, failures: Vec<String>, f: Option<ListSizeAssignment>) -> Self {
        HypothesisReport {
            configuration: configuration.into(),
            holds: failures.is_empty(),
            failures,
            f,
        }
    }

    /// Runs the f-AT check on the whole input with the reported `f`.
    pub fn certify(&self, g: &Graph, limits: &Limits) -> Result<Option<ATVerdict>> {
        match (&self.f, self.holds) {
            (Some(f), true) => is_fat_with(g, f, limits).map(Some),
            _ => Ok(None),
        }
    }
}

/// Failures for the shared hypotheses: no `K_k`, the components of `G - Y`
/// are Gallai trees of maximum degree at most `k-1` other than `K_k`, and
/// every vertex outside `Y` has degree at most `k-1` in `G`.
fn common_failures(g: &Graph, y: &VertexSet, k: usize) -> Vec<String> {
    let mut failures = Vec::new();
    if contains_clique(g, k) {
        failures.push(format!("contains K{k}"));
    }
    let rest = g.induced(g.vertices().filter(|v| !y.contains(v)));
    for comp in rest.graph.components() {
        let sub = rest.graph.induced(comp.iter().copied()).graph;
        let label: Vec<usize> = comp.iter().map(|&i| rest.vertices[i]).collect();
        if !is_gallai_forest(&sub) {
            failures.push(format!("component {label:?} is not a Gallai tree"));
        } else if sub.max_degree() + 1 > k {
            failures.push(format!("component {label:?} has maximum degree above {}", k - 1));
        }
    }
    for v in g.vertices().filter(|v| !y.contains(v)) {
        if g.degree(v) + 1 > k {
            failures.push(format!("vertex {v} outside Y has degree {}", g.degree(v)));
        }
    }
    failures
}

fn check_members(g: &Graph, y: &VertexSet) -> Result<()> {
    match y.iter().find(|&&v| v >= g.order()) {
        Some(v) => Err(Error::Invalid(format!("vertex {v} is not in the graph"))),
        None => Ok(()),
    }
}

/// A single high vertex `x` over components of `G - x` it reaches through
/// `W^k`, with `d(x) >= t + 2`. The conclusion is f-AT with `f(x) = d(x) - 1`
/// and `f = d` elsewhere.
pub fn check_configuration_type_one(g: &Graph, x: usize, k: usize) -> Result<HypothesisReport> {
    if k < 5 {
        return Err(Error::KTooSmall { k, min: 5 });
    }
    let y: VertexSet = [x].into_iter().collect();
    check_members(g, &y)?;
    let mut failures = common_failures(g, &y, k);
    let bip = build_component_bipartite(g, &y, k)?;
    let t = bip.components.len();
    for i in 0..t {
        if bip.component_degree(i) == 0 {
            failures.push(format!(
                "x has no neighbour in a K{} of component {:?}",
                k - 1,
                bip.components[i]
            ));
        }
    }
    if g.degree(x) < t + 2 {
        failures.push(format!("d(x) = {} < t + 2 = {}", g.degree(x), t + 2));
    }
    let f = g
        .vertices()
        .map(|v| if v == x { g.degree(v).saturating_sub(1) } else { g.degree(v) })
        .collect();
    Ok(HypothesisReport::new(
        "type-one",
        failures,
        Some(ListSizeAssignment::new(f)),
    ))
}

/// `k >= 7` and every node of the component bipartite graph has degree at
/// least 3.
pub fn check_multiple_high_configuration(
    g: &Graph,
    y: &VertexSet,
    k: usize,
) -> Result<HypothesisReport> {
    if k < 7 {
        return Err(Error::KTooSmall { k, min: 7 });
    }
    check_members(g, y)?;
    let mut failures = common_failures(g, y, k);
    let bip = build_component_bipartite(g, y, k)?;
    for &v in y {
        if bip.y_degree(v) < 3 {
            failures.push(format!("y = {v} has degree {} in B", bip.y_degree(v)));
        }
    }
    for (i, comp) in bip.components.iter().enumerate() {
        if bip.component_degree(i) < 3 {
            failures.push(format!(
                "component {comp:?} has degree {} in B",
                bip.component_degree(i)
            ));
        }
    }
    Ok(HypothesisReport::new("multiple-high", failures, None))
}

/// `k >= 5`, `d_B(y) >= 4` on `Y` and `d_B(T) >= 2` on the components.
pub fn check_lopsided_configuration(
    g: &Graph,
    y: &VertexSet,
    k: usize,
) -> Result<HypothesisReport> {
    if k < 5 {
        return Err(Error::KTooSmall { k, min: 5 });
    }
    check_members(g, y)?;
    let mut failures = common_failures(g, y, k);
    let bip = build_component_bipartite(g, y, k)?;
    for &v in y {
        if bip.y_degree(v) < 4 {
            failures.push(format!("y = {v} has degree {} in B", bip.y_degree(v)));
        }
    }
    for (i, comp) in bip.components.iter().enumerate() {
        if bip.component_degree(i) < 2 {
            failures.push(format!(
                "component {comp:?} has degree {} in B",
                bip.component_degree(i)
            ));
        }
    }
    Ok(HypothesisReport::new("lopsided", failures, None))
}
