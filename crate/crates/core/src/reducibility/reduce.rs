use serde::{Deserialize, Serialize};

use super::{is_fat_with, ATVerdict, ListSizeAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtReduction {
    /// Vertices of `H` in `G`, ascending.
    pub vertices: Vec<usize>,
    /// `f_H`, indexed like `vertices`.
    pub f: ListSizeAssignment,
    pub verdict: ATVerdict,
}

/// Repeatedly deletes a vertex whose current degree is at most `f(v)`;
/// returns what is left, if anything.
pub fn peel_degenerate(g: &Graph, f: &ListSizeAssignment) -> Result<Option<InducedSubgraph>> {
    f.check_covers(g)?;
    let n = g.order();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] <= f.get(v)).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in g.neighbors(v) {
            if alive[w] {
                degree[w] -= 1;
                if degree[w] == f.get(w) {
                    stack.push(w);
                }
            }
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
    Ok((!rest.is_empty()).then(|| g.induced(rest)))
}

pub fn at_reducible(g: &Graph, k: usize) -> Result<Option<AtReduction>> {
    at_reducible_with(g, k, &Limits::default())
}

/// The first nonempty induced subgraph `H` (by size, then lexicographically)
/// that is `f_H`-AT, or `None` when `g` is AT-irreducible.
pub fn at_reducible_with(g: &Graph, k: usize, limits: &Limits) -> Result<Option<AtReduction>> {
    let delta = g.min_degree().unwrap_or(0);
    if g.order() == 0 || delta + 1 != k {
        return Err(Error::MinDegree {
            expected: k.saturating_sub(1),
            found: delta,
        });
    }
    let all: Vec<usize> = g.vertices().collect();
    at_reducible_within(g, &all, limits)
}

/// As [`at_reducible_with`], restricted to subsets of `candidates`, with
/// `f_H` still measured against all of `g`.
pub fn at_reducible_within(
    g: &Graph,
    candidates: &[usize],
    limits: &Limits,
) -> Result<Option<AtReduction>> {
    Limits::check("AT-reduction search order", limits.max_at_order, candidates.len())?;
    let span = g.induced(candidates.iter().copied());
    Limits::check("AT-reduction search size", limits.max_at_size, span.graph.size())?;
    let delta = g.min_degree().unwrap_or(0);
    let mut cand = candidates.to_vec();
    cand.sort_unstable();
    cand.dedup();
    let useful = cand;
    let n = useful.len();
    for size in 1..=n {
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let verts: Vec<usize> = idx.iter().map(|&i| useful[i]).collect();
            if let Some(r) = try_subset(g, &verts, delta, limits)? {
                return Ok(Some(r));
            }
            // next combination
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    Ok(None)
}

fn try_subset(
    g: &Graph,
    verts: &[usize],
    delta: usize,
    limits: &Limits,
) -> Result<Option<AtReduction>> {
    let h = g.induced(verts.iter().copied());
    // f_H >= 1 everywhere and enough total capacity for an orientation
    let mut demand = 0usize;
    for (i, &v) in verts.iter().enumerate() {
        let dh = h.graph.degree(i);
        if delta + dh < g.degree(v) + 1 {
            return Ok(None);
        }
        demand += g.degree(v) + 2 - (delta + 1);
    }
    if h.graph.size() < demand {
        return Ok(None);
    }
    let f = ListSizeAssignment::reduction_target(g, verts);
    let verdict = is_fat_with(&h.graph, &f, limits)?;
    Ok(verdict.is_at.then(|| AtReduction {
        vertices: verts.to_vec(),
        f,
        verdict,
    }))
}
