//! Alon–Tarsi orientations.
//!
//! `|EE(D) - EO(D)|` depends only on the out-degree sequence of `D` (it is
//! the absolute value of a coefficient of the graph polynomial), so it is
//! enough to test one representative orientation per admissible
//! out-degree sequence.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::ListSizeAssignment;
use crate::error::Result;
use crate::graph::Graph;
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ATVerdict {
    pub is_at: bool,
    /// Arcs `(tail, head)` of an orientation with unequal counts.
    pub witness: Option<Vec<(usize, usize)>>,
    /// Even and odd spanning Eulerian sub-digraph counts at the witness.
    pub parity: Option<(u64, u64)>,
    pub sequences_checked: usize,
}

pub fn is_fat(g: &Graph, f: &ListSizeAssignment) -> Result<ATVerdict> {
    is_fat_with(g, f, &Limits::default())
}

pub fn is_fat_with(g: &Graph, f: &ListSizeAssignment, limits: &Limits) -> Result<ATVerdict> {
    Limits::check("f-AT search order", limits.max_at_order, g.order())?;
    Limits::check("f-AT search size", limits.max_at_size, g.size())?;
    f.check_covers(g)?;
    let n = g.order();
    let caps: Vec<usize> = (0..n)
        .map(|v| f.get(v).saturating_sub(1).min(g.degree(v)))
        .collect();
    let mut verdict = ATVerdict {
        is_at: false,
        witness: None,
        parity: None,
        sequences_checked: 0,
    };
    if f.values().iter().any(|&x| x == 0) {
        return Ok(verdict);
    }
    let m = g.size();
    if caps.iter().sum::<usize>() < m {
        return Ok(verdict);
    }
    // suffix sums of caps bound the remaining budget
    let mut suffix = vec![0usize; n + 1];
    for v in (0..n).rev() {
        suffix[v] = suffix[v + 1] + caps[v];
    }
    let mut seq = vec![0usize; n];
    search(g, &caps, &suffix, 0, m, &mut seq, &mut verdict);
    Ok(verdict)
}

fn search(
    g: &Graph,
    caps: &[usize],
    suffix: &[usize],
    v: usize,
    remaining: usize,
    seq: &mut Vec<usize>,
    verdict: &mut ATVerdict,
) -> bool {
    let n = caps.len();
    if v == n {
        if remaining != 0 {
            return false;
        }
        let Some(arcs) = realize(g, seq) else {
            return false;
        };
        verdict.sequences_checked += 1;
        let (even, odd) = eulerian_counts(n, &arcs);
        if even != odd {
            verdict.is_at = true;
            verdict.witness = Some(arcs);
            verdict.parity = Some((even, odd));
            return true;
        }
        return false;
    }
    let lo = remaining.saturating_sub(suffix[v + 1]);
    let hi = caps[v].min(remaining);
    for d in lo..=hi {
        seq[v] = d;
        if search(g, caps, suffix, v + 1, remaining - d, seq, verdict) {
            return true;
        }
    }
    false
}

/// An orientation with out-degree sequence `target`, if one exists.
pub(crate) fn realize(g: &Graph, target: &[usize]) -> Option<Vec<(usize, usize)>> {
    let n = g.order();
    // out[v] lists current heads of arcs leaving v
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in g.edges() {
        out[u].push(v);
    }
    loop {
        let Some(a) = (0..n).find(|&v| out[v].len() > target[v]) else {
            break;
        };
        // BFS along arcs from a to a vertex with spare out-degree
        let mut prev = vec![usize::MAX; n];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        let mut end = None;
        while let Some(u) = queue.pop_front() {
            if u != a && out[u].len() < target[u] {
                end = Some(u);
                break;
            }
            for &w in &out[u] {
                if prev[w] == usize::MAX {
                    prev[w] = u;
                    queue.push_back(w);
                }
            }
        }
        let b = end?;
        let mut cur = b;
        while cur != a {
            let p = prev[cur];
            let pos = out[p].iter().position(|&w| w == cur).expect("arc on path");
            out[p].swap_remove(pos);
            out[cur].push(p);
            cur = p;
        }
    }
    let mut arcs: Vec<(usize, usize)> = out
        .iter()
        .enumerate()
        .flat_map(|(u, heads)| heads.iter().map(move |&w| (u, w)))
        .collect();
    arcs.sort_unstable();
    Some(arcs)
}

const SHIFT: u32 = 5;
const OFFSET: i64 = 16;

/// Counts spanning Eulerian sub-digraphs (in-degree equals out-degree
/// everywhere) by the parity of their arc count.
pub(crate) fn eulerian_counts(n: usize, arcs: &[(usize, usize)]) -> (u64, u64) {
    debug_assert!(n <= 12);
    // process arcs by their later endpoint so vertices close early
    let mut order: Vec<(usize, usize)> = arcs.to_vec();
    order.sort_by_key(|&(a, b)| (a.max(b), a.min(b)));
    let mut last = vec![usize::MAX; n];
    for (i, &(a, b)) in order.iter().enumerate() {
        last[a] = i;
        last[b] = i;
    }
    let base: u64 = (0..n).fold(0, |acc, v| acc | ((OFFSET as u64) << (SHIFT * v as u32)));
    let mut states: HashMap<u64, (u64, u64)> = HashMap::from([(base, (1, 0))]);
    for (i, &(a, b)) in order.iter().enumerate() {
        let mut next: HashMap<u64, (u64, u64)> = HashMap::with_capacity(states.len() * 2);
        let closing: Vec<usize> = [a, b].into_iter().filter(|&v| last[v] == i).collect();
        let balanced = |key: u64| {
            closing
                .iter()
                .all(|&v| (key >> (SHIFT * v as u32)) & 31 == OFFSET as u64)
        };
        for (&key, &(even, odd)) in &states {
            if balanced(key) {
                let e = next.entry(key).or_insert((0, 0));
                e.0 += even;
                e.1 += odd;
            }
            let taken = key + (1u64 << (SHIFT * a as u32)) - (1u64 << (SHIFT * b as u32));
            if balanced(taken) {
                let e = next.entry(taken).or_insert((0, 0));
                e.0 += odd;
                e.1 += even;
            }
        }
        states = next;
    }
    states.get(&base).copied().unwrap_or((0, 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn constant(g: &Graph, c: usize) -> ListSizeAssignment {
        ListSizeAssignment::constant(g.order(), c)
    }

    #[test]
    fn cycles() {
        let c4 = Graph::cycle(4);
        let v = is_fat(&c4, &constant(&c4, 2)).unwrap();
        assert!(v.is_at);
        assert_eq!(v.parity, Some((2, 0)));
        let c3 = Graph::cycle(3);
        assert!(!is_fat(&c3, &constant(&c3, 2)).unwrap().is_at);
        let c5 = Graph::cycle(5);
        assert!(!is_fat(&c5, &constant(&c5, 2)).unwrap().is_at);
        let c6 = Graph::cycle(6);
        assert!(is_fat(&c6, &constant(&c6, 2)).unwrap().is_at);
    }

    #[test]
    fn single_vertex_and_cliques() {
        let k1 = Graph::empty(1);
        let v = is_fat(&k1, &constant(&k1, 1)).unwrap();
        assert!(v.is_at);
        assert_eq!(v.parity, Some((1, 0)));
        assert!(!is_fat(&k1, &constant(&k1, 0)).unwrap().is_at);
        for n in 3..6 {
            let k = Graph::complete(n);
            assert!(!is_fat(&k, &constant(&k, n - 1)).unwrap().is_at);
            assert!(is_fat(&k, &constant(&k, n)).unwrap().is_at);
        }
    }

    #[test]
    fn witness_respects_caps() {
        let g = Graph::petersen();
        let f = constant(&g, 3);
        let v = is_fat(&g, &f).unwrap();
        if let Some(arcs) = v.witness {
            let mut out = vec![0; g.order()];
            for (a, b) in &arcs {
                assert!(g.has_edge(*a, *b));
                out[*a] += 1;
            }
            assert!(out.iter().all(|&d| d <= 2));
            assert_eq!(arcs.len(), g.size());
        }
    }

    #[test]
    fn guard() {
        let g = Graph::complete(13);
        assert!(is_fat(&g, &constant(&g, 12)).unwrap_err().is_guard());
    }

    #[test]
    fn realize_rejects_impossible() {
        // all arcs cannot leave one leaf of a star
        let s = Graph::star(3);
        assert!(realize(&s, &[0, 3, 0, 0]).is_none());
        assert!(realize(&s, &[3, 0, 0, 0]).is_some());
    }
}
