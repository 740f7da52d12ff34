//! Exponential-time exact searches. Correctness over speed: these are the
//! oracles every audit trusts, so each is a plain branch-and-bound.

use super::{Graph, VertexSet};
use crate::error::Result;
use crate::limits::Limits;

fn max_weight_independent(masks: &[u64], weights: &[u64], candidates: u64) -> u64 {
    fn rec(masks: &[u64], weights: &[u64], cand: u64, current: u64, best: &mut u64) {
        if cand == 0 {
            *best = (*best).max(current);
            return;
        }
        let mut bound = current;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            bound += weights[v];
        }
        if bound <= *best {
            return;
        }
        let mut pick = cand.trailing_zeros() as usize;
        let mut pick_deg = 0;
        let mut rest = cand;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d = (masks[v] & cand).count_ones();
            if d > pick_deg {
                pick = v;
                pick_deg = d;
            }
        }
        let bit = 1u64 << pick;
        if pick_deg == 0 {
            // no conflicts left: take everything
            rec(masks, weights, 0, bound, best);
            return;
        }
        rec(masks, weights, cand & !masks[pick] & !bit, current + weights[pick], best);
        rec(masks, weights, cand & !bit, current, best);
    }
    let mut best = 0;
    rec(masks, weights, candidates, 0, &mut best);
    best
}

pub fn independence_number(g: &Graph) -> Result<usize> {
    independence_number_with(g, &Limits::default())
}

pub fn independence_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    Limits::check("independence number", limits.max_search_order, g.order())?;
    let masks = g.masks();
    let weights = vec![1u64; g.order()];
    Ok(max_weight_independent(&masks, &weights, full_mask(g.order())) as usize)
}

/// Maximum of `‖I, V \ I‖` over independent sets `I`, optionally with
/// `I ⊆ restrict`. For independent `I` this is the degree sum of `I`.
pub fn mic(g: &Graph, restrict: Option<&VertexSet>) -> Result<usize> {
    mic_with(g, restrict, &Limits::default())
}

pub fn mic_with(g: &Graph, restrict: Option<&VertexSet>, limits: &Limits) -> Result<usize> {
    Limits::check("mic", limits.max_search_order, g.order())?;
    let masks = g.masks();
    let weights: Vec<u64> = g.vertices().map(|v| g.degree(v) as u64).collect();
    let cand = match restrict {
        Some(set) => set
            .iter()
            .filter(|&&v| v < g.order())
            .fold(0u64, |m, &v| m | (1 << v)),
        None => full_mask(g.order()),
    };
    Ok(max_weight_independent(&masks, &weights, cand) as usize)
}

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn for_each_clique(g: &Graph, t: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    fn extend(
        g: &Graph,
        t: usize,
        clique: &mut Vec<usize>,
        cand: &[usize],
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if clique.len() == t {
            return visit(clique);
        }
        if clique.len() + cand.len() < t {
            return true;
        }
        for (i, &w) in cand.iter().enumerate() {
            let next: Vec<usize> = cand[i + 1..]
                .iter()
                .copied()
                .filter(|&x| g.has_edge(w, x))
                .collect();
            clique.push(w);
            let go_on = extend(g, t, clique, &next, visit);
            clique.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
    let all: Vec<usize> = g.vertices().collect();
    let mut clique = Vec::with_capacity(t);
    extend(g, t, &mut clique, &all, &mut visit);
}

/// Vertices lying in at least one clique of order `t`.
pub fn clique_vertices(g: &Graph, t: usize) -> VertexSet {
    if t <= 1 {
        return g.vertices().collect();
    }
    let mut marked = VertexSet::new();
    for_each_clique(g, t, |c| {
        marked.extend(c.iter().copied());
        marked.len() < g.order()
    });
    marked
}

pub fn contains_clique(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let mut found = false;
    for_each_clique(g, t, |_| {
        found = true;
        false
    });
    found
}

/// Whether `g` has a proper colouring with `colors` colours.
pub fn is_colorable(g: &Graph, colors: usize) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    if colors == 0 {
        return false;
    }
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut color = vec![usize::MAX; n];

    fn rec(g: &Graph, order: &[usize], i: usize, used: usize, colors: usize, color: &mut [usize]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        let limit = (used + 1).min(colors);
        for c in 0..limit {
            if g.neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                if rec(g, order, i + 1, used.max(c + 1), colors, color) {
                    return true;
                }
                color[v] = usize::MAX;
            }
        }
        false
    }
    rec(g, &order, 0, 0, colors, &mut color)
}

pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, &Limits::default())
}

pub fn chromatic_number_with(g: &Graph, limits: &Limits) -> Result<usize> {
    Limits::check("chromatic number", limits.max_chromatic_order, g.order())?;
    Ok((0..=g.order()).find(|&c| is_colorable(g, c)).unwrap_or(g.order()))
}

/// `χ(g) = k` and deleting any edge drops the chromatic number below `k`.
pub fn is_k_critical(g: &Graph, k: usize) -> Result<bool> {
    if chromatic_number(g)? != k {
        return Ok(false);
    }
    if k == 0 {
        return Ok(true);
    }
    Ok(g.edges().all(|(u, v)| is_colorable(&g.without_edge(u, v), k - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|s| g.edges().all(|(u, v)| s & (1 << u) == 0 || s & (1 << v) == 0))
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    fn brute_mic(g: &Graph, restrict: Option<&VertexSet>) -> usize {
        let n = g.order();
        (0u32..1 << n)
            .filter(|s| g.edges().all(|(u, v)| s & (1 << u) == 0 || s & (1 << v) == 0))
            .filter(|s| restrict.map_or(true, |r| (0..n).all(|v| s & (1 << v) == 0 || r.contains(&v))))
            .map(|s| {
                g.edges()
                    .filter(|&(u, v)| ((s >> u) & 1) != ((s >> v) & 1))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(independence_number(&Graph::complete(6)).unwrap(), 1);
        assert_eq!(independence_number(&Graph::cycle(5)).unwrap(), 2);
        let p = Graph::petersen();
        assert_eq!(brute_alpha(&p), 4);
        assert_eq!(independence_number(&p).unwrap(), 4);
        assert_eq!(independence_number(&Graph::empty(0)).unwrap(), 0);
    }

    #[test]
    fn alpha_guard() {
        let err = independence_number(&Graph::empty(25)).unwrap_err();
        assert!(err.is_guard());
    }

    #[test]
    fn mic_examples() {
        assert_eq!(mic(&Graph::complete(4), None).unwrap(), 3);
        assert_eq!(brute_mic(&Graph::cycle(5), None), 4);
        assert_eq!(mic(&Graph::cycle(5), None).unwrap(), 4);
        let j = Graph::cycle(5).join(&Graph::complete(2));
        let side: VertexSet = [5, 6].into_iter().collect();
        assert_eq!(brute_mic(&j, Some(&side)), 6);
        assert_eq!(mic(&j, Some(&side)).unwrap(), 6);
        assert_eq!(mic(&j, None).unwrap(), 8);
        assert_eq!(mic(&Graph::empty(3), None).unwrap(), 0);
    }

    #[test]
    fn clique_vertex_examples() {
        assert!(clique_vertices(&Graph::cycle(5), 3).is_empty());
        let bowtie = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(clique_vertices(&bowtie, 3).len(), 5);
        let k5e = Graph::complete(5).without_edge(0, 1);
        // brute force over all 4-subsets
        let mut brute = VertexSet::new();
        for s in 0u32..32 {
            if s.count_ones() == 4
                && (0..5).all(|a| (0..5).all(|b| a == b || s & (1 << a) == 0 || s & (1 << b) == 0 || k5e.has_edge(a, b)))
            {
                brute.extend((0..5).filter(|v| s & (1 << v) != 0));
            }
        }
        assert_eq!(brute.len(), 5);
        assert_eq!(clique_vertices(&k5e, 4), brute);
        assert_eq!(clique_vertices(&Graph::path(3), 1).len(), 3);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Graph::cycle(5)).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::petersen()).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::empty(0)).unwrap(), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)).unwrap(), 1);
        let m = Graph::moser_spindle();
        assert_eq!(chromatic_number(&m).unwrap(), 4);
        assert!(is_k_critical(&m, 4).unwrap());
        assert!(is_k_critical(&Graph::cycle(5).join(&Graph::complete(2)), 5).unwrap());
        assert!(!is_k_critical(&Graph::petersen(), 3).unwrap());
        assert!(chromatic_number(&Graph::empty(17)).unwrap_err().is_guard());
    }
}
