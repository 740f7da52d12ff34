use std::collections::HashMap;

use super::GallaiTree;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;

/// One representative per isomorphism class of Gallai trees with at most
/// `max_n` vertices and maximum degree at most `k - 1`, sorted by
/// (order, size, canonical code).
pub fn enumerate_gallai_trees(max_n: usize, k: usize) -> Result<Vec<GallaiTree>> {
    enumerate_gallai_trees_with(max_n, k, &Limits::default())
}

pub fn enumerate_gallai_trees_with(
    max_n: usize,
    k: usize,
    limits: &Limits,
) -> Result<Vec<GallaiTree>> {
    if k < 4 {
        return Err(Error::KTooSmall { k, min: 4 });
    }
    if max_n == 0 {
        return Err(Error::OutOfRange {
            name: "max_n",
            value: "0".into(),
            range: ">= 1".into(),
        });
    }
    Limits::check("Gallai tree enumeration order", limits.max_tree_order, max_n)?;

    // levels[n] holds the distinct trees of order n, keyed by canonical code
    let mut levels: Vec<HashMap<String, GallaiTree>> = vec![HashMap::new(); max_n + 1];
    let k1 = GallaiTree::new(Graph::empty(1))?;
    levels[1].insert(k1.canonical_code(), k1);

    for n in 1..max_n {
        let current: Vec<GallaiTree> = levels[n].values().cloned().collect();
        for tree in &current {
            for grown in extensions(tree.graph(), k, max_n) {
                let t = GallaiTree::new(grown)?;
                let order = t.graph().order();
                levels[order].entry(t.canonical_code()).or_insert(t);
            }
        }
    }

    let mut out: Vec<(usize, usize, String, GallaiTree)> = levels
        .into_iter()
        .flat_map(|level| level.into_iter())
        .map(|(code, t)| (t.graph().order(), t.graph().size(), code, t))
        .collect();
    out.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
    Ok(out.into_iter().map(|(_, _, _, t)| t).collect())
}

/// Every graph obtained by gluing a new block at one vertex of `g`.
fn extensions(g: &Graph, k: usize, max_n: usize) -> Vec<Graph> {
    let n = g.order();
    let mut out = Vec::new();
    for v in g.vertices() {
        let room = (k - 1).saturating_sub(g.degree(v));
        for t in 2..k {
            if t - 1 > room || n + t - 1 > max_n {
                break;
            }
            let mut h = g.disjoint_union(&Graph::empty(t - 1));
            let members: Vec<usize> = std::iter::once(v).chain(n..n + t - 1).collect();
            for (i, &a) in members.iter().enumerate() {
                for &b in &members[i + 1..] {
                    h.add_edge(a, b).expect("fresh clique edge");
                }
            }
            out.push(h);
        }
        if room >= 2 {
            let mut l = 5;
            while n + l - 1 <= max_n {
                let mut h = g.disjoint_union(&Graph::empty(l - 1));
                let ring: Vec<usize> = std::iter::once(v).chain(n..n + l - 1).collect();
                for i in 0..l {
                    h.add_edge(ring[i], ring[(i + 1) % l]).expect("fresh cycle edge");
                }
                out.push(h);
                l += 2;
            }
        }
    }
    out
}
