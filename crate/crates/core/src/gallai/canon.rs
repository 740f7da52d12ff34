//! Canonical codes for Gallai trees.
//!
//! A Gallai tree is determined up to isomorphism by its block-cut tree
//! decorated with block shapes (`K_t` or `C_l`) and, for cycles, the cyclic
//! order of attachments. The code roots that tree at its centre (unique,
//! since all leaves are blocks) and serialises it with sorted children;
//! cycle blocks take the least reading over rotations and reflections.

use crate::graph::{BlockDecomposition, BlockKind, Graph};

struct Encoder<'a> {
    dec: &'a BlockDecomposition,
    by_vertex: Vec<Vec<usize>>,
    /// Cyclic vertex order for odd-cycle blocks.
    rings: Vec<Option<Vec<usize>>>,
}

impl<'a> Encoder<'a> {
    fn new(g: &'a Graph, dec: &'a BlockDecomposition) -> Self {
        let rings = dec
            .blocks
            .iter()
            .map(|b| (b.kind == BlockKind::OddCycle).then(|| ring_order(g, &b.vertices)))
            .collect();
        Encoder {
            dec,
            by_vertex: dec.blocks_by_vertex(g.order()),
            rings,
        }
    }

    fn vertex(&self, v: usize, parent_block: Option<usize>) -> String {
        let mut kids: Vec<String> = self.by_vertex[v]
            .iter()
            .filter(|&&b| Some(b) != parent_block)
            .map(|&b| self.block(b, v))
            .collect();
        kids.sort_unstable();
        format!("({})", kids.join(","))
    }

    fn block(&self, b: usize, parent: usize) -> String {
        let block = &self.dec.blocks[b];
        match &self.rings[b] {
            None => {
                let mut kids: Vec<String> = block
                    .vertices
                    .iter()
                    .filter(|&&u| u != parent)
                    .map(|&u| self.vertex(u, Some(b)))
                    .collect();
                kids.sort_unstable();
                format!("K{}[{}]", block.vertices.len(), kids.join(","))
            }
            Some(ring) => {
                let start = ring.iter().position(|&u| u == parent).expect("parent on ring");
                let l = ring.len();
                let forward: Vec<String> = (1..l)
                    .map(|i| self.vertex(ring[(start + i) % l], Some(b)))
                    .collect();
                let mut backward = forward.clone();
                backward.reverse();
                let a = forward.join(",");
                let r = backward.join(",");
                format!("C{}[{}]", l, a.min(r))
            }
        }
    }

    fn root_block(&self, b: usize) -> String {
        let block = &self.dec.blocks[b];
        match &self.rings[b] {
            None => {
                let mut kids: Vec<String> = block
                    .vertices
                    .iter()
                    .map(|&u| self.vertex(u, Some(b)))
                    .collect();
                kids.sort_unstable();
                format!("RK{}[{}]", block.vertices.len(), kids.join(","))
            }
            Some(ring) => {
                let l = ring.len();
                let codes: Vec<String> = ring.iter().map(|&u| self.vertex(u, Some(b))).collect();
                let mut best: Option<String> = None;
                for start in 0..l {
                    for dir in [1isize, -1] {
                        let reading: Vec<&str> = (0..l as isize)
                            .map(|i| {
                                let idx = (start as isize + dir * i).rem_euclid(l as isize);
                                codes[idx as usize].as_str()
                            })
                            .collect();
                        let s = reading.join(",");
                        if best.as_ref().map_or(true, |b| s < *b) {
                            best = Some(s);
                        }
                    }
                }
                format!("RC{}[{}]", l, best.unwrap_or_default())
            }
        }
    }
}

fn ring_order(g: &Graph, vertices: &[usize]) -> Vec<usize> {
    let inside = |w: &usize| vertices.binary_search(w).is_ok();
    let mut order = vec![vertices[0]];
    let mut prev = usize::MAX;
    let mut cur = vertices[0];
    loop {
        let next = g
            .neighbors(cur)
            .iter()
            .copied()
            .find(|w| inside(w) && *w != prev && (order.len() < 2 || *w != order[order.len() - 2]))
            .expect("cycle block is 2-regular");
        if next == vertices[0] {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    order
}

/// Isomorphism-invariant code of a connected Gallai tree, given its block
/// decomposition. Two Gallai trees are isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph, dec: &BlockDecomposition) -> String {
    let n = g.order();
    if n == 0 {
        return String::new();
    }
    if dec.blocks.is_empty() {
        return "V()".into();
    }
    let enc = Encoder::new(g, dec);
    let nb = dec.blocks.len();
    let cuts: Vec<usize> = dec.cut_vertices.iter().copied().collect();
    // block-cut tree: nodes 0..nb are blocks, nb.. are cut vertices
    let total = nb + cuts.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (ci, &c) in cuts.iter().enumerate() {
        for &b in &enc.by_vertex[c] {
            adj[nb + ci].push(b);
            adj[b].push(nb + ci);
        }
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; total];
    let mut remaining = total;
    let mut layer: Vec<usize> = (0..total).filter(|&x| degree[x] <= 1).collect();
    while remaining > 2 {
        let mut next = Vec::new();
        for &x in &layer {
            alive[x] = false;
            remaining -= 1;
        }
        for &x in &layer {
            for &y in &adj[x] {
                if alive[y] {
                    degree[y] -= 1;
                    if degree[y] == 1 {
                        next.push(y);
                    }
                }
            }
        }
        layer = next;
    }
    let centre: Vec<usize> = (0..total).filter(|&x| alive[x]).collect();
    // two survivors would be a block and a cut vertex; prefer the cut vertex
    let root = centre
        .iter()
        .copied()
        .find(|&x| x >= nb)
        .unwrap_or(centre[0]);
    if root >= nb {
        format!("V{}", enc.vertex(cuts[root - nb], None))
    } else {
        enc.root_block(root)
    }
}
