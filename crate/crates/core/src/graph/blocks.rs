use serde::{Deserialize, Serialize};

use super::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockKind {
    /// Includes `K2` (bridges) and `K3`.
    Complete,
    /// Odd cycles of length at least five.
    OddCycle,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    pub kind: BlockKind,
}

impl Block {
    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSet,
}

impl BlockDecomposition {
    /// Blocks containing at most one cut vertex.
    pub fn endblocks(&self) -> impl Iterator<Item = &Block> + '_ {
        self.blocks.iter().filter(|b| {
            b.vertices
                .iter()
                .filter(|v| self.cut_vertices.contains(v))
                .count()
                <= 1
        })
    }

    pub fn is_cut_vertex(&self, v: usize) -> bool {
        self.cut_vertices.contains(&v)
    }

    /// Indices of the blocks containing `v`, for every vertex of a graph on `n` vertices.
    pub fn blocks_by_vertex(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); n];
        for (i, b) in self.blocks.iter().enumerate() {
            for &v in &b.vertices {
                out[v].push(i);
            }
        }
        out
    }
}

fn classify(g: &Graph, vertices: &[usize]) -> BlockKind {
    let t = vertices.len();
    let e: usize = vertices
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|w| vertices.binary_search(w).is_ok())
                .count()
        })
        .sum::<usize>()
        / 2;
    if e == t * (t - 1) / 2 {
        BlockKind::Complete
    } else if t % 2 == 1 && e == t {
        // a 2-connected graph with as many edges as vertices is a cycle
        BlockKind::OddCycle
    } else {
        BlockKind::Other
    }
}

/// Biconnected components (with bridges as `K2` blocks) and cut vertices.
/// Isolated vertices belong to no block.
pub fn block_decompose(g: &Graph) -> BlockDecomposition {
    let n = g.order();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut time = 0usize;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, next neighbor index)
        let mut stack = vec![(root, 0usize)];
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if *idx < g.degree(v) {
                let w = g.neighbors(v)[*idx];
                *idx += 1;
                if disc[w] == UNSEEN {
                    parent[w] = v;
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push((v, w));
                    stack.push((w, 0));
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                let p = parent[v];
                if p == UNSEEN {
                    continue;
                }
                low[p] = low[p].min(low[v]);
                if low[v] >= disc[p] {
                    let mut verts = Vec::new();
                    while let Some((a, b)) = edge_stack.pop() {
                        verts.push(a);
                        verts.push(b);
                        if (a, b) == (p, v) {
                            break;
                        }
                    }
                    verts.sort_unstable();
                    verts.dedup();
                    let kind = classify(g, &verts);
                    blocks.push(Block {
                        vertices: verts,
                        kind,
                    });
                }
            }
        }
    }

    blocks.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    let mut count = vec![0usize; n];
    for b in &blocks {
        for &v in &b.vertices {
            count[v] += 1;
        }
    }
    let cut_vertices = (0..n).filter(|&v| count[v] >= 2).collect();
    BlockDecomposition {
        blocks,
        cut_vertices,
    }
}
