//! Gallai trees: connected graphs whose blocks are complete graphs or odd
//! cycles, and the statistics `q`, `β`, `c*` used by the bound machinery.

mod canon;
mod enumerate;
mod export;

pub use canon::canonical_code;
pub use enumerate::{enumerate_gallai_trees, enumerate_gallai_trees_with};
pub use export::{catalog_sidecar, export_catalog, CatalogEntry, CatalogSidecar, CATALOG_SCHEMA_VERSION};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    block_decompose, clique_vertices, independence_number, BlockDecomposition, BlockKind, Graph,
    VertexSet,
};

/// Every block of every component is complete or an odd cycle.
pub fn is_gallai_forest(g: &Graph) -> bool {
    block_decompose(g)
        .blocks
        .iter()
        .all(|b| b.kind != BlockKind::Other)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GallaiTree {
    graph: Graph,
    decomposition: BlockDecomposition,
}

impl GallaiTree {
    pub fn new(graph: Graph) -> Result<Self> {
        if graph.order() == 0 || !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let decomposition = block_decompose(&graph);
        if decomposition.blocks.iter().any(|b| b.kind == BlockKind::Other) {
            return Err(Error::Invalid(
                "graph has a block that is neither complete nor an odd cycle".into(),
            ));
        }
        Ok(GallaiTree {
            graph,
            decomposition,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn decomposition(&self) -> &BlockDecomposition {
        &self.decomposition
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn canonical_code(&self) -> String {
        canonical_code(&self.graph, &self.decomposition)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeStats {
    pub order: usize,
    pub size: usize,
    pub q: usize,
    pub beta: usize,
    /// `K_{k-1} ⊆ T`.
    pub has_clique: bool,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LStats {
    pub components: usize,
    pub c_star: usize,
    pub q: usize,
    pub beta: usize,
}

/// Non-cut vertices lying in a `K_{k-1}`, with cut status taken in `g`.
fn q_count(g: &Graph, dec: &BlockDecomposition, k: usize) -> usize {
    clique_vertices(g, k - 1)
        .iter()
        .filter(|&&v| !dec.is_cut_vertex(v))
        .count()
}

/// Independence number of the subgraph induced on vertices of degree `k-1`
/// (degrees measured in `g`).
fn beta_count(g: &Graph, k: usize) -> Result<usize> {
    let top: VertexSet = g.vertices().filter(|&v| g.degree(v) == k - 1).collect();
    independence_number(&g.induced(top).graph)
}

pub fn tree_stats(t: &GallaiTree, k: usize) -> Result<TreeStats> {
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    let g = &t.graph;
    if g.max_degree() > k - 1 {
        return Err(Error::DegreeAbove {
            found: g.max_degree(),
            allowed: k - 1,
        });
    }
    let cliques = clique_vertices(g, k - 1);
    Ok(TreeStats {
        order: g.order(),
        size: g.size(),
        q: q_count(g, &t.decomposition, k),
        beta: beta_count(g, k)?,
        has_clique: !cliques.is_empty(),
        k,
    })
}

/// Statistics of a (possibly disconnected) graph playing the role of the
/// low-vertex subgraph.
pub fn l_stats(g: &Graph, k: usize) -> Result<LStats> {
    if k < 3 {
        return Err(Error::KTooSmall { k, min: 3 });
    }
    let dec = block_decompose(g);
    let components = g.components();
    let c_star = components
        .iter()
        .filter(|c| !clique_vertices(&g.induced(c.iter().copied()).graph, k - 1).is_empty())
        .count();
    Ok(LStats {
        components: components.len(),
        c_star,
        q: q_count(g, &dec, k),
        beta: beta_count(g, k)?,
    })
}
