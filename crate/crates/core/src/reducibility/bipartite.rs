use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gallai::l_stats;
use crate::graph::{clique_vertices, degree_partition, Graph, VertexSet};

/// One part is `Y`; the other is the components of `G - Y`, with `y ~ T`
/// iff `y` has a neighbour in `W^k(T)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBipartite {
    pub y: Vec<usize>,
    /// Components of `G - Y`, vertex ids in `G`.
    pub components: Vec<Vec<usize>>,
    /// `W^k(T)` for each component, ids in `G`.
    pub clique_vertices: Vec<Vec<usize>>,
    /// `(y, component index)`.
    pub edges: Vec<(usize, usize)>,
}

impl ComponentBipartite {
    pub fn y_degree(&self, y: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == y).count()
    }

    pub fn component_degree(&self, i: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == i).count()
    }

    /// Minimum degree over both parts; `None` when there are no nodes.
    pub fn min_degree(&self) -> Option<usize> {
        let ys = self.y.iter().map(|&y| self.y_degree(y));
        let ts = (0..self.components.len()).map(|i| self.component_degree(i));
        ys.chain(ts).min()
    }
}

pub fn build_component_bipartite(g: &Graph, y: &VertexSet, k: usize) -> Result<ComponentBipartite> {
    if let Some(&bad) = y.iter().find(|&&v| v >= g.order()) {
        return Err(Error::Invalid(format!("vertex {bad} is not in the graph")));
    }
    if k < 2 {
        return Err(Error::KTooSmall { k, min: 2 });
    }
    let rest = g.induced(g.vertices().filter(|v| !y.contains(v)));
    let mut components = Vec::new();
    let mut cliques = Vec::new();
    for comp in rest.graph.components() {
        let ids: Vec<usize> = comp.iter().map(|&i| rest.vertices[i]).collect();
        let sub = g.induced(ids.iter().copied());
        let w: Vec<usize> = clique_vertices(&sub.graph, k - 1)
            .into_iter()
            .map(|i| sub.vertices[i])
            .collect();
        components.push(ids);
        cliques.push(w);
    }
    let mut edges = Vec::new();
    for &v in y {
        for (i, w) in cliques.iter().enumerate() {
            if w.iter().any(|&u| g.has_edge(v, u)) {
                edges.push((v, i));
            }
        }
    }
    Ok(ComponentBipartite {
        y: y.iter().copied().collect(),
        components,
        clique_vertices: cliques,
        edges,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct A2Stub {
    /// The vertex of `L'` the stub stands for.
    pub owner: usize,
    /// Its unique neighbour in `B`.
    pub target: usize,
}

/// The auxiliary bipartite graph `F` with parts `B = V(H⁻)` and
/// `A = A1 ⊎ A2 ⊎ A3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryBipartite {
    pub k: usize,
    pub b: Vec<usize>,
    /// Components of the low subgraph containing `K_{k-1}`.
    pub a1: Vec<Vec<usize>>,
    /// `(A1 index, y)`.
    pub a1_edges: Vec<(usize, usize)>,
    pub a2: Vec<A2Stub>,
    /// Owner `y` of each `A3` stub.
    pub a3: Vec<usize>,
    pub w: Vec<usize>,
    pub l_prime: Vec<usize>,
    pub q: usize,
    /// `‖H, L‖`, `‖H, W‖`, `‖H⁺, L'‖`.
    pub h_l_edges: usize,
    pub h_w_edges: usize,
    pub high_lprime_edges: usize,
}

impl AuxiliaryBipartite {
    pub fn size(&self) -> usize {
        self.a1_edges.len() + self.a2.len() + self.a3.len()
    }

    pub fn degree_of(&self, y: usize) -> usize {
        self.a1_edges.iter().filter(|e| e.1 == y).count()
            + self.a2.iter().filter(|s| s.target == y).count()
            + self.a3.iter().filter(|&&o| o == y).count()
    }

    /// `|A2| = ‖H, L‖ - ‖H, W‖ - ‖H⁺, L'‖`, which holds by construction.
    pub fn a2_identity(&self) -> (usize, usize) {
        (
            self.a2.len(),
            self.h_l_edges - self.h_w_edges - self.high_lprime_edges,
        )
    }

    /// `(|A2|, ‖H, L‖ - q)`. The first never exceeds the second when the low
    /// subgraph is a Gallai forest without `K_k` components and `k >= 4`;
    /// equality holds iff `‖H⁺, L'‖ = 0`.
    pub fn a2_against_q(&self) -> (usize, i64) {
        (self.a2.len(), self.h_l_edges as i64 - self.q as i64)
    }

    /// `F` as a graph: `B` first, then `A1`, `A2`, `A3`.
    pub fn as_graph(&self) -> Graph {
        let nb = self.b.len();
        let n1 = self.a1.len();
        let n2 = self.a2.len();
        let mut g = Graph::empty(nb + n1 + n2 + self.a3.len());
        let pos = |y: usize| self.b.iter().position(|&b| b == y).expect("y in B");
        for &(i, y) in &self.a1_edges {
            g.add_edge(pos(y), nb + i).expect("fresh edge");
        }
        for (i, s) in self.a2.iter().enumerate() {
            g.add_edge(pos(s.target), nb + n1 + i).expect("fresh edge");
        }
        for (i, &y) in self.a3.iter().enumerate() {
            g.add_edge(pos(y), nb + n1 + n2 + i).expect("fresh edge");
        }
        g
    }
}

pub fn build_auxiliary_f(g: &Graph, k: usize) -> Result<AuxiliaryBipartite> {
    let delta = g.min_degree().unwrap_or(0);
    if g.order() == 0 || delta + 1 != k {
        return Err(Error::MinDegree {
            expected: k.saturating_sub(1),
            found: delta,
        });
    }
    let part = degree_partition(g, k)?;
    let low = g.induced(part.low.iter().copied());
    let w: VertexSet = clique_vertices(&low.graph, k - 1)
        .into_iter()
        .map(|i| low.vertices[i])
        .collect();
    let l_prime: VertexSet = part.low.difference(&w).copied().collect();
    let b: Vec<usize> = part.mid.iter().copied().collect();

    let mut a1 = Vec::new();
    for comp in low.graph.components() {
        let ids: Vec<usize> = comp.iter().map(|&i| low.vertices[i]).collect();
        if ids.iter().any(|v| w.contains(v)) {
            a1.push(ids);
        }
    }
    let mut a1_edges = Vec::new();
    for (i, comp) in a1.iter().enumerate() {
        for &y in &b {
            if comp
                .iter()
                .any(|&v| w.contains(&v) && g.has_edge(y, v))
            {
                a1_edges.push((i, y));
            }
        }
    }
    let mut a2 = Vec::new();
    for &v in &l_prime {
        for &y in g.neighbors(v) {
            if part.mid.contains(&y) {
                a2.push(A2Stub { owner: v, target: y });
            }
        }
    }
    let mut a3 = Vec::new();
    for &y in &b {
        let dh = g.neighbors(y).iter().filter(|u| part.all_high.contains(u)).count();
        a3.extend(std::iter::repeat(y).take(dh));
    }
    let stats = l_stats(&low.graph, k)?;
    Ok(AuxiliaryBipartite {
        k,
        b,
        a1,
        a1_edges,
        a2,
        a3,
        q: stats.q,
        h_l_edges: g.edges_between(&part.all_high, &part.low),
        h_w_edges: g.edges_between(&part.all_high, &w),
        high_lprime_edges: g.edges_between(&part.high, &l_prime),
        w: w.into_iter().collect(),
        l_prime: l_prime.into_iter().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_triangles_and_y() -> Graph {
        // triangles {0,1,2} and {3,4,5} joined by 2-3; y = 6 sees 0,1,4,5
        Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (2, 3),
                (0, 6),
                (1, 6),
                (4, 6),
                (5, 6),
            ],
        )
        .unwrap()
    }

    #[test]
    fn component_bipartite_examples() {
        let g = Graph::complete(3)
            .disjoint_union(&Graph::complete(3))
            .disjoint_union(&Graph::empty(1));
        let mut g = g;
        g.add_edge(6, 0).unwrap();
        g.add_edge(6, 3).unwrap();
        let y: VertexSet = [6].into_iter().collect();
        let bip = build_component_bipartite(&g, &y, 4).unwrap();
        assert_eq!(bip.y_degree(6), 2);

        let none = build_component_bipartite(&g, &VertexSet::new(), 4).unwrap();
        assert!(none.edges.is_empty());
        assert_eq!(none.components.len(), 1);

        let all: VertexSet = g.vertices().collect();
        let full = build_component_bipartite(&g, &all, 4).unwrap();
        assert!(full.components.is_empty());
    }

    #[test]
    fn join_has_empty_b() {
        let g = Graph::cycle(5).join(&Graph::complete(2));
        let f = build_auxiliary_f(&g, 5).unwrap();
        assert!(f.b.is_empty() && f.size() == 0);
        let (a2, rhs) = f.a2_identity();
        assert_eq!(a2, rhs);
        assert_eq!(f.a2_against_q(), (0, 10));
    }

    #[test]
    fn two_triangles_with_y() {
        let g = two_triangles_and_y();
        let f = build_auxiliary_f(&g, 4).unwrap();
        assert_eq!(f.b, vec![6]);
        assert_eq!(f.a1.len(), 1);
        assert!(f.a2.is_empty() && f.a3.is_empty());
        assert_eq!(f.a1_edges.len(), 1);
        assert_eq!(f.degree_of(6), 1);
        let (a2, rhs) = f.a2_identity();
        assert_eq!(a2, rhs);
    }

    #[test]
    fn regular_graph_has_empty_f() {
        let f = build_auxiliary_f(&Graph::petersen(), 4).unwrap();
        assert!(f.b.is_empty() && f.size() == 0);
        assert!(build_auxiliary_f(&Graph::petersen(), 5).is_err());
    }
}
