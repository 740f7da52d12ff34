//! Simple undirected graphs on dense vertex ids `0..n`, the edge-list text
//! format, block decomposition, and the exact exponential oracles.

mod blocks;
mod degree;
mod iso;
mod search;

pub use blocks::{block_decompose, Block, BlockDecomposition, BlockKind};
pub use degree::{degree_partition, DegreePartition};
pub use iso::is_isomorphic;
pub use search::{
    chromatic_number, chromatic_number_with, clique_vertices, contains_clique,
    independence_number, independence_number_with, is_colorable, is_k_critical, mic, mic_with,
};
pub(crate) use search::for_each_clique;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{from_usize, Rational};

pub type VertexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    size: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.order(),
            edges: self.edges().collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_edges(repr.n, repr.edges).map_err(serde::de::Error::custom)
    }
}

/// An induced subgraph together with the original id of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertices[i]` is the id in the parent graph of vertex `i`.
    pub vertices: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            size: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        if u >= n || v >= n {
            return Err(Error::Invalid(format!(
                "edge {u}-{v} out of range for {n} vertices"
            )));
        }
        if u == v {
            return Err(Error::Invalid(format!("loop at vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(Error::Invalid(format!("duplicate edge {u}-{v}"))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                self.size += 1;
                Ok(())
            }
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.iter().map(Vec::len).min()
    }

    /// `2‖G‖/|G|`; zero for the null graph.
    pub fn average_degree(&self) -> Rational {
        if self.order() == 0 {
            return from_usize(0);
        }
        from_usize(2 * self.size) / from_usize(self.order())
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.size == n * n.saturating_sub(1) / 2
    }

    /// Number of edges with one end in `a` and the other in `b` (disjoint sets).
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter()
            .map(|&u| self.adj[u].iter().filter(|v| b.contains(v)).count())
            .sum()
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`
    /// after sorting and deduplication.
    pub fn induced<I: IntoIterator<Item = usize>>(&self, vertices: I) -> InducedSubgraph {
        let set: VertexSet = vertices.into_iter().collect();
        let vertices: Vec<usize> = set.iter().copied().collect();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            g.adj[i] = self.adj[v]
                .iter()
                .filter(|&&w| index[w] != usize::MAX)
                .map(|&w| index[w])
                .collect();
            g.adj[i].sort_unstable();
        }
        g.size = g.adj.iter().map(Vec::len).sum::<usize>() / 2;
        InducedSubgraph { graph: g, vertices }
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if let Ok(pos) = g.adj[u].binary_search(&v) {
            g.adj[u].remove(pos);
            let pos = g.adj[v].binary_search(&u).unwrap();
            g.adj[v].remove(pos);
            g.size -= 1;
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Adjacency bitmasks; only valid for graphs with at most 64 vertices.
    pub(crate) fn masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "bitmask view needs n <= 64");
        self.adj
            .iter()
            .map(|nb| nb.iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect()
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut g = Graph::empty(0);
        let mut read = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = trimmed.split_whitespace().collect();
            let parse_err = |message: String| Error::Parse { line, message };
            if fields.len() != 2 {
                return Err(parse_err(format!(
                    "expected two integers, found `{trimmed}`"
                )));
            }
            let a: usize = fields[0]
                .parse()
                .map_err(|_| parse_err(format!("bad integer `{}`", fields[0])))?;
            let b: usize = fields[1]
                .parse()
                .map_err(|_| parse_err(format!("bad integer `{}`", fields[1])))?;
            match header {
                None => {
                    header = Some((a, b));
                    g = Graph::empty(a);
                }
                Some((n, m)) => {
                    if read == m {
                        return Err(parse_err(format!("more than the declared {m} edges")));
                    }
                    if a == b {
                        return Err(parse_err(format!("loop at vertex {a}")));
                    }
                    if a >= n || b >= n {
                        return Err(parse_err(format!("edge {a} {b} out of range 0..{n}")));
                    }
                    let (u, v) = (a.min(b), a.max(b));
                    if g.has_edge(u, v) {
                        return Err(parse_err(format!("duplicate edge {u} {v}")));
                    }
                    g.add_edge(u, v)?;
                    read += 1;
                }
            }
        }
        match header {
            None => Err(Error::Parse {
                line: text.lines().count().max(1),
                message: "missing `n m` header".into(),
            }),
            Some((_, m)) if read < m => Err(Error::Parse {
                line: text.lines().count(),
                message: format!("declared {m} edges, found {read}"),
            }),
            Some(_) => Ok(g),
        }
    }

    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{} {}\n", self.order(), self.size());
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    // ---- named graphs ----

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g.size = n * n.saturating_sub(1) / 2;
        g
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).unwrap()
    }

    /// Hub `0` joined to a rim cycle `1..=rim`.
    pub fn wheel(rim: usize) -> Graph {
        let mut g = Graph::empty(rim + 1);
        for i in 0..rim {
            g.add_edge(0, i + 1).unwrap();
            g.add_edge(i + 1, (i + 1) % rim + 1).unwrap();
        }
        g
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, edges).unwrap()
    }

    /// Two rhombi sharing apex `0`, with their far tips `3` and `6` adjacent.
    pub fn moser_spindle() -> Graph {
        Graph::from_edges(
            7,
            [
                (0, 1),
                (0, 2),
                (1, 2),
                (1, 3),
                (2, 3),
                (0, 4),
                (0, 5),
                (4, 5),
                (4, 6),
                (5, 6),
                (3, 6),
            ],
        )
        .unwrap()
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut g = Graph::empty(off + other.order());
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off).unwrap();
        }
        g
    }

    /// Disjoint union plus every edge between the two sides; `other`'s
    /// vertices are shifted by `self.order()`.
    pub fn join(&self, other: &Graph) -> Graph {
        let off = self.order();
        let mut g = self.disjoint_union(other);
        for u in 0..off {
            for v in 0..other.order() {
                g.add_edge(u, v + off).unwrap();
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip_and_comments() {
        let text = "# a comment\n5 5\n0 1\n1 2\n2 3\n3 4\n# mid comment\n0 4\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let dup = "3 2\n0 1\n0 1\n";
        match Graph::parse_edge_list(dup) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let lp = "# c\n3 1\n2 2\n";
        match Graph::parse_edge_list(lp) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 3);
                assert!(message.contains("loop"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 5\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }

    #[test]
    fn named_graph_counts() {
        assert_eq!(Graph::petersen().size(), 15);
        assert!(Graph::petersen().vertices().all(|v| Graph::petersen().degree(v) == 3));
        let m = Graph::moser_spindle();
        assert_eq!((m.order(), m.size()), (7, 11));
        let j = Graph::cycle(5).join(&Graph::complete(2));
        assert_eq!((j.order(), j.size()), (7, 16));
        assert_eq!(Graph::wheel(5).degree(0), 5);
    }

    #[test]
    fn induced_and_components() {
        let g = Graph::cycle(6);
        let h = g.induced([0, 1, 2, 4]);
        assert_eq!(h.vertices, vec![0, 1, 2, 4]);
        assert_eq!(h.graph.size(), 2);
        assert_eq!(h.graph.components(), vec![vec![0, 1, 2], vec![3]]);
    }
}
