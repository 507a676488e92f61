//! Finite simple undirected graphs on vertices `0..n`.

mod family;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
pub use family::{build_family, parse_family_spec, FamilySpec};

/// A simple graph with optional per-vertex text labels.
///
/// Equality compares vertex count and edge set; labels are annotations.
#[derive(Clone, Debug, Default)]
pub struct Graph {
    neighbors: Vec<BTreeSet<usize>>,
    labels: BTreeMap<usize, String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.neighbors == other.neighbors
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            neighbors: vec![BTreeSet::new(); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds `uv`, rejecting loops and out-of-range endpoints. Re-adding an
    /// existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
        }
        self.insert_edge(u, v);
        Ok(())
    }

    fn insert_edge(&mut self, u: usize, v: usize) {
        self.neighbors[u].insert(v);
        self.neighbors[v].insert(u);
    }

    pub fn order(&self) -> usize {
        self.neighbors.len()
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.neighbors[v].iter().copied()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    /// All unordered vertex pairs `(u, v)` with `u < v`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.order();
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> &BTreeMap<usize, String> {
        &self.labels
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn with_labels(mut self, labels: impl IntoIterator<Item = (usize, String)>) -> Self {
        self.labels.extend(labels);
        self
    }

    /// Same vertices; a pair is an edge iff it was not. Labels are kept.
    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        for (u, v) in self.pairs() {
            if !self.has_edge(u, v) {
                g.insert_edge(u, v);
            }
        }
        g.labels = self.labels.clone();
        g
    }

    /// Concatenates vertex blocks in order, with no edges between blocks.
    pub fn disjoint_union(graphs: &[Graph]) -> Graph {
        let n = graphs.iter().map(Graph::order).sum();
        let mut out = Graph::empty(n);
        let mut offset = 0;
        for g in graphs {
            for (u, v) in g.edges() {
                out.insert_edge(u + offset, v + offset);
            }
            for (v, l) in &g.labels {
                out.labels.insert(v + offset, l.clone());
            }
            offset += g.order();
        }
        out
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in ascending vertex order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let n = self.order();
        if let Some(&bad) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        let keep: Vec<usize> = vertices.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
            if let Some(l) = self.labels.get(&u) {
                g.labels.insert(i, l.clone());
            }
        }
        Ok(g)
    }

    /// Connected components, each as an ascending vertex list, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                        comp.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components that are triangles.
    pub fn triangle_components(&self) -> Vec<[usize; 3]> {
        self.components()
            .into_iter()
            .filter(|c| c.len() == 3 && c.iter().all(|&v| self.degree(v) == 2))
            .map(|c| [c[0], c[1], c[2]])
            .collect()
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.order() {
            match self.labels.get(&v) {
                Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l.replace('"', "\\\"")).unwrap(),
                None => writeln!(out, "  {v};").unwrap(),
            }
        }
        for (u, v) in self.edges() {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    edges: Vec<[usize; 2]>,
    #[serde(default)]
    labels: BTreeMap<String, String>,
    n: usize,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.iter().map(|(v, l)| (v.to_string(), l.clone())).collect(),
            n: self.order(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        let mut g = Graph::empty(repr.n);
        for [u, v] in repr.edges {
            if g.has_edge(u, v) {
                return Err(D::Error::custom(format!("duplicate edge {u}-{v}")));
            }
            g.add_edge(u, v).map_err(D::Error::custom)?;
        }
        for (k, l) in repr.labels {
            let v: usize = k
                .parse()
                .map_err(|_| D::Error::custom(format!("bad label key {k:?}")))?;
            if v >= repr.n {
                return Err(D::Error::custom(Error::VertexOutOfRange { vertex: v, n: repr.n }));
            }
            g.labels.insert(v, l);
        }
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::empty(3);
        assert!(matches!(
            g.add_edge(0, 3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(g.add_edge(1, 1), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn complement_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.complement(), Graph::empty(3));
        assert_eq!(cycle4().complement().complement(), cycle4());
    }

    #[test]
    fn union_examples() {
        let p2 = Graph::complete(2);
        let two = Graph::disjoint_union(&[p2.clone(), p2.clone()]);
        assert_eq!((two.order(), two.size()), (4, 2));
        assert!(two.has_edge(2, 3) && !two.has_edge(1, 2));
        assert_eq!(Graph::disjoint_union(&[cycle4()]), cycle4());
        let k3k3 = Graph::disjoint_union(&[Graph::complete(3), Graph::complete(3)]);
        assert_eq!(k3k3.triangle_components(), vec![[0, 1, 2], [3, 4, 5]]);
    }

    #[test]
    fn induced_examples() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(cycle4().induced_subgraph(&[0, 1, 2]).unwrap(), p3);
        assert_eq!(cycle4().induced_subgraph(&[0, 1, 2, 3]).unwrap(), cycle4());
        assert!(cycle4().induced_subgraph(&[0, 7]).is_err());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let g = cycle4().with_labels([(0, "a".to_string())]);
        let v = serde_json::to_value(&g).unwrap();
        assert_eq!(v["n"], 4);
        assert_eq!(v["edges"], serde_json::json!([[0, 1], [0, 3], [1, 2], [2, 3]]));
        let back: Graph = serde_json::from_value(v).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.label(0), Some("a"));
        for bad in [
            serde_json::json!({"n": 2, "edges": [[0, 0]]}),
            serde_json::json!({"n": 2, "edges": [[0, 2]]}),
            serde_json::json!({"n": 2, "edges": [[0, 1], [1, 0]]}),
        ] {
            assert!(serde_json::from_value::<Graph>(bad).is_err());
        }
    }

    #[test]
    fn dot_output() {
        let dot = Graph::complete(2).to_dot();
        assert!(dot.starts_with("graph G {"));
        assert!(dot.contains("0 -- 1;"));
    }
}
