//! Maximally distant vertices, boundary, simplicial vertices and the strong
//! resolving graph.
//!
//! `u` is maximally distant from `v` when no neighbour of `u` is farther from
//! `v` than `u` itself. Two vertices are mutually maximally distant (MMD) when
//! each is maximally distant from the other, and the strong resolving graph
//! joins exactly the MMD pairs. A vertex set strongly resolves a connected
//! graph iff it is a vertex cover of that graph.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::distance::Metric;
use crate::graph::{GraphFamily, LabeledGraph, SubsetRole, Vertex, VertexSubset};
use crate::{Error, Result};

/// Graph on the source vertex set whose edges are the MMD pairs. Isolated
/// vertices are kept so indices line up with the source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongResolvingGraph {
    adj: Vec<FixedBitSet>,
}

impl StrongResolvingGraph {
    fn empty(n: usize) -> Self {
        StrongResolvingGraph { adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect() }
    }

    fn insert(&mut self, u: Vertex, v: Vertex) {
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn isolated_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| self.adj[v].is_clear()).collect()
    }

    /// Vertices incident to at least one edge.
    pub fn covered_vertices(&self) -> Vec<Vertex> {
        (0..self.n()).filter(|&v| !self.adj[v].is_clear()).collect()
    }

    /// Every pair of distinct vertices is joined.
    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Edge union with another graph on the same vertex count.
    pub fn union_with(&mut self, other: &StrongResolvingGraph) {
        for (a, b) in self.adj.iter_mut().zip(&other.adj) {
            a.union_with(b);
        }
    }

    /// Adds every edge of `g` (used for resolving covers).
    pub fn union_with_graph(&mut self, g: &LabeledGraph) {
        for (v, row) in self.adj.iter_mut().enumerate() {
            row.union_with(g.neighbors(v));
        }
    }
}

pub fn is_maximally_distant(m: &Metric, g: &LabeledGraph, u: Vertex, v: Vertex) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(maximally_distant(m, g, u, v))
}

#[inline]
fn maximally_distant(m: &Metric, g: &LabeledGraph, u: Vertex, v: Vertex) -> bool {
    let duv = m.dist(u, v);
    let row = m.row(v);
    g.neighbor_iter(u).all(|w| row[w] <= duv)
}

/// MMD pairs `(u, v)`, `u < v`, in lexicographic order.
pub fn mmd_pairs(g: &LabeledGraph) -> Result<Vec<(Vertex, Vertex)>> {
    let m = g.metric()?;
    Ok(mmd_pairs_with(g, &m))
}

pub fn mmd_pairs_with(g: &LabeledGraph, m: &Metric) -> Vec<(Vertex, Vertex)> {
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if maximally_distant(m, g, u, v) && maximally_distant(m, g, v, u) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Vertices that are maximally distant from some vertex. This coincides with
/// the set of endpoints of MMD pairs.
pub fn boundary(g: &LabeledGraph) -> Result<VertexSubset> {
    let m = g.metric()?;
    Ok(boundary_with(g, &m))
}

pub fn boundary_with(g: &LabeledGraph, m: &Metric) -> VertexSubset {
    let n = g.n();
    let members = (0..n).filter(|&u| (0..n).any(|v| v != u && maximally_distant(m, g, u, v))).collect();
    VertexSubset::new(members, SubsetRole::Generator)
}

/// Vertices whose open neighbourhood is a clique.
pub fn simplicial_vertices(g: &LabeledGraph) -> VertexSubset {
    let members = (0..g.n())
        .filter(|&v| {
            let nbrs: Vec<Vertex> = g.neighbor_iter(v).collect();
            nbrs.iter().enumerate().all(|(i, &a)| nbrs[i + 1..].iter().all(|&b| g.has_edge(a, b)))
        })
        .collect();
    VertexSubset::new(members, SubsetRole::Clique)
}

pub fn strong_resolving_graph(g: &LabeledGraph) -> Result<StrongResolvingGraph> {
    let m = g.metric()?;
    Ok(strong_resolving_graph_with(g, &m))
}

pub fn strong_resolving_graph_with(g: &LabeledGraph, m: &Metric) -> StrongResolvingGraph {
    let mut sr = StrongResolvingGraph::empty(g.n());
    for (u, v) in mmd_pairs_with(g, m) {
        sr.insert(u, v);
    }
    sr
}

/// Edge union of the members' strong resolving graphs.
pub fn union_sr_graph(f: &GraphFamily) -> Result<StrongResolvingGraph> {
    let metrics = f.metrics()?;
    Ok(union_sr_graph_with(f, &metrics))
}

pub(crate) fn union_sr_graph_with(f: &GraphFamily, metrics: &[Metric]) -> StrongResolvingGraph {
    let mut sr = StrongResolvingGraph::empty(f.n());
    for (g, m) in f.members().iter().zip(metrics) {
        sr.union_with(&strong_resolving_graph_with(g, m));
    }
    sr
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(n: usize, edges: &[(usize, usize)]) -> LabeledGraph {
        LabeledGraph::with_canonical_labels(n, edges).unwrap()
    }

    fn cycle(n: usize) -> LabeledGraph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        g(n, &e)
    }

    #[test]
    fn maximally_distant_on_p4() {
        let p4 = g(4, &[(0, 1), (1, 2), (2, 3)]);
        let m = p4.metric().unwrap();
        assert!(is_maximally_distant(&m, &p4, 0, 3).unwrap());
        assert!(!is_maximally_distant(&m, &p4, 1, 0).unwrap());
        assert_eq!(is_maximally_distant(&m, &p4, 2, 2), Err(Error::SameVertex(2)));
    }

    #[test]
    fn sr_shapes() {
        assert_eq!(mmd_pairs(&cycle(6)).unwrap(), vec![(0, 3), (1, 4), (2, 5)]);
        let c5 = mmd_pairs(&cycle(5)).unwrap();
        assert_eq!(c5, vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]);
        let star = g(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let sr = strong_resolving_graph(&star).unwrap();
        assert_eq!(sr.edge_count(), 6);
        assert_eq!(sr.isolated_vertices(), vec![0]);
    }

    #[test]
    fn boundary_and_simplicial() {
        let p5 = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_eq!(boundary(&p5).unwrap().members(), &[0, 4]);
        assert_eq!(boundary(&cycle(7)).unwrap().len(), 7);
        assert!(simplicial_vertices(&cycle(5)).is_empty());
        assert_eq!(simplicial_vertices(&p5).members(), &[0, 4]);
    }

    #[test]
    fn disconnected_rejected() {
        let d = g(3, &[(0, 1)]);
        assert!(matches!(mmd_pairs(&d), Err(Error::Disconnected(_))));
        assert!(boundary(&d).is_err());
    }
}
