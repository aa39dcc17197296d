//! Labeled simple graphs, vertex subsets and graph families.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::distance::{DistanceMatrix, Metric};
use crate::{Error, Result};

/// Dense vertex index in `0..n`.
pub type Vertex = usize;

/// Undirected simple graph over an ordered list of distinct labels.
///
/// Vertices are indices into the label list; adjacency is one bitset row per
/// vertex, kept symmetric and irreflexive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    labels: Vec<String>,
    index: BTreeMap<String, Vertex>,
    adj: Vec<FixedBitSet>,
}

impl LabeledGraph {
    /// Edgeless graph on `labels`.
    pub fn edgeless<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = BTreeMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let n = labels.len();
        Ok(LabeledGraph { labels, index, adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect() })
    }

    /// Builds a graph from labels and label-pair edges. Repeated edges collapse.
    pub fn build<I, S, E, A, B>(labels: I, edges: E) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut g = Self::edgeless(labels)?;
        for (a, b) in edges {
            let u = g.require_label(a.as_ref())?;
            let v = g.require_label(b.as_ref())?;
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from labels and index-pair edges.
    pub fn from_index_edges<I, S>(labels: I, edges: &[(Vertex, Vertex)]) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut g = Self::edgeless(labels)?;
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Graph on labels `v0..v{n-1}` with the given index edges.
    pub fn with_canonical_labels(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        Self::from_index_edges((0..n).map(|i| alloc::format!("v{i}")), edges)
    }

    fn require_label(&self, label: &str) -> Result<Vertex> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub(crate) fn try_add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(self.labels[u].clone()));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<Vertex> {
        self.index.get(label).copied()
    }

    /// Open neighbourhood as a bitset row.
    pub fn neighbors(&self, v: Vertex) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbor_iter(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.adj[v].ones()
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_neighborhood(&self, v: Vertex) -> FixedBitSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::of(self)
    }

    /// Distances of a connected graph; fails with [`Error::Disconnected`].
    pub fn metric(&self) -> Result<Metric> {
        Metric::of(self)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(n);
        seen.insert(0);
        let mut frontier = seen.clone();
        while !frontier.is_clear() {
            let mut next = FixedBitSet::with_capacity(n);
            for v in frontier.ones() {
                next.union_with(&self.adj[v]);
            }
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen.count_ones(..) == n
    }

    /// Complement over the same labeled vertex set.
    pub fn complement(&self) -> LabeledGraph {
        let n = self.n();
        let adj = (0..n)
            .map(|v| {
                let mut row = self.adj[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        LabeledGraph { labels: self.labels.clone(), index: self.index.clone(), adj }
    }

    pub fn twin_relation(&self, u: Vertex, v: Vertex) -> Result<TwinRelation> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SameVertex(u));
        }
        Ok(if self.are_true_twins(u, v) {
            TwinRelation::TrueTwins
        } else if self.adj[u] == self.adj[v] {
            TwinRelation::FalseTwins
        } else {
            TwinRelation::NotTwins
        })
    }

    /// `N[u] = N[v]` for distinct `u`, `v`.
    pub fn are_true_twins(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.has_edge(u, v) && self.closed_neighborhood(u) == self.closed_neighborhood(v)
    }

    /// Subgraph induced by `subset`, labels kept in the subset's order.
    pub fn induced_subgraph(&self, subset: &[Vertex]) -> Result<LabeledGraph> {
        for &v in subset {
            self.check_vertex(v)?;
        }
        let labels: Vec<String> = subset.iter().map(|&v| self.labels[v].clone()).collect();
        let mut g = LabeledGraph::edgeless(labels)?;
        for (i, &a) in subset.iter().enumerate() {
            for (j, &b) in subset.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.try_add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Whether `⟨subset⟩` is a simple path having `leaf` as an end vertex.
    pub fn is_induced_path_with_leaf(&self, subset: &[Vertex], leaf: Vertex) -> Result<bool> {
        let mut members = FixedBitSet::with_capacity(self.n());
        for &v in subset {
            self.check_vertex(v)?;
            members.insert(v);
        }
        if !members.contains(leaf) {
            return Err(Error::NotInSubset(leaf));
        }
        Ok(induced_path_order(self, &members, leaf).is_some())
    }
}

/// Walks `⟨members⟩` from `leaf`. Returns the vertex order when the induced
/// subgraph is a path ending at `leaf`.
pub(crate) fn induced_path_order(
    g: &LabeledGraph,
    members: &FixedBitSet,
    leaf: Vertex,
) -> Option<Vec<Vertex>> {
    let size = members.count_ones(..);
    let inside = |v: Vertex| {
        let mut row = g.adj[v].clone();
        row.intersect_with(members);
        row
    };
    if inside(leaf).count_ones(..) > 1 {
        return None;
    }
    let mut order = Vec::with_capacity(size);
    order.push(leaf);
    let mut prev = usize::MAX;
    let mut cur = leaf;
    loop {
        let row = inside(cur);
        let deg = row.count_ones(..);
        if deg > 2 {
            return None;
        }
        match row.ones().find(|&x| x != prev) {
            Some(next) if order.len() < size => {
                if next == leaf || order.contains(&next) {
                    return None;
                }
                order.push(next);
                prev = cur;
                cur = next;
            }
            Some(_) => return None,
            None => break,
        }
    }
    (order.len() == size).then_some(order)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinRelation {
    /// `N[u] = N[v]`
    TrueTwins,
    /// `N(u) = N(v)`
    FalseTwins,
    NotTwins,
}

/// What a [`VertexSubset`] was produced as.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetRole {
    Generator,
    Cover,
    Clique,
    HittingSet,
    Path,
}

/// Sorted, duplicate-free set of vertex indices tagged with its role.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSubset {
    members: Vec<Vertex>,
    role: SubsetRole,
}

impl VertexSubset {
    pub fn new(mut members: Vec<Vertex>, role: SubsetRole) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSubset { members, role }
    }

    pub fn members(&self) -> &[Vertex] {
        &self.members
    }

    pub fn role(&self) -> SubsetRole {
        self.role
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn with_role(self, role: SubsetRole) -> Self {
        VertexSubset { role, ..self }
    }

    pub fn to_bitset(&self, n: usize) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(n);
        for &v in &self.members {
            s.insert(v);
        }
        s
    }

    pub fn labels<'g>(&self, g: &'g LabeledGraph) -> Vec<&'g str> {
        self.members.iter().map(|&v| g.label(v)).collect()
    }
}

/// Non-empty list of named graphs over one ordered vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphFamily {
    members: Vec<LabeledGraph>,
    names: Vec<String>,
}

impl GraphFamily {
    pub fn new<S: Into<String>>(members: Vec<(S, LabeledGraph)>) -> Result<Self> {
        let mut names = Vec::with_capacity(members.len());
        let mut graphs = Vec::with_capacity(members.len());
        for (name, g) in members {
            let name = name.into();
            if names.contains(&name) {
                return Err(Error::DuplicateMember(name));
            }
            if let Some(first) = graphs.first() {
                let first: &LabeledGraph = first;
                if first.labels() != g.labels() {
                    return Err(Error::VertexSetMismatch(name));
                }
            }
            names.push(name);
            graphs.push(g);
        }
        if graphs.is_empty() {
            return Err(Error::EmptyFamily);
        }
        Ok(GraphFamily { members: graphs, names })
    }

    /// Members named `G1, G2, ...`.
    pub fn from_graphs(graphs: Vec<LabeledGraph>) -> Result<Self> {
        Self::new(graphs.into_iter().enumerate().map(|(i, g)| (alloc::format!("G{}", i + 1), g)).collect())
    }

    pub fn singleton(g: LabeledGraph) -> Self {
        GraphFamily { members: alloc::vec![g], names: alloc::vec!["G".to_string()] }
    }

    /// The pair `{G, G^c}`.
    pub fn with_complement(g: LabeledGraph) -> Self {
        let c = g.complement();
        GraphFamily { members: alloc::vec![g, c], names: alloc::vec!["G".into(), "G^c".into()] }
    }

    pub fn n(&self) -> usize {
        self.members[0].n()
    }

    pub fn labels(&self) -> &[String] {
        self.members[0].labels()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn members(&self) -> &[LabeledGraph] {
        &self.members
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn member(&self, name: &str) -> Option<&LabeledGraph> {
        self.names.iter().position(|n| n == name).map(|i| &self.members[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &LabeledGraph)> {
        self.names.iter().map(String::as_str).zip(self.members.iter())
    }

    /// Metrics of all members, failing on the first disconnected one.
    pub fn metrics(&self) -> Result<Vec<Metric>> {
        self.iter()
            .map(|(name, g)| Metric::of(g).map_err(|_| Error::Disconnected(name.to_string())))
            .collect()
    }

    /// Subfamily made of the members at `indices` (in that order).
    pub fn subfamily(&self, indices: &[usize]) -> Result<Self> {
        Self::new(indices.iter().map(|&i| (self.names[i].clone(), self.members[i].clone())).collect())
    }
}
