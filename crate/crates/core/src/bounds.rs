//! Bound quantities for `Sd_s` and a harness that checks every inequality on a
//! given family.
//!
//! * `Sϖ(F)`: largest set that is a clique without true twins in every member;
//!   `Sd_s(F) <= n - Sϖ(F)`, with equality when every member has diameter 2.
//! * `ρ(F)`: one less than the largest `W` that, in every member, induces a
//!   shortest path having a common end vertex `w`; `Sd_s(F) <= |V| - ρ(F)`.
//!   The path has to be geodesic: a merely induced path does not give the
//!   bound (`C_5` with `W` = four consecutive vertices is a counterexample), so
//!   the literal induced-path variant is kept only as [`RhoVariant::InducedPath`].
//! * `|∂(F)| - 1`, `Σ dim_s(G_i)` (upper) and `max dim_s(G_i)` (lower).
//! * Interior subgraph `⟨V - ∂(G)⟩` and its vertex cover number `β̊(G)`.

use alloc::string::String;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::cover::{self, CliqueResult};
use crate::dimension::{self, DimensionReport};
use crate::distance::Metric;
use crate::graph::{GraphFamily, LabeledGraph, Vertex};
use crate::strong::{boundary_with, union_sr_graph_with};
use crate::{Error, Result};

pub const DEFAULT_RHO_LIMIT: usize = 16;

pub fn simultaneous_twin_free_clique_number(f: &GraphFamily) -> Result<CliqueResult> {
    let n = f.n();
    if n < 2 {
        return Err(Error::TrivialGraph);
    }
    let adj: Vec<FixedBitSet> = (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert_range(..);
            row.set(u, false);
            for g in f.members() {
                row.intersect_with(g.neighbors(u));
            }
            let twins: Vec<Vertex> =
                row.ones().filter(|&v| f.members().iter().any(|g| g.are_true_twins(u, v))).collect();
            for v in twins {
                row.set(v, false);
            }
            row
        })
        .collect();
    Ok(cover::max_clique(&adj))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhoVariant {
    /// `⟨W⟩` is a shortest path from the common leaf in every member.
    Geodesic,
    /// `⟨W⟩` is an induced path with the common leaf in every member.
    InducedPath,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoResult {
    pub value: usize,
    /// The maximizing `W`, sorted.
    pub set: Vec<Vertex>,
    pub leaf: Vertex,
    /// False for the shortest-path heuristic, which is only a lower bound.
    pub exact: bool,
}

struct MaskFamily<'a> {
    adj: Vec<Vec<u64>>,
    metrics: &'a [Metric],
}

impl MaskFamily<'_> {
    /// Checks `⟨mask⟩` in every member: a path ending at `leaf`, geodesic if
    /// asked.
    fn admits(&self, mask: u64, leaf: Vertex, variant: RhoVariant) -> bool {
        let k = mask.count_ones() as usize;
        self.adj.iter().zip(self.metrics).all(|(adj, m)| {
            let mut edges = 0;
            let mut far_end = leaf;
            let mut bits = mask;
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let d = (adj[v] & mask).count_ones();
                if d > 2 || (v == leaf && d > 1) {
                    return false;
                }
                edges += d;
                if m.dist(leaf, v) > m.dist(leaf, far_end) {
                    far_end = v;
                }
            }
            if edges as usize != 2 * (k - 1) || !connected_within(adj, mask, leaf) {
                return false;
            }
            match variant {
                RhoVariant::InducedPath => true,
                RhoVariant::Geodesic => m.dist(leaf, far_end) as usize == k - 1,
            }
        })
    }
}

fn connected_within(adj: &[u64], mask: u64, start: Vertex) -> bool {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        let mut bits = frontier;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            next |= adj[v];
        }
        next &= mask & !seen;
        seen |= next;
        frontier = next;
    }
    seen == mask
}

fn mask_family<'a>(f: &GraphFamily, metrics: &'a [Metric]) -> MaskFamily<'a> {
    let adj = f
        .members()
        .iter()
        .map(|g| (0..g.n()).map(|v| g.neighbor_iter(v).fold(0u64, |a, w| a | 1 << w)).collect())
        .collect();
    MaskFamily { adj, metrics }
}

fn mask_to_vec(mask: u64) -> Vec<Vertex> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Exact `ρ(F)` (geodesic variant) by subset enumeration, largest first.
pub fn rho(f: &GraphFamily, limit: usize) -> Result<RhoResult> {
    rho_with(f, limit, RhoVariant::Geodesic)
}

pub fn rho_with(f: &GraphFamily, limit: usize, variant: RhoVariant) -> Result<RhoResult> {
    let n = f.n();
    if n > limit || n > 63 {
        return Err(Error::TooLarge { n, limit });
    }
    let metrics = f.metrics()?;
    let fam = mask_family(f, &metrics);
    for k in (1..=n).rev() {
        for mask in cover::subsets_of_size(n, k) {
            let mut bits = mask;
            while bits != 0 {
                let leaf = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if fam.admits(mask, leaf, variant) {
                    return Ok(RhoResult { value: k - 1, set: mask_to_vec(mask), leaf, exact: true });
                }
            }
        }
    }
    Err(Error::TrivialGraph)
}

/// Lower bound on `ρ(F)`: for every ordered pair `(w, x)`, take the BFS
/// shortest path of the first member from `w` to `x` and keep it if it
/// qualifies in every member.
pub fn rho_lower_bound(f: &GraphFamily) -> Result<RhoResult> {
    let n = f.n();
    if n == 0 {
        return Err(Error::TrivialGraph);
    }
    let metrics = f.metrics()?;
    let first = &f.members()[0];
    let m0 = &metrics[0];
    let mut best = RhoResult { value: 0, set: alloc::vec![0], leaf: 0, exact: false };
    for w in 0..n {
        for x in 0..n {
            let len = m0.dist(w, x) as usize;
            if len <= best.value {
                continue;
            }
            // Walk back from x along lowest-index predecessors.
            let mut path = alloc::vec![x];
            let mut cur = x;
            while cur != w {
                cur = first
                    .neighbor_iter(cur)
                    .find(|&p| m0.dist(w, p) + 1 == m0.dist(w, cur))
                    .expect("BFS predecessor");
                path.push(cur);
            }
            if qualifies(f, &metrics, &path, w) {
                path.sort_unstable();
                best = RhoResult { value: len, set: path, leaf: w, exact: false };
            }
        }
    }
    Ok(best)
}

fn qualifies(f: &GraphFamily, metrics: &[Metric], set: &[Vertex], leaf: Vertex) -> bool {
    let n = f.n();
    let mut members = FixedBitSet::with_capacity(n);
    for &v in set {
        members.insert(v);
    }
    f.members().iter().zip(metrics).all(|(g, m)| {
        crate::graph::induced_path_order(g, &members, leaf)
            .is_some_and(|order| order.iter().enumerate().all(|(i, &v)| m.dist(leaf, v) as usize == i))
    })
}

/// Definitional re-check of a ρ witness.
pub fn rho_witness_valid(f: &GraphFamily, r: &RhoResult, variant: RhoVariant) -> Result<bool> {
    let metrics = f.metrics()?;
    if r.set.len() != r.value + 1 || !r.set.contains(&r.leaf) {
        return Ok(false);
    }
    Ok(match variant {
        RhoVariant::Geodesic => qualifies(f, &metrics, &r.set, r.leaf),
        RhoVariant::InducedPath => {
            f.members().iter().all(|g| g.is_induced_path_with_leaf(&r.set, r.leaf).unwrap_or(false))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InteriorReport {
    /// `V - ∂(G)`, ascending.
    pub interior_vertices: Vec<Vertex>,
    pub interior_graph: LabeledGraph,
    /// `β̊(G)`.
    pub beta_ring: usize,
}

pub fn interior_report(g: &LabeledGraph) -> Result<InteriorReport> {
    let m = g.metric()?;
    let boundary = boundary_with(g, &m);
    let interior_vertices: Vec<Vertex> = (0..g.n()).filter(|&v| !boundary.contains(v)).collect();
    let interior_graph = g.induced_subgraph(&interior_vertices)?;
    let beta_ring =
        if interior_vertices.is_empty() { 0 } else { dimension::vertex_cover_number(&interior_graph).size };
    Ok(InteriorReport { interior_vertices, interior_graph, beta_ring })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub sd_s: DimensionReport,
    /// `Sϖ(F)`.
    pub twin_free_clique: usize,
    pub twin_free_clique_bound: usize,
    pub rho: RhoResult,
    pub rho_bound: usize,
    pub boundary_size: usize,
    pub boundary_bound: usize,
    pub sum_bound: usize,
    pub max_lower: usize,
    pub union_sr_complete: bool,
    /// Every member has diameter 2.
    pub all_diameter_two: bool,
    pub violations: Vec<String>,
}

/// Computes `Sd_s` and every bound, recording each inequality that fails.
/// A non-empty `violations` list means a bug, not a property of the input.
pub fn verify_all_bounds(f: &GraphFamily, rho_limit: usize) -> Result<BoundsReport> {
    let n = f.n();
    let metrics = f.metrics()?;
    let sd_s = dimension::simultaneous_strong_dimension(f)?;
    let sd = sd_s.value;

    let twin_free_clique = simultaneous_twin_free_clique_number(f)?.size;
    let rho = match rho(f, rho_limit) {
        Ok(r) => r,
        Err(Error::TooLarge { .. }) => rho_lower_bound(f)?,
        Err(e) => return Err(e),
    };
    let mut boundary = FixedBitSet::with_capacity(n);
    for (g, m) in f.members().iter().zip(&metrics) {
        for &v in boundary_with(g, m).members() {
            boundary.insert(v);
        }
    }
    let boundary_size = boundary.count_ones(..);
    let union_sr_complete = union_sr_graph_with(f, &metrics).is_complete();
    let all_diameter_two = metrics.iter().all(|m| m.diameter() == 2);

    let report = BoundsReport {
        n,
        twin_free_clique,
        twin_free_clique_bound: n - twin_free_clique,
        rho_bound: n - rho.value,
        rho,
        boundary_size,
        boundary_bound: boundary_size.saturating_sub(1),
        sum_bound: sd_s.per_member.iter().sum(),
        max_lower: sd_s.per_member.iter().copied().max().unwrap_or(0),
        union_sr_complete,
        all_diameter_two,
        violations: Vec::new(),
        sd_s,
    };
    let mut violations = Vec::new();
    let mut check = |ok: bool, what: &str| {
        if !ok {
            violations.push(alloc::format!("{what} (Sd_s = {sd})"));
        }
    };
    check(sd >= 1 && sd < n, "1 <= Sd_s <= |V| - 1");
    check(report.max_lower <= sd, "max dim_s(G_i) <= Sd_s");
    check(sd <= report.sum_bound, "Sd_s <= sum dim_s(G_i)");
    check(sd <= report.boundary_bound, "Sd_s <= |boundary| - 1");
    check(sd <= report.twin_free_clique_bound, "Sd_s <= n - Sw");
    check(sd <= report.rho_bound, "Sd_s <= |V| - rho");
    check((sd == n - 1) == union_sr_complete, "Sd_s = |V| - 1 iff union SR graph complete");
    if all_diameter_two {
        check(sd == report.twin_free_clique_bound, "diameter two: Sd_s = n - Sw");
        if f.members().iter().any(is_triangle_free) {
            check(sd + 2 >= n, "diameter two with a triangle-free member: Sd_s >= n - 2");
        }
    }
    Ok(BoundsReport { violations, ..report })
}

fn is_triangle_free(g: &LabeledGraph) -> bool {
    g.edges().iter().all(|&(u, v)| g.neighbors(u).intersection_count(g.neighbors(v)) == 0)
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
    fn twin_free_cliques() {
        let k4 = g(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let f = GraphFamily::singleton(k4);
        assert_eq!(simultaneous_twin_free_clique_number(&f).unwrap().size, 1);
        let f = GraphFamily::singleton(cycle(5));
        assert_eq!(simultaneous_twin_free_clique_number(&f).unwrap().size, 2);
        let f = GraphFamily::singleton(g(4, &[(0, 1), (1, 2), (2, 3)]));
        assert_eq!(simultaneous_twin_free_clique_number(&f).unwrap().size, 2);
    }

    #[test]
    fn rho_on_c5_depends_on_variant() {
        let f = GraphFamily::singleton(cycle(5));
        let induced = rho_with(&f, 16, RhoVariant::InducedPath).unwrap();
        assert_eq!(induced.value, 3);
        let geo = rho(&f, 16).unwrap();
        assert_eq!(geo.value, 2);
        // dim_s(C_5) = 3 > 5 - 3, so only the geodesic variant bounds Sd_s.
        assert_eq!(dimension::simultaneous_strong_dimension(&f).unwrap().value, 3);
        assert!(rho_witness_valid(&f, &geo, RhoVariant::Geodesic).unwrap());
        assert!(rho_witness_valid(&f, &induced, RhoVariant::InducedPath).unwrap());
        assert!(!rho_witness_valid(&f, &induced, RhoVariant::Geodesic).unwrap());
    }

    #[test]
    fn rho_limit() {
        let f = GraphFamily::singleton(cycle(17));
        assert_eq!(rho(&f, 16), Err(Error::TooLarge { n: 17, limit: 16 }));
        let lb = rho_lower_bound(&f).unwrap();
        assert_eq!(lb.value, 8);
        assert!(!lb.exact);
    }

    #[test]
    fn interior() {
        assert_eq!(interior_report(&cycle(6)).unwrap().beta_ring, 0);
        // Spider: centre 0 with legs 0-1-2, 0-3-4, 0-5-6.
        let t = g(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]);
        let r = interior_report(&t).unwrap();
        assert_eq!(r.interior_vertices, vec![0, 1, 3, 5]);
        assert_eq!(r.beta_ring, 1);
    }

    #[test]
    fn bounds_on_c5() {
        let r = verify_all_bounds(&GraphFamily::singleton(cycle(5)), 16).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.sd_s.value, 3);
        assert!(r.all_diameter_two);
        assert_eq!(r.twin_free_clique_bound, 3);
    }
}
