//! Strong metric dimension, simultaneous strong metric dimension, strong
//! resolving covers and the `{G, G^c}` pair.
//!
//! Every value is computed as an exact vertex cover of a strong resolving graph
//! (or an edge union of several) and every witness is re-checked against the
//! definition of strong resolution before a [`DimensionReport`] is returned.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::cover::{self, CoverResult};
use crate::distance::Metric;
use crate::graph::{GraphFamily, LabeledGraph, SubsetRole, Vertex, VertexSubset};
use crate::strong::{strong_resolving_graph_with, union_sr_graph_with};
use crate::{Error, Result};

pub const DEFAULT_SIMDIM_ORACLE_LIMIT: usize = 12;

/// `w` strongly resolves `u` and `v`: `v` lies on a shortest `u`–`w` path or
/// `u` lies on a shortest `v`–`w` path.
#[inline]
pub fn strongly_resolves(m: &Metric, w: Vertex, u: Vertex, v: Vertex) -> bool {
    let (uw, vw, uv) = (m.dist(u, w), m.dist(v, w), m.dist(u, v));
    uw == uv + vw || vw == uv + uw
}

/// Per-pair outcome of a definitional check on one graph, over unordered
/// pairs `u < v` in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCheck {
    n: usize,
    resolved: Vec<bool>,
}

impl PairCheck {
    fn compute(m: &Metric, subset: &[Vertex]) -> Self {
        let n = m.n();
        let mut resolved = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                resolved.push(subset.iter().any(|&w| strongly_resolves(m, w, u, v)));
            }
        }
        PairCheck { n, resolved }
    }

    fn index(&self, u: Vertex, v: Vertex) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        u * (2 * self.n - u - 1) / 2 + (v - u - 1)
    }

    pub fn is_resolved(&self, u: Vertex, v: Vertex) -> bool {
        u == v || self.resolved[self.index(u, v)]
    }

    pub fn all_resolved(&self) -> bool {
        self.resolved.iter().all(|&r| r)
    }

    pub fn unresolved_pairs(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.is_resolved(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    StrongGenerator,
    SimultaneousStrongGenerator,
    StrongResolvingCover,
}

/// A vertex set together with its definitional verification on every member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCertificate {
    pub subset: VertexSubset,
    pub verified: Vec<PairCheck>,
    /// For resolving covers: whether the set also covers every edge.
    pub covers_edges: Option<bool>,
    pub kind: CertificateKind,
}

impl GeneratorCertificate {
    pub fn is_valid(&self) -> bool {
        self.verified.iter().all(PairCheck::all_resolved) && self.covers_edges != Some(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Vertex cover of the (union) strong resolving graph.
    SrCover,
    /// Subset enumeration against the definition.
    BruteForce,
    /// `Sd_s(G, G^c) = β_s(G)` because `D(G^c) = 2`.
    ResolvingCover,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub value: usize,
    pub witness: GeneratorCertificate,
    pub method: Method,
    /// `dim_s` of each member, in family order.
    pub per_member: Vec<usize>,
}

pub fn is_strong_generator(g: &LabeledGraph, subset: &[Vertex]) -> Result<bool> {
    for &v in subset {
        g.check_vertex(v)?;
    }
    let m = g.metric()?;
    Ok(PairCheck::compute(&m, subset).all_resolved())
}

pub fn is_simultaneous_strong_generator(f: &GraphFamily, subset: &[Vertex]) -> Result<GeneratorCertificate> {
    let metrics = f.metrics()?;
    for &v in subset {
        f.members()[0].check_vertex(v)?;
    }
    Ok(certify(&metrics, subset, CertificateKind::SimultaneousStrongGenerator))
}

fn certify(metrics: &[Metric], subset: &[Vertex], kind: CertificateKind) -> GeneratorCertificate {
    GeneratorCertificate {
        subset: VertexSubset::new(subset.to_vec(), SubsetRole::Generator),
        verified: metrics.iter().map(|m| PairCheck::compute(m, subset)).collect(),
        covers_edges: None,
        kind,
    }
}

fn checked(report: DimensionReport) -> Result<DimensionReport> {
    if !report.witness.is_valid() || report.witness.subset.len() != report.value {
        return Err(Error::InvariantViolation(alloc::format!(
            "witness of size {} failed verification for value {}",
            report.witness.subset.len(),
            report.value
        )));
    }
    Ok(report)
}

fn require_nontrivial(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::TrivialGraph)
    } else {
        Ok(())
    }
}

fn sr_cover(g: &LabeledGraph, m: &Metric) -> CoverResult {
    let sr = strong_resolving_graph_with(g, m);
    cover::min_vertex_cover(g.n(), &sr.edges())
}

/// `dim_s(G) = β(G_SR)`.
pub fn strong_dimension(g: &LabeledGraph) -> Result<DimensionReport> {
    require_nontrivial(g.n())?;
    let m = g.metric()?;
    let c = sr_cover(g, &m);
    checked(DimensionReport {
        value: c.size,
        witness: certify(core::slice::from_ref(&m), c.witness.members(), CertificateKind::StrongGenerator),
        method: Method::SrCover,
        per_member: vec![c.size],
    })
}

/// `Sd_s(F)`: a set is a simultaneous strong generator iff it covers every
/// member's strong resolving graph, i.e. their edge union.
pub fn simultaneous_strong_dimension(f: &GraphFamily) -> Result<DimensionReport> {
    require_nontrivial(f.n())?;
    let metrics = f.metrics()?;
    let union = union_sr_graph_with(f, &metrics);
    let c = cover::min_vertex_cover(f.n(), &union.edges());
    let per_member = f.members().iter().zip(&metrics).map(|(g, m)| sr_cover(g, m).size).collect();
    checked(DimensionReport {
        value: c.size,
        witness: certify(&metrics, c.witness.members(), CertificateKind::SimultaneousStrongGenerator),
        method: Method::SrCover,
        per_member,
    })
}

/// `Sd_s(F)` by enumerating subsets in increasing size and testing strong
/// resolution of every pair directly. Does not go through MMD pairs.
pub fn brute_force_simdim(f: &GraphFamily, limit: usize) -> Result<DimensionReport> {
    let n = f.n();
    require_nontrivial(n)?;
    if n > limit || n > 63 {
        return Err(Error::TooLarge { n, limit });
    }
    let metrics = f.metrics()?;
    // One mask of resolving vertices per (member, pair).
    let mut requirements = Vec::new();
    for m in &metrics {
        for u in 0..n {
            for v in u + 1..n {
                let mask =
                    (0..n).filter(|&w| strongly_resolves(m, w, u, v)).fold(0u64, |acc, w| acc | 1 << w);
                requirements.push(mask);
            }
        }
    }
    let oracle = |metrics: &[Metric], subset: &[Vertex]| -> Vec<usize> {
        metrics.iter().map(|m| brute_force_single(m, subset.len())).collect()
    };
    for k in 0..=n {
        if let Some(s) = cover::subsets_of_size(n, k).find(|&s| requirements.iter().all(|&r| r & s != 0)) {
            let subset: Vec<Vertex> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            let per_member = oracle(&metrics, &subset);
            return checked(DimensionReport {
                value: k,
                witness: certify(&metrics, &subset, CertificateKind::SimultaneousStrongGenerator),
                method: Method::BruteForce,
                per_member,
            });
        }
    }
    unreachable!("the full vertex set strongly resolves every pair")
}

/// `dim_s` of one metric by enumeration, capped at `cap` (every member needs
/// at most the family value).
fn brute_force_single(m: &Metric, cap: usize) -> usize {
    let n = m.n();
    let mut requirements = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            requirements
                .push((0..n).filter(|&w| strongly_resolves(m, w, u, v)).fold(0u64, |acc, w| acc | 1 << w));
        }
    }
    (0..=cap)
        .find(|&k| cover::subsets_of_size(n, k).any(|s| requirements.iter().all(|&r| r & s != 0)))
        .unwrap_or(cap)
}

/// `β(G)` with witness.
pub fn vertex_cover_number(g: &LabeledGraph) -> CoverResult {
    cover::min_vertex_cover(g.n(), &g.edges())
}

/// `β_s(G)`: smallest set that is both a vertex cover and a strong metric
/// generator, i.e. a vertex cover of `G ∪ G_SR`.
pub fn strong_resolving_cover_number(g: &LabeledGraph) -> Result<DimensionReport> {
    require_nontrivial(g.n())?;
    let m = g.metric()?;
    let c = resolving_cover(g, &m);
    let mut witness =
        certify(core::slice::from_ref(&m), c.witness.members(), CertificateKind::StrongResolvingCover);
    witness.covers_edges = Some(cover::is_vertex_cover(&g.edges(), c.witness.members()));
    checked(DimensionReport {
        value: c.size,
        witness,
        method: Method::SrCover,
        per_member: vec![sr_cover(g, &m).size],
    })
}

fn resolving_cover(g: &LabeledGraph, m: &Metric) -> CoverResult {
    let mut h = strong_resolving_graph_with(g, m);
    h.union_with_graph(g);
    cover::min_vertex_cover(g.n(), &h.edges())
}

/// `Sd_s(G, G^c)`. When `D(G^c) = 2` the value is `β_s(G)`; that shortcut is
/// always cross-checked against the general union computation.
pub fn complement_pair_dimension(g: &LabeledGraph) -> Result<DimensionReport> {
    require_nontrivial(g.n())?;
    let m = g.metric()?;
    let c = g.complement();
    let mc = c.metric().map_err(|_| Error::Disconnected("G^c".to_string()))?;
    let family = GraphFamily::with_complement(g.clone());
    let metrics = [m, mc];
    let general = {
        let union = union_sr_graph_with(&family, &metrics);
        cover::min_vertex_cover(g.n(), &union.edges())
    };
    let per_member = vec![sr_cover(g, &metrics[0]).size, sr_cover(&c, &metrics[1]).size];
    let (witness, method) = if metrics[1].diameter() == 2 {
        let shortcut = resolving_cover(g, &metrics[0]);
        if shortcut.size != general.size {
            return Err(Error::InvariantViolation(alloc::format!(
                "β_s(G) = {} but the union cover gives {}",
                shortcut.size,
                general.size
            )));
        }
        (shortcut.witness, Method::ResolvingCover)
    } else {
        (general.witness, Method::SrCover)
    };
    checked(DimensionReport {
        value: general.size,
        witness: certify(&metrics, witness.members(), CertificateKind::SimultaneousStrongGenerator),
        method,
        per_member,
    })
}
