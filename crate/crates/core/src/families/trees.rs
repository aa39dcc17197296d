//! Closed forms and bounds for `Sd_s(T, T^c)` when `T` is a tree.
//!
//! `l(T)` is the number of leaves, `T̊` the tree with all leaves removed and
//! `T'_u` the tree with every leaf except `u` removed. For `D(T) >= 4`,
//! `β(T̊) + l(T) - 1 <= Sd_s(T, T^c) <= min_u β(T'_u) + l(T) - 1`.

use alloc::vec::Vec;

use crate::dimension::vertex_cover_number;
use crate::graph::{LabeledGraph, Vertex};
use crate::{Error, Result};

pub fn leaf_count(t: &LabeledGraph) -> usize {
    (0..t.n()).filter(|&v| t.degree(v) == 1).count()
}

/// `T` without its leaves, keeping `keep` if it is one.
pub fn prune_leaves_except(t: &LabeledGraph, keep: Option<Vertex>) -> Result<LabeledGraph> {
    let kept: Vec<Vertex> = (0..t.n()).filter(|&v| t.degree(v) != 1 || Some(v) == keep).collect();
    t.induced_subgraph(&kept)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TreeCase {
    /// `n - 2`.
    DiameterThree,
    /// `l(T)` when the centre of `T̊` is a support vertex, else `l(T) + 1`.
    DiameterFour { centre_is_support: bool },
    /// `l(T) + 1` when a centre of `T̊` is a support vertex, else `l(T) + 2`.
    DiameterFive { centre_is_support: bool, centre_with_one_leaf: bool },
    /// Every `T'_u` is a path: `l(T) + ⌈(n - l(T)) / 2⌉ - 1`.
    PathLike,
    /// Only the interval is known.
    Bounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreePrediction {
    pub n: usize,
    pub diameter: u32,
    pub leaves: usize,
    pub case: TreeCase,
    /// Closed-form value for the case, when there is one.
    pub closed_form: Option<usize>,
    /// For diameter 5 the support-vertex rule misses trees such as `P_6`;
    /// this is `l(T) + 1` also when a centre of `T̊` has a single leaf in
    /// `T̊`. Equal to `closed_form` in every other case.
    pub refined: Option<usize>,
    /// Interval for `D(T) >= 4`; collapses to the value for `D(T) = 3`.
    pub lower: usize,
    pub upper: usize,
}

impl TreePrediction {
    pub fn is_exact(&self) -> bool {
        self.refined.is_some() || self.lower == self.upper
    }
}

fn check_tree(t: &LabeledGraph) -> Result<u32> {
    if t.n() == 0 || t.edge_count() + 1 != t.n() || !t.is_connected() {
        return Err(Error::NotATree);
    }
    let d = t.distances().diameter();
    if d < 3 {
        return Err(Error::DiameterTooSmall(d));
    }
    Ok(d)
}

fn is_path(g: &LabeledGraph) -> bool {
    g.is_connected() && (0..g.n()).all(|v| g.degree(v) <= 2) && g.edge_count() + 1 == g.n()
}

/// Vertices of `t` with eccentricity equal to the radius.
fn centres(t: &LabeledGraph) -> Vec<Vertex> {
    let d = t.distances();
    let ecc: Vec<u32> =
        (0..t.n()).map(|u| (0..t.n()).filter_map(|v| d.get(u, v)).max().unwrap_or(0)).collect();
    let radius = ecc.iter().copied().min().unwrap_or(0);
    (0..t.n()).filter(|&v| ecc[v] == radius).collect()
}

pub fn tree_complement_pair_formula(t: &LabeledGraph) -> Result<TreePrediction> {
    let diameter = check_tree(t)?;
    let n = t.n();
    let l = leaf_count(t);
    if diameter == 3 {
        return Ok(TreePrediction {
            n,
            diameter,
            leaves: l,
            case: TreeCase::DiameterThree,
            closed_form: Some(n - 2),
            refined: Some(n - 2),
            lower: n - 2,
            upper: n - 2,
        });
    }

    let interior_vertices: Vec<Vertex> = (0..n).filter(|&v| t.degree(v) != 1).collect();
    let interior = t.induced_subgraph(&interior_vertices)?;
    let lower = vertex_cover_number(&interior).size + l - 1;
    let mut upper = usize::MAX;
    let mut all_paths = true;
    for u in (0..n).filter(|&v| t.degree(v) == 1) {
        let tu = prune_leaves_except(t, Some(u))?;
        upper = upper.min(vertex_cover_number(&tu).size + l - 1);
        all_paths &= is_path(&tu);
    }

    let is_support = |v: Vertex| t.neighbor_iter(v).any(|w| t.degree(w) == 1);
    let centre_origins: Vec<Vertex> = centres(&interior).iter().map(|&c| interior_vertices[c]).collect();
    let (case, closed_form, refined) = match diameter {
        4 => {
            let centre_is_support = is_support(centre_origins[0]);
            let v = if centre_is_support { l } else { l + 1 };
            (TreeCase::DiameterFour { centre_is_support }, Some(v), Some(v))
        }
        5 => {
            let centre_is_support = centre_origins.iter().any(|&c| is_support(c));
            let centre_with_one_leaf = centres(&interior)
                .iter()
                .any(|&c| interior.neighbor_iter(c).filter(|&w| interior.degree(w) == 1).count() == 1);
            let stated = if centre_is_support { l + 1 } else { l + 2 };
            let refined = if centre_is_support || centre_with_one_leaf { l + 1 } else { l + 2 };
            (TreeCase::DiameterFive { centre_is_support, centre_with_one_leaf }, Some(stated), Some(refined))
        }
        _ if all_paths => {
            let v = l + (n - l).div_ceil(2) - 1;
            (TreeCase::PathLike, Some(v), Some(v))
        }
        _ => (TreeCase::Bounded, None, None),
    };
    Ok(TreePrediction { n, diameter, leaves: l, case, closed_form, refined, lower, upper })
}
