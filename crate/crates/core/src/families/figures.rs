//! Hand-transcribed example graphs, with their original vertex labels.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use crate::graph::{GraphFamily, LabeledGraph};
use crate::{Error, Result};

fn fixture(labels: &[&str], edges: &[(&str, &str)]) -> LabeledGraph {
    LabeledGraph::build(labels.iter().copied(), edges.iter().copied()).expect("fixture is valid")
}

fn numbered(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

const FIG1_LABELS: [&str; 8] = ["u1", "u2", "u3", "u4", "v1", "v2", "v3", "v4"];

pub fn fig1_g1() -> LabeledGraph {
    fixture(
        &FIG1_LABELS,
        &[("u1", "v1"), ("u2", "v1"), ("v1", "v2"), ("v2", "v3"), ("v3", "v4"), ("v4", "u3"), ("v4", "u4")],
    )
}

pub fn fig1_g2() -> LabeledGraph {
    fixture(
        &FIG1_LABELS,
        &[("v1", "u1"), ("v2", "u1"), ("u1", "u2"), ("u2", "u3"), ("u3", "u4"), ("u4", "v3"), ("u4", "v4")],
    )
}

/// `{G1, G2}` of the first figure.
pub fn fig1_family() -> GraphFamily {
    GraphFamily::new(alloc::vec![("G1", fig1_g1()), ("G2", fig1_g2())]).expect("same labels")
}

fn numbered_fixture(n: usize, edges: &[(u32, u32)]) -> LabeledGraph {
    let edges = edges.iter().map(|&(a, b)| (a.to_string(), b.to_string()));
    LabeledGraph::build(numbered(n), edges).expect("fixture is valid")
}

pub fn fig2_g() -> LabeledGraph {
    numbered_fixture(6, &[(1, 2), (1, 5), (1, 6), (4, 2), (4, 3), (4, 5), (2, 3), (5, 6)])
}

/// The bull graph on `a..e`.
pub fn fig3_g() -> LabeledGraph {
    fixture(&["a", "b", "c", "d", "e"], &[("a", "b"), ("b", "d"), ("d", "e"), ("b", "c"), ("c", "d")])
}

pub fn fig4_g() -> LabeledGraph {
    numbered_fixture(
        11,
        &[
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 6),
            (2, 7),
            (3, 5),
            (3, 7),
            (4, 5),
            (4, 6),
            (5, 9),
            (5, 10),
            (6, 8),
            (6, 10),
            (7, 8),
            (7, 9),
            (11, 8),
            (11, 9),
            (11, 10),
        ],
    )
}

pub fn fig5_g() -> LabeledGraph {
    numbered_fixture(7, &[(2, 1), (1, 6), (6, 7), (7, 2), (2, 3), (3, 4), (4, 5), (5, 6)])
}

/// Outer 5-cycle `v0..v4`, inner pentagram `v5..v9`, spokes `vi - v{i+5}`.
pub fn petersen() -> LabeledGraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    LabeledGraph::with_canonical_labels(10, &edges).expect("fixture is valid")
}

fn chain_labels(r: usize, t: usize, s: usize) -> Vec<String> {
    let mut labels: Vec<String> = (1..=r).map(|i| format!("a{i}")).collect();
    labels.extend((1..=t).map(|i| format!("x{i}")));
    labels.extend((1..=s).map(|i| format!("b{i}")));
    labels
}

fn check_chain(r: usize, t: usize, s: usize) -> Result<()> {
    if r < 2 || s < 2 || t < 3 {
        return Err(Error::InvalidParameter(format!(
            "chain needs r, s >= 2 and t >= 3, got r={r}, t={t}, s={s}"
        )));
    }
    Ok(())
}

fn clique_edges(range: core::ops::Range<usize>, edges: &mut Vec<(usize, usize)>) {
    for u in range.clone() {
        edges.extend((u + 1..range.end).map(|v| (u, v)));
    }
}

/// Cliques `K_r` on `a1..ar` and `K_s` on `b1..bs`, path `x1 - ... - xt`,
/// with every `ai` adjacent to `x1` and every `bi` adjacent to `xt`. Order
/// `r + t + s`.
pub fn para3_construction(r: usize, t: usize, s: usize) -> Result<LabeledGraph> {
    check_chain(r, t, s)?;
    let mut edges = Vec::new();
    clique_edges(0..r, &mut edges);
    clique_edges(r + t..r + t + s, &mut edges);
    edges.extend((r + 1..r + t).map(|v| (v - 1, v)));
    edges.extend((0..r).map(|a| (a, r)));
    edges.extend((r + t..r + t + s).map(|b| (b, r + t - 1)));
    LabeledGraph::from_index_edges(chain_labels(r, t, s), &edges)
}

/// Same ingredients glued by identification instead: `a_r = x1` and
/// `b1 = xt`, order `r + t + s - 2`. Labels `ar` and `b1` are dropped.
pub fn para3_identified(r: usize, t: usize, s: usize) -> Result<LabeledGraph> {
    check_chain(r, t, s)?;
    let mut labels: Vec<String> = (1..r).map(|i| format!("a{i}")).collect();
    labels.extend((1..=t).map(|i| format!("x{i}")));
    labels.extend((2..=s).map(|i| format!("b{i}")));
    let x1 = r - 1;
    let xt = x1 + t - 1;
    let mut edges = Vec::new();
    clique_edges(0..r, &mut edges);
    clique_edges(xt..xt + s, &mut edges);
    edges.extend((x1 + 1..=xt).map(|v| (v - 1, v)));
    LabeledGraph::from_index_edges(labels, &edges)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig1,
    Fig1G1,
    Fig1G2,
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Petersen,
    Para3 { r: usize, t: usize, s: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FigureItem {
    Graph(LabeledGraph),
    Family(GraphFamily),
}

impl FigureItem {
    /// A single graph becomes a singleton family.
    pub fn into_family(self) -> GraphFamily {
        match self {
            FigureItem::Graph(g) => GraphFamily::singleton(g),
            FigureItem::Family(f) => f,
        }
    }
}

/// Accepts `fig1`, `fig1_G1`, `fig1_G2`, `fig2_G` .. `fig5_G` (the `_G`
/// suffix is optional), `petersen` and `para3(r,t,s)`.
impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let fig = match key.as_str() {
            "fig1" => Figure::Fig1,
            "fig1_g1" => Figure::Fig1G1,
            "fig1_g2" => Figure::Fig1G2,
            "fig2" | "fig2_g" => Figure::Fig2,
            "fig3" | "fig3_g" => Figure::Fig3,
            "fig4" | "fig4_g" => Figure::Fig4,
            "fig5" | "fig5_g" => Figure::Fig5,
            "petersen" => Figure::Petersen,
            _ => {
                return parse_para3(&key)
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown figure selector `{s}`")))
            }
        };
        Ok(fig)
    }
}

fn parse_para3(key: &str) -> Option<Figure> {
    let args = key.strip_prefix("para3(")?.strip_suffix(')')?;
    let nums: Vec<usize> = args.split(',').map(|a| a.trim().parse().ok()).collect::<Option<_>>()?;
    match nums[..] {
        [r, t, s] => Some(Figure::Para3 { r, t, s }),
        _ => None,
    }
}

pub fn make_figure(which: Figure) -> Result<FigureItem> {
    use FigureItem::Graph;
    Ok(match which {
        Figure::Fig1 => FigureItem::Family(fig1_family()),
        Figure::Fig1G1 => Graph(fig1_g1()),
        Figure::Fig1G2 => Graph(fig1_g2()),
        Figure::Fig2 => Graph(fig2_g()),
        Figure::Fig3 => Graph(fig3_g()),
        Figure::Fig4 => Graph(fig4_g()),
        Figure::Fig5 => Graph(fig5_g()),
        Figure::Petersen => Graph(petersen()),
        Figure::Para3 { r, t, s } => Graph(para3_construction(r, t, s)?),
    })
}
