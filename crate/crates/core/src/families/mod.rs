//! Graph and family constructors, figure fixtures, the hitting-set reduction
//! and closed-form predictions for trees paired with their complements.
//!
//! Standard graphs use labels `v0..v{n-1}`. Random generators are pure
//! functions of their parameters and seed (ChaCha8).

mod figures;
mod reduction;
mod trees;

pub use figures::{
    fig1_family, fig1_g1, fig1_g2, fig2_g, fig3_g, fig4_g, fig5_g, make_figure, para3_construction,
    para3_identified, petersen, Figure, FigureItem,
};
pub use reduction::{
    brute_force_min_hitting_set, fig6_instance, random_hsp2_instance, reduce_hsp2, reduce_hsp2_with,
    verify_reduction, verify_reduction_with, BudgetCheck, Hsp2Instance, PathOrder, ReductionCheck,
    ReductionInstance,
};
pub use trees::{leaf_count, prune_leaves_except, tree_complement_pair_formula, TreeCase, TreePrediction};

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{GraphFamily, LabeledGraph, Vertex};
use crate::{Error, Result};

pub const HYPERCUBE_MAX_DIMENSION: usize = 10;

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn canonical(n: usize, edges: &[(Vertex, Vertex)]) -> LabeledGraph {
    LabeledGraph::with_canonical_labels(n, edges).expect("generated edges are valid")
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn make_path(n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(invalid(format!("path needs at least one vertex, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(canonical(n, &edges))
}

pub fn make_cycle(n: usize) -> Result<LabeledGraph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs at least three vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(canonical(n, &edges))
}

pub fn make_complete(n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(invalid(format!("complete graph needs at least one vertex, got {n}")));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((u + 1..n).map(|v| (u, v)));
    }
    Ok(canonical(n, &edges))
}

/// `K_{r,s}`: parts `v0..v{r-1}` and `v{r}..v{r+s-1}`.
pub fn make_complete_bipartite(r: usize, s: usize) -> Result<LabeledGraph> {
    if r == 0 || s == 0 {
        return Err(invalid(format!("K_{{{r},{s}}} needs non-empty parts")));
    }
    let mut edges = Vec::new();
    for u in 0..r {
        edges.extend((r..r + s).map(|v| (u, v)));
    }
    Ok(canonical(r + s, &edges))
}

/// `K_{1,r}` with centre `v0`.
pub fn make_star(r: usize) -> Result<LabeledGraph> {
    make_complete_bipartite(1, r)
}

/// `Q_r` on bitstring labels; vertex `i` has the binary expansion of `i`.
pub fn make_hypercube(r: usize) -> Result<LabeledGraph> {
    if r == 0 || r > HYPERCUBE_MAX_DIMENSION {
        return Err(invalid(format!(
            "hypercube dimension must be in 1..={HYPERCUBE_MAX_DIMENSION}, got {r}"
        )));
    }
    let n = 1usize << r;
    let labels = (0..n).map(|i| format!("{i:0r$b}"));
    let mut edges = Vec::new();
    for u in 0..n {
        edges.extend((0..r).map(|b| u ^ (1 << b)).filter(|&v| v > u).map(|v| (u, v)));
    }
    LabeledGraph::from_index_edges(labels, &edges)
}

/// `G ⊙ H`: the vertices of `G`, then copy `i` of `H` labeled `h@i` for each
/// vertex `i` of `G`, joined to `i`.
pub fn corona_product(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    if g.n() < 2 {
        return Err(Error::TrivialGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected("G".into()));
    }
    if h.n() == 0 {
        return Err(invalid("corona factor H has no vertices".into()));
    }
    let (ng, nh) = (g.n(), h.n());
    let mut labels: Vec<String> = g.labels().to_vec();
    for i in 0..ng {
        labels.extend(h.labels().iter().map(|l| format!("{l}@{i}")));
    }
    let mut edges = g.edges();
    for i in 0..ng {
        let base = ng + i * nh;
        edges.extend((0..nh).map(|j| (i, base + j)));
        edges.extend(h.edges().into_iter().map(|(a, b)| (base + a, base + b)));
    }
    LabeledGraph::from_index_edges(labels, &edges)
}

/// `G □ H` on labels `a,b`, ordered with the `H` coordinate varying fastest.
pub fn cartesian_product(g: &LabeledGraph, h: &LabeledGraph) -> Result<LabeledGraph> {
    let (ng, nh) = (g.n(), h.n());
    let labels: Vec<String> =
        g.labels().iter().flat_map(|a| h.labels().iter().map(move |b| format!("{a},{b}"))).collect();
    let idx = |a: Vertex, b: Vertex| a * nh + b;
    let mut edges = Vec::new();
    for (x, y) in g.edges() {
        edges.extend((0..nh).map(|b| (idx(x, b), idx(y, b))));
    }
    for (x, y) in h.edges() {
        edges.extend((0..ng).map(|a| (idx(a, x), idx(a, y))));
    }
    LabeledGraph::from_index_edges(labels, &edges)
}

/// `r + 1` copies of `K_{1,r}` on `v0..v{r}`; member `S{i}` is centred at `v{i}`.
pub fn make_star_family(r: usize) -> Result<GraphFamily> {
    if r < 2 {
        return Err(invalid(format!("star family needs r >= 2, got {r}")));
    }
    let members = (0..=r)
        .map(|c| {
            let edges: Vec<_> = (0..=r).filter(|&v| v != c).map(|v| (c, v)).collect();
            (format!("S{c}"), canonical(r + 1, &edges))
        })
        .collect();
    GraphFamily::new(members)
}

fn path_through(order: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    order.windows(2).map(|w| (w[0], w[1])).collect()
}

/// `k` paths on `v0..v{n-1}`, each starting at `v0` and otherwise in a random
/// order. Members are `P1..Pk`.
pub fn make_shared_leaf_paths(n: usize, k: usize, seed: u64) -> Result<GraphFamily> {
    if n < 2 || k == 0 {
        return Err(invalid(format!("shared-leaf paths need n >= 2 and k >= 1, got n={n}, k={k}")));
    }
    let mut rng = rng(seed);
    let members = (1..=k)
        .map(|i| {
            let mut order: Vec<Vertex> = (1..n).collect();
            order.shuffle(&mut rng);
            order.insert(0, 0);
            (format!("P{i}"), canonical(n, &path_through(&order)))
        })
        .collect();
    GraphFamily::new(members)
}

/// Family `{G_1, H_1, ..., G_k, H_k}` on `r + m` vertices. Vertex `v0` is the
/// centre of a star `K_{1,r}` on `v0..v{r}` (in `G_i`) or lies in a clique
/// `K_{r+1}` on the same vertices (in `H_i`), and both carry a path on
/// `{v0} ∪ {v{r+1}..v{r+m-1}}` starting at `v0`, in a random order shared by
/// `G_i` and `H_i`.
pub fn make_star_clique_paths(r: usize, m: usize, k: usize, seed: u64) -> Result<GraphFamily> {
    if r < 2 || m < 2 || k == 0 {
        return Err(invalid(format!(
            "star/clique family needs r >= 2, m >= 2, k >= 1, got r={r}, m={m}, k={k}"
        )));
    }
    let n = r + m;
    let mut rng = rng(seed);
    let mut members = Vec::new();
    for i in 1..=k {
        let mut order: Vec<Vertex> = (r + 1..n).collect();
        order.shuffle(&mut rng);
        order.insert(0, 0);
        let path = path_through(&order);
        let mut star = path.clone();
        star.extend((1..=r).map(|v| (0, v)));
        let mut clique = path;
        for u in 0..=r {
            clique.extend((u + 1..=r).map(|v| (u, v)));
        }
        members.push((format!("G{i}"), canonical(n, &star)));
        members.push((format!("H{i}"), canonical(n, &clique)));
    }
    GraphFamily::new(members)
}

/// Uniform labeled tree from a random Prüfer sequence.
pub fn make_random_tree(n: usize, seed: u64) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(invalid("tree needs at least one vertex".into()));
    }
    Ok(canonical(n, &random_tree_edges(n, &mut rng(seed))))
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    if n < 3 {
        return (1..n).map(|v| (0, v)).collect();
    }
    let code: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = alloc::vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] = 0;
        degree[c] -= 1;
    }
    let rest: Vec<Vertex> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Random spanning tree plus every other pair independently with probability
/// `p`.
pub fn make_random_connected_graph(n: usize, p: f64, seed: u64) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(invalid("graph needs at least one vertex".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = rng(seed);
    let mut g = canonical(n, &random_tree_edges(n, &mut rng));
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.try_add_edge(u, v)?;
            }
        }
    }
    Ok(g)
}

/// Caterpillar with spine `v0..v{s-1}` (`s = legs.len()`) where spine vertex
/// `i` carries `legs[i]` pendant vertices, numbered after the spine.
pub fn make_caterpillar(legs: &[usize]) -> Result<LabeledGraph> {
    if legs.is_empty() {
        return Err(invalid("caterpillar needs a non-empty spine".into()));
    }
    let s = legs.len();
    let mut edges: Vec<_> = (1..s).map(|i| (i - 1, i)).collect();
    let mut next = s;
    for (i, &l) in legs.iter().enumerate() {
        edges.extend((next..next + l).map(|v| (i, v)));
        next += l;
    }
    Ok(canonical(next, &edges))
}

/// Caterpillar with spine length `spine` and `0..=max_legs` legs per spine
/// vertex, chosen at random.
pub fn make_random_caterpillar(spine: usize, max_legs: usize, seed: u64) -> Result<LabeledGraph> {
    let mut rng = rng(seed);
    let legs: Vec<usize> = (0..spine).map(|_| rng.gen_range(0..=max_legs)).collect();
    make_caterpillar(&legs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dimension::{simultaneous_strong_dimension, strong_dimension};
    use crate::strong::union_sr_graph;

    #[test]
    fn standard_graphs() {
        let c5 = make_cycle(5).unwrap();
        assert_eq!(c5.edge_count(), 5);
        assert!((0..5).all(|v| c5.degree(v) == 2));
        assert_eq!(make_complete(4).unwrap().edge_count(), 6);
        let star = make_star(4).unwrap();
        assert_eq!(star.degree(0), 4);
        assert_eq!(make_path(1).unwrap().n(), 1);
        assert!(make_cycle(2).is_err());
        assert!(make_complete_bipartite(0, 3).is_err());
    }

    #[test]
    fn hypercube() {
        let q3 = make_hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.edge_count()), (8, 12));
        assert_eq!(q3.label(5), "101");
        let d = q3.distances();
        assert_eq!(d.diameter(), 3);
        for u in 0..8 {
            let far: Vec<_> = (0..8).filter(|&v| d.get(u, v) == Some(3)).collect();
            assert_eq!(far, [u ^ 7]);
        }
        assert_eq!(strong_dimension(&q3).unwrap().value, 4);
        assert!(make_hypercube(11).is_err());
    }

    #[test]
    fn corona_and_product() {
        let k2 = make_complete(2).unwrap();
        let k1 = make_complete(1).unwrap();
        let p4 = corona_product(&k2, &k1).unwrap();
        assert_eq!(p4.labels(), ["v0", "v1", "v0@0", "v0@1"]);
        assert_eq!(p4.edge_count(), 3);
        assert_eq!(strong_dimension(&p4).unwrap().value, 1);
        let c = corona_product(&make_cycle(4).unwrap(), &make_path(3).unwrap()).unwrap();
        assert_eq!(c.n(), 4 * 4);
        let prism = cartesian_product(&make_cycle(4).unwrap(), &k2).unwrap();
        assert_eq!((prism.n(), prism.edge_count()), (8, 12));
        assert!(corona_product(&k1, &k2).is_err());
    }

    #[test]
    fn star_family() {
        let f = make_star_family(4).unwrap();
        assert_eq!(f.len(), 5);
        assert!(union_sr_graph(&f).unwrap().is_complete());
        assert_eq!(simultaneous_strong_dimension(&f).unwrap().value, 4);
        for g in f.members() {
            assert_eq!(strong_dimension(g).unwrap().value, 3);
        }
    }

    #[test]
    fn shared_leaf_paths() {
        let f = make_shared_leaf_paths(7, 4, 11).unwrap();
        let r = simultaneous_strong_dimension(&f).unwrap();
        assert_eq!(r.value, 1);
        assert_eq!(make_shared_leaf_paths(7, 4, 11).unwrap(), f);
    }

    #[test]
    fn random_generators_are_deterministic() {
        for seed in 0..20 {
            let t = make_random_tree(9, seed).unwrap();
            assert_eq!(t.edge_count(), 8);
            assert!(t.is_connected());
            assert_eq!(t, make_random_tree(9, seed).unwrap());
            let g = make_random_connected_graph(9, 0.3, seed).unwrap();
            assert!(g.is_connected());
            assert_eq!(g, make_random_connected_graph(9, 0.3, seed).unwrap());
        }
    }

    #[test]
    fn caterpillar_shape() {
        let t = make_caterpillar(&[2, 0, 1, 3]).unwrap();
        assert_eq!(t.n(), 10);
        assert_eq!(t.edge_count(), 9);
        assert_eq!(leaf_count(&t), 6);
    }
}
