//! Definitional oracles shared by the integration tests. Nothing here calls the
//! library's distance, resolving-graph or cover code: graphs are read through
//! their edge lists only.
#![allow(dead_code)]

use simdim_core::families::make_random_connected_graph;
use simdim_core::{GraphFamily, LabeledGraph};

pub type Dist = Vec<Vec<Option<usize>>>;

pub fn adjacency(g: &LabeledGraph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

pub fn bfs_distances(g: &LabeledGraph) -> Dist {
    let adj = adjacency(g);
    let n = g.n();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if d[y].is_none() {
                        d[y] = Some(d[x].unwrap() + 1);
                        queue.push_back(y);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn connected(d: &Dist) -> bool {
    d.iter().all(|row| row.iter().all(Option::is_some))
}

pub fn diameter(d: &Dist) -> usize {
    d.iter().flatten().map(|x| x.unwrap()).max().unwrap_or(0)
}

/// `w` strongly resolves `u, v`: one of them lies on a shortest path from the
/// other to `w`.
pub fn resolves(d: &Dist, w: usize, u: usize, v: usize) -> bool {
    let g = |a: usize, b: usize| d[a][b].unwrap();
    g(u, w) == g(u, v) + g(v, w) || g(v, w) == g(v, u) + g(u, w)
}

pub fn is_strong_generator(d: &Dist, set: &[usize]) -> bool {
    let n = d.len();
    (0..n).all(|u| (u + 1..n).all(|v| set.iter().any(|&w| resolves(d, w, u, v))))
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Masks of `0..n` ordered by popcount, then numerically.
pub fn masks_by_size(n: usize) -> Vec<u64> {
    let mut all: Vec<u64> = (0..1u64 << n).collect();
    all.sort_by_key(|m| (m.count_ones(), *m));
    all
}

/// Smallest simultaneous strong generator, straight from the definition.
pub fn oracle_sd(dists: &[Dist]) -> (usize, Vec<usize>) {
    let n = dists[0].len();
    for mask in masks_by_size(n) {
        let set = members(mask);
        if dists.iter().all(|d| is_strong_generator(d, &set)) {
            return (set.len(), set);
        }
    }
    unreachable!("V is always a generator")
}

pub fn oracle_family_sd(f: &GraphFamily) -> usize {
    let dists: Vec<Dist> = f.members().iter().map(bfs_distances).collect();
    oracle_sd(&dists).0
}

pub fn oracle_dim(g: &LabeledGraph) -> usize {
    oracle_sd(&[bfs_distances(g)]).0
}

pub fn is_cover(edges: &[(usize, usize)], set: &[usize]) -> bool {
    edges.iter().all(|(u, v)| set.contains(u) || set.contains(v))
}

pub fn oracle_cover(n: usize, edges: &[(usize, usize)]) -> usize {
    masks_by_size(n).into_iter().map(members).find(|s| is_cover(edges, s)).map(|s| s.len()).unwrap()
}

pub fn oracle_beta(g: &LabeledGraph) -> usize {
    oracle_cover(g.n(), &g.edges())
}

/// Smallest set that is both a vertex cover and a strong generator of `g`.
pub fn oracle_beta_s(g: &LabeledGraph) -> usize {
    let d = bfs_distances(g);
    let edges = g.edges();
    masks_by_size(g.n())
        .into_iter()
        .map(members)
        .find(|s| is_cover(&edges, s) && is_strong_generator(&d, s))
        .unwrap()
        .len()
}

/// Mutually maximally distant pairs from the definition.
pub fn oracle_mmd(g: &LabeledGraph) -> Vec<(usize, usize)> {
    let d = bfs_distances(g);
    let adj = adjacency(g);
    let md = |u: usize, v: usize| adj[u].iter().all(|&w| d[v][w] <= d[v][u]);
    let n = g.n();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if md(u, v) && md(v, u) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Random family of `k` connected graphs on `v0..v{n-1}` whose edge densities
/// vary with the seed.
pub fn random_family(n: usize, k: usize, seed: u64) -> GraphFamily {
    let graphs = (0..k as u64)
        .map(|i| {
            let s = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i);
            let p = [0.1, 0.25, 0.4, 0.6][(s % 4) as usize];
            make_random_connected_graph(n, p, s).unwrap()
        })
        .collect();
    GraphFamily::from_graphs(graphs).unwrap()
}

/// Every graph on `v0..v{n-1}`, one per edge mask over the pairs `(u, v)`,
/// `u < v`, in lexicographic order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = LabeledGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges: Vec<_> =
            pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
        LabeledGraph::with_canonical_labels(n, &edges).unwrap()
    })
}

pub fn leaves(g: &LabeledGraph) -> usize {
    (0..g.n()).filter(|&v| g.degree(v) == 1).count()
}
