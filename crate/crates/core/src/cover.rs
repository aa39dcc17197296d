//! Exact minimum vertex cover and maximum clique.
//!
//! Vertex cover: kernelize (isolated vertices, degree-one vertices, vertices
//! whose degree alone exhausts the remaining budget), bound with a greedy
//! maximal matching, then branch on a maximum-degree vertex (lowest index on
//! ties): either it joins the cover, or its whole neighbourhood does. The
//! "include" branch is explored first, so witnesses are deterministic.
//!
//! Maximum clique: branch and bound with a greedy colouring bound.

use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::graph::{LabeledGraph, SubsetRole, Vertex, VertexSubset};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverResult {
    pub size: usize,
    pub witness: VertexSubset,
    /// Search nodes visited.
    pub explored: u64,
}

/// Switches for the reduction rules and the pruning bound. All on by default;
/// turning any of them off never changes the optimum, only the search effort.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverOptions {
    pub degree_one: bool,
    pub high_degree: bool,
    pub matching_bound: bool,
}

impl Default for CoverOptions {
    fn default() -> Self {
        CoverOptions { degree_one: true, high_degree: true, matching_bound: true }
    }
}

pub const DEFAULT_BRUTE_FORCE_LIMIT: usize = 20;

pub fn is_vertex_cover(edges: &[(Vertex, Vertex)], set: &[Vertex]) -> bool {
    edges.iter().all(|(u, v)| set.contains(u) || set.contains(v))
}

fn adjacency(n: usize, edges: &[(Vertex, Vertex)]) -> Vec<FixedBitSet> {
    let mut adj: Vec<FixedBitSet> = (0..n).map(|_| FixedBitSet::with_capacity(n)).collect();
    for &(u, v) in edges {
        assert!(u < n && v < n && u != v, "edge ({u}, {v}) invalid for {n} vertices");
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

/// Exact minimum vertex cover of the graph on `0..n` with `edges`.
///
/// Panics on self-loops or endpoints `>= n`.
pub fn min_vertex_cover(n: usize, edges: &[(Vertex, Vertex)]) -> CoverResult {
    min_vertex_cover_with(n, edges, CoverOptions::default())
}

pub fn min_vertex_cover_with(n: usize, edges: &[(Vertex, Vertex)], options: CoverOptions) -> CoverResult {
    let adj = adjacency(n, edges);
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut solver = CoverSolver { adj: &adj, options, best: greedy_cover(&adj), explored: 0 };
    let mut chosen = Vec::new();
    solver.search(alive, &mut chosen);
    CoverResult {
        size: solver.best.len(),
        witness: VertexSubset::new(solver.best, SubsetRole::Cover),
        explored: solver.explored,
    }
}

/// Repeatedly takes a maximum-degree vertex. Seeds the incumbent.
fn greedy_cover(adj: &[FixedBitSet]) -> Vec<Vertex> {
    let n = adj.len();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut cover = Vec::new();
    loop {
        let best = alive
            .ones()
            .map(|v| (adj[v].intersection_count(&alive), v))
            .filter(|&(d, _)| d > 0)
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        match best {
            Some((_, v)) => {
                cover.push(v);
                alive.set(v, false);
            }
            None => return cover,
        }
    }
}

struct CoverSolver<'a> {
    adj: &'a [FixedBitSet],
    options: CoverOptions,
    best: Vec<Vertex>,
    explored: u64,
}

impl CoverSolver<'_> {
    fn degree(&self, v: Vertex, alive: &FixedBitSet) -> usize {
        self.adj[v].intersection_count(alive)
    }

    fn search(&mut self, mut alive: FixedBitSet, chosen: &mut Vec<Vertex>) {
        self.explored += 1;
        let mark = chosen.len();
        if !self.reduce(&mut alive, chosen) {
            chosen.truncate(mark);
            return;
        }
        if alive.is_clear() {
            self.best = chosen.clone();
            chosen.truncate(mark);
            return;
        }
        if self.options.matching_bound && chosen.len() + greedy_matching(self.adj, &alive) >= self.best.len()
        {
            chosen.truncate(mark);
            return;
        }
        let v = alive
            .ones()
            .map(|v| (self.degree(v, &alive), v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
            .expect("alive is non-empty");

        let mut without_v = alive.clone();
        without_v.set(v, false);
        chosen.push(v);
        self.search(without_v.clone(), chosen);
        chosen.pop();

        let mut nbrs = self.adj[v].clone();
        nbrs.intersect_with(&alive);
        chosen.extend(nbrs.ones());
        if chosen.len() < self.best.len() {
            without_v.difference_with(&nbrs);
            self.search(without_v, chosen);
        }
        chosen.truncate(mark);
    }

    /// Applies the reduction rules to a fixed point and leaves only vertices
    /// with live edges in `alive`. Returns false when the branch cannot beat the
    /// incumbent.
    fn reduce(&self, alive: &mut FixedBitSet, chosen: &mut Vec<Vertex>) -> bool {
        loop {
            if chosen.len() >= self.best.len() {
                return false;
            }
            let mut changed = false;
            let snapshot: Vec<Vertex> = alive.ones().collect();
            for v in snapshot {
                if !alive.contains(v) {
                    continue;
                }
                let d = self.degree(v, alive);
                if d == 0 {
                    alive.set(v, false);
                } else if d == 1 && self.options.degree_one {
                    let mut row = self.adj[v].clone();
                    row.intersect_with(alive);
                    let u = row.ones().next().expect("degree one");
                    chosen.push(u);
                    alive.set(u, false);
                    alive.set(v, false);
                    changed = true;
                } else if self.options.high_degree && chosen.len() + d >= self.best.len() {
                    // Leaving v out would force all d neighbours in.
                    chosen.push(v);
                    alive.set(v, false);
                    changed = true;
                }
                if chosen.len() >= self.best.len() {
                    return false;
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

fn greedy_matching(adj: &[FixedBitSet], alive: &FixedBitSet) -> usize {
    let mut free = alive.clone();
    let mut size = 0;
    for v in alive.ones() {
        if !free.contains(v) {
            continue;
        }
        let mut row = adj[v].clone();
        row.intersect_with(&free);
        if let Some(u) = row.ones().next() {
            free.set(u, false);
            free.set(v, false);
            size += 1;
        }
    }
    size
}

/// Minimum vertex cover by enumerating subsets in increasing cardinality.
/// Independent of [`min_vertex_cover`]; meant as a test oracle.
pub fn brute_force_min_cover(n: usize, edges: &[(Vertex, Vertex)], limit: usize) -> Result<CoverResult> {
    if n > limit || n > 63 {
        return Err(Error::TooLarge { n, limit });
    }
    let masks: Vec<u64> = edges.iter().map(|&(u, v)| (1u64 << u) | (1u64 << v)).collect();
    let mut explored = 0;
    for k in 0..=n {
        let found = subsets_of_size(n, k).find(|&s| {
            explored += 1;
            masks.iter().all(|&e| e & s != 0)
        });
        if let Some(s) = found {
            let witness: Vec<Vertex> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
            return Ok(CoverResult {
                size: k,
                witness: VertexSubset::new(witness, SubsetRole::Cover),
                explored,
            });
        }
    }
    unreachable!("the full vertex set covers every edge")
}

/// All `k`-subsets of `0..n` as bitmasks, in increasing numeric order.
///
/// Panics when `n >= 64`.
pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(n < 64, "bitmask subsets need n < 64");
    let limit = (1u64 << n) - 1;
    let first = if k == 0 {
        Some(0u64)
    } else if k <= n {
        Some((1u64 << k) - 1)
    } else {
        None
    };
    let mut next = first;
    core::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack.
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (r != 0 && nxt <= limit && nxt > cur).then_some(nxt)
        };
        Some(cur)
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub size: usize,
    pub witness: VertexSubset,
}

/// Largest vertex set that is pairwise adjacent in `g` and pairwise `allowed`.
pub fn max_constrained_clique<F>(g: &LabeledGraph, allowed: F) -> CliqueResult
where
    F: Fn(Vertex, Vertex) -> bool,
{
    let n = g.n();
    let adj: Vec<FixedBitSet> = (0..n)
        .map(|u| {
            let mut row = FixedBitSet::with_capacity(n);
            for v in g.neighbor_iter(u) {
                if allowed(u, v) && allowed(v, u) {
                    row.insert(v);
                }
            }
            row
        })
        .collect();
    max_clique(&adj)
}

/// Maximum clique of a symmetric adjacency.
pub fn max_clique(adj: &[FixedBitSet]) -> CliqueResult {
    let n = adj.len();
    let mut search = CliqueSearch { adj, best: Vec::new() };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(&mut Vec::new(), all);
    CliqueResult { size: search.best.len(), witness: VertexSubset::new(search.best, SubsetRole::Clique) }
}

struct CliqueSearch<'a> {
    adj: &'a [FixedBitSet],
    best: Vec<Vertex>,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, current: &mut Vec<Vertex>, mut candidates: FixedBitSet) {
        let (order, colors) = self.color_classes(&candidates);
        for i in (0..order.len()).rev() {
            if current.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            current.push(v);
            let mut next = candidates.clone();
            next.intersect_with(&self.adj[v]);
            if next.is_clear() {
                if current.len() > self.best.len() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next);
            }
            current.pop();
            candidates.set(v, false);
        }
    }

    /// Greedy sequential colouring; vertices returned by colour class with the
    /// class number (1-based) as an upper bound on any clique among the prefix.
    fn color_classes(&self, candidates: &FixedBitSet) -> (Vec<Vertex>, Vec<usize>) {
        let mut uncolored = candidates.clone();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut color = 0;
        while !uncolored.is_clear() {
            color += 1;
            let mut available = uncolored.clone();
            while let Some(v) = available.ones().next() {
                order.push(v);
                colors.push(color);
                uncolored.set(v, false);
                available.set(v, false);
                available.difference_with(&self.adj[v]);
            }
        }
        (order, colors)
    }
}
