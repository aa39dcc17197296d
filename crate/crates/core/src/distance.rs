//! All-pairs shortest-path distances.

use alloc::vec;
use alloc::vec::Vec;

use fixedbitset::FixedBitSet;

use crate::graph::{LabeledGraph, Vertex};
use crate::{Error, Result};

// Never exposed: callers see `Option<u32>`.
const UNREACHABLE: u32 = u32::MAX;

/// BFS distances of one graph. Pairs in different components have no
/// distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
    diameter: u32,
    connected: bool,
}

impl DistanceMatrix {
    pub fn of(g: &LabeledGraph) -> Self {
        let n = g.n();
        let mut d = vec![UNREACHABLE; n * n];
        let mut connected = true;
        let mut diameter = 0;
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            row[s] = 0;
            let mut seen = FixedBitSet::with_capacity(n);
            seen.insert(s);
            let mut frontier = seen.clone();
            let mut level = 0;
            while !frontier.is_clear() {
                level += 1;
                let mut next = FixedBitSet::with_capacity(n);
                for v in frontier.ones() {
                    next.union_with(g.neighbors(v));
                }
                next.difference_with(&seen);
                for v in next.ones() {
                    row[v] = level;
                }
                if !next.is_clear() {
                    diameter = diameter.max(level);
                }
                seen.union_with(&next);
                frontier = next;
            }
            connected &= seen.count_ones(..) == n;
        }
        DistanceMatrix { n, d, diameter, connected }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    pub fn get(&self, u: Vertex, v: Vertex) -> Option<u32> {
        match self.d[u * self.n + v] {
            UNREACHABLE => None,
            x => Some(x),
        }
    }

    /// Largest finite distance.
    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }
}

/// Distance matrix of a connected graph: every distance is finite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metric {
    matrix: DistanceMatrix,
}

impl Metric {
    pub fn of(g: &LabeledGraph) -> Result<Self> {
        Self::try_from(DistanceMatrix::of(g))
    }

    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u32 {
        self.matrix.d[u * self.matrix.n + v]
    }

    pub fn row(&self, u: Vertex) -> &[u32] {
        &self.matrix.d[u * self.matrix.n..(u + 1) * self.matrix.n]
    }

    pub fn n(&self) -> usize {
        self.matrix.n
    }

    pub fn diameter(&self) -> u32 {
        self.matrix.diameter
    }

    pub fn matrix(&self) -> &DistanceMatrix {
        &self.matrix
    }
}

impl TryFrom<DistanceMatrix> for Metric {
    type Error = Error;

    fn try_from(matrix: DistanceMatrix) -> Result<Self> {
        if matrix.connected {
            Ok(Metric { matrix })
        } else {
            Err(Error::Disconnected("G".into()))
        }
    }
}
