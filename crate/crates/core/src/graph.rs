//! Undirected simple graphs over dense vertex ids `0..n`.
//!
//! Adjacency is stored as one bit row per vertex. Every exact routine in the
//! crate works on graphs with at most a few dozen vertices and converts to
//! single-word masks through [`Graph::masks`]; the general rows keep the type
//! usable for the larger inputs the constructions accept.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<Vec<u64>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        Graph {
            n,
            rows: vec![vec![0; words]; n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert(u, v);
            }
        }
        g
    }

    /// Builds a graph from unordered pairs; duplicates (in either orientation) collapse.
    pub fn from_edges<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::input(format!(
                    "edge ({u}, {v}) references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::input(format!("self-loop at vertex {u}")));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from single-word adjacency masks (`n <= 64`).
    ///
    /// The masks are symmetrized and the diagonal is ignored.
    pub fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        assert!(n <= WORD, "mask graphs hold at most 64 vertices");
        let mut g = Graph::empty(n);
        for (u, &m) in masks.iter().enumerate() {
            for v in bits(m) {
                if v != u && v < n {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn insert(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.rows[u][v / WORD] |= 1 << (v % WORD);
        self.rows[v][u / WORD] |= 1 << (u % WORD);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.iter().map(|w| w.count_ones() as usize).sum::<usize>())
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u][v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v]
            .iter()
            .enumerate()
            .flat_map(|(i, &w)| bits(w).map(move |b| i * WORD + b))
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    /// Single-word adjacency masks, available when `n <= 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.n > WORD {
            return None;
        }
        Some(
            self.rows
                .iter()
                .map(|r| r.first().copied().unwrap_or(0))
                .collect(),
        )
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.non_edges() {
            g.insert(u, v);
        }
        g
    }

    /// Subgraph induced by `vertices`, relabeled densely in the given order.
    ///
    /// Returns the subgraph and the map from new ids to original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut seen = vec![false; self.n];
        for &v in vertices {
            if v >= self.n {
                return Err(Error::input(format!("vertex {v} outside 0..{}", self.n)));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!("vertex {v} listed twice")));
            }
        }
        let mut g = Graph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert(i, j);
                }
            }
        }
        Ok((g, vertices.to_vec()))
    }

    /// Graph on the same vertex set with every pair of `clique` made adjacent.
    pub fn with_clique(&self, clique: &[usize]) -> Graph {
        let mut g = self.clone();
        for (i, &u) in clique.iter().enumerate() {
            for &v in &clique[i + 1..] {
                if u != v {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    /// Two-colors the graph by BFS, one component at a time.
    ///
    /// The lowest vertex of each component goes to `side1`. A non-bipartite
    /// graph yields an odd cycle as witness.
    pub fn bipartition(&self) -> std::result::Result<Bipartition, OddCycle> {
        let mut side = vec![u8::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut depth = vec![0usize; self.n];
        for root in 0..self.n {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if side[v] == u8::MAX {
                        side[v] = 1 - side[u];
                        parent[v] = u;
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    } else if side[v] == side[u] {
                        return Err(OddCycle(tree_cycle(u, v, &parent, &depth)));
                    }
                }
            }
        }
        let side1 = (0..self.n).filter(|&v| side[v] == 0).collect();
        let side2 = (0..self.n).filter(|&v| side[v] == 1).collect();
        Ok(Bipartition { side1, side2 })
    }
}

/// Closes the cycle formed by the non-tree edge `(u, v)` through their BFS ancestors.
fn tree_cycle(u: usize, v: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        left.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    left.extend(right.into_iter().rev());
    left
}

/// An odd cycle, listed in traversal order (the last vertex is adjacent to the first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddCycle(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side1: Vec<usize>,
    pub side2: Vec<usize>,
}

impl Bipartition {
    /// Checks that the sides partition `0..g.n()` and that no edge stays inside a side.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let mut side = vec![None; g.n()];
        for (s, list) in [(0u8, &self.side1), (1u8, &self.side2)] {
            for &v in list {
                if v >= g.n() {
                    return Err(Error::input(format!("bipartition vertex {v} out of range")));
                }
                if side[v].replace(s).is_some() {
                    return Err(Error::input(format!("vertex {v} appears in both sides")));
                }
            }
        }
        if let Some(v) = side.iter().position(Option::is_none) {
            return Err(Error::input(format!("vertex {v} missing from bipartition")));
        }
        if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
            return Err(Error::input(format!(
                "edge ({u}, {v}) lies inside one side"
            )));
        }
        Ok(())
    }
}

/// Iterates the set bit positions of `mask` in ascending order.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}
