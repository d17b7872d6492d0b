//! Maximum matchings (Edmonds' blossom algorithm) and minimum maximal matchings.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Default vertex limit for [`min_maximal_matching`].
pub const MIN_MAXIMAL_CAP: usize = 16;

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching of a general graph, as sorted pairs `(u, v)` with `u < v`.
///
/// Augmenting paths are grown from free vertices in ascending order with
/// neighbors scanned ascending, so the result is deterministic.
pub fn max_matching(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut blossom = Blossom {
        adj: &adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    // greedy start
    for (u, nb) in adj.iter().enumerate() {
        if blossom.mate[u] == NONE {
            if let Some(&v) = nb.iter().find(|&&v| blossom.mate[v] == NONE) {
                blossom.mate[u] = v;
                blossom.mate[v] = u;
            }
        }
    }
    for root in 0..n {
        if blossom.mate[root] == NONE {
            if let Some(end) = blossom.find_path(root) {
                blossom.augment(end);
            }
        }
    }
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&u| blossom.mate[u] != NONE && u < blossom.mate[u])
        .map(|u| (u, blossom.mate[u]))
        .collect();
    pairs.sort_unstable();
    pairs
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        let adj = self.adj;
        while let Some(v) = self.queue.pop_front() {
            for &to in &adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}

/// True when no edge of `g` has both endpoints unmatched by `matching`.
pub fn is_maximal_matching(g: &Graph, matching: &[(usize, usize)]) -> bool {
    let mut matched = vec![false; g.n()];
    for &(u, v) in matching {
        if matched[u] || matched[v] || !g.has_edge(u, v) {
            return false;
        }
        matched[u] = true;
        matched[v] = true;
    }
    g.edges().all(|(u, v)| matched[u] || matched[v])
}

/// A maximal matching of minimum cardinality (its size is ν).
///
/// Branches on the lexicographically first edge with both ends free: some edge
/// at one of its ends must join the matching. Results are memoized on the set
/// of matched vertices.
pub fn min_maximal_matching(g: &Graph) -> Result<Vec<(usize, usize)>> {
    Error::check_cap(
        "vertex count for minimum maximal matching",
        g.n(),
        MIN_MAXIMAL_CAP,
    )?;
    let masks = g.masks().expect("cap is below 64");
    let mut memo = HashMap::new();
    best_completion(&masks, 0, &mut memo);
    // replay the memoized choices
    let mut matched = 0u64;
    let mut out = Vec::new();
    while let Some(&(_, Some((u, v)))) = memo.get(&matched) {
        out.push((u.min(v), u.max(v)));
        matched |= (1 << u) | (1 << v);
    }
    out.sort_unstable();
    Ok(out)
}

type Memo = HashMap<u64, (usize, Option<(usize, usize)>)>;

fn best_completion(masks: &[u64], matched: u64, memo: &mut Memo) -> usize {
    if let Some(&(size, _)) = memo.get(&matched) {
        return size;
    }
    let free_edge = (0..masks.len())
        .filter(|&u| matched >> u & 1 == 0)
        .find_map(|u| bits(masks[u] & !matched).find(|&v| v > u).map(|v| (u, v)));
    let result = match free_edge {
        None => (0, None),
        Some((a, b)) => {
            let mut best = (usize::MAX, None);
            let mut candidates: Vec<(usize, usize)> = Vec::new();
            for end in [a, b] {
                for x in bits(masks[end] & !matched) {
                    let e = (end.min(x), end.max(x));
                    if !candidates.contains(&e) {
                        candidates.push(e);
                    }
                }
            }
            candidates.sort_unstable();
            for (u, v) in candidates {
                let size = 1 + best_completion(masks, matched | (1 << u) | (1 << v), memo);
                if size < best.0 {
                    best = (size, Some((u, v)));
                }
            }
            best
        }
    };
    memo.insert(matched, result);
    result.0
}

/// Minimum vertex cover of a bipartite graph from a maximum matching (König).
///
/// `side1` must be one side of a valid bipartition of `g`.
pub fn konig_cover(g: &Graph, side1: &[usize]) -> Vec<usize> {
    let n = g.n();
    let matching = max_matching(g);
    let mut mate = vec![NONE; n];
    for &(u, v) in &matching {
        mate[u] = v;
        mate[v] = u;
    }
    let mut left = vec![false; n];
    for &v in side1 {
        left[v] = true;
    }
    // alternating reachability from free left vertices
    let mut reached = vec![false; n];
    let mut queue: VecDeque<usize> = side1.iter().copied().filter(|&v| mate[v] == NONE).collect();
    for &v in &queue {
        reached[v] = true;
    }
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if !reached[w] {
                reached[w] = true;
                let m = mate[w];
                if m != NONE && !reached[m] {
                    reached[m] = true;
                    queue.push_back(m);
                }
            }
        }
    }
    (0..n)
        .filter(|&v| (left[v] && !reached[v]) || (!left[v] && reached[v]))
        .collect()
}
