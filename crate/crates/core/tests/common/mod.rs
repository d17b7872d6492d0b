//! Brute-force oracles shared by the integration tests. Each one is written
//! from the definitions, without calling the corresponding library routine.

#![allow(dead_code)]

use std::collections::HashSet;
use std::sync::OnceLock;

use boxicity::enumerate::graphs_up_to_iso;
use boxicity::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn ceil_log2(x: usize) -> usize {
    let mut d = 0;
    while (1usize << d) < x {
        d += 1;
    }
    d
}

/// Isomorphism class representatives, computed once per test binary.
pub fn classes(n: usize) -> &'static [Graph] {
    static CACHE: [OnceLock<Vec<Graph>>; 9] = [const { OnceLock::new() }; 9];
    CACHE[n].get_or_init(|| graphs_up_to_iso(n).unwrap())
}

/// Every labeled graph on `n` vertices (n <= 6).
pub fn labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 6);
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
        .unwrap()
    })
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

pub fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    relabel(g, &perm)
}

fn adjacency(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 32);
    (0..g.n())
        .map(|v| g.neighbors(v).fold(0u32, |acc, u| acc | 1 << u))
        .collect()
}

/// Interval graph test by searching for a sequence of interval open/close events.
///
/// Opening `v` needs every open interval to be a neighbor and no closed
/// interval to be a neighbor; closing `v` needs every neighbor already opened.
pub fn brute_interval(g: &Graph) -> bool {
    fn go(adj: &[u32], opened: u32, closed: u32, seen: &mut HashSet<(u32, u32)>) -> bool {
        let all = (1u32 << adj.len()) - 1;
        if closed == all {
            return true;
        }
        if !seen.insert((opened, closed)) {
            return false;
        }
        let open = opened & !closed;
        for v in 0..adj.len() {
            let b = 1u32 << v;
            let ok = if opened & b == 0 {
                open & !adj[v] == 0 && closed & adj[v] == 0 && go(adj, opened | b, closed, seen)
            } else if closed & b == 0 {
                adj[v] & !opened == 0 && go(adj, opened, closed | b, seen)
            } else {
                false
            };
            if ok {
                return true;
            }
        }
        false
    }
    go(&adjacency(g), 0, 0, &mut HashSet::new())
}

/// Unit interval test: as [`brute_interval`] with intervals closing in the order they opened.
pub fn brute_unit_interval(g: &Graph) -> bool {
    fn go(
        adj: &[u32],
        closed: u32,
        queue: &mut Vec<usize>,
        seen: &mut HashSet<(u32, Vec<usize>)>,
    ) -> bool {
        let all = (1u32 << adj.len()) - 1;
        if closed == all {
            return true;
        }
        if !seen.insert((closed, queue.clone())) {
            return false;
        }
        let open = queue.iter().fold(0u32, |acc, &v| acc | 1 << v);
        let opened = open | closed;
        if let Some(&front) = queue.first() {
            if adj[front] & !opened == 0 {
                queue.remove(0);
                let ok = go(adj, closed | 1 << front, queue, seen);
                queue.insert(0, front);
                if ok {
                    return true;
                }
            }
        }
        for v in 0..adj.len() {
            if opened >> v & 1 == 0 && open & !adj[v] == 0 && closed & adj[v] == 0 {
                queue.push(v);
                let ok = go(adj, closed, queue, seen);
                queue.pop();
                if ok {
                    return true;
                }
            }
        }
        false
    }
    go(&adjacency(g), 0, &mut Vec::new(), &mut HashSet::new())
}

/// Exact boxicity (or cubicity when `unit`) by trying every multiset of `k`
/// factors for increasing `k`. Meant for graphs with at most 12 non-edges.
pub fn brute_exact(g: &Graph, unit: bool) -> usize {
    let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
    assert!(non_edges.len() <= 12);
    if non_edges.is_empty() {
        return 0;
    }
    // each factor as the set of non-edges it adds
    let factors: Vec<u32> = (0u32..1 << non_edges.len())
        .filter(|&added| {
            let extra = non_edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| added >> i & 1 == 1)
                .map(|(_, &e)| e);
            let h = Graph::from_edges(g.n(), g.edges().chain(extra)).unwrap();
            if unit {
                brute_unit_interval(&h)
            } else {
                brute_interval(&h)
            }
        })
        .collect();
    fn tuples(factors: &[u32], start: usize, left: usize, kept: u32) -> bool {
        if left == 0 {
            return kept == 0;
        }
        (start..factors.len()).any(|i| tuples(factors, i, left - 1, kept & factors[i]))
    }
    let all = (1u32 << non_edges.len()) - 1;
    (1..).find(|&k| tuples(&factors, 0, k, all)).unwrap()
}

/// Size of a smallest maximal matching, over all edge subsets.
pub fn brute_nu(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 20);
    (0u32..1 << edges.len())
        .filter_map(|mask| {
            let chosen: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut used = vec![false; g.n()];
            for &(u, v) in &chosen {
                if used[u] || used[v] {
                    return None;
                }
                used[u] = true;
                used[v] = true;
            }
            edges
                .iter()
                .all(|&(u, v)| used[u] || used[v])
                .then_some(chosen.len())
        })
        .min()
        .unwrap()
}

/// Largest matching, over all edge subsets.
pub fn brute_max_matching(g: &Graph) -> usize {
    fn go(edges: &[(usize, usize)], i: usize, used: u32) -> usize {
        if i == edges.len() {
            return 0;
        }
        let (u, v) = edges[i];
        let skip = go(edges, i + 1, used);
        if used >> u & 1 == 0 && used >> v & 1 == 0 {
            skip.max(1 + go(edges, i + 1, used | 1 << u | 1 << v))
        } else {
            skip
        }
    }
    go(&g.edges().collect::<Vec<_>>(), 0, 0)
}

/// Chromatic number by trying every assignment of `k` colors.
pub fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 7);
    if n == 0 {
        return 0;
    }
    (1..=n)
        .find(|&k| {
            let total = k.pow(n as u32);
            (0..total).any(|code| {
                let colors: Vec<usize> = (0..n).map(|v| code / k.pow(v as u32) % k).collect();
                g.edges().all(|(u, v)| colors[u] != colors[v])
            })
        })
        .unwrap()
}

/// Size of a minimum vertex cover, over all vertex subsets.
pub fn brute_min_cover(g: &Graph) -> usize {
    (0u32..1 << g.n())
        .filter(|&s| g.edges().all(|(u, v)| s >> u & 1 == 1 || s >> v & 1 == 1))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}
