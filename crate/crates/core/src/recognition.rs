//! Interval and unit-interval recognition for small graphs.
//!
//! A graph is interval exactly when its maximal cliques can be ordered so that
//! the cliques containing each vertex are consecutive. Cliques come from a
//! pivoting Bron–Kerbosch search; more than `n` maximal cliques means the
//! graph is not chordal and is rejected outright. The order itself is found
//! by depth-first search over clique sequences, memoizing dead states.
//!
//! Unit interval graphs are the claw-free interval graphs. Their witness is
//! computed from the clique order by solving a system of difference
//! constraints over integer left endpoints.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::interval::IntervalAssignment;

/// Default vertex limit for recognition.
pub const RECOGNITION_CAP: usize = 16;

pub fn is_interval(g: &Graph) -> Result<bool> {
    Ok(interval_model(g)?.is_some())
}

pub fn is_unit_interval(g: &Graph) -> Result<bool> {
    Ok(unit_interval_model(g)?.is_some())
}

/// Interval model of `g` (scale 2), or `None` if `g` is not an interval graph.
pub fn interval_model(g: &Graph) -> Result<Option<IntervalAssignment>> {
    Ok(interval_model_masks(&small_masks(g)?))
}

/// Unit interval model of `g`, or `None` if `g` is not a unit interval graph.
///
/// The model uses the smallest integer scale (at least 2) that admits integer
/// left endpoints; unit length equals the scale.
pub fn unit_interval_model(g: &Graph) -> Result<Option<IntervalAssignment>> {
    Ok(unit_interval_model_masks(&small_masks(g)?))
}

pub(crate) fn interval_model_masks(masks: &[u64]) -> Option<IntervalAssignment> {
    clique_path(masks).map(|path| {
        let ranges = clique_ranges(&path, masks.len());
        IntervalAssignment::new(
            ranges
                .iter()
                .map(|&(f, l)| (2 * f as i64, 2 * l as i64))
                .collect(),
        )
    })
}

pub(crate) fn unit_interval_model_masks(masks: &[u64]) -> Option<IntervalAssignment> {
    if has_claw(masks) {
        return None;
    }
    let path = clique_path(masks)?;
    let n = masks.len();
    let ranges = clique_ranges(&path, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (ranges[v].0, ranges[v].1, v));
    for scale in 2..=(4 * n as i64 + 4) {
        if let Some(left) = solve_unit_positions(masks, &order, scale) {
            let intervals = left.iter().map(|&p| (p, p + scale)).collect();
            return Some(IntervalAssignment::with_scale(scale, intervals));
        }
    }
    unreachable!("a proper interval order always admits integer unit positions")
}

fn small_masks(g: &Graph) -> Result<Vec<u64>> {
    Error::check_cap("vertex count for recognition", g.n(), RECOGNITION_CAP)?;
    Ok(g.masks().expect("recognition cap is below 64"))
}

/// Fast path used by the exhaustive searches; no capacity check beyond 64 vertices.
pub(crate) fn is_interval_masks(masks: &[u64]) -> bool {
    clique_path(masks).is_some()
}

pub(crate) fn is_unit_interval_masks(masks: &[u64]) -> bool {
    !has_claw(masks) && clique_path(masks).is_some()
}

/// Maximal cliques in a consecutive arrangement, or `None` when none exists.
pub(crate) fn clique_path(masks: &[u64]) -> Option<Vec<u64>> {
    let n = masks.len();
    if n == 0 {
        return Some(Vec::new());
    }
    if !is_chordal(masks) {
        return None;
    }
    let cliques = maximal_cliques(masks, n)?;
    let m = cliques.len();
    // containing[v] = set of clique indices holding v
    let mut containing = vec![0u64; n];
    for (i, &c) in cliques.iter().enumerate() {
        for v in bits(c) {
            containing[v] |= 1 << i;
        }
    }
    let mut search = PathSearch {
        cliques: &cliques,
        dead: HashSet::new(),
        order: Vec::with_capacity(m),
    };
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
    for start in 0..m {
        search.order.push(start);
        if search.extend(1 << start, cliques[start], start, full) {
            return Some(search.order.iter().map(|&i| cliques[i]).collect());
        }
        search.order.pop();
    }
    None
}

struct PathSearch<'a> {
    cliques: &'a [u64],
    dead: HashSet<(u64, usize)>,
    order: Vec<usize>,
}

impl PathSearch<'_> {
    /// `placed` = clique indices used, `seen` = their vertex union, `last` = final clique.
    fn extend(&mut self, placed: u64, seen: u64, last: usize, full: u64) -> bool {
        if placed == full {
            return true;
        }
        if self.dead.contains(&(placed, last)) {
            return false;
        }
        let finished = seen & !self.cliques[last];
        for next in bits(full & !placed) {
            let c = self.cliques[next];
            if c & finished != 0 {
                continue;
            }
            self.order.push(next);
            if self.extend(placed | 1 << next, seen | c, next, full) {
                return true;
            }
            self.order.pop();
        }
        self.dead.insert((placed, last));
        false
    }
}

/// For each vertex, the first and last position of a clique containing it.
fn clique_ranges(path: &[u64], n: usize) -> Vec<(usize, usize)> {
    let mut ranges = vec![(usize::MAX, 0); n];
    for (i, &c) in path.iter().enumerate() {
        for v in bits(c) {
            ranges[v].0 = ranges[v].0.min(i);
            ranges[v].1 = i;
        }
    }
    ranges
}

/// Maximum cardinality search followed by a perfect elimination check.
fn is_chordal(masks: &[u64]) -> bool {
    let n = masks.len();
    let mut weight = vec![0usize; n];
    let mut visited = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| visited >> v & 1 == 0)
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("an unvisited vertex remains");
        visited |= 1 << v;
        order.push(v);
        for u in bits(masks[v] & !visited) {
            weight[u] += 1;
        }
    }
    // Reverse of the visit order is a perfect elimination order iff chordal.
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut earlier = 0u64;
    for &v in &order {
        let back = masks[v] & earlier;
        if let Some(parent) = bits(back).max_by_key(|&u| position[u]) {
            let rest = back & !(1 << parent);
            let parent_back = masks[parent] & earlier;
            if rest & !parent_back != 0 {
                return false;
            }
        }
        earlier |= 1 << v;
    }
    true
}

/// Maximal cliques as masks, sorted ascending; `None` if there are more than `limit`.
pub(crate) fn maximal_cliques(masks: &[u64], limit: usize) -> Option<Vec<u64>> {
    let n = masks.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    if !bron_kerbosch(masks, 0, all, 0, &mut out, limit) {
        return None;
    }
    out.sort_unstable();
    Some(out)
}

fn bron_kerbosch(masks: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>, limit: usize) -> bool {
    if p == 0 && x == 0 {
        out.push(r);
        return out.len() <= limit;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (masks[u] & p).count_ones())
        .expect("p or x is non-empty");
    let (mut p, mut x) = (p, x);
    for v in bits(p & !masks[pivot]) {
        if !bron_kerbosch(masks, r | 1 << v, p & masks[v], x & masks[v], out, limit) {
            return false;
        }
        p &= !(1 << v);
        x |= 1 << v;
    }
    true
}

/// True when some vertex has three pairwise non-adjacent neighbors.
pub(crate) fn has_claw(masks: &[u64]) -> bool {
    masks.iter().any(|&nb| {
        bits(nb).any(|a| {
            let rest = nb & !masks[a] & !((1u64 << a) | ((1u64 << a) - 1));
            bits(rest).any(|b| rest & !masks[b] & !((1u64 << b) | ((1u64 << b) - 1)) != 0)
        })
    })
}

/// Integer left endpoints `p` with `|p_u - p_v| <= scale` exactly on edges,
/// non-decreasing along `order`. Bellman–Ford over difference constraints.
fn solve_unit_positions(masks: &[u64], order: &[usize], scale: i64) -> Option<Vec<i64>> {
    let n = order.len();
    // constraint x_to - x_from <= w, indexed by order position
    let mut arcs: Vec<(usize, usize, i64)> = Vec::new();
    for i in 0..n {
        if i + 1 < n {
            arcs.push((i + 1, i, 0));
        }
        for j in i + 1..n {
            if masks[order[i]] >> order[j] & 1 == 1 {
                arcs.push((i, j, scale));
            } else {
                arcs.push((j, i, -scale - 1));
            }
        }
    }
    let mut dist = vec![0i64; n];
    for round in 0..=n {
        let mut changed = false;
        for &(from, to, w) in &arcs {
            if dist[from] + w < dist[to] {
                dist[to] = dist[from] + w;
                changed = true;
            }
        }
        if !changed {
            break;
        }
        if round == n {
            return None;
        }
    }
    let base = dist.iter().copied().min().unwrap_or(0);
    let mut left = vec![0i64; n];
    for (i, &v) in order.iter().enumerate() {
        left[v] = dist[i] - base;
    }
    Some(left)
}
