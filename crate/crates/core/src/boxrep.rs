//! Interval representations from a vertex cover, from split structure, and for bipartite graphs.
//!
//! The cover construction splits a minimal cover into non-adjacent pairs plus
//! a residual clique `C`. Each pair gets one dimension; the even part `C′` of
//! the residual clique, together with the independent set `A`, forms a split
//! graph handled two clique vertices per dimension; a final dimension
//! separates `A` internally and the odd leftover of `C` from its
//! non-neighbors. The count telescopes to `⌊t/2⌋ + 1` for any maximal pairing.
//!
//! All endpoints use scale 2.

use crate::cover::VertexCover;
use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};
use crate::interval::{DimRole, IntervalAssignment, Kind, Representation};
use crate::matching::{konig_cover, max_matching};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDecomposition {
    /// Disjoint non-adjacent cover pairs `(a_i, b_i)`, `a_i < b_i`, sorted by `a_i`.
    pub pairs: Vec<(usize, usize)>,
    /// Cover vertices outside the pairs, ascending; a clique of the graph.
    pub residual: Vec<usize>,
    /// Even-size prefix of `residual`.
    pub residual_even: Vec<usize>,
    /// Last residual vertex when the residual has odd size.
    pub leftover: Option<usize>,
    pub t: usize,
}

impl PairDecomposition {
    pub fn l(&self) -> usize {
        self.pairs.len()
    }

    /// `l + |C′|/2 + 1`, which equals `⌊t/2⌋ + 1`.
    pub fn dim_count(&self) -> usize {
        self.pairs.len() + self.residual_even.len() / 2 + 1
    }
}

/// Pairs cover vertices by a maximum matching of the complement of the cover's induced subgraph.
pub fn decompose(g: &Graph, cover: &VertexCover) -> Result<PairDecomposition> {
    cover.ensure_minimal(g)?;
    let (sub, map) = g.induced_subgraph(&cover.vertices)?;
    let pairs = max_matching(&sub.complement())
        .into_iter()
        .map(|(a, b)| (map[a], map[b]))
        .collect();
    decompose_with_pairs(g, cover, pairs)
}

/// Decomposition for a caller-chosen pairing, which must be maximal among
/// non-adjacent cover pairs (otherwise the residual is not a clique).
pub fn decompose_with_pairs(
    g: &Graph,
    cover: &VertexCover,
    mut pairs: Vec<(usize, usize)>,
) -> Result<PairDecomposition> {
    cover.ensure_minimal(g)?;
    let mut paired = vec![false; g.n()];
    for p in pairs.iter_mut() {
        let (a, b) = (p.0.min(p.1), p.0.max(p.1));
        *p = (a, b);
        if a == b || !cover.contains(a) || !cover.contains(b) {
            return Err(Error::input(format!(
                "pair ({a}, {b}) is not two cover vertices"
            )));
        }
        if g.has_edge(a, b) {
            return Err(Error::input(format!("pair ({a}, {b}) is adjacent")));
        }
        if paired[a] || paired[b] {
            return Err(Error::input(format!(
                "pair ({a}, {b}) overlaps another pair"
            )));
        }
        paired[a] = true;
        paired[b] = true;
    }
    pairs.sort_unstable();
    let residual: Vec<usize> = cover
        .vertices
        .iter()
        .copied()
        .filter(|&v| !paired[v])
        .collect();
    for (i, &u) in residual.iter().enumerate() {
        if let Some(&v) = residual[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
            return Err(Error::input(format!(
                "pairing is not maximal: residual vertices {u} and {v} are non-adjacent"
            )));
        }
    }
    let even = residual.len() - residual.len() % 2;
    let decomposition = PairDecomposition {
        residual_even: residual[..even].to_vec(),
        leftover: residual.get(even).copied(),
        residual,
        pairs,
        t: cover.len(),
    };
    debug_assert_eq!(decomposition.dim_count(), cover.len() / 2 + 1);
    Ok(decomposition)
}

/// Dimension separating the non-adjacent pair `(a, b)` from their non-neighbors.
///
/// `a → [0,2]`, `b → [8,10]`, `N(a)−N(b) → [0,6]`, `N(b)−N(a) → [4,10]`,
/// `N(a)∩N(b) → [0,10]`, all others `[4,6]`.
pub fn pair_dim(g: &Graph, a: usize, b: usize) -> Result<IntervalAssignment> {
    if a == b || a >= g.n() || b >= g.n() {
        return Err(Error::input(format!(
            "({a}, {b}) is not a pair of distinct vertices"
        )));
    }
    if g.has_edge(a, b) {
        return Err(Error::input(format!("pair ({a}, {b}) is adjacent")));
    }
    let intervals = (0..g.n())
        .map(|v| {
            if v == a {
                return (0, 2);
            }
            if v == b {
                return (8, 10);
            }
            match (g.has_edge(v, a), g.has_edge(v, b)) {
                (true, false) => (0, 6),
                (false, true) => (4, 10),
                (true, true) => (0, 10),
                (false, false) => (4, 6),
            }
        })
        .collect();
    Ok(IntervalAssignment::new(intervals))
}

/// Clique and independent set of a split subgraph of some host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitInput {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitInput {
    /// Host vertices in local order: clique first, then the independent set.
    pub fn vertices(&self) -> Vec<usize> {
        self.clique
            .iter()
            .chain(&self.independent)
            .copied()
            .collect()
    }

    fn validate(&self, host: &Graph) -> Result<()> {
        let all = self.vertices();
        let mut seen = vec![false; host.n()];
        for &v in &all {
            if v >= host.n() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::input(format!(
                    "split vertex {v} is out of range or repeated"
                )));
            }
        }
        for (i, &u) in self.clique.iter().enumerate() {
            if let Some(&v) = self.clique[i + 1..].iter().find(|&&v| !host.has_edge(u, v)) {
                return Err(Error::input(format!(
                    "clique vertices {u} and {v} are non-adjacent"
                )));
            }
        }
        for (i, &u) in self.independent.iter().enumerate() {
            if let Some(&v) = self.independent[i + 1..]
                .iter()
                .find(|&&v| host.has_edge(u, v))
            {
                return Err(Error::input(format!(
                    "independent vertices {u} and {v} are adjacent"
                )));
            }
        }
        Ok(())
    }
}

/// `⌈|clique| / 2⌉` interval dimensions of the split graph, over local ids
/// ([`SplitInput::vertices`] order).
///
/// In every dimension each independent vertex sits on its own even point. For a
/// clique pair `(a, b)` the independent set is laid out in blocks
/// `N(a)−N(b)`, `N(a)∩N(b)`, `N(b)−N(a)`, rest; `a` spans the first two blocks,
/// `b` the middle two, and the two touch even when blocks are empty. Other
/// clique vertices span everything. An unpaired clique vertex gets its own
/// dimension covering exactly its neighbors, which are laid out first.
pub fn split_clique_side(host: &Graph, input: &SplitInput) -> Result<Vec<IntervalAssignment>> {
    input.validate(host)?;
    let k = input.clique.len();
    let s = input.independent.len();
    let total = k + s;
    let full = (1, 2 * s as i64 + 1);
    let mut dims = Vec::with_capacity(k.div_ceil(2));
    for chunk in input.clique.chunks(2) {
        let mut intervals = vec![full; total];
        match *chunk {
            [a, b] => {
                let mut blocks: [Vec<usize>; 4] = Default::default();
                for (i, &x) in input.independent.iter().enumerate() {
                    let slot = match (host.has_edge(a, x), host.has_edge(b, x)) {
                        (true, false) => 0,
                        (true, true) => 1,
                        (false, true) => 2,
                        (false, false) => 3,
                    };
                    blocks[slot].push(k + i);
                }
                let mut point = 0i64;
                let mut ends = [0i64; 4];
                for (slot, block) in blocks.iter().enumerate() {
                    for &local in block {
                        point += 2;
                        intervals[local] = (point, point);
                    }
                    ends[slot] = point;
                }
                let ia = input.clique.iter().position(|&v| v == a).unwrap();
                intervals[ia] = (1, ends[1] + 1);
                intervals[ia + 1] = (ends[0] + 1, ends[2].max(ends[0] + 1));
            }
            [c] => {
                let (near, far): (Vec<usize>, Vec<usize>) =
                    (0..s).partition(|&i| host.has_edge(c, input.independent[i]));
                for (rank, &i) in near.iter().chain(&far).enumerate() {
                    let p = 2 * (rank as i64 + 1);
                    intervals[k + i] = (p, p);
                }
                intervals[k - 1] = (1, 2 * near.len() as i64 + 1);
            }
            _ => unreachable!("chunks of two"),
        }
        dims.push(IntervalAssignment::new(intervals));
    }
    Ok(dims)
}

/// Extends a split dimension over local ids to all `n` vertices; vertices outside
/// the split input get the span `[min − 1, max + 1]` of the dimension.
fn lift(local: &IntervalAssignment, input_vertices: &[usize], n: usize) -> IntervalAssignment {
    let (lo, hi) = local.span().unwrap_or((0, 0));
    let mut intervals = vec![(lo - 1, hi + 1); n];
    for (i, &v) in input_vertices.iter().enumerate() {
        intervals[v] = local.intervals[i];
    }
    IntervalAssignment::new(intervals)
}

/// The closing dimension: independent vertices on disjoint blocks, cover vertices spanning them.
///
/// With `A = x_1..x_r` (neighbors of `leftover` first), `x_i → [4i−2, 4i]`,
/// cover vertices other than the leftover `→ [2, 4r]`, leftover `→ [2, 4s]`
/// where `s = |N(leftover) ∩ A|`.
pub fn final_dim(
    g: &Graph,
    cover: &VertexCover,
    leftover: Option<usize>,
) -> Result<IntervalAssignment> {
    let outside = cover.independent_set(g);
    if outside.is_empty() {
        return Err(Error::precondition("cover leaves no independent vertex"));
    }
    let (mut order, rest): (Vec<usize>, Vec<usize>) = match leftover {
        Some(v) => {
            if !cover.contains(v) {
                return Err(Error::input(format!("leftover {v} is not a cover vertex")));
            }
            outside.iter().copied().partition(|&x| g.has_edge(v, x))
        }
        None => (Vec::new(), outside.clone()),
    };
    let near = order.len();
    if let (Some(v), 0) = (leftover, near) {
        return Err(Error::precondition(format!(
            "cover is not minimal: leftover {v} has no neighbor outside the cover"
        )));
    }
    order.extend(rest);
    let r = order.len() as i64;
    let mut intervals = vec![(2, 4 * r); g.n()];
    for (i, &x) in order.iter().enumerate() {
        let i = i as i64 + 1;
        intervals[x] = (4 * i - 2, 4 * i);
    }
    if let Some(v) = leftover {
        intervals[v] = (2, 4 * near as i64);
    }
    Ok(IntervalAssignment::new(intervals))
}

/// Interval representation with at most `⌊t/2⌋ + 1` dimensions for a minimal cover of size `t`.
pub fn build_box_representation(g: &Graph, cover: &VertexCover) -> Result<Representation> {
    cover.ensure_minimal(g)?;
    if cover.is_empty() {
        let mut rep = Representation::new(Kind::Box, g.n());
        rep.push(crate::cub::disjoint_dim(g.n()), DimRole::Disjoint);
        return Ok(rep);
    }
    let d = decompose(g, cover)?;
    build_from_decomposition(g, cover, &d)
}

/// As [`build_box_representation`], for a given decomposition of `cover`.
pub fn build_from_decomposition(
    g: &Graph,
    cover: &VertexCover,
    d: &PairDecomposition,
) -> Result<Representation> {
    let n = g.n();
    let mut rep = Representation::new(Kind::Box, n);
    for &(a, b) in &d.pairs {
        rep.push(pair_dim(g, a, b)?, DimRole::Pair);
    }
    if !d.residual_even.is_empty() {
        let input = SplitInput {
            clique: d.residual_even.clone(),
            independent: cover.independent_set(g),
        };
        let vertices = input.vertices();
        for local in split_clique_side(g, &input)? {
            rep.push(lift(&local, &vertices, n), DimRole::Split);
        }
    }
    rep.push(final_dim(g, cover, d.leftover)?, DimRole::Final);
    Ok(rep)
}

/// Interval representation of a bipartite graph with at most
/// [`bipartite_bound`](crate::bounds::bipartite_bound) dimensions.
///
/// When the smaller side has even size `n1 >= 4`: with `x`, `y` its two lowest
/// vertices, the rest of the smaller side is made a clique and handled as a
/// split graph against the larger side (`x`, `y` spanning), followed by one
/// dimension where the smaller side sits on disjoint blocks with `x` first and
/// `y` last. Otherwise the cover construction with a minimum (König) cover is used.
pub fn build_bipartite_box_representation(g: &Graph, bip: &Bipartition) -> Result<Representation> {
    bip.validate(g)?;
    let (small, large) = if bip.side2.len() < bip.side1.len() {
        (&bip.side2, &bip.side1)
    } else {
        (&bip.side1, &bip.side2)
    };
    let mut small = small.clone();
    small.sort_unstable();
    let mut large = large.clone();
    large.sort_unstable();
    let n1 = small.len();
    if n1 % 2 == 1 || n1 < 4 {
        let cover = VertexCover::from_vertices(g, konig_cover(g, &small))?;
        return build_box_representation(g, &cover);
    }
    let n = g.n();
    let (x, y) = (small[0], small[1]);
    let inner: Vec<usize> = small[2..].to_vec();
    let host = g.with_clique(&inner);
    let input = SplitInput {
        clique: inner.clone(),
        independent: large.clone(),
    };
    let vertices = input.vertices();
    let mut rep = Representation::new(Kind::Box, n);
    for local in split_clique_side(&host, &input)? {
        rep.push(lift(&local, &vertices, n), DimRole::Split);
    }
    // v_1 = x, v_2.. = inner, v_{n1} = y
    let mut intervals = vec![(0, 0); n];
    let ordered = std::iter::once(x)
        .chain(inner.iter().copied())
        .chain(std::iter::once(y));
    for (i, v) in ordered.enumerate() {
        let i = i as i64 + 1;
        intervals[v] = (4 * i - 2, 4 * i);
    }
    let top = 4 * n1 as i64;
    for &v in &large {
        let lo = if g.has_edge(v, x) { 2 } else { 6 };
        let hi = if g.has_edge(v, y) { top } else { top - 4 };
        intervals[v] = (lo, hi);
    }
    rep.push(IntervalAssignment::new(intervals), DimRole::Final);
    Ok(rep)
}
