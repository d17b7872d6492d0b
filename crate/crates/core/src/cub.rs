//! Unit-interval representation from a minimal vertex cover.
//!
//! With cover `v_1..v_t` (pivot `v_t`) and independent set `w_0..w_{α−1}`
//! (`w_0` a neighbor of the pivot), the representation has `t − 1` cover
//! dimensions and `⌈log₂ α⌉` bit dimensions. A cover dimension isolates one
//! cover vertex from its non-neighbors; bit dimension `j` splits the
//! independent set by bit `j` of the index, relative to `w_0`.
//!
//! Scaled endpoints (scale 2, unit length 2):
//!
//! | cover dim `i`        | interval |
//! |----------------------|----------|
//! | `v_i`                | `[0, 2]` |
//! | `N(v_i)`             | `[2, 4]` |
//! | everything else      | `[4, 6]` |
//!
//! | bit dim `j`                                  | interval |
//! |----------------------------------------------|----------|
//! | pivot `v_t`                                  | `[1, 3]` |
//! | other cover vertices                         | `[2, 4]` |
//! | `w_0`, and `w_k` agreeing with `w_0` on bit `j` | `[0, 2]` |
//! | `w_k` disagreeing, adjacent to pivot         | `[3, 5]` |
//! | `w_k` disagreeing, not adjacent to pivot     | `[4, 6]` |

use crate::bounds::ceil_log2;
use crate::cover::VertexCover;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{DimRole, IntervalAssignment, Kind, Representation};

/// Bit `j` (0 = least significant) of `k`.
pub fn bit(j: usize, k: usize) -> usize {
    if j >= usize::BITS as usize {
        0
    } else {
        (k >> j) & 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubPlan {
    /// `v_1..v_t`; the last entry is the pivot.
    pub cover_order: Vec<usize>,
    /// `w_0..w_{α−1}`; the first entry is a neighbor of the pivot.
    pub independent_order: Vec<usize>,
    pub bit_width: usize,
}

impl CubPlan {
    pub fn t(&self) -> usize {
        self.cover_order.len()
    }

    pub fn alpha(&self) -> usize {
        self.independent_order.len()
    }

    pub fn pivot(&self) -> usize {
        *self.cover_order.last().expect("plan has a non-empty cover")
    }

    /// Dimension count `t − 1 + ⌈log₂ α⌉`.
    pub fn dim_count(&self) -> usize {
        self.t() - 1 + self.bit_width
    }
}

/// Orders cover and independent set: the pivot is the lowest cover vertex, `w_0`
/// its lowest neighbor outside the cover, everything else ascending.
pub fn plan(g: &Graph, cover: &VertexCover) -> Result<CubPlan> {
    cover.ensure_minimal(g)?;
    let pivot = *cover
        .vertices
        .first()
        .ok_or_else(|| Error::precondition("the unit construction needs a non-empty cover"))?;
    let outside = cover.independent_set(g);
    let w0 = g
        .neighbors(pivot)
        .find(|v| !cover.contains(*v))
        .expect("a minimal cover vertex has a neighbor outside the cover");
    let mut cover_order: Vec<usize> = cover.vertices[1..].to_vec();
    cover_order.push(pivot);
    let mut independent_order = vec![w0];
    independent_order.extend(outside.into_iter().filter(|&w| w != w0));
    let bit_width = ceil_log2(independent_order.len());
    Ok(CubPlan {
        cover_order,
        independent_order,
        bit_width,
    })
}

/// Cover dimension `i` (1-based, `1 <= i <= t − 1`).
pub fn cover_dim(g: &Graph, plan: &CubPlan, i: usize) -> Result<IntervalAssignment> {
    if i == 0 || i >= plan.t() {
        return Err(Error::input(format!(
            "cover dimension {i} outside 1..={}",
            plan.t().saturating_sub(1)
        )));
    }
    let vi = plan.cover_order[i - 1];
    let intervals = (0..g.n())
        .map(|x| {
            if x == vi {
                (0, 2)
            } else if g.has_edge(vi, x) {
                (2, 4)
            } else {
                (4, 6)
            }
        })
        .collect();
    Ok(IntervalAssignment::new(intervals))
}

/// Bit dimension `j` (`0 <= j < bit_width`).
pub fn bit_dim(g: &Graph, plan: &CubPlan, j: usize) -> Result<IntervalAssignment> {
    if j >= plan.bit_width {
        return Err(Error::input(format!(
            "bit dimension {j} outside 0..{}",
            plan.bit_width
        )));
    }
    let pivot = plan.pivot();
    let mut intervals = vec![(2, 4); g.n()];
    intervals[pivot] = (1, 3);
    let reference = bit(j, 0);
    for (k, &w) in plan.independent_order.iter().enumerate() {
        intervals[w] = if k == 0 || bit(j, k) == reference {
            (0, 2)
        } else if g.has_edge(w, pivot) {
            (3, 5)
        } else {
            (4, 6)
        };
    }
    Ok(IntervalAssignment::new(intervals))
}

/// Unit-interval representation with `t − 1 + ⌈log₂(n − t)⌉` dimensions.
///
/// An empty cover (edgeless graph) yields one dimension of disjoint unit intervals.
pub fn build_cub_representation(g: &Graph, cover: &VertexCover) -> Result<Representation> {
    if g.n() == 0 {
        return Err(Error::input(
            "the unit construction needs at least one vertex",
        ));
    }
    cover.ensure_minimal(g)?;
    let mut rep = Representation::new(Kind::Cub, g.n());
    if cover.is_empty() {
        rep.push(disjoint_dim(g.n()), DimRole::Disjoint);
        return Ok(rep);
    }
    let plan = plan(g, cover)?;
    for i in 1..plan.t() {
        rep.push(cover_dim(g, &plan, i)?, DimRole::CoverVertex);
    }
    for j in 0..plan.bit_width {
        rep.push(bit_dim(g, &plan, j)?, DimRole::Bit);
    }
    Ok(rep)
}

/// Pairwise disjoint unit intervals `[4v, 4v + 2]`.
pub(crate) fn disjoint_dim(n: usize) -> IntervalAssignment {
    IntervalAssignment::new((0..n as i64).map(|v| (4 * v, 4 * v + 2)).collect())
}
