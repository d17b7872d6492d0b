//! Bounds and achieved dimension counts for a single graph.

use serde::Serialize;

use crate::bounds::{bipartite_bound, boxicity_bound, cubicity_bound, matching_bound};
use crate::boxrep::{build_bipartite_box_representation, build_box_representation};
use crate::cover::{approx_vertex_cover, min_vertex_cover_with_cap, VertexCover, COVER_CAP};
use crate::cub::build_cub_representation;
use crate::error::Result;
use crate::graph::Graph;
use crate::interval::{verify, Representation};
use crate::matching::MIN_MAXIMAL_CAP;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CoverKind {
    Exact,
    Approx,
    Given,
}

/// How the cover driving the constructions is obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverChoice {
    /// Minimum cover, subject to a vertex limit.
    Exact {
        cap: usize,
    },
    Approx,
    Given(Vec<usize>),
}

impl CoverChoice {
    pub fn exact() -> Self {
        CoverChoice::Exact { cap: COVER_CAP }
    }

    pub fn kind(&self) -> CoverKind {
        match self {
            CoverChoice::Exact { .. } => CoverKind::Exact,
            CoverChoice::Approx => CoverKind::Approx,
            CoverChoice::Given(_) => CoverKind::Given,
        }
    }

    /// The cover itself; a given cover must be minimal.
    pub fn resolve(&self, g: &Graph) -> Result<VertexCover> {
        match self {
            CoverChoice::Exact { cap } => min_vertex_cover_with_cap(g, *cap),
            CoverChoice::Approx => Ok(approx_vertex_cover(g)),
            CoverChoice::Given(v) => {
                let cover = VertexCover::from_vertices(g, v.clone())?;
                cover.ensure_minimal(g)?;
                Ok(cover)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Achieved {
    pub dims: usize,
    pub verified: bool,
}

impl Achieved {
    fn of(rep: &Representation, g: &Graph) -> Self {
        Achieved {
            dims: rep.dim_count(),
            verified: verify(rep, g).passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AchievedDims {
    pub cub_vc: Option<Achieved>,
    pub box_vc: Achieved,
    pub box_bipartite: Option<Achieved>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub cover_kind: CoverKind,
    pub cover: Vec<usize>,
    /// `t + ⌈log₂(n − t)⌉ − 1`; absent for an empty cover.
    pub cub_bound: Option<usize>,
    pub box_bound: usize,
    /// Present for bipartite graphs.
    pub bipartite_bound: Option<usize>,
    /// `min(ν(G) + 1, ν(Ḡ))`; absent above the matching search cap.
    pub remark2_bound: Option<usize>,
    pub achieved: AchievedDims,
}

impl BoundReport {
    /// Every achieved count is verified and within its bound.
    pub fn consistent(&self) -> bool {
        let a = &self.achieved;
        let cub_ok = match (a.cub_vc, self.cub_bound) {
            (Some(c), Some(b)) => c.verified && c.dims <= b,
            (Some(c), None) => c.verified,
            (None, _) => true,
        };
        let bip_ok = match (a.box_bipartite, self.bipartite_bound) {
            (Some(c), Some(b)) => c.verified && c.dims <= b,
            (None, None) => true,
            _ => false,
        };
        cub_ok && bip_ok && a.box_vc.verified && a.box_vc.dims <= self.box_bound
    }
}

/// Computes the bounds and runs every applicable construction.
pub fn bound_report(g: &Graph, choice: &CoverChoice) -> Result<BoundReport> {
    let cover = choice.resolve(g)?;
    let t = cover.len();
    let n = g.n();
    let cub_vc = if n == 0 {
        None
    } else {
        Some(Achieved::of(&build_cub_representation(g, &cover)?, g))
    };
    let box_vc = Achieved::of(&build_box_representation(g, &cover)?, g);
    let (bipartite_bound, box_bipartite) = match g.bipartition() {
        Ok(bip) => (
            Some(bipartite_bound(bip.side1.len(), bip.side2.len())),
            Some(Achieved::of(
                &build_bipartite_box_representation(g, &bip)?,
                g,
            )),
        ),
        Err(_) => (None, None),
    };
    let remark2_bound = if n <= MIN_MAXIMAL_CAP {
        Some(matching_bound(g)?.bound)
    } else {
        None
    };
    Ok(BoundReport {
        n,
        m: g.edge_count(),
        t,
        cover_kind: choice.kind(),
        cover: cover.vertices.clone(),
        cub_bound: cubicity_bound(n, t),
        box_bound: boxicity_bound(t),
        bipartite_bound,
        remark2_bound,
        achieved: AchievedDims {
            cub_vc,
            box_vc,
            box_bipartite,
        },
    })
}
