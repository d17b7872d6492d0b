//! Interval assignments, their intersection graphs, and representation checking.
//!
//! Endpoints are integers; the real endpoint is `value / scale`. Every
//! construction in the crate uses scale 2, which covers all half-integer
//! endpoints exactly. Closed-interval semantics: intervals that touch at an
//! endpoint intersect.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition;

/// Scale used by every construction in the crate.
pub const SCALE: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalAssignment {
    pub scale: i64,
    /// `intervals[v] = (lo, hi)` in scaled units.
    pub intervals: Vec<(i64, i64)>,
}

impl IntervalAssignment {
    pub fn new(intervals: Vec<(i64, i64)>) -> Self {
        IntervalAssignment {
            scale: SCALE,
            intervals,
        }
    }

    pub fn with_scale(scale: i64, intervals: Vec<(i64, i64)>) -> Self {
        IntervalAssignment { scale, intervals }
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn meets(&self, u: usize, v: usize) -> bool {
        let (a, b) = self.intervals[u];
        let (c, d) = self.intervals[v];
        a.max(c) <= b.min(d)
    }

    /// Smallest and largest endpoint, or `None` when empty.
    pub fn span(&self) -> Option<(i64, i64)> {
        let lo = self.intervals.iter().map(|i| i.0).min()?;
        let hi = self.intervals.iter().map(|i| i.1).max()?;
        Some((lo, hi))
    }

    /// Same intervals expressed at `scale`, which must be a multiple of the current one.
    pub fn rescaled(&self, scale: i64) -> Self {
        assert!(scale % self.scale == 0, "target scale must be a multiple");
        let f = scale / self.scale;
        IntervalAssignment {
            scale,
            intervals: self
                .intervals
                .iter()
                .map(|&(a, b)| (a * f, b * f))
                .collect(),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.intervals.iter().all(|&(a, b)| b - a == self.scale)
    }
}

/// Intersection graph of `a`, which must assign exactly `n` intervals.
pub fn intersection_graph(a: &IntervalAssignment, n: usize) -> Result<Graph> {
    if a.len() != n {
        return Err(Error::input(format!(
            "assignment covers {} vertices, expected {n}",
            a.len()
        )));
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if a.meets(u, v) {
                g.insert(u, v);
            }
        }
    }
    Ok(g)
}

/// Edge-wise intersection; the empty meet is the complete graph on `n`.
pub fn meet(graphs: &[Graph], n: usize) -> Result<Graph> {
    if let Some(g) = graphs.iter().find(|g| g.n() != n) {
        return Err(Error::input(format!(
            "meet over {n} vertices given a graph on {}",
            g.n()
        )));
    }
    let Some((first, rest)) = graphs.split_first() else {
        return Ok(Graph::complete(n));
    };
    let mut out = Graph::empty(n);
    for (u, v) in first.edges() {
        if rest.iter().all(|g| g.has_edge(u, v)) {
            out.insert(u, v);
        }
    }
    Ok(out)
}

/// True when every edge of `g` is an edge of `h`.
pub fn is_supergraph(h: &Graph, g: &Graph) -> Result<bool> {
    if h.n() != g.n() {
        return Err(Error::input(format!(
            "supergraph test on {} vs {} vertices",
            h.n(),
            g.n()
        )));
    }
    Ok(g.edges().all(|(u, v)| h.has_edge(u, v)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Box,
    Cub,
}

/// Which stage of a construction produced a dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DimRole {
    /// Separates one cover vertex from its non-neighbors (unit construction).
    CoverVertex,
    /// Separates independent vertices by one bit of their index (unit construction).
    Bit,
    /// Separates a non-adjacent cover pair from their non-neighbors.
    Pair,
    /// A split-graph dimension lifted to the whole vertex set.
    Split,
    /// The closing dimension that separates the independent set.
    Final,
    /// Pairwise disjoint intervals for an edgeless graph.
    Disjoint,
    /// Found by exhaustive search.
    Search,
}

/// A list of (unit) interval assignments whose intersection graphs should meet to a source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub kind: Kind,
    pub scale: i64,
    pub n: usize,
    pub dims: Vec<IntervalAssignment>,
    /// Provenance of each dimension; not part of the file format.
    pub roles: Vec<DimRole>,
}

impl Representation {
    pub fn new(kind: Kind, n: usize) -> Self {
        Representation {
            kind,
            scale: SCALE,
            n,
            dims: Vec::new(),
            roles: Vec::new(),
        }
    }

    pub fn push(&mut self, dim: IntervalAssignment, role: DimRole) {
        self.dims.push(dim);
        self.roles.push(role);
    }

    pub fn dim_count(&self) -> usize {
        self.dims.len()
    }

    pub fn intersection_graphs(&self) -> Result<Vec<Graph>> {
        self.dims
            .iter()
            .map(|d| intersection_graph(d, self.n))
            .collect()
    }

    /// Serializes as `{"kind":..,"scale":..,"n":..,"dims":[{"0":[lo,hi],..},..]}` with keys in vertex order.
    pub fn to_json(&self) -> String {
        let mut out = format!(
            "{{\"kind\":\"{}\",\"scale\":{},\"n\":{},\"dims\":[",
            match self.kind {
                Kind::Box => "box",
                Kind::Cub => "cub",
            },
            self.scale,
            self.n
        );
        for (i, dim) in self.dims.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('{');
            for (v, (lo, hi)) in dim.intervals.iter().enumerate() {
                if v > 0 {
                    out.push(',');
                }
                out.push_str(&format!("\"{v}\":[{lo},{hi}]"));
            }
            out.push('}');
        }
        out.push_str("]}");
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            kind: Kind,
            scale: i64,
            n: usize,
            dims: Vec<std::collections::BTreeMap<String, (i64, i64)>>,
        }
        let raw: Raw =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("representation: {e}")))?;
        if raw.scale <= 0 {
            return Err(Error::parse("representation scale must be positive"));
        }
        let mut rep = Representation {
            kind: raw.kind,
            scale: raw.scale,
            n: raw.n,
            dims: Vec::with_capacity(raw.dims.len()),
            roles: Vec::new(),
        };
        for (d, map) in raw.dims.into_iter().enumerate() {
            let mut intervals = vec![None; raw.n];
            for (key, iv) in map {
                let v: usize = key
                    .parse()
                    .map_err(|_| Error::parse(format!("dim {d}: bad vertex key {key:?}")))?;
                let slot = intervals.get_mut(v).ok_or_else(|| {
                    Error::parse(format!("dim {d}: vertex {v} outside 0..{}", raw.n))
                })?;
                *slot = Some(iv);
            }
            let intervals = intervals
                .into_iter()
                .enumerate()
                .map(|(v, iv)| {
                    iv.ok_or_else(|| Error::parse(format!("dim {d}: vertex {v} has no interval")))
                })
                .collect::<Result<Vec<_>>>()?;
            rep.push(
                IntervalAssignment::with_scale(raw.scale, intervals),
                DimRole::Search,
            );
        }
        rep.roles.clear();
        Ok(rep)
    }
}

/// One failed clause of a representation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "clause", rename_all = "snake_case")]
pub enum Violation {
    VertexCount {
        expected: usize,
        found: usize,
    },
    DimVertexCount {
        dim: usize,
        expected: usize,
        found: usize,
    },
    ScaleMismatch {
        dim: usize,
        expected: i64,
        found: i64,
    },
    InvertedInterval {
        dim: usize,
        vertex: usize,
    },
    NotUnitLength {
        dim: usize,
        vertex: usize,
        length: i64,
    },
    /// The dimension drops an edge of the source graph.
    MissingEdge {
        dim: usize,
        u: usize,
        v: usize,
    },
    NotInterval {
        dim: usize,
    },
    NotUnitInterval {
        dim: usize,
    },
    /// No dimension separates this non-adjacent pair.
    NonEdgeKept {
        u: usize,
        v: usize,
    },
}

/// The first dimension that separates a non-adjacent pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Separation {
    pub u: usize,
    pub v: usize,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub kind: Kind,
    pub dims: usize,
    pub passed: bool,
    /// False when the graph is above the recognition cap and the per-dimension
    /// recognition clause was skipped.
    pub recognition_checked: bool,
    pub violations: Vec<Violation>,
    pub separations: Vec<Separation>,
}

impl VerificationReport {
    pub fn separating_dim(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = (u.min(v), u.max(v));
        self.separations
            .iter()
            .find(|s| s.u == u && s.v == v)
            .map(|s| s.dim)
    }
}

/// Checks that `rep` is an exact (unit) interval representation of `g`.
///
/// Per dimension: vertex count, scale, well-formed intervals, unit lengths for
/// `Kind::Cub`, supergraph of `g`, and (up to the recognition cap) that the
/// intersection graph is recognized as interval or unit interval. Globally:
/// every non-edge of `g` is separated by some dimension.
pub fn verify(rep: &Representation, g: &Graph) -> VerificationReport {
    let mut violations = Vec::new();
    let n = g.n();
    if rep.n != n {
        violations.push(Violation::VertexCount {
            expected: n,
            found: rep.n,
        });
    }
    let recognition_checked = n <= recognition::RECOGNITION_CAP;
    let mut factors = Vec::new();
    for (d, dim) in rep.dims.iter().enumerate() {
        if dim.len() != n {
            violations.push(Violation::DimVertexCount {
                dim: d,
                expected: n,
                found: dim.len(),
            });
            continue;
        }
        if dim.scale != rep.scale {
            violations.push(Violation::ScaleMismatch {
                dim: d,
                expected: rep.scale,
                found: dim.scale,
            });
        }
        for (v, &(lo, hi)) in dim.intervals.iter().enumerate() {
            if lo > hi {
                violations.push(Violation::InvertedInterval { dim: d, vertex: v });
            } else if rep.kind == Kind::Cub && hi - lo != rep.scale {
                violations.push(Violation::NotUnitLength {
                    dim: d,
                    vertex: v,
                    length: hi - lo,
                });
            }
        }
        let h = intersection_graph(dim, n).expect("length checked above");
        if let Some((u, v)) = g.edges().find(|&(u, v)| !h.has_edge(u, v)) {
            violations.push(Violation::MissingEdge { dim: d, u, v });
        }
        if recognition_checked {
            let ok = match rep.kind {
                Kind::Box => recognition::is_interval(&h).unwrap_or(false),
                Kind::Cub => recognition::is_unit_interval(&h).unwrap_or(false),
            };
            if !ok {
                violations.push(match rep.kind {
                    Kind::Box => Violation::NotInterval { dim: d },
                    Kind::Cub => Violation::NotUnitInterval { dim: d },
                });
            }
        }
        factors.push((d, h));
    }
    let mut separations = Vec::new();
    for (u, v) in g.non_edges() {
        match factors.iter().find(|(_, h)| !h.has_edge(u, v)) {
            Some(&(dim, _)) => separations.push(Separation { u, v, dim }),
            None => violations.push(Violation::NonEdgeKept { u, v }),
        }
    }
    VerificationReport {
        kind: rep.kind,
        dims: rep.dims.len(),
        passed: violations.is_empty(),
        recognition_checked,
        violations,
        separations,
    }
}
