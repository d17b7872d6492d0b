//! Exhaustive survey over isomorphism classes: exact values against every bound.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    bipartite_bound, boxicity_bound, chromatic_check, cubicity_bound, matching_bound,
    ChromaticCheckReport, MatchingBound,
};
use crate::boxrep::{build_bipartite_box_representation, build_box_representation};
use crate::cover::min_vertex_cover;
use crate::cub::build_cub_representation;
use crate::enumerate::graphs_up_to_iso;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{verify, Kind, Representation};
use crate::io::write_graph6;
use crate::oracle::{exact, OracleConfig};

/// Largest order accepted by [`survey`].
pub const SURVEY_CAP: usize = 7;

/// Largest order for which exact cubicity is computed.
pub const CUBICITY_SURVEY_CAP: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// Constructions verify and stay within their bounds.
    Constructions,
    /// Exact values against constructions, `box ≤ cub`, `box ≤ ⌊n/2⌋`.
    Exact,
    /// `χ(G) ≥ n / (2s + 2)` with `box(G) = n/2 − s`.
    Chromatic,
    /// `box(G) ≤ min(ν(G) + 1, ν(Ḡ))`.
    Remark2,
}

impl Check {
    pub const ALL: [Check; 4] = [
        Check::Constructions,
        Check::Exact,
        Check::Chromatic,
        Check::Remark2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Constructions => "constructions",
            Check::Exact => "exact",
            Check::Chromatic => "chromatic",
            Check::Remark2 => "remark2",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::input(format!("unknown check {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Construction {
    pub dims: usize,
    pub bound: Option<usize>,
    pub verified: bool,
}

impl Construction {
    fn of(rep: &Representation, g: &Graph, bound: Option<usize>) -> Self {
        Construction {
            dims: rep.dim_count(),
            bound,
            verified: verify(rep, g).passed,
        }
    }

    fn within_bound(&self) -> bool {
        self.verified && self.bound.is_none_or(|b| self.dims <= b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
}

/// One line of survey output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyRecord {
    /// graph6 of the canonical form.
    pub key: String,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub cub_vc: Option<Construction>,
    pub box_vc: Option<Construction>,
    pub box_bipartite: Option<Construction>,
    pub box_exact: Option<usize>,
    pub cub_exact: Option<usize>,
    pub chromatic: Option<ChromaticCheckReport>,
    pub matching: Option<MatchingBound>,
    pub checks: Vec<CheckOutcome>,
}

impl SurveyRecord {
    pub fn violations(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurveyReport {
    pub n: usize,
    pub checks: Vec<Check>,
    pub records: Vec<SurveyRecord>,
}

impl SurveyReport {
    pub fn violations(&self) -> usize {
        self.records.iter().map(SurveyRecord::violations).sum()
    }

    /// Keys of records with at least one failed check.
    pub fn counterexamples(&self) -> Vec<&str> {
        self.records
            .iter()
            .filter(|r| r.violations() > 0)
            .map(|r| r.key.as_str())
            .collect()
    }

    /// One JSON object per line, in record order.
    pub fn to_jsonl(&self) -> String {
        self.records
            .iter()
            .map(|r| serde_json::to_string(r).expect("records serialize") + "\n")
            .collect()
    }

    pub fn record(&self, key: &str) -> Option<&SurveyRecord> {
        self.records.iter().find(|r| r.key == key)
    }
}

/// Runs `checks` on one representative of every isomorphism class on `n` vertices.
///
/// Records are in ascending order of canonical graph6 key.
pub fn survey(n: usize, checks: &[Check]) -> Result<SurveyReport> {
    if n == 0 {
        return Err(Error::input("survey needs at least one vertex"));
    }
    Error::check_cap("vertex count for survey", n, SURVEY_CAP)?;
    let checks: Vec<Check> = checks
        .iter()
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let records = graphs_up_to_iso(n)?
        .par_iter()
        .map(|g| survey_graph(g, &checks))
        .collect::<Result<Vec<_>>>()?;
    Ok(SurveyReport { n, checks, records })
}

/// The survey row for a single graph (at most [`SURVEY_CAP`] vertices).
pub fn survey_graph(g: &Graph, checks: &[Check]) -> Result<SurveyRecord> {
    let n = g.n();
    Error::check_cap("vertex count for survey", n, SURVEY_CAP)?;
    let wants = |c: Check| checks.contains(&c);
    let cover = min_vertex_cover(g)?;
    let t = cover.len();
    let mut record = SurveyRecord {
        key: write_graph6(g),
        n,
        m: g.edge_count(),
        t,
        cub_vc: None,
        box_vc: None,
        box_bipartite: None,
        box_exact: None,
        cub_exact: None,
        chromatic: None,
        matching: None,
        checks: Vec::new(),
    };
    let mut outcomes = Vec::new();

    if wants(Check::Constructions) || wants(Check::Exact) {
        let cub = build_cub_representation(g, &cover)?;
        record.cub_vc = Some(Construction::of(&cub, g, cubicity_bound(n, t)));
        let boxed = build_box_representation(g, &cover)?;
        record.box_vc = Some(Construction::of(&boxed, g, Some(boxicity_bound(t))));
        if let Ok(bip) = g.bipartition() {
            let rep = build_bipartite_box_representation(g, &bip)?;
            let bound = bipartite_bound(bip.side1.len(), bip.side2.len());
            record.box_bipartite = Some(Construction::of(&rep, g, Some(bound)));
        }
    }
    if wants(Check::Constructions) {
        let c = |x: &Option<Construction>| x.as_ref().is_none_or(Construction::within_bound);
        outcomes.push(("cub_vc_within_bound", c(&record.cub_vc)));
        outcomes.push(("box_vc_within_bound", c(&record.box_vc)));
        outcomes.push(("box_bipartite_within_bound", c(&record.box_bipartite)));
    }

    let needs_box = wants(Check::Exact) || wants(Check::Chromatic) || wants(Check::Remark2);
    let mut box_exact = None;
    if needs_box {
        let r = exact(g, Kind::Box, &OracleConfig::default())?;
        outcomes.push(("box_exact_complete", !r.capped));
        if !r.capped {
            box_exact = Some(r.value);
        }
    }
    record.box_exact = box_exact;

    if wants(Check::Exact) {
        if n <= CUBICITY_SURVEY_CAP {
            let r = exact(g, Kind::Cub, &OracleConfig::default())?;
            outcomes.push(("cub_exact_complete", !r.capped));
            if !r.capped {
                record.cub_exact = Some(r.value);
            }
        }
        let dims = |c: &Option<Construction>| c.as_ref().map(|c| c.dims);
        let le = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(a), Some(b)) => a <= b,
            _ => true,
        };
        outcomes.push(("box_exact_le_box_vc", le(box_exact, dims(&record.box_vc))));
        outcomes.push((
            "box_exact_le_box_bipartite",
            le(box_exact, dims(&record.box_bipartite)),
        ));
        outcomes.push((
            "cub_exact_le_cub_vc",
            le(record.cub_exact, dims(&record.cub_vc)),
        ));
        outcomes.push(("box_le_cub", le(box_exact, record.cub_exact)));
        outcomes.push(("box_le_half_n", le(box_exact, Some(n / 2))));
    }
    if wants(Check::Chromatic) {
        if let Some(b) = box_exact {
            let report = chromatic_check(g, b)?;
            outcomes.push(("chromatic", report.holds));
            record.chromatic = Some(report);
        }
    }
    if wants(Check::Remark2) {
        let bound = matching_bound(g)?;
        if let Some(b) = box_exact {
            outcomes.push(("remark2", b <= bound.bound));
        }
        record.matching = Some(bound);
    }
    record.checks = outcomes
        .into_iter()
        .map(|(name, passed)| CheckOutcome { name, passed })
        .collect();
    Ok(record)
}
