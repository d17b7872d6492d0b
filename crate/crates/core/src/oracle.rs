//! Exact boxicity and cubicity by exhaustive search over interval supergraphs.
//!
//! Every factor of a representation can be shrunk to a supergraph of `g` that
//! only adds non-edges of `g`, so the search ranges over subsets of non-edges.
//! A factor is described by the set of non-edges it keeps absent (its
//! breaking set); only inclusion-maximal breaking sets are kept. Iterative
//! deepening then looks for `k` breaking sets covering all non-edges, with
//! each chosen factor required to break the lowest-index unbroken non-edge.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::interval::{DimRole, IntervalAssignment, Kind, Representation};
use crate::recognition::{
    interval_model_masks, is_interval_masks, is_unit_interval_masks, unit_interval_model_masks,
};

/// Default limit on the number of non-edges of the query graph.
pub const NON_EDGE_CAP: usize = 22;

/// Default limit on the number of factors tried by the covering search.
pub const NODE_LIMIT: u64 = 20_000_000;

/// Default largest dimension count searched.
pub const DEFAULT_MAX_K: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    pub max_k: usize,
    pub non_edge_cap: usize,
    pub node_limit: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_k: DEFAULT_MAX_K,
            non_edge_cap: NON_EDGE_CAP,
            node_limit: NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub parameter: Kind,
    /// The exact value, or a lower bound when `capped`.
    pub value: usize,
    /// A representation with exactly `value` dimensions; `None` when `capped`.
    pub witness: Option<Representation>,
    /// Factors tried by the covering search.
    pub explored: u64,
    /// The search stopped at `max_k` or the node limit before finding a representation.
    pub capped: bool,
}

impl OracleResult {
    /// `{"parameter":..,"value":..,"explored":..,"capped":..,"witness":<representation or null>}`.
    pub fn to_json(&self) -> String {
        format!(
            "{{\"parameter\":\"{}\",\"value\":{},\"explored\":{},\"capped\":{},\"witness\":{}}}",
            match self.parameter {
                Kind::Box => "box",
                Kind::Cub => "cub",
            },
            self.value,
            self.explored,
            self.capped,
            self.witness
                .as_ref()
                .map_or_else(|| "null".to_string(), Representation::to_json)
        )
    }
}

/// All interval (or unit interval) graphs obtained from `g` by adding a subset of its non-edges.
///
/// Ordered by the added subset, read as a binary number over the
/// lexicographically ordered non-edges.
pub fn enumerate_interval_supergraphs(g: &Graph, unit: bool) -> Result<Vec<Graph>> {
    enumerate_interval_supergraphs_with_cap(g, unit, NON_EDGE_CAP)
}

pub fn enumerate_interval_supergraphs_with_cap(
    g: &Graph,
    unit: bool,
    cap: usize,
) -> Result<Vec<Graph>> {
    let table = FactorTable::build(g, unit, cap)?;
    Ok(table
        .feasible
        .iter()
        .enumerate()
        .filter(|&(_, &ok)| ok)
        .map(|(added, _)| Graph::from_masks(&table.masks_with(added as u64)))
        .collect())
}

pub fn exact_boxicity(g: &Graph, max_k: usize) -> Result<OracleResult> {
    exact(
        g,
        Kind::Box,
        &OracleConfig {
            max_k,
            ..OracleConfig::default()
        },
    )
}

pub fn exact_cubicity(g: &Graph, max_k: usize) -> Result<OracleResult> {
    exact(
        g,
        Kind::Cub,
        &OracleConfig {
            max_k,
            ..OracleConfig::default()
        },
    )
}

/// Exact boxicity (`Kind::Box`) or cubicity (`Kind::Cub`) under `config`.
pub fn exact(g: &Graph, parameter: Kind, config: &OracleConfig) -> Result<OracleResult> {
    let table = FactorTable::build(g, parameter == Kind::Cub, config.non_edge_cap)?;
    let m = table.non_edges.len();
    if m == 0 {
        return Ok(OracleResult {
            parameter,
            value: 0,
            witness: Some(Representation::new(parameter, g.n())),
            explored: 0,
            capped: false,
        });
    }
    let breaking = table.maximal_breaking_sets();
    // by_edge[e] = indices of breaking sets that contain non-edge e
    let by_edge: Vec<Vec<usize>> = (0..m)
        .map(|e| {
            (0..breaking.len())
                .filter(|&i| breaking[i] >> e & 1 == 1)
                .collect()
        })
        .collect();
    let mut search = Cover {
        breaking: &breaking,
        by_edge: &by_edge,
        chosen: Vec::new(),
        dead: HashSet::new(),
        explored: 0,
        limit: config.node_limit,
    };
    let full = table.full();
    for k in 1..=config.max_k {
        search.dead.clear();
        match search.run(full, k) {
            Outcome::Found => {
                let chosen: Vec<u64> = search.chosen.iter().map(|&i| breaking[i]).collect();
                return Ok(OracleResult {
                    parameter,
                    value: k,
                    witness: Some(table.witness(parameter, &chosen)),
                    explored: search.explored,
                    capped: false,
                });
            }
            Outcome::Exhausted => {}
            Outcome::Aborted => {
                return Ok(OracleResult {
                    parameter,
                    value: k,
                    witness: None,
                    explored: search.explored,
                    capped: true,
                });
            }
        }
    }
    Ok(OracleResult {
        parameter,
        value: config.max_k + 1,
        witness: None,
        explored: search.explored,
        capped: true,
    })
}

struct FactorTable {
    n: usize,
    base: Vec<u64>,
    non_edges: Vec<(usize, usize)>,
    unit: bool,
    /// Indexed by the added subset of non-edges.
    feasible: Vec<bool>,
}

impl FactorTable {
    fn build(g: &Graph, unit: bool, cap: usize) -> Result<Self> {
        Error::check_cap("vertex count for exact search", g.n(), 64)?;
        let non_edges: Vec<(usize, usize)> = g.non_edges().collect();
        Error::check_cap(
            "non-edge count for exact search",
            non_edges.len(),
            cap.min(32),
        )?;
        let mut table = FactorTable {
            n: g.n(),
            base: g.masks().expect("vertex count checked"),
            non_edges,
            unit,
            feasible: Vec::new(),
        };
        let count = 1u64 << table.non_edges.len();
        table.feasible = (0..count)
            .into_par_iter()
            .map(|added| {
                let masks = table.masks_with(added);
                if table.unit {
                    is_unit_interval_masks(&masks)
                } else {
                    is_interval_masks(&masks)
                }
            })
            .collect();
        Ok(table)
    }

    fn full(&self) -> u64 {
        (1u64 << self.non_edges.len()) - 1
    }

    fn masks_with(&self, added: u64) -> Vec<u64> {
        let mut masks = self.base.clone();
        for (i, &(u, v)) in self.non_edges.iter().enumerate() {
            if added >> i & 1 == 1 {
                masks[u] |= 1 << v;
                masks[v] |= 1 << u;
            }
        }
        masks
    }

    /// Breaking sets of the inclusion-minimal feasible added sets, ascending by added set.
    fn maximal_breaking_sets(&self) -> Vec<u64> {
        let m = self.non_edges.len();
        // below[a]: some feasible subset of a exists
        let mut below = self.feasible.clone();
        for bit in 0..m {
            let step = 1usize << bit;
            for a in 0..below.len() {
                if a & step != 0 && below[a ^ step] {
                    below[a] = true;
                }
            }
        }
        let full = self.full();
        (0..self.feasible.len())
            .filter(|&a| self.feasible[a])
            .filter(|&a| (0..m).all(|e| a >> e & 1 == 0 || !below[a ^ (1 << e)]))
            .map(|a| full ^ a as u64)
            .collect()
    }

    fn witness(&self, parameter: Kind, breaking: &[u64]) -> Representation {
        let full = self.full();
        let models: Vec<IntervalAssignment> = breaking
            .iter()
            .map(|&b| {
                let masks = self.masks_with(full ^ b);
                let model = if self.unit {
                    unit_interval_model_masks(&masks)
                } else {
                    interval_model_masks(&masks)
                };
                model.expect("breaking sets come from recognized factors")
            })
            .collect();
        let scale = models.iter().fold(1, |acc, m| lcm(acc, m.scale));
        let mut rep = Representation::new(parameter, self.n);
        rep.scale = if models.is_empty() { rep.scale } else { scale };
        for model in models {
            rep.push(model.rescaled(scale), DimRole::Search);
        }
        rep
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

enum Outcome {
    Found,
    Exhausted,
    Aborted,
}

struct Cover<'a> {
    breaking: &'a [u64],
    by_edge: &'a [Vec<usize>],
    chosen: Vec<usize>,
    /// `(unbroken, depth)` states known to fail.
    dead: HashSet<(u64, usize)>,
    explored: u64,
    limit: u64,
}

impl Cover<'_> {
    fn run(&mut self, unbroken: u64, depth: usize) -> Outcome {
        if unbroken == 0 {
            return Outcome::Found;
        }
        if depth == 0 || self.dead.contains(&(unbroken, depth)) {
            return Outcome::Exhausted;
        }
        let e = unbroken.trailing_zeros() as usize;
        for &i in &self.by_edge[e] {
            self.explored += 1;
            if self.explored > self.limit {
                return Outcome::Aborted;
            }
            self.chosen.push(i);
            match self.run(unbroken & !self.breaking[i], depth - 1) {
                Outcome::Exhausted => {
                    self.chosen.pop();
                }
                done => return done,
            }
        }
        self.dead.insert((unbroken, depth));
        Outcome::Exhausted
    }
}
