//! Isomorphism classes of small graphs.
//!
//! The canonical form of a graph is the relabeling whose graph6 bit string
//! (upper triangle, column by column) is lexicographically largest among the
//! orderings compatible with an iterated degree refinement. Classes on `n`
//! vertices are grown from classes on `n − 1` by adding a vertex with every
//! possible neighborhood.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::io::write_graph6;

/// Largest order accepted by [`graphs_up_to_iso`].
pub const ENUMERATION_CAP: usize = 9;

/// Canonical relabeling of `g` (at most 16 vertices).
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Error::check_cap("vertex count for canonical form", g.n(), 16)?;
    let masks = g.masks().expect("cap is below 64");
    Ok(Graph::from_masks(&canonical_masks(&masks)))
}

/// graph6 string of the canonical form; equal exactly for isomorphic graphs.
pub fn canonical_key(g: &Graph) -> Result<String> {
    Ok(write_graph6(&canonical_form(g)?))
}

/// One canonical representative per isomorphism class on `n` vertices, sorted by graph6 key.
pub fn graphs_up_to_iso(n: usize) -> Result<Vec<Graph>> {
    Error::check_cap("vertex count for enumeration", n, ENUMERATION_CAP)?;
    let mut layer = vec![Graph::empty(0)];
    for k in 1..=n {
        let next: BTreeSet<Vec<u64>> = layer
            .par_iter()
            .flat_map_iter(|g| {
                let base = g.masks().expect("small graph");
                (0..1u64 << (k - 1)).map(move |nb| {
                    let mut masks = base.clone();
                    masks.push(nb);
                    for v in bits(nb) {
                        masks[v] |= 1 << (k - 1);
                    }
                    canonical_masks(&masks)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        layer = next.into_iter().map(|m| Graph::from_masks(&m)).collect();
    }
    let mut keyed: Vec<(String, Graph)> =
        layer.into_iter().map(|g| (write_graph6(&g), g)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(keyed.into_iter().map(|(_, g)| g).collect())
}

fn canonical_masks(masks: &[u64]) -> Vec<u64> {
    let order = canonical_order(masks);
    let mut position = vec![0; masks.len()];
    for (p, &v) in order.iter().enumerate() {
        position[v] = p;
    }
    let mut out = vec![0u64; masks.len()];
    for (v, &nb) in masks.iter().enumerate() {
        for u in bits(nb) {
            out[position[v]] |= 1 << position[u];
        }
    }
    out
}

/// Vertex order of the canonical form: `order[p]` is the vertex placed at position `p`.
fn canonical_order(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    let cells = refine(masks);
    // cell_of_position[p]: which color class must fill position p
    let mut cell_of_position = Vec::with_capacity(n);
    for (c, cell) in cells.iter().enumerate() {
        cell_of_position.extend(std::iter::repeat_n(c, cell.len()));
    }
    let mut search = Canon {
        masks,
        cells: &cells,
        cell_of_position,
        order: Vec::with_capacity(n),
        code: Vec::with_capacity(n),
        best_code: Vec::new(),
        best_order: Vec::new(),
        used: 0,
    };
    search.extend();
    search.best_order
}

/// Color classes from iterated neighborhood refinement, in an isomorphism-invariant order.
fn refine(masks: &[u64]) -> Vec<Vec<usize>> {
    let n = masks.len();
    let mut color: Vec<usize> = vec![0; n];
    let mut classes = 1;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(masks[v]).map(|u| color[u]).collect();
                nb.sort_unstable();
                (color[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = signatures.iter().collect();
        let ranked: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        color = signatures
            .iter()
            .map(|s| ranked.binary_search(&s).expect("signature present"))
            .collect();
        if ranked.len() == classes {
            break;
        }
        classes = ranked.len();
    }
    let mut cells = vec![Vec::new(); classes];
    for v in 0..n {
        cells[color[v]].push(v);
    }
    cells
}

struct Canon<'a> {
    masks: &'a [u64],
    cells: &'a [Vec<usize>],
    cell_of_position: Vec<usize>,
    order: Vec<usize>,
    /// Per placed position `p`, adjacency to positions `0..p` keyed by [`column_key`].
    code: Vec<u64>,
    best_code: Vec<u64>,
    best_order: Vec<usize>,
    used: u64,
}

impl Canon<'_> {
    fn extend(&mut self) {
        let p = self.order.len();
        if p == self.masks.len() {
            if self.best_order.is_empty() || self.code > self.best_code {
                self.best_code = self.code.clone();
                self.best_order = self.order.clone();
            }
            return;
        }
        let cell = self.cell_of_position[p];
        for &v in &self.cells[cell] {
            if self.used >> v & 1 == 1 {
                continue;
            }
            let column = column_key(self.column(v), p);
            if !self.best_order.is_empty()
                && self.code[..] == self.best_code[..p]
                && column < self.best_code[p]
            {
                continue;
            }
            self.order.push(v);
            self.code.push(column);
            self.used |= 1 << v;
            self.extend();
            self.used &= !(1 << v);
            self.code.pop();
            self.order.pop();
        }
    }

    fn column(&self, v: usize) -> u64 {
        self.order
            .iter()
            .enumerate()
            .filter(|&(_, &u)| self.masks[v] >> u & 1 == 1)
            .fold(0, |acc, (i, _)| acc | 1 << i)
    }
}

/// Orders columns so that numeric comparison matches bit-string comparison
/// with position 0 as the most significant bit.
fn column_key(column: u64, p: usize) -> u64 {
    if p == 0 {
        0
    } else {
        column.reverse_bits() >> (64 - p)
    }
}
