//! Vertex covers: exact minimum, matching-based approximation, and minimalization.

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};

/// Default vertex limit for [`min_vertex_cover`].
pub const COVER_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexCover {
    /// Sorted ascending.
    pub vertices: Vec<usize>,
    /// Every member has a neighbor outside the cover.
    pub is_minimal: bool,
}

impl VertexCover {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Vertices outside the cover, ascending.
    pub fn independent_set(&self, g: &Graph) -> Vec<usize> {
        (0..g.n()).filter(|&v| !self.contains(v)).collect()
    }

    /// Wraps `vertices` after checking the cover property; minimality is computed.
    pub fn from_vertices(g: &Graph, mut vertices: Vec<usize>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(Error::input(format!("cover vertex {v} out of range")));
        }
        let member = membership(g.n(), &vertices);
        if let Some((u, v)) = uncovered_edge(g, &member) {
            return Err(Error::input(format!("edge ({u}, {v}) is not covered")));
        }
        let is_minimal = removable_vertex(g, &member).is_none();
        Ok(VertexCover {
            vertices,
            is_minimal,
        })
    }

    /// Fails with a removable vertex as witness when the cover is not minimal.
    pub fn ensure_minimal(&self, g: &Graph) -> Result<()> {
        let member = membership(g.n(), &self.vertices);
        if let Some((u, v)) = uncovered_edge(g, &member) {
            return Err(Error::precondition(format!(
                "edge ({u}, {v}) is not covered"
            )));
        }
        match removable_vertex(g, &member) {
            Some(v) => Err(Error::precondition(format!(
                "cover is not minimal: vertex {v} has no neighbor outside the cover"
            ))),
            None => Ok(()),
        }
    }
}

fn membership(n: usize, vertices: &[usize]) -> Vec<bool> {
    let mut member = vec![false; n];
    for &v in vertices {
        member[v] = true;
    }
    member
}

fn uncovered_edge(g: &Graph, member: &[bool]) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| !member[u] && !member[v])
}

fn removable_vertex(g: &Graph, member: &[bool]) -> Option<usize> {
    (0..g.n()).find(|&v| member[v] && g.neighbors(v).all(|u| member[u]))
}

/// Drops removable vertices from cover `c`, scanning in descending vertex order.
pub fn minimalize_cover(g: &Graph, c: &[usize]) -> Result<VertexCover> {
    let cover = VertexCover::from_vertices(g, c.to_vec())?;
    let mut member = membership(g.n(), &cover.vertices);
    for &v in cover.vertices.iter().rev() {
        if g.neighbors(v).all(|u| member[u]) {
            member[v] = false;
        }
    }
    Ok(VertexCover {
        vertices: (0..g.n()).filter(|&v| member[v]).collect(),
        is_minimal: true,
    })
}

/// Both ends of a greedy maximal matching (edges in lexicographic order), then minimalized.
pub fn approx_vertex_cover(g: &Graph) -> VertexCover {
    let mut matched = vec![false; g.n()];
    let mut cover = Vec::new();
    for (u, v) in g.edges() {
        if !matched[u] && !matched[v] {
            matched[u] = true;
            matched[v] = true;
            cover.extend([u, v]);
        }
    }
    minimalize_cover(g, &cover).expect("matched endpoints cover every edge")
}

/// Minimum vertex cover; among minimum covers, the lexicographically least sorted list.
pub fn min_vertex_cover(g: &Graph) -> Result<VertexCover> {
    min_vertex_cover_with_cap(g, COVER_CAP)
}

/// As [`min_vertex_cover`] with a caller-chosen vertex limit (at most 64).
pub fn min_vertex_cover_with_cap(g: &Graph, cap: usize) -> Result<VertexCover> {
    Error::check_cap("vertex count for exact cover", g.n(), cap.min(64))?;
    let masks = g.masks().expect("cover cap is below 64");
    let n = masks.len();
    let lower = greedy_matching_size(&masks, if n == 64 { u64::MAX } else { (1 << n) - 1 });
    for budget in lower..=n {
        let mut search = CoverSearch {
            masks: &masks,
            budget,
        };
        if let Some(set) = search.run(0, 0, 0) {
            return Ok(VertexCover {
                vertices: bits(set).collect(),
                is_minimal: true,
            });
        }
    }
    unreachable!("the full vertex set is a cover")
}

struct CoverSearch<'a> {
    masks: &'a [u64],
    budget: usize,
}

impl CoverSearch<'_> {
    /// Decides vertices in index order, trying "in" before "out". `forced` holds
    /// undecided vertices with an excluded neighbor. The first cover found within
    /// budget is therefore the lexicographically least one of that size.
    fn run(&mut self, v: usize, chosen: u64, forced: u64) -> Option<u64> {
        let n = self.masks.len();
        let used = (chosen.count_ones() + forced.count_ones()) as usize;
        if used > self.budget {
            return None;
        }
        if v == n {
            return Some(chosen);
        }
        let bit = 1u64 << v;
        let undecided = !((bit << 1).wrapping_sub(1)) & !forced;
        let undecided = if n == 64 {
            undecided
        } else {
            undecided & ((1u64 << n) - 1)
        };
        if forced & bit != 0 {
            return self.run(v + 1, chosen | bit, forced & !bit);
        }
        // free part: undecided, unforced vertices after v, plus v itself
        let free = undecided | bit;
        if used + greedy_matching_size(self.masks, free) > self.budget {
            return None;
        }
        if let Some(found) = self.run(v + 1, chosen | bit, forced) {
            return Some(found);
        }
        // excluding v: earlier neighbors must already be in the cover
        let earlier = bit - 1;
        if self.masks[v] & earlier & !chosen != 0 {
            return None;
        }
        self.run(v + 1, chosen, forced | (self.masks[v] & !earlier & !bit))
    }
}

/// Size of a greedy maximal matching inside `within`; a lower bound on any cover of that subgraph.
fn greedy_matching_size(masks: &[u64], within: u64) -> usize {
    let mut free = within;
    let mut size = 0;
    for u in bits(within) {
        if free >> u & 1 == 0 {
            continue;
        }
        if let Some(v) = bits(masks[u] & free).next() {
            free &= !(1 << u) & !(1 << v);
            size += 1;
        }
    }
    size
}
