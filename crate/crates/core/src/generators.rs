//! Deterministic generators for the graph families used throughout the crate.
//!
//! Labelings are fixed: `roberts(n)` removes the matching `{2i, 2i+1}` from
//! `K_n`, and `crown(n)` takes sides `0..n/2` and `n/2..n` and removes the
//! matching `{i, i + n/2}`. Random graphs are drawn from a ChaCha8 stream, so a
//! seed reproduces the same graph on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Graph};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    Complete {
        n: usize,
    },
    /// `K_{1,n-1}` with center 0.
    Star {
        n: usize,
    },
    CompleteBipartite {
        n1: usize,
        n2: usize,
    },
    /// `K_n` minus a perfect matching.
    Roberts {
        n: usize,
    },
    /// `K_{n/2,n/2}` minus a perfect matching.
    Crown {
        n: usize,
    },
    /// Erdős–Rényi `G(n, p)`.
    Random {
        n: usize,
        p: f64,
        seed: u64,
    },
}

/// A generated graph, with its bipartition when the family is bipartite by construction.
#[derive(Debug, Clone)]
pub struct Generated {
    pub graph: Graph,
    pub bipartition: Option<Bipartition>,
}

pub fn generate(family: Family) -> Result<Generated> {
    let plain = |graph| Generated {
        graph,
        bipartition: None,
    };
    match family {
        Family::Path { n } => Ok(plain(path(n))),
        Family::Cycle { n } => cycle(n).map(plain),
        Family::Complete { n } => Ok(plain(Graph::complete(n))),
        Family::Star { n } => {
            let graph = star(n)?;
            let bipartition = Some(Bipartition {
                side1: vec![0],
                side2: (1..n).collect(),
            });
            Ok(Generated { graph, bipartition })
        }
        Family::CompleteBipartite { n1, n2 } => {
            let graph = complete_bipartite(n1, n2);
            Ok(Generated {
                graph,
                bipartition: Some(sides(n1, n2)),
            })
        }
        Family::Roberts { n } => roberts(n).map(plain),
        Family::Crown { n } => {
            let graph = crown(n)?;
            Ok(Generated {
                graph,
                bipartition: Some(sides(n / 2, n / 2)),
            })
        }
        Family::Random { n, p, seed } => random(n, p, seed).map(plain),
    }
}

fn sides(n1: usize, n2: usize) -> Bipartition {
    Bipartition {
        side1: (0..n1).collect(),
        side2: (n1..n1 + n2).collect(),
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path edges are in range")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::input(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("star needs n >= 1"));
    }
    Graph::from_edges(n, (1..n).map(|i| (0, i)))
}

pub fn complete_bipartite(n1: usize, n2: usize) -> Graph {
    let pairs = (0..n1).flat_map(|u| (n1..n1 + n2).map(move |v| (u, v)));
    Graph::from_edges(n1 + n2, pairs).expect("bipartite edges are in range")
}

pub fn roberts(n: usize) -> Result<Graph> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::input(format!(
            "roberts graph needs even n >= 2, got {n}"
        )));
    }
    let pairs = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !(u % 2 == 0 && v == u + 1));
    Graph::from_edges(n, pairs)
}

pub fn crown(n: usize) -> Result<Graph> {
    if n < 4 || n % 2 == 1 {
        return Err(Error::input(format!(
            "crown graph needs even n >= 4, got {n}"
        )));
    }
    let h = n / 2;
    let pairs = (0..h)
        .flat_map(|u| (h..n).map(move |v| (u, v)))
        .filter(|&(u, v)| v != u + h);
    Graph::from_edges(n, pairs)
}

pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert(u, v);
            }
        }
    }
    Ok(g)
}

/// Random bipartite graph with sides `0..n1` and `n1..n1+n2`; each cross pair is an edge with probability `p`.
pub fn random_bipartite(n1: usize, n2: usize, p: f64, seed: u64) -> Result<Generated> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::input(format!("edge probability {p} outside [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n1 + n2);
    for u in 0..n1 {
        for v in n1..n1 + n2 {
            if rng.gen_bool(p) {
                g.insert(u, v);
            }
        }
    }
    Ok(Generated {
        graph: g,
        bipartition: Some(sides(n1, n2)),
    })
}
