use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex limit for [`chromatic_number`].
pub const CHROMATIC_CAP: usize = 16;

/// Exact chromatic number by backtracking over increasing color counts.
///
/// Vertices are colored in order of decreasing degree (ties by index), and a
/// vertex may open at most one new color, which removes color-permutation
/// symmetry.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    Error::check_cap("vertex count for chromatic number", g.n(), CHROMATIC_CAP)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let masks = g.masks().expect("cap is below 64");
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut k = 1;
    loop {
        let mut classes = vec![0u64; k];
        if color(&masks, &order, 0, &mut classes, 0) {
            return Ok(k);
        }
        k += 1;
    }
}

fn color(masks: &[u64], order: &[usize], i: usize, classes: &mut [u64], used: usize) -> bool {
    let Some(&v) = order.get(i) else {
        return true;
    };
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        if classes[c] & masks[v] == 0 {
            classes[c] |= 1 << v;
            if color(masks, order, i + 1, classes, used.max(c + 1)) {
                return true;
            }
            classes[c] &= !(1 << v);
        }
    }
    false
}
