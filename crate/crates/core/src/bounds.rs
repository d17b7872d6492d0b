//! Closed-form dimension bounds and the checks derived from them.
//!
//! All comparisons are in integer arithmetic; fractions are compared by
//! cross-multiplication.

use serde::Serialize;

use crate::coloring::chromatic_number;
use crate::error::Result;
use crate::graph::Graph;
use crate::matching::min_maximal_matching;

/// `⌈log₂ x⌉` for `x >= 1`.
pub fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1, "ceil_log2 of zero");
    (usize::BITS - (x - 1).leading_zeros()) as usize
}

/// Unit-interval dimension bound `t + ⌈log₂(n − t)⌉ − 1` for a cover of size `t >= 1`.
///
/// `None` for `t == 0` (edgeless graphs), which the cover construction does not address.
pub fn cubicity_bound(n: usize, t: usize) -> Option<usize> {
    if t == 0 || t >= n {
        return None;
    }
    Some(t + ceil_log2(n - t) - 1)
}

/// Interval dimension bound `⌊t/2⌋ + 1` for a cover of size `t`.
pub fn boxicity_bound(t: usize) -> usize {
    t / 2 + 1
}

/// Bound for a bipartite graph with sides `n1`, `n2`.
///
/// For a smaller side of at least 3 this is `min(⌈n1/2⌉, ⌈n2/2⌉)`. Below
/// that the cover bound `⌊n1/2⌋ + 1` applies (a cover never exceeds the smaller
/// side); note `C₄` has sides of 2 and needs two dimensions.
pub fn bipartite_bound(n1: usize, n2: usize) -> usize {
    let small = n1.min(n2);
    let large = n1.max(n2);
    if small >= 3 {
        small.div_ceil(2).min(large.div_ceil(2))
    } else {
        small / 2 + 1
    }
}

/// Outcome of testing `χ(G) ≥ n / (2s + 2)` where `box(G) = n/2 − s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChromaticCheckReport {
    pub n: usize,
    pub box_exact: usize,
    /// `2s = n − 2·box`; `s` itself is a half-integer when `n` is odd.
    pub twice_slack: i64,
    /// The bound `n / (2s + 2)` as numerator and denominator.
    pub bound_num: i64,
    pub bound_den: i64,
    pub chi_exact: usize,
    pub holds: bool,
}

impl ChromaticCheckReport {
    pub fn slack(&self) -> f64 {
        self.twice_slack as f64 / 2.0
    }
}

/// Compares the exact chromatic number with the lower bound implied by `box_exact`.
pub fn chromatic_check(g: &Graph, box_exact: usize) -> Result<ChromaticCheckReport> {
    let chi = chromatic_number(g)?;
    Ok(chromatic_check_with(g.n(), box_exact, chi))
}

/// As [`chromatic_check`], with the chromatic number supplied.
pub fn chromatic_check_with(n: usize, box_exact: usize, chi: usize) -> ChromaticCheckReport {
    let twice_slack = n as i64 - 2 * box_exact as i64;
    // n / (2s + 2) = n / (twice_slack + 2)
    let bound_num = n as i64;
    let bound_den = twice_slack + 2;
    let holds = bound_den > 0 && chi as i64 * bound_den >= bound_num;
    ChromaticCheckReport {
        n,
        box_exact,
        twice_slack,
        bound_num,
        bound_den,
        chi_exact: chi,
        holds,
    }
}

/// The pair of minimum-maximal-matching sizes used by [`matching_bound`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MatchingBound {
    pub nu: usize,
    pub nu_complement: usize,
    pub bound: usize,
}

/// `min(ν(G) + 1, ν(Ḡ))` where ν is the minimum maximal matching size.
pub fn matching_bound(g: &Graph) -> Result<MatchingBound> {
    let nu = min_maximal_matching(g)?.len();
    let nu_complement = min_maximal_matching(&g.complement())?.len();
    Ok(MatchingBound {
        nu,
        nu_complement,
        bound: (nu + 1).min(nu_complement),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    #[test]
    fn log_and_formulas() {
        assert_eq!(ceil_log2(1), 0);
        assert_eq!(ceil_log2(2), 1);
        assert_eq!(ceil_log2(4), 2);
        assert_eq!(ceil_log2(5), 3);
        assert_eq!(ceil_log2(8), 3);
        assert_eq!(cubicity_bound(5, 1), Some(2));
        assert_eq!(cubicity_bound(9, 1), Some(3));
        assert_eq!(cubicity_bound(4, 2), Some(2));
        assert_eq!(cubicity_bound(3, 0), None);
        assert_eq!(boxicity_bound(2), 2);
        assert_eq!(boxicity_bound(6), 4);
        assert_eq!(bipartite_bound(4, 4), 2);
        assert_eq!(bipartite_bound(6, 6), 3);
        assert_eq!(bipartite_bound(3, 3), 2);
        assert_eq!(bipartite_bound(2, 2), 2);
        assert_eq!(bipartite_bound(1, 4), 1);
    }

    #[test]
    fn chromatic_examples() {
        let r = chromatic_check(&generators::roberts(6).unwrap(), 3).unwrap();
        assert_eq!(
            (r.twice_slack, r.bound_num, r.bound_den, r.chi_exact),
            (0, 6, 2, 3)
        );
        assert!(r.holds);

        let r = chromatic_check(&generators::cycle(4).unwrap(), 2).unwrap();
        assert_eq!((r.twice_slack, r.chi_exact), (0, 2));
        assert!(r.holds);

        let r = chromatic_check(&generators::path(4), 1).unwrap();
        assert_eq!(r.slack(), 1.0);
        assert_eq!((r.bound_num, r.bound_den, r.chi_exact), (4, 4, 2));
        assert!(r.holds);
    }

    #[test]
    fn chromatic_check_can_fail() {
        // a made-up box value that would force χ >= 5/1
        let r = chromatic_check_with(5, 3, 2);
        assert_eq!(r.twice_slack, -1);
        assert!(!r.holds);
    }

    #[test]
    fn matching_bound_examples() {
        let b = matching_bound(&generators::cycle(4).unwrap()).unwrap();
        assert_eq!((b.nu, b.nu_complement, b.bound), (2, 2, 2));
        let b = matching_bound(&Graph::complete(4)).unwrap();
        assert_eq!(b.bound, 0);
        let b = matching_bound(&generators::star(5).unwrap()).unwrap();
        assert_eq!((b.nu, b.nu_complement, b.bound), (1, 2, 2));
    }
}
