//! Exhaustive oracles shared by the unit tests.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// `α(G)` and `Ω(G)` (sorted) by scanning every subset.
pub fn alpha_and_omega(g: &Graph) -> (usize, Vec<VertexSet>) {
    let mut best = 0;
    let mut sets = Vec::new();
    for bits in 0u64..(1 << g.order()) {
        let s = VertexSet::from_bits(bits);
        if !g.is_independent_unchecked(s) || s.len() < best {
            continue;
        }
        if s.len() > best {
            best = s.len();
            sets.clear();
        }
        sets.push(s);
    }
    sets.sort();
    (best, sets)
}

pub fn has_two_disjoint_mis_bruteforce(g: &Graph) -> bool {
    let (_, sets) = alpha_and_omega(g);
    sets.iter().any(|s| sets.iter().any(|t| s.is_disjoint(*t)))
}
