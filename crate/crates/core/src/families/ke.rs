//! König–Egerváry graphs: disjoint pairs, the `2^α` bound on `|Ω|`, and
//! the shedding characterisation of `αK_2`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{is_konig_egervary, omega_family, OmegaFamily};
use crate::limits::Limits;
use crate::matching::has_perfect_matching;
use crate::vertex_classes::shedding_vertices;

fn require_ke(g: &Graph, limits: &Limits) -> Result<OmegaFamily> {
    if !is_konig_egervary(g, limits)? {
        return Err(Error::precondition("graph is not König–Egerváry"));
    }
    omega_family(g, limits)
}

/// Whether every component is a single edge.
pub fn is_alpha_k2(g: &Graph) -> bool {
    g.vertices().iter().all(|v| g.degree(v) == 1)
}

fn pow2(k: usize) -> Option<usize> {
    1usize.checked_shl(k as u32)
}

/// A disjoint pair exists iff `G` is bipartite with a perfect matching, and
/// any disjoint pair then covers `V(G)`.
pub fn ke_two_disjoint_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let omega = require_ke(g, limits)?;
    let pair = omega.disjoint_pair();
    let expected = g.is_bipartite() && has_perfect_matching(g).is_some();
    if pair.is_some() != expected {
        return Ok(false);
    }
    Ok(pair.is_none_or(|(a, b)| a.union(b) == g.vertices()))
}

/// `|Ω(G)| ≤ 2^α`, with equality exactly for `αK_2`.
pub fn ke_omega_bound_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let omega = require_ke(g, limits)?;
    let bound = pow2(omega.alpha);
    Ok(bound.is_none_or(|b| omega.len() <= b) && (bound == Some(omega.len())) == is_alpha_k2(g))
}

/// The six conditions, in order:
/// a maximum independent set inside `Shed(G)`; `|Ω| = 2^α`;
/// `Shed(G) = V(G)`; every maximum independent set inside `Shed(G)`;
/// a disjoint pair inside `Shed(G)`; `G = αK_2`.
pub fn ke_shed_conditions(g: &Graph, limits: &Limits) -> Result<[bool; 6]> {
    let omega = require_ke(g, limits)?;
    let shed = shedding_vertices(g, limits)?;
    let inside: Vec<_> = omega.sets.iter().copied().filter(|s| s.is_subset(shed)).collect();
    let disjoint_inside = inside
        .iter()
        .enumerate()
        .any(|(i, s)| inside[i..].iter().any(|t| s.is_disjoint(*t) && (s != t || omega.alpha == 0)));
    Ok([
        !inside.is_empty(),
        pow2(omega.alpha) == Some(omega.len()),
        shed == g.vertices(),
        inside.len() == omega.len(),
        disjoint_inside,
        is_alpha_k2(g),
    ])
}

pub fn ke_shed_equivalence_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let c = ke_shed_conditions(g, limits)?;
    Ok(c.iter().all(|&b| b == c[0]))
}
