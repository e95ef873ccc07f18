//! The five equivalent characterisations of a graph with two disjoint
//! maximum independent sets, each evaluated by its own search:
//!
//! 1. two disjoint members of `Ω(G)`;
//! 2. some `S ∈ Ω(G)` with `α(G − S) = α(G)`;
//! 3. a matching `M` of size `α(G)` with `G[V(M)]` bipartite;
//! 4. an induced bipartite subgraph on `2α(G)` vertices;
//! 5. a set `A` such that `G − A` is bipartite with a perfect matching of
//!    size `α(G)`.

use std::ops::ControlFlow;

use serde::Serialize;

use super::{independence_number_within, omega_family};
use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, Graph};
use crate::limits::Limits;
use crate::matching::{bipartite_mates_matching, matching_number, Matching};
use crate::vertex_set::{subsets_of_size, VertexSet};

/// Outcome of every condition with its witness when it holds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub alpha: usize,
    /// (i) a disjoint pair of maximum independent sets.
    pub disjoint_pair: Option<(VertexSet, VertexSet)>,
    /// (ii) a maximum independent set whose removal keeps `α`.
    pub alpha_preserving_set: Option<VertexSet>,
    /// (iii) a matching of size `α` spanning a bipartite induced subgraph.
    pub bipartite_alpha_matching: Option<Matching>,
    /// (iv) the two sides of an induced bipartite subgraph of order `2α`.
    pub induced_bipartite: Option<(VertexSet, VertexSet)>,
    /// (v) the deleted set `A` and a perfect matching of `G − A`.
    pub deletion_with_perfect_matching: Option<(VertexSet, Matching)>,
}

impl EquivalenceReport {
    pub fn conditions(&self) -> [bool; 5] {
        [
            self.disjoint_pair.is_some(),
            self.alpha_preserving_set.is_some(),
            self.bipartite_alpha_matching.is_some(),
            self.induced_bipartite.is_some(),
            self.deletion_with_perfect_matching.is_some(),
        ]
    }

    pub fn all_agree(&self) -> bool {
        let c = self.conditions();
        c.iter().all(|&b| b == c[0])
    }
}

pub fn equivalence_suite(g: &Graph, limits: &Limits) -> Result<EquivalenceReport> {
    if g.order() > limits.max_subset_n {
        return Err(Error::cap("vertex count for subset searches", limits.max_subset_n, g.order()));
    }
    let omega = omega_family(g, limits)?;
    let alpha = omega.alpha;

    let disjoint_pair = omega.disjoint_pair();

    let alpha_preserving_set =
        omega.sets.iter().copied().find(|&s| independence_number_within(g, g.vertices().difference(s)) == alpha);

    let bipartite_alpha_matching = find_bipartite_matching(g, alpha);

    let induced_bipartite = subsets_of_size(g.vertices(), 2 * alpha).find_map(|x| match g.bipartiteness_within(x) {
        Bipartiteness::Bipartite { left, right } => Some((left, right)),
        Bipartiteness::OddCycle(_) => None,
    });

    let deletion_with_perfect_matching = subsets_of_size(g.vertices(), 2 * alpha).find_map(|x| {
        let Bipartiteness::Bipartite { left, right } = g.bipartiteness_within(x) else {
            return None;
        };
        let m = bipartite_mates_matching(g, left, right);
        (m.len() == alpha).then(|| (g.vertices().difference(x), m))
    });

    Ok(EquivalenceReport {
        alpha,
        disjoint_pair,
        alpha_preserving_set,
        bipartite_alpha_matching,
        induced_bipartite,
        deletion_with_perfect_matching,
    })
}

/// Depth-first search over matchings of size `target` until one spans a
/// bipartite induced subgraph.
fn find_bipartite_matching(g: &Graph, target: usize) -> Option<Matching> {
    fn go(
        g: &Graph,
        free: VertexSet,
        chosen: &mut Vec<(usize, usize)>,
        covered: VertexSet,
        target: usize,
    ) -> ControlFlow<Matching> {
        if chosen.len() == target {
            if matches!(g.bipartiteness_within(covered), Bipartiteness::Bipartite { .. }) {
                return ControlFlow::Break(Matching::from_edges(chosen.iter().copied()).expect("disjoint"));
            }
            return ControlFlow::Continue(());
        }
        if chosen.len() + free.len() / 2 < target {
            return ControlFlow::Continue(());
        }
        let Some(v) = free.first() else { return ControlFlow::Continue(()) };
        let rest = free.without(v);
        for u in g.adj(v).intersection(rest).iter() {
            chosen.push((v, u));
            go(g, rest.without(u), chosen, covered.with(v).with(u), target)?;
            chosen.pop();
        }
        go(g, rest, chosen, covered, target)
    }
    match go(g, g.vertices(), &mut Vec::new(), VertexSet::EMPTY, target) {
        ControlFlow::Break(m) => Some(m),
        ControlFlow::Continue(()) => None,
    }
}

/// Two disjoint maximum independent sets force `μ(G) ≥ α(G)`; returns
/// whether that implication holds for `g`.
pub fn mu_ge_alpha_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let omega = omega_family(g, limits)?;
    Ok(omega.disjoint_pair().is_none() || matching_number(g) >= omega.alpha)
}
