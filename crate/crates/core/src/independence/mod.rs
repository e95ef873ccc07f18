//! Independent sets: enumeration, `α`, `Ω`, core, well-coveredness,
//! König–Egerváry recognition and Berge's matching criterion.

mod equivalence;
mod pattern;

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::matching::{match_into, matching_number};
use crate::vertex_set::VertexSet;

pub use equivalence::{equivalence_suite, mu_ge_alpha_check, EquivalenceReport};
pub use pattern::{contains_induced_corona_odd_cycle, CoronaEmbedding};

pub fn is_independent(g: &Graph, set: VertexSet) -> Result<bool> {
    g.check_set(set)?;
    Ok(g.is_independent_unchecked(set))
}

/// Visits every maximal independent set of `G[within]` (Bron–Kerbosch with
/// pivoting on the complement). Stops early when `visit` breaks.
pub fn for_each_maximal_independent_set<F>(g: &Graph, within: VertexSet, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    // non-neighbours of v inside `within`
    let free = |v: usize| within.difference(g.adj(v)).without(v);
    fn expand(
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        free: &dyn Fn(usize) -> VertexSet,
        visit: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if p.is_empty() {
            return if x.is_empty() { visit(r) } else { ControlFlow::Continue(()) };
        }
        let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(free(u)).len()).expect("p is non-empty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(free(pivot)).iter() {
            let fv = free(v);
            expand(r.with(v), p.intersection(fv), x.intersection(fv), free, visit)?;
            p.remove(v);
            x.insert(v);
        }
        ControlFlow::Continue(())
    }
    expand(VertexSet::EMPTY, within, VertexSet::EMPTY, &free, &mut visit)
}

/// All maximal independent sets, sorted lexicographically.
pub fn enumerate_maximal_independent_sets(g: &Graph, limits: &Limits) -> Result<Vec<VertexSet>> {
    limits.check_order(g)?;
    let mut out = Vec::new();
    let _ = for_each_maximal_independent_set(g, g.vertices(), |s| {
        out.push(s);
        ControlFlow::Continue(())
    });
    out.sort_unstable();
    Ok(out)
}

/// Upper bound on `α(G[p])`: the number of cliques in a greedy clique cover.
fn clique_cover_bound(g: &Graph, mut p: VertexSet) -> usize {
    let mut count = 0;
    while let Some(v) = p.first() {
        let mut clique_candidates = p.intersection(g.adj(v));
        p.remove(v);
        while let Some(u) = clique_candidates.first() {
            p.remove(u);
            clique_candidates = clique_candidates.intersection(g.adj(u));
        }
        count += 1;
    }
    count
}

/// `α(G[within])` by branch and bound. No size cap: callers that need one
/// go through [`alpha`].
pub fn independence_number_within(g: &Graph, within: VertexSet) -> usize {
    fn search(g: &Graph, p: VertexSet, cur: usize, best: &mut usize) {
        if p.is_empty() {
            *best = (*best).max(cur);
            return;
        }
        if cur + p.len() <= *best || cur + clique_cover_bound(g, p) <= *best {
            return;
        }
        // a vertex of degree at most one can always be taken
        if let Some(v) = p.iter().find(|&v| g.adj(v).intersection(p).len() <= 1) {
            return search(g, p.difference(g.adj(v)).without(v), cur + 1, best);
        }
        let v = p.iter().max_by_key(|&v| g.adj(v).intersection(p).len()).expect("p non-empty");
        search(g, p.difference(g.adj(v)).without(v), cur + 1, best);
        search(g, p.without(v), cur, best);
    }
    let mut best = 0;
    for comp in g.components_within(within) {
        let mut comp_best = 0;
        search(g, comp, 0, &mut comp_best);
        best += comp_best;
    }
    best
}

pub fn independence_number(g: &Graph) -> usize {
    independence_number_within(g, g.vertices())
}

/// `α(G)`, subject to the vertex cap.
pub fn alpha(g: &Graph, limits: &Limits) -> Result<usize> {
    limits.check_order(g)?;
    Ok(independence_number(g))
}

/// Visits every independent set of size `target` inside `within`, in
/// lexicographic order.
pub(crate) fn for_each_independent_set_of_size<F>(
    g: &Graph,
    within: VertexSet,
    target: usize,
    mut visit: F,
) -> ControlFlow<()>
where
    F: FnMut(VertexSet) -> ControlFlow<()>,
{
    fn go(
        g: &Graph,
        p: VertexSet,
        cur: VertexSet,
        target: usize,
        visit: &mut dyn FnMut(VertexSet) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        if cur.len() == target {
            return visit(cur);
        }
        if cur.len() + p.len() < target || cur.len() + clique_cover_bound(g, p) < target {
            return ControlFlow::Continue(());
        }
        let v = p.first().expect("bound guarantees candidates");
        go(g, p.difference(g.adj(v)).without(v), cur.with(v), target, visit)?;
        go(g, p.without(v), cur, target, visit)
    }
    go(g, within, VertexSet::EMPTY, target, &mut visit)
}

/// `Ω(G)` together with `α(G)` and `core(G)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaFamily {
    pub alpha: usize,
    /// Every maximum independent set, sorted lexicographically.
    pub sets: Vec<VertexSet>,
    pub core: VertexSet,
}

impl OmegaFamily {
    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, set: VertexSet) -> bool {
        self.sets.binary_search(&set).is_ok()
    }

    /// Union of all maximum independent sets.
    pub fn corona(&self) -> VertexSet {
        self.sets.iter().fold(VertexSet::EMPTY, |acc, &s| acc.union(s))
    }

    /// First disjoint pair in lexicographic order.
    pub fn disjoint_pair(&self) -> Option<(VertexSet, VertexSet)> {
        self.sets.iter().enumerate().find_map(|(i, &s)| {
            // for α = 0 the only set is ∅, which is disjoint from itself
            let start = if self.alpha == 0 { i } else { i + 1 };
            self.sets[start..].iter().find(|t| s.is_disjoint(**t)).map(|&t| (s, t))
        })
    }
}

pub fn omega_family(g: &Graph, limits: &Limits) -> Result<OmegaFamily> {
    omega_family_within(g, g.vertices(), limits)
}

/// `Ω(G[within])` in the ids of `G`.
pub fn omega_family_within(g: &Graph, within: VertexSet, limits: &Limits) -> Result<OmegaFamily> {
    limits.check_order(g)?;
    let alpha = independence_number_within(g, within);
    let mut sets = Vec::new();
    let mut overflow = false;
    let _ = for_each_independent_set_of_size(g, within, alpha, |s| {
        if sets.len() == limits.max_omega {
            overflow = true;
            return ControlFlow::Break(());
        }
        sets.push(s);
        ControlFlow::Continue(())
    });
    if overflow {
        return Err(Error::cap("maximum independent set count", limits.max_omega, limits.max_omega + 1));
    }
    let core = sets.iter().fold(within, |acc, &s| acc.intersection(s));
    Ok(OmegaFamily { alpha, sets, core })
}

pub fn is_well_covered(g: &Graph, limits: &Limits) -> Result<bool> {
    limits.check_order(g)?;
    let alpha = independence_number(g);
    let mismatch = for_each_maximal_independent_set(g, g.vertices(), |s| {
        if s.len() == alpha {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok(mismatch.is_continue())
}

/// Well-covered, no isolated vertices, and `n = 2α`.
pub fn is_very_well_covered(g: &Graph, limits: &Limits) -> Result<bool> {
    limits.check_order(g)?;
    Ok(g.isolated_vertices().is_empty() && g.order() == 2 * independence_number(g) && is_well_covered(g, limits)?)
}

/// `α(G) + μ(G) = n(G)`.
pub fn is_konig_egervary(g: &Graph, limits: &Limits) -> Result<bool> {
    limits.check_order(g)?;
    Ok(independence_number(g) + matching_number(g) == g.order())
}

/// Checks whether every independent set disjoint from `s` can be matched
/// into `s`. Only the maximal independent sets of `G − S` are tried: a
/// subset of a set that matches into `S` matches as well.
pub fn berge_verify(g: &Graph, s: VertexSet, limits: &Limits) -> Result<bool> {
    limits.check_order(g)?;
    if !is_independent(g, s)? {
        return Err(Error::precondition(format!("{s} is not independent")));
    }
    let outside = g.vertices().difference(s);
    let failed = for_each_maximal_independent_set(g, outside, |other| match match_into(g, other, s) {
        Ok(Some(_)) => ControlFlow::Continue(()),
        _ => ControlFlow::Break(()),
    });
    Ok(failed.is_continue())
}

/// Some pair of disjoint maximal independent sets, or `None` after
/// exhausting all candidates.
///
/// A maximal independent set of `G` disjoint from `S` is exactly a maximal
/// independent set of `G − S` that also dominates `S`.
pub fn has_two_disjoint_maximal_is(g: &Graph, limits: &Limits) -> Result<Option<(VertexSet, VertexSet)>> {
    let maximal = enumerate_maximal_independent_sets(g, limits)?;
    for &s in &maximal {
        let mut partner = None;
        let _ = for_each_maximal_independent_set(g, g.vertices().difference(s), |t| {
            if s.iter().all(|v| !g.adj(v).is_disjoint(t)) {
                partner = Some(t);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(t) = partner {
            return Ok(Some((s.min(t), s.max(t))));
        }
    }
    Ok(None)
}
