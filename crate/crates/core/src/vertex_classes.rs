//! Leaves, simplicial, codominated and shedding vertices, and the
//! expansion of an independent set of shedding vertices into `2^|S|`
//! independent sets of the same size.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{for_each_maximal_independent_set, is_independent};
use crate::limits::Limits;
use crate::matching::Matching;
use crate::vertex_set::{all_subsets, VertexSet};

/// `v` is codominated by `witness`: `N[witness] ⊆ N[v]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Codomination {
    pub vertex: usize,
    pub witness: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexClassification {
    pub leaves: VertexSet,
    pub simplicial: VertexSet,
    pub codominated: Vec<Codomination>,
    pub shedding: VertexSet,
}

impl VertexClassification {
    pub fn codominated_set(&self) -> VertexSet {
        self.codominated.iter().map(|c| c.vertex).collect()
    }
}

pub fn classify(g: &Graph, limits: &Limits) -> Result<VertexClassification> {
    Ok(VertexClassification {
        leaves: leaves(g),
        simplicial: simplicial_vertices(g),
        codominated: codominated_vertices(g),
        shedding: shedding_vertices(g, limits)?,
    })
}

pub fn leaves(g: &Graph) -> VertexSet {
    g.vertices().iter().filter(|&v| g.degree(v) == 1).collect()
}

/// Vertices whose closed neighbourhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices().iter().filter(|&v| g.adj(v).iter().all(|u| g.adj(v).without(u).is_subset(g.adj(u)))).collect()
}

/// Every codominated vertex with its smallest witness.
pub fn codominated_vertices(g: &Graph) -> Vec<Codomination> {
    let closed = |v: usize| g.adj(v).with(v);
    g.vertices()
        .iter()
        .filter_map(|v| {
            // N[u] ⊆ N[v] forces u ∈ N(v)
            g.adj(v).iter().find(|&u| closed(u).is_subset(closed(v))).map(|witness| Codomination { vertex: v, witness })
        })
        .collect()
}

/// Whether `v` is a shedding vertex. `v` fails exactly when some maximal
/// independent set of `G − N[v]` dominates `N(v)`; isolated vertices always
/// fail.
pub fn is_shedding(g: &Graph, v: usize) -> bool {
    let nv = g.adj(v);
    let outside = g.vertices().difference(nv.with(v));
    let blocked = for_each_maximal_independent_set(g, outside, |s| {
        if nv.iter().all(|u| !g.adj(u).is_disjoint(s)) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    blocked.is_continue()
}

pub fn shedding_vertices(g: &Graph, limits: &Limits) -> Result<VertexSet> {
    limits.check_order(g)?;
    Ok(g.vertices().iter().filter(|&v| is_shedding(g, v)).collect())
}

/// Whether `v` lies on a cycle of length 5 (not necessarily induced).
pub fn lies_on_five_cycle(g: &Graph, v: usize) -> bool {
    // v - a - b - c - d - v with all five distinct
    let nv = g.adj(v);
    nv.iter().any(|a| {
        g.adj(a).without(v).iter().any(|b| {
            g.adj(b)
                .difference(VertexSet::from([v, a]))
                .iter()
                .any(|c| !g.adj(c).intersection(nv).difference(VertexSet::from([a, b])).is_empty())
        })
    })
}

/// An independent set `I_A = (S − A) ∪ B_A` of size `|S|` avoiding `A`,
/// with a matching from `A` into `B_A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShedExpansion {
    pub set: VertexSet,
    pub matching: Matching,
}

fn check_shedding_set(g: &Graph, s: VertexSet, limits: &Limits) -> Result<()> {
    if !is_independent(g, s)? {
        return Err(Error::precondition(format!("{s} is not independent")));
    }
    limits.check_order(g)?;
    if let Some(v) = s.iter().find(|&v| !is_shedding(g, v)) {
        return Err(Error::precondition(format!("{v} is not a shedding vertex")));
    }
    Ok(())
}

/// Replaces each `x ∈ A` (ascending) by a neighbour `y`, smallest id first,
/// keeping the set independent. Backtracks when a choice leaves a later
/// vertex of `A` without a partner.
fn expand(g: &Graph, s: VertexSet, a: VertexSet) -> Option<ShedExpansion> {
    fn go(g: &Graph, todo: &[usize], s: VertexSet, cur: VertexSet, pairs: &mut Vec<(usize, usize)>) -> bool {
        let Some((&x, rest)) = todo.split_first() else { return true };
        for y in g.adj(x).difference(s).iter() {
            if cur.contains(y) || !g.adj(y).is_disjoint(cur) {
                continue;
            }
            pairs.push((x, y));
            if go(g, rest, s, cur.with(y), pairs) {
                return true;
            }
            pairs.pop();
        }
        false
    }
    let todo = a.to_vec();
    let mut pairs = Vec::with_capacity(todo.len());
    if !go(g, &todo, s, s.difference(a), &mut pairs) {
        return None;
    }
    let set = pairs.iter().fold(s.difference(a), |acc, &(_, y)| acc.with(y));
    let matching = Matching::from_edges(pairs).expect("partners are distinct");
    Some(ShedExpansion { set, matching })
}

pub fn expand_shedding_subset(g: &Graph, s: VertexSet, a: VertexSet, limits: &Limits) -> Result<ShedExpansion> {
    check_shedding_set(g, s, limits)?;
    if !a.is_subset(s) {
        return Err(Error::precondition(format!("{a} is not a subset of {s}")));
    }
    expand(g, s, a).ok_or_else(|| Error::precondition(format!("no expansion of {s} replacing {a}")))
}

/// `I_A` for every `A ⊆ S`, in submask order starting from `A = ∅`.
pub fn shedding_powerset_witnesses(g: &Graph, s: VertexSet, limits: &Limits) -> Result<Vec<VertexSet>> {
    check_shedding_set(g, s, limits)?;
    let count = 1usize.checked_shl(s.len() as u32).unwrap_or(usize::MAX);
    if count > limits.max_witnesses {
        return Err(Error::cap("witness family size", limits.max_witnesses, count));
    }
    all_subsets(s)
        .map(|a| {
            expand(g, s, a)
                .map(|e| e.set)
                .ok_or_else(|| Error::precondition(format!("no expansion of {s} replacing {a}")))
        })
        .collect()
}

/// A maximal independent set `U` disjoint from `S` together with a
/// matching from `S` into `U`: `I_S` extended by the smallest admissible
/// ids outside `S`.
pub fn disjoint_maximal_from_shedding(g: &Graph, s: VertexSet, limits: &Limits) -> Result<(VertexSet, Matching)> {
    let ShedExpansion { set, matching } = expand_shedding_subset(g, s, s, limits)?;
    let mut u = set;
    for v in g.vertices().difference(s).iter() {
        if !u.contains(v) && g.adj(v).is_disjoint(u) {
            u.insert(v);
        }
    }
    Ok((u, matching))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::independence::independence_number;

    fn l() -> Limits {
        Limits::default()
    }

    /// Shedding by the definition: every independent set of `G − N[v]`
    /// extends by some neighbour of `v`.
    fn shedding_oracle(g: &Graph, v: usize) -> bool {
        let nv = g.adj(v);
        let outside = g.vertices().difference(nv.with(v));
        all_subsets(outside)
            .filter(|&s| g.is_independent_unchecked(s))
            .all(|s| nv.iter().any(|u| g.adj(u).is_disjoint(s)))
    }

    #[test]
    fn named_shedding_sets() {
        assert_eq!(shedding_vertices(&complete(1).unwrap(), &l()).unwrap(), VertexSet::EMPTY);
        for n in 2..=6 {
            let k = complete(n).unwrap();
            assert_eq!(shedding_vertices(&k, &l()).unwrap(), k.vertices());
        }
        let c5 = cycle(5).unwrap();
        assert_eq!(shedding_vertices(&c5, &l()).unwrap(), c5.vertices());
        assert_eq!(shedding_vertices(&path(4).unwrap(), &l()).unwrap(), VertexSet::from([1, 2]));
    }

    #[test]
    fn shedding_matches_definition() {
        for g in crate::io::small_graph_catalog().iter().filter(|g| g.order() <= 6) {
            for v in g.vertices().iter() {
                assert_eq!(is_shedding(g, v), shedding_oracle(g, v), "{g:?} vertex {v}");
            }
        }
    }

    #[test]
    fn classification_examples() {
        let p4 = path(4).unwrap();
        assert_eq!(leaves(&p4), VertexSet::from([0, 3]));
        assert_eq!(simplicial_vertices(&p4), VertexSet::from([0, 3]));
        assert_eq!(
            codominated_vertices(&p4),
            vec![Codomination { vertex: 1, witness: 0 }, Codomination { vertex: 2, witness: 3 }]
        );
        let k4 = complete(4).unwrap();
        assert_eq!(simplicial_vertices(&k4), k4.vertices());
        assert_eq!(codominated_vertices(&k4).len(), 4);
        let c5 = cycle(5).unwrap();
        assert!(leaves(&c5).is_empty() && simplicial_vertices(&c5).is_empty());
        assert!(codominated_vertices(&c5).is_empty());
    }

    #[test]
    fn five_cycles() {
        assert!(lies_on_five_cycle(&cycle(5).unwrap(), 0));
        assert!(!lies_on_five_cycle(&cycle(6).unwrap(), 0));
        assert!(lies_on_five_cycle(&complete(5).unwrap(), 3));
        assert!(!lies_on_five_cycle(&complete(4).unwrap(), 0));
    }

    #[test]
    fn expansion_examples() {
        let k2 = complete(2).unwrap();
        let s = VertexSet::from([0]);
        let e = expand_shedding_subset(&k2, s, VertexSet::EMPTY, &l()).unwrap();
        assert_eq!((e.set, e.matching.len()), (s, 0));
        let e = expand_shedding_subset(&k2, s, s, &l()).unwrap();
        assert_eq!(e.set, VertexSet::from([1]));
        assert_eq!(e.matching.edges(), &[(0, 1)]);
        assert_eq!(shedding_powerset_witnesses(&k2, s, &l()).unwrap().len(), 2);
        assert_eq!(shedding_powerset_witnesses(&k2, VertexSet::EMPTY, &l()).unwrap(), vec![VertexSet::EMPTY]);
        assert_eq!(disjoint_maximal_from_shedding(&k2, s, &l()).unwrap().0, VertexSet::from([1]));
        let k3 = complete(3).unwrap();
        assert_eq!(disjoint_maximal_from_shedding(&k3, s, &l()).unwrap().0, VertexSet::from([1]));
    }

    #[test]
    fn friendship_expansion() {
        // F_2: centre 0, triangles {0,1,2} and {0,3,4}
        let f2 = friendship(2).unwrap();
        let shed = shedding_vertices(&f2, &l()).unwrap();
        let s = VertexSet::from([1, 3]);
        assert!(s.is_subset(shed) && s.len() == independence_number(&f2));
        let family = shedding_powerset_witnesses(&f2, s, &l()).unwrap();
        assert_eq!(family.len(), 4);
        let mut distinct = family.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 4);
        assert!(family.iter().all(|&i| i.len() == 2 && f2.is_independent_unchecked(i)));
        let e = expand_shedding_subset(&f2, s, s, &l()).unwrap();
        assert!(e.set.is_disjoint(s));
        assert!(e.matching.matches_into(s, e.set));
        let (u, _) = disjoint_maximal_from_shedding(&f2, s, &l()).unwrap();
        assert_eq!((u.len(), u.is_disjoint(s)), (2, true));
    }

    #[test]
    fn preconditions() {
        let p4 = path(4).unwrap();
        assert!(expand_shedding_subset(&p4, VertexSet::from([0]), VertexSet::EMPTY, &l()).is_err());
        assert!(expand_shedding_subset(&p4, VertexSet::from([1, 2]), VertexSet::EMPTY, &l()).is_err());
        let k2 = complete(2).unwrap();
        assert!(expand_shedding_subset(&k2, VertexSet::from([0]), VertexSet::from([1]), &l()).is_err());
    }
}
