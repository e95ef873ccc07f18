//! Shedding vertices of trees.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::independence::{for_each_maximal_independent_set, omega_family};
use crate::limits::Limits;
use crate::vertex_classes::{leaves, shedding_vertices};

fn is_k2(t: &Graph) -> bool {
    t.order() == 2 && t.size() == 1
}

/// Checks three facts about a tree `T`:
///
/// * for `T ≠ K_2`, a maximal independent set lies inside `Shed(T)` only
///   when it equals `Shed(T)`;
/// * some maximum independent set lies inside `Shed(T)` iff `T = K_2`;
/// * `Shed(T)` is the set of neighbours of leaves.
pub fn tree_shed_structure_check(t: &Graph, limits: &Limits) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::precondition("input is not a tree"));
    }
    let shed = shedding_vertices(t, limits)?;
    if !is_k2(t) {
        let broken = for_each_maximal_independent_set(t, t.vertices(), |s| {
            if s.is_subset(shed) != (s == shed) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if broken.is_break() {
            return Ok(false);
        }
    }
    let omega = omega_family(t, limits)?;
    if omega.sets.iter().any(|s| s.is_subset(shed)) != is_k2(t) {
        return Ok(false);
    }
    Ok(shed == t.neighbors_of_set(leaves(t)))
}

/// `|Shed(T)| ≤ α(T)`, and `|Shed(T)| ≤ α(T) − 1` when `Shed(T)` is
/// independent. `K_2` is excluded.
pub fn tree_shed_bounds_check(t: &Graph, limits: &Limits) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::precondition("input is not a tree"));
    }
    if is_k2(t) {
        return Err(Error::precondition("the bounds exclude K_2"));
    }
    let shed = shedding_vertices(t, limits)?;
    let alpha = crate::independence::alpha(t, limits)?;
    Ok(shed.len() <= alpha && (!t.is_independent_unchecked(shed) || shed.len() < alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::independence::independence_number;
    use crate::vertex_set::VertexSet;

    fn l() -> Limits {
        Limits::default()
    }

    #[test]
    fn small_trees() {
        let k2 = complete(2).unwrap();
        assert_eq!(shedding_vertices(&k2, &l()).unwrap().len(), 2);
        assert!(tree_shed_structure_check(&k2, &l()).unwrap());
        assert!(tree_shed_bounds_check(&k2, &l()).is_err());
        let p4 = path(4).unwrap();
        assert!(tree_shed_structure_check(&p4, &l()).unwrap());
        let k1 = complete(1).unwrap();
        assert!(tree_shed_bounds_check(&k1, &l()).unwrap());
        assert!(tree_shed_structure_check(&cycle(4).unwrap(), &l()).is_err());
    }

    #[test]
    fn tight_instances() {
        // P_3 ∘ K_1: Shed is the spine, of size α = 3
        let g = corona_k1(&path(3).unwrap()).unwrap();
        let shed = shedding_vertices(&g, &l()).unwrap();
        assert_eq!((shed, independence_number(&g)), (VertexSet::from([0, 1, 2]), 3));
        for p in [2, 3] {
            let sp = spider(p).unwrap();
            let shed = shedding_vertices(&sp, &l()).unwrap();
            assert_eq!(shed.len(), p);
            assert_eq!(independence_number(&sp), p + 1);
            assert!(tree_shed_bounds_check(&sp, &l()).unwrap());
        }
    }

    #[test]
    fn all_trees_up_to_seven() {
        for n in 1..=7 {
            for t in all_labeled_trees(n) {
                assert!(tree_shed_structure_check(&t, &l()).unwrap(), "{t:?}");
                if n != 2 {
                    assert!(tree_shed_bounds_check(&t, &l()).unwrap(), "{t:?}");
                }
            }
        }
    }
}
