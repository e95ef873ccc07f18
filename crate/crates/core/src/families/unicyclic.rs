//! Unicyclic graphs: the cycle/subtree decomposition and a polynomial
//! decision for two disjoint maximum independent sets.
//!
//! The decision rule is: yes iff `G` is bipartite with a perfect matching,
//! or `G` is not König–Egerváry and `G − v` has a perfect matching for some
//! cycle vertex `v`. Dropping the König–Egerváry condition from the second
//! branch is wrong: `C_4` plus one pendant is König–Egerváry of odd order,
//! so it has no disjoint pair, yet deleting a cycle vertex next to the
//! pendant's support leaves `P_4`.

use serde::Serialize;

use crate::certificate::{Certificate, Evidence, UnicyclicRoute};
use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, Graph, VertexMap};
use crate::independence::{independence_number_within, omega_family, omega_family_within};
use crate::limits::Limits;
use crate::matching::{
    forest_perfect_matching, matching_number, max_matching_bipartite, ForestMatching, ForestObstruction,
};
use crate::vertex_set::VertexSet;

/// A tree `T_x` hanging off the cycle: `root` is adjacent to the cycle
/// vertex `anchor`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HangingTree {
    pub root: usize,
    pub anchor: usize,
    pub vertices: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnicyclicDecomposition {
    pub cycle: Vec<usize>,
    /// `N_1(C)`: vertices off the cycle with a cycle neighbour.
    pub attachment: VertexSet,
    /// One tree per attachment vertex, in ascending root order.
    pub subtrees: Vec<HangingTree>,
}

impl UnicyclicDecomposition {
    pub fn cycle_set(&self) -> VertexSet {
        self.cycle.iter().copied().collect()
    }

    pub fn subtree_graph(&self, g: &Graph, root: usize) -> Option<(Graph, VertexMap)> {
        let t = self.subtrees.iter().find(|t| t.root == root)?;
        g.induced_subgraph(t.vertices).ok()
    }
}

fn not_unicyclic() -> Error {
    Error::precondition("graph is not unicyclic")
}

pub fn unicyclic_decompose(g: &Graph) -> Result<UnicyclicDecomposition> {
    let cycle = g.unique_cycle().ok_or_else(not_unicyclic)?;
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    let off_cycle = g.vertices().difference(on_cycle);
    let attachment: VertexSet = off_cycle.iter().filter(|&v| !g.adj(v).is_disjoint(on_cycle)).collect();
    let components = g.components_within(off_cycle);
    let subtrees = attachment
        .iter()
        .map(|x| HangingTree {
            root: x,
            anchor: g.adj(x).intersection(on_cycle).first().expect("attachment vertex"),
            vertices: *components.iter().find(|c| c.contains(x)).expect("x lies off the cycle"),
        })
        .collect();
    Ok(UnicyclicDecomposition { cycle, attachment, subtrees })
}

/// `α` of a unicyclic graph: every independent set misses one end of a
/// cycle edge, and deleting either end leaves a forest.
pub fn unicyclic_alpha(g: &Graph, cycle: &[usize]) -> usize {
    let (u, w) = (cycle[0], cycle[1]);
    let all = g.vertices();
    independence_number_within(g, all.without(u)).max(independence_number_within(g, all.without(w)))
}

fn map_obstruction(o: ForestObstruction, map: &VertexMap) -> ForestObstruction {
    match o {
        ForestObstruction::OddComponent { vertices } => {
            ForestObstruction::OddComponent { vertices: map.old_set(vertices) }
        }
        ForestObstruction::Stranded { vertex, leaf, support } => {
            ForestObstruction::Stranded { vertex: map.old(vertex), leaf: map.old(leaf), support: map.old(support) }
        }
    }
}

/// Decides whether a unicyclic graph has two disjoint maximum independent
/// sets without enumerating them.
pub fn unicyclic_two_disjoint_mis(g: &Graph) -> Result<Certificate> {
    let cycle = g.unique_cycle().ok_or_else(not_unicyclic)?;
    let n = g.order();
    let mu = matching_number(g);
    let bipartite = match g.bipartiteness() {
        Bipartiteness::Bipartite { left, right } => {
            if 2 * mu == n {
                let matching = max_matching_bipartite(g, left, right)?;
                let route = UnicyclicRoute::BipartitePerfectMatching { left, right, matching };
                return Ok(Certificate::yes(Evidence::UnicyclicCycleVertex { cycle, route }));
            }
            true
        }
        Bipartiteness::OddCycle(_) => false,
    };
    let alpha = unicyclic_alpha(g, &cycle);
    let konig_egervary = alpha + mu == n;
    let mut obstructions = Vec::new();
    if !konig_egervary {
        for &v in &cycle {
            let (h, map) = g.delete_vertices(VertexSet::singleton(v))?;
            match forest_perfect_matching(&h)? {
                ForestMatching::Perfect(m) => {
                    let matching = m.map_vertices(|x| map.old(x));
                    let route = UnicyclicRoute::CycleVertex { vertex: v, matching, alpha, mu };
                    return Ok(Certificate::yes(Evidence::UnicyclicCycleVertex { cycle, route }));
                }
                ForestMatching::Blocked(o) => obstructions.push((v, map_obstruction(o, &map))),
            }
        }
    }
    let route = UnicyclicRoute::Neither { alpha, mu, bipartite, konig_egervary, obstructions };
    Ok(Certificate::no(Evidence::UnicyclicCycleVertex { cycle, route }))
}

fn require_non_ke(g: &Graph) -> Result<UnicyclicDecomposition> {
    let d = unicyclic_decompose(g)?;
    if unicyclic_alpha(g, &d.cycle) + matching_number(g) == g.order() {
        return Err(Error::precondition("graph is König–Egerváry"));
    }
    Ok(d)
}

/// `core(G)` equals the union of `core(T_x)` over the hanging trees.
/// Refuses König–Egerváry inputs.
pub fn unicyclic_core_union_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let d = require_non_ke(g)?;
    let core = omega_family(g, limits)?.core;
    let mut union = VertexSet::EMPTY;
    for t in &d.subtrees {
        union = union.union(omega_family_within(g, t.vertices, limits)?.core);
    }
    Ok(core == union)
}

/// For every hanging tree `T_x`, `Ω(T_x)` is exactly the set of traces
/// `S ∩ V(T_x)` with `S ∈ Ω(G)`. Refuses König–Egerváry inputs.
pub fn unicyclic_subtree_trace_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let d = require_non_ke(g)?;
    let omega = omega_family(g, limits)?;
    for t in &d.subtrees {
        let mut traces: Vec<VertexSet> = omega.sets.iter().map(|s| s.intersection(t.vertices)).collect();
        traces.sort_unstable();
        traces.dedup();
        if traces != omega_family_within(g, t.vertices, limits)?.sets {
            return Ok(false);
        }
    }
    Ok(true)
}

/// In a non-König–Egerváry unicyclic graph, both members of any disjoint
/// pair meet the cycle in `(|C| − 1) / 2` vertices.
pub fn unicyclic_cycle_share_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let d = require_non_ke(g)?;
    let c = d.cycle_set();
    let share = (c.len() - 1) / 2;
    let omega = omega_family(g, limits)?;
    for (i, &s) in omega.sets.iter().enumerate() {
        for &t in &omega.sets[i + 1..] {
            if s.is_disjoint(t) && (s.intersection(c).len() != share || t.intersection(c).len() != share) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `n − 1 ≤ α + μ ≤ n`.
pub fn unicyclic_alpha_mu_range_check(g: &Graph) -> Result<bool> {
    let cycle = g.unique_cycle().ok_or_else(not_unicyclic)?;
    let sum = unicyclic_alpha(g, &cycle) + matching_number(g);
    let n = g.order();
    Ok(n - 1 <= sum && sum <= n)
}
