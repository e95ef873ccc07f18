//! Coronas `H ∘ K_1` and `G ∘ K_2`, the girth corollary, and perfect
//! matchings versus the core in bipartite graphs.

use serde::Serialize;

use crate::decision::has_two_disjoint_mis;
use crate::error::{Error, Result};
use crate::generators::{complete, corona_k1};
use crate::graph::Graph;
use crate::independence::{is_very_well_covered, is_well_covered, omega_family};
use crate::limits::Limits;
use crate::matching::has_perfect_matching;
use crate::vertex_classes::shedding_vertices;
use crate::vertex_set::VertexSet;

/// A split of `V(G)` into `H`-vertices, each with exactly one pendant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoronaK1Split {
    pub base: VertexSet,
    /// `(base vertex, pendant)` pairs in ascending base order.
    pub pendants: Vec<(usize, usize)>,
}

/// Recognises `G = H ∘ K_1` by pairing each degree-one vertex with its
/// neighbour. In a `K_2` component the smaller id becomes the base vertex.
pub fn corona_k1_split(g: &Graph) -> Option<CoronaK1Split> {
    let n = g.order();
    if n == 0 || n % 2 == 1 {
        return None;
    }
    let mut base = VertexSet::EMPTY;
    let mut pendant_set = VertexSet::EMPTY;
    let mut pendants = Vec::new();
    for p in g.vertices().iter().filter(|&v| g.degree(v) == 1) {
        let h = g.adj(p).first().expect("degree one");
        if g.degree(h) == 1 && h > p {
            // K_2 component, handled from the larger end
            continue;
        }
        if base.contains(h) {
            return None;
        }
        base.insert(h);
        pendant_set.insert(p);
        pendants.push((h, p));
    }
    if base.union(pendant_set) != g.vertices() || !base.is_disjoint(pendant_set) {
        return None;
    }
    pendants.sort_unstable();
    Some(CoronaK1Split { base, pendants })
}

fn is_k1_or_c7(g: &Graph) -> bool {
    g.order() == 1
        || (g.order() == 7 && g.size() == 7 && g.is_connected() && g.vertices().iter().all(|v| g.degree(v) == 2))
}

/// For a connected graph that is well-covered of girth at least 6 (and
/// neither `K_1` nor `C_7`) or very well-covered of girth at least 5: a
/// disjoint pair exists iff `G` is bipartite, and `G` splits as `H ∘ K_1`.
pub fn girth_corollary_check(g: &Graph, limits: &Limits) -> Result<bool> {
    if g.order() == 0 || !g.is_connected() {
        return Err(Error::precondition("graph is empty or not connected"));
    }
    let girth = g.girth();
    let wc = girth.at_least(6) && !is_k1_or_c7(g) && is_well_covered(g, limits)?;
    let vwc = girth.at_least(5) && is_very_well_covered(g, limits)?;
    if !wc && !vwc {
        return Err(Error::precondition("graph is outside the girth/well-covered class"));
    }
    let pair = has_two_disjoint_mis(g, limits)?.verdict.is_yes();
    Ok(pair == g.is_bipartite() && corona_k1_split(g).is_some())
}

/// Whether `g` belongs to the class covered by [`girth_corollary_check`].
pub fn in_girth_corollary_class(g: &Graph, limits: &Limits) -> Result<bool> {
    if g.order() == 0 || !g.is_connected() {
        return Ok(false);
    }
    let girth = g.girth();
    Ok((girth.at_least(6) && !is_k1_or_c7(g) && is_well_covered(g, limits)?)
        || (girth.at_least(5) && is_very_well_covered(g, limits)?))
}

/// `H ∘ K_1` has a disjoint pair iff `H` is bipartite.
pub fn corona_bipartite_check(h: &Graph, limits: &Limits) -> Result<bool> {
    let g = corona_k1(h)?;
    Ok(has_two_disjoint_mis(&g, limits)?.verdict.is_yes() == h.is_bipartite())
}

/// For `G ∘ K_2`: every vertex is shedding and a disjoint pair exists.
pub fn corona_k2_check(g: &Graph, limits: &Limits) -> Result<bool> {
    let c = g.corona_uniform(&complete(2)?)?;
    Ok(shedding_vertices(&c, limits)? == c.vertices() && has_two_disjoint_mis(&c, limits)?.verdict.is_yes())
}

/// A connected bipartite graph has a perfect matching iff its core is
/// empty.
pub fn bipartite_core_check(g: &Graph, limits: &Limits) -> Result<bool> {
    if !g.is_connected() || !g.is_bipartite() {
        return Err(Error::precondition("graph is not connected and bipartite"));
    }
    let core = omega_family(g, limits)?.core;
    Ok(has_perfect_matching(g).is_some() == core.is_empty())
}
