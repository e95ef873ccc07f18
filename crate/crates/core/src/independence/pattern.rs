//! Detection of an induced `C_{2k+1} ∘ K_1`: an odd cycle with one pendant
//! hanging from each of its vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::Limits;
use crate::vertex_set::VertexSet;

/// An induced copy of `C_{2k+1} ∘ K_1`. `pendants[i]` hangs from `cycle[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoronaEmbedding {
    pub k: usize,
    pub cycle: Vec<usize>,
    pub pendants: Vec<usize>,
}

impl CoronaEmbedding {
    pub fn vertices(&self) -> VertexSet {
        self.cycle.iter().chain(&self.pendants).copied().collect()
    }

    /// Checks that the embedding is induced in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let len = self.cycle.len();
        if len != 2 * self.k + 1 || self.pendants.len() != len || self.vertices().len() != 2 * len {
            return false;
        }
        if g.check_set(self.vertices()).is_err() {
            return false;
        }
        let image = self.vertices();
        (0..len).all(|i| {
            let c = self.cycle[i];
            let expected: VertexSet =
                [self.cycle[(i + 1) % len], self.cycle[(i + len - 1) % len], self.pendants[i]].into();
            g.adj(c).intersection(image) == expected
                && g.adj(self.pendants[i]).intersection(image) == VertexSet::singleton(c)
        })
    }
}

/// Searches for an induced `C_{2k+1} ∘ K_1` with `1 ≤ k ≤ k_max`, shortest
/// cycle first.
pub fn contains_induced_corona_odd_cycle(g: &Graph, k_max: usize, limits: &Limits) -> Result<Option<CoronaEmbedding>> {
    if !(1..=3).contains(&k_max) {
        return Err(Error::InvalidParameter(format!("k_max must be in 1..=3, got {k_max}")));
    }
    if g.order() > limits.max_pattern_n {
        return Err(Error::cap("vertex count for pattern search", limits.max_pattern_n, g.order()));
    }
    // cycle vertices need two cycle neighbours and a pendant
    let eligible: VertexSet = g.vertices().iter().filter(|&v| g.degree(v) >= 3).collect();
    for k in 1..=k_max {
        let len = 2 * k + 1;
        let mut found = None;
        for c0 in eligible.iter() {
            let mut cycle = vec![c0];
            if induced_cycles(g, eligible, len, &mut cycle, &mut |cyc| {
                found = attach_pendants(g, cyc).map(|pendants| CoronaEmbedding { k, cycle: cyc.to_vec(), pendants });
                found.is_some()
            }) {
                return Ok(found);
            }
        }
    }
    Ok(None)
}

/// Extends `path` to induced cycles of length `len` whose smallest vertex is
/// `path[0]` and with `path[1] < path[len - 1]`. Returns `true` once `visit`
/// accepts a cycle.
fn induced_cycles(
    g: &Graph,
    eligible: VertexSet,
    len: usize,
    path: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    let c0 = path[0];
    let last = *path.last().expect("path starts non-empty");
    if path.len() == len {
        return g.has_edge(last, c0) && path[1] < last && visit(path);
    }
    let inner: VertexSet = path.iter().skip(1).take(path.len().saturating_sub(2)).copied().collect();
    for v in g.adj(last).iter() {
        if v <= c0 || !eligible.contains(v) || path.contains(&v) {
            continue;
        }
        // v may touch only `last`, plus c0 when it closes the cycle
        if !g.adj(v).is_disjoint(inner) {
            continue;
        }
        let closes = path.len() + 1 == len;
        if path.len() >= 2 && g.has_edge(v, c0) != closes {
            continue;
        }
        path.push(v);
        if induced_cycles(g, eligible, len, path, visit) {
            return true;
        }
        path.pop();
    }
    false
}

fn attach_pendants(g: &Graph, cycle: &[usize]) -> Option<Vec<usize>> {
    let on_cycle: VertexSet = cycle.iter().copied().collect();
    fn go(g: &Graph, cycle: &[usize], on_cycle: VertexSet, chosen: &mut Vec<usize>) -> bool {
        let i = chosen.len();
        if i == cycle.len() {
            return true;
        }
        let used: VertexSet = chosen.iter().copied().collect();
        let others = on_cycle.without(cycle[i]);
        for p in g.adj(cycle[i]).difference(on_cycle).iter() {
            if g.adj(p).is_disjoint(others) && g.adj(p).is_disjoint(used) && !used.contains(p) {
                chosen.push(p);
                if go(g, cycle, on_cycle, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::with_capacity(cycle.len());
    go(g, cycle, on_cycle, &mut chosen).then_some(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn search(g: &Graph, k_max: usize) -> Option<CoronaEmbedding> {
        contains_induced_corona_odd_cycle(g, k_max, &Limits::default()).unwrap()
    }

    #[test]
    fn coronas_are_found() {
        for k in 1..=3 {
            let g = corona_k1(&cycle(2 * k + 1).unwrap()).unwrap();
            let e = search(&g, 3).expect("pattern present");
            assert_eq!(e.k, k);
            assert!(e.is_valid_in(&g));
            assert_eq!(e.cycle[0], 0);
        }
    }

    #[test]
    fn k_max_bounds_the_cycle() {
        let g = corona_k1(&cycle(5).unwrap()).unwrap();
        assert!(search(&g, 1).is_none());
        assert!(search(&g, 2).is_some());
    }

    #[test]
    fn non_induced_is_rejected() {
        // chord between two pendants
        let mut g = corona_k1(&complete(3).unwrap()).unwrap();
        g = g.add_edge(3, 4).unwrap();
        assert!(search(&g, 3).is_none());
        // even cycles never qualify
        assert!(search(&corona_k1(&cycle(4).unwrap()).unwrap(), 3).is_none());
        assert!(search(&complete(6).unwrap(), 3).is_none());
    }

    #[test]
    fn parameter_checks() {
        let g = path(3).unwrap();
        let l = Limits::default();
        assert!(contains_induced_corona_odd_cycle(&g, 0, &l).is_err());
        assert!(contains_induced_corona_odd_cycle(&g, 4, &l).is_err());
        assert!(contains_induced_corona_odd_cycle(&path(21).unwrap(), 1, &l).is_err());
    }
}
