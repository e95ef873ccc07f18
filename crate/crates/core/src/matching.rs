//! Exact maximum matchings.
//!
//! `μ(G)` comes from Edmonds' blossom algorithm for general graphs and
//! Hopcroft–Karp on bipartite inputs. Functions that return a [`Matching`]
//! return the lexicographically smallest maximum matching under the canonical
//! edge order, found by fixing edges greedily and re-checking the matching
//! number of what is left.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, Edge, Graph};
use crate::vertex_set::VertexSet;

const NONE: usize = usize::MAX;

/// A set of pairwise non-incident edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<Edge>", try_from = "Vec<Edge>")]
pub struct Matching {
    edges: Vec<Edge>,
    saturated: VertexSet,
}

impl Matching {
    pub fn empty() -> Self {
        Matching { edges: Vec::new(), saturated: VertexSet::EMPTY }
    }

    /// Validates that no vertex is used twice; edges are canonicalised and
    /// sorted.
    pub fn from_edges<I: IntoIterator<Item = Edge>>(edges: I) -> Result<Self> {
        let mut saturated = VertexSet::EMPTY;
        let mut out = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if u >= 64 || v >= 64 {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), order: 64 });
            }
            if saturated.contains(u) || saturated.contains(v) {
                return Err(Error::InvalidParameter(format!("edges are not pairwise disjoint at {{{u},{v}}}")));
            }
            saturated.insert(u);
            saturated.insert(v);
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { edges: out, saturated })
    }

    fn from_mates(mate: &[usize]) -> Self {
        let edges = (0..mate.len()).filter(|&v| mate[v] != NONE && v < mate[v]).map(|v| (v, mate[v]));
        Matching::from_edges(edges).expect("mate array is symmetric")
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `V(M)`.
    pub fn saturated(&self) -> VertexSet {
        self.saturated
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.edges.iter().find_map(|&(a, b)| match v {
            _ if v == a => Some(b),
            _ if v == b => Some(a),
            _ => None,
        })
    }

    /// Checks that every edge belongs to `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        for &(u, v) in &self.edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if !g.has_edge(u, v) {
                return Err(Error::NotAnEdge(u, v));
            }
        }
        Ok(())
    }

    pub fn is_perfect_in(&self, g: &Graph) -> bool {
        self.saturated == g.vertices()
    }

    /// Whether every vertex of `a` is matched to a vertex of `b`.
    pub fn matches_into(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().all(|v| self.mate(v).is_some_and(|w| b.contains(w)))
    }

    /// Renumbers the endpoints through `f`.
    pub fn map_vertices(&self, f: impl Fn(usize) -> usize) -> Matching {
        Matching::from_edges(self.edges.iter().map(|&(u, v)| (f(u), f(v)))).expect("relabelling is injective")
    }
}

impl From<Matching> for Vec<Edge> {
    fn from(m: Matching) -> Self {
        m.edges
    }
}

impl TryFrom<Vec<Edge>> for Matching {
    type Error = Error;

    fn try_from(edges: Vec<Edge>) -> Result<Self> {
        Matching::from_edges(edges)
    }
}

// ---------------------------------------------------------------------------
// Edmonds' blossom algorithm

struct Blossom<'g> {
    g: &'g Graph,
    active: VertexSet,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph, active: VertexSet) -> Self {
        let n = g.order();
        Blossom {
            g,
            active,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn run(mut self) -> Vec<usize> {
        for v in self.active.iter() {
            if self.mate[v] == NONE {
                if let Some(u) = self.g.adj(v).intersection(self.active).iter().find(|&u| self.mate[u] == NONE) {
                    self.mate[v] = u;
                    self.mate[u] = v;
                }
            }
        }
        for root in self.active.iter() {
            if self.mate[root] == NONE {
                if let Some(end) = self.find_augmenting_path(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }

    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = VertexSet::EMPTY;
        loop {
            a = self.base[a];
            seen.insert(a);
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen.contains(b) {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for to in self.g.adj(v).intersection(self.active).iter() {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in self.active.iter() {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push_back(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

/// `μ(G[active])`.
pub fn matching_number_within(g: &Graph, active: VertexSet) -> usize {
    let mate = Blossom::new(g, active).run();
    mate.iter().filter(|&&m| m != NONE).count() / 2
}

/// `μ(G)`.
pub fn matching_number(g: &Graph) -> usize {
    matching_number_within(g, g.vertices())
}

/// Some maximum matching of `G[active]` (the one blossom finds first).
pub fn any_maximum_matching_within(g: &Graph, active: VertexSet) -> Matching {
    Matching::from_mates(&Blossom::new(g, active).run())
}

/// The lexicographically smallest maximum matching of `G`.
pub fn max_matching_general(g: &Graph) -> Matching {
    lex_min_matching(g, g.vertices(), |active| matching_number_within(g, active))
}

fn lex_min_matching(g: &Graph, active: VertexSet, mu: impl Fn(VertexSet) -> usize) -> Matching {
    let mut remaining = active;
    let mut need = mu(remaining);
    let mut chosen = Vec::with_capacity(need);
    for (u, v) in g.edges() {
        if need == 0 {
            break;
        }
        if !remaining.contains(u) || !remaining.contains(v) {
            continue;
        }
        let rest = remaining.without(u).without(v);
        if mu(rest) + 1 == need {
            chosen.push((u, v));
            remaining = rest;
            need -= 1;
        }
    }
    Matching::from_edges(chosen).expect("greedy choice keeps edges disjoint")
}

// ---------------------------------------------------------------------------
// Hopcroft–Karp

/// Maximum matching between `left` and `right` using only edges of `g` that
/// cross between them. Returns the mate array.
fn hopcroft_karp(g: &Graph, left: VertexSet, right: VertexSet) -> Vec<usize> {
    let n = g.order();
    let mut mate = vec![NONE; n];
    let mut dist = vec![usize::MAX; n];
    loop {
        // BFS layering from free left vertices
        let mut queue = VecDeque::new();
        for u in left.iter() {
            if mate[u] == NONE {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(u) = queue.pop_front() {
            for w in g.adj(u).intersection(right).iter() {
                match mate[w] {
                    NONE => found = true,
                    m if dist[m] == usize::MAX => {
                        dist[m] = dist[u] + 1;
                        queue.push_back(m);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            return mate;
        }
        for u in left.iter() {
            if mate[u] == NONE {
                hk_dfs(g, u, right, &mut mate, &mut dist);
            }
        }
    }
}

fn hk_dfs(g: &Graph, u: usize, right: VertexSet, mate: &mut [usize], dist: &mut [usize]) -> bool {
    for w in g.adj(u).intersection(right).iter() {
        let m = mate[w];
        if m == NONE || (dist[m] == dist[u] + 1 && hk_dfs(g, m, right, mate, dist)) {
            mate[u] = w;
            mate[w] = u;
            return true;
        }
    }
    dist[u] = usize::MAX;
    false
}

fn hk_size(g: &Graph, left: VertexSet, right: VertexSet) -> usize {
    let mate = hopcroft_karp(g, left, right);
    left.iter().filter(|&u| mate[u] != NONE).count()
}

/// A maximum matching between two disjoint sets using only crossing edges.
pub(crate) fn bipartite_mates_matching(g: &Graph, left: VertexSet, right: VertexSet) -> Matching {
    let mate = hopcroft_karp(g, left, right);
    Matching::from_edges(left.iter().filter(|&u| mate[u] != NONE).map(|u| (u.min(mate[u]), u.max(mate[u]))))
        .expect("mate array is a matching")
}

fn check_bipartition(g: &Graph, left: VertexSet, right: VertexSet) -> Result<()> {
    g.check_set(left.union(right))?;
    if !left.is_disjoint(right) || left.union(right) != g.vertices() {
        return Err(Error::precondition("bipartition sides must partition the vertex set"));
    }
    if !g.is_independent_unchecked(left) || !g.is_independent_unchecked(right) {
        return Err(Error::precondition("bipartition side contains an edge"));
    }
    Ok(())
}

/// The lexicographically smallest maximum matching of a bipartite graph
/// with the given sides, via Hopcroft–Karp.
pub fn max_matching_bipartite(g: &Graph, left: VertexSet, right: VertexSet) -> Result<Matching> {
    check_bipartition(g, left, right)?;
    Ok(lex_min_matching(g, g.vertices(), |active| hk_size(g, left.intersection(active), right.intersection(active))))
}

/// `μ(G)` for a bipartite graph with the given sides.
pub fn matching_number_bipartite(g: &Graph, left: VertexSet, right: VertexSet) -> Result<usize> {
    check_bipartition(g, left, right)?;
    Ok(hk_size(g, left, right))
}

/// A perfect matching if one exists.
pub fn has_perfect_matching(g: &Graph) -> Option<Matching> {
    let n = g.order();
    if n % 2 == 1 {
        return None;
    }
    let mu = match g.bipartiteness() {
        Bipartiteness::Bipartite { left, right } => hk_size(g, left, right),
        Bipartiteness::OddCycle(_) => matching_number(g),
    };
    (2 * mu == n).then(|| max_matching_general(g))
}

/// A matching that saturates `a`, using only edges between `a` and `b`.
pub fn match_into(g: &Graph, a: VertexSet, b: VertexSet) -> Result<Option<Matching>> {
    g.check_set(a.union(b))?;
    if !a.is_disjoint(b) {
        return Err(Error::precondition("match_into needs disjoint sets"));
    }
    if a.len() > b.len() || hk_size(g, a, b) < a.len() {
        return Ok(None);
    }
    // lexicographic minimisation restricted to a-b edges
    let mut remaining = a.union(b);
    let mut chosen = Vec::new();
    let mut need = a.len();
    for (u, v) in g.edges() {
        if need == 0 {
            break;
        }
        let crossing = (a.contains(u) && b.contains(v)) || (a.contains(v) && b.contains(u));
        if !crossing || !remaining.contains(u) || !remaining.contains(v) {
            continue;
        }
        let rest = remaining.without(u).without(v);
        if hk_size(g, a.intersection(rest), b.intersection(rest)) + 1 == need {
            chosen.push((u, v));
            remaining = rest;
            need -= 1;
        }
    }
    Matching::from_edges(chosen).map(Some)
}

/// Why a forest has no perfect matching.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ForestObstruction {
    /// A component with an odd number of vertices.
    OddComponent { vertices: VertexSet },
    /// Matching `leaf` to its only neighbour `support` (forced) left
    /// `vertex` with no unmatched neighbour.
    Stranded { vertex: usize, leaf: usize, support: usize },
}

/// Result of the greedy leaf matching on a forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ForestMatching {
    Perfect(Matching),
    Blocked(ForestObstruction),
}

impl ForestMatching {
    pub fn matching(&self) -> Option<&Matching> {
        match self {
            ForestMatching::Perfect(m) => Some(m),
            ForestMatching::Blocked(_) => None,
        }
    }
}

/// Perfect matching of a forest by repeatedly matching the smallest leaf to
/// its neighbour. Linear in the number of edges up to the leaf scan.
pub fn forest_perfect_matching(g: &Graph) -> Result<ForestMatching> {
    if !g.is_forest() {
        return Err(Error::precondition("forest_perfect_matching needs an acyclic graph"));
    }
    if let Some(odd) = g.components().into_iter().find(|c| c.len() % 2 == 1) {
        return Ok(ForestMatching::Blocked(ForestObstruction::OddComponent { vertices: odd }));
    }
    let mut remaining = g.vertices();
    let mut edges = Vec::with_capacity(g.order() / 2);
    while !remaining.is_empty() {
        let leaf = remaining
            .iter()
            .find(|&v| g.adj(v).intersection(remaining).len() == 1)
            .expect("a forest without isolated vertices has a leaf");
        let support = g.adj(leaf).intersection(remaining).first().expect("leaf has a neighbour");
        remaining = remaining.without(leaf).without(support);
        edges.push((leaf, support));
        if let Some(vertex) = g.adj(support).intersection(remaining).iter().find(|&w| g.adj(w).is_disjoint(remaining)) {
            return Ok(ForestMatching::Blocked(ForestObstruction::Stranded { vertex, leaf, support }));
        }
    }
    Ok(ForestMatching::Perfect(Matching::from_edges(edges)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    /// Exhaustive maximum matching size.
    fn brute_mu(g: &Graph, free: VertexSet) -> usize {
        let Some(v) = free.first() else { return 0 };
        let rest = free.without(v);
        let mut best = brute_mu(g, rest);
        for u in g.adj(v).intersection(rest).iter() {
            best = best.max(1 + brute_mu(g, rest.without(u)));
        }
        best
    }

    #[test]
    fn bipartite_examples() {
        let sides = |g: &Graph| g.bipartition().unwrap();
        let c6 = cycle(6).unwrap();
        let (l, r) = sides(&c6);
        assert_eq!(max_matching_bipartite(&c6, l, r).unwrap().len(), 3);
        let k23 = complete_bipartite(2, 3).unwrap();
        let (l, r) = sides(&k23);
        assert_eq!(max_matching_bipartite(&k23, l, r).unwrap().len(), 2);
        let p5 = path(5).unwrap();
        let (l, r) = sides(&p5);
        let m = max_matching_bipartite(&p5, l, r).unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert!(max_matching_bipartite(&p5, l, VertexSet::EMPTY).is_err());
        assert!(max_matching_bipartite(&p5, VertexSet::from([0, 1, 4]), VertexSet::from([2, 3])).is_err());
    }

    #[test]
    fn general_examples() {
        // brute force confirms these sizes
        for (g, mu) in [(cycle(5).unwrap(), 2), (complete(4).unwrap(), 2), (friendship(2).unwrap(), 2)] {
            assert_eq!(brute_mu(&g, g.vertices()), mu);
            let m = max_matching_general(&g);
            m.validate(&g).unwrap();
            assert_eq!(m.len(), mu);
            assert_eq!(matching_number(&g), mu);
        }
        assert_eq!(max_matching_general(&complete(4).unwrap()).edges(), &[(0, 1), (2, 3)]);
    }

    #[test]
    fn petersen_needs_blossoms() {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let g = Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap();
        assert_eq!(matching_number(&g), 5);
        assert!(has_perfect_matching(&g).is_some());
    }

    #[test]
    fn perfect_matching_examples() {
        assert!(has_perfect_matching(&cycle(6).unwrap()).is_some());
        assert!(has_perfect_matching(&cycle(5).unwrap()).is_none());
        assert_eq!(has_perfect_matching(&path(4).unwrap()).unwrap().edges(), &[(0, 1), (2, 3)]);
        assert!(has_perfect_matching(&Graph::empty(0).unwrap()).is_some());
    }

    #[test]
    fn forest_examples() {
        let p4 = forest_perfect_matching(&path(4).unwrap()).unwrap();
        assert_eq!(p4.matching().unwrap().edges(), &[(0, 1), (2, 3)]);
        assert!(matches!(
            forest_perfect_matching(&path(3).unwrap()).unwrap(),
            ForestMatching::Blocked(ForestObstruction::OddComponent { .. })
        ));
        // K_{1,3} plus an isolated vertex: even components overall, but the
        // star itself is odd
        let star_k1 = star(3).unwrap().disjoint_union(&complete(1).unwrap()).unwrap();
        assert!(forest_perfect_matching(&star_k1).unwrap().matching().is_none());
        // even tree where leaves 1 and 2 compete for the centre
        let g = Graph::from_edges(6, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5)]).unwrap();
        match forest_perfect_matching(&g).unwrap() {
            ForestMatching::Blocked(ForestObstruction::Stranded { vertex, leaf, support }) => {
                assert_eq!((vertex, leaf, support), (2, 1, 0));
            }
            other => panic!("expected stranded vertex, got {other:?}"),
        }
        assert!(forest_perfect_matching(&cycle(4).unwrap()).is_err());
    }

    #[test]
    fn match_into_examples() {
        let c4 = cycle(4).unwrap();
        assert!(match_into(&c4, VertexSet::from([0, 2]), VertexSet::from([1, 3])).unwrap().is_some());
        let k13 = star(3).unwrap();
        assert!(match_into(&k13, VertexSet::from([1, 2, 3]), VertexSet::from([0])).unwrap().is_none());
        let p4 = path(4).unwrap();
        let m = match_into(&p4, VertexSet::from([0, 3]), VertexSet::from([1, 2])).unwrap().unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert!(m.matches_into(VertexSet::from([0, 3]), VertexSet::from([1, 2])));
        assert!(match_into(&p4, VertexSet::from([0, 1]), VertexSet::from([1, 2])).is_err());
        // edges inside B must not be used
        let k3 = complete(3).unwrap();
        assert!(match_into(&k3, VertexSet::EMPTY, VertexSet::from([1, 2])).unwrap().unwrap().is_empty());
    }

    #[test]
    fn matching_validation() {
        assert!(Matching::from_edges([(0, 1), (1, 2)]).is_err());
        let m = Matching::from_edges([(3, 2), (0, 1)]).unwrap();
        assert_eq!(m.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(m.mate(3), Some(2));
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[0,1],[2,3]]");
        assert!(serde_json::from_str::<Matching>("[[0,1],[1,2]]").is_err());
        assert!(m.validate(&path(4).unwrap()).is_ok());
        assert_eq!(m.validate(&path(3).unwrap()), Err(Error::VertexOutOfRange { vertex: 3, order: 3 }));
        assert_eq!(m.validate(&Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap()), Err(Error::NotAnEdge(2, 3)));
    }
}
