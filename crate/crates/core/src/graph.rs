//! Immutable simple undirected graphs on vertices `0..n`.
//!
//! Every derived graph (induced subgraph, vertex deletion, union, corona) is
//! a fresh value. Operations that drop or renumber vertices also return a
//! [`VertexMap`] so results can be reported in the caller's original ids.

use std::collections::VecDeque;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_ORDER};

/// A finite simple undirected graph with bitset adjacency.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    label: Option<String>,
}

/// Unordered edge in canonical `(u, v)` form with `u < v`.
pub type Edge = (usize, usize);

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph { adj: vec![VertexSet::EMPTY; n], label: None })
    }

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse into one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows, validating symmetry and
    /// the absence of loops.
    pub fn from_adjacency(adj: Vec<VertexSet>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        let all = VertexSet::full(n);
        for (v, row) in adj.iter().enumerate() {
            if let Some(bad) = row.difference(all).first() {
                return Err(Error::VertexOutOfRange { vertex: bad, order: n });
            }
            if row.contains(v) {
                return Err(Error::SelfLoop(v));
            }
            if let Some(u) = row.iter().find(|&u| !adj[u].contains(v)) {
                return Err(Error::InvalidParameter(format!("adjacency is not symmetric between {v} and {u}")));
            }
        }
        Ok(Graph { adj, label: None })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    /// Number of vertices, `n(G)`.
    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, `m(G)`.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges in canonical order: `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.difference(VertexSet::full(u + 1)).iter().map(move |v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// `N(v)`. Panics if `v` is out of range; see [`Graph::neighborhood`] for
    /// the checked form.
    #[inline]
    pub fn adj(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, order: self.order() })
        }
    }

    pub fn check_set(&self, set: VertexSet) -> Result<()> {
        match set.difference(self.vertices()).first() {
            Some(v) => Err(Error::VertexOutOfRange { vertex: v, order: self.order() }),
            None => Ok(()),
        }
    }

    /// `N(v)`.
    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// `N(A)`: vertices with at least one neighbour in `A`.
    pub fn neighborhood_set(&self, set: VertexSet) -> Result<VertexSet> {
        self.check_set(set)?;
        Ok(self.neighbors_of_set(set))
    }

    /// `N[A] = N(A) ∪ A`.
    pub fn closed_neighborhood_set(&self, set: VertexSet) -> Result<VertexSet> {
        Ok(self.neighborhood_set(set)?.union(set))
    }

    /// Unchecked `N(A)`.
    #[inline]
    pub fn neighbors_of_set(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    /// Whether no two members of `set` are adjacent (unchecked).
    #[inline]
    pub fn is_independent_unchecked(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.adj[v].is_empty()).collect()
    }

    /// `G[X]` together with the map from new to original ids. Vertices keep
    /// their relative order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_set(keep)?;
        let to_old = keep.to_vec();
        let mut to_new = vec![usize::MAX; self.order()];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = i;
        }
        let adj = to_old.iter().map(|&v| self.adj[v].intersection(keep).iter().map(|u| to_new[u]).collect()).collect();
        let g = Graph { adj, label: None };
        Ok((g, VertexMap { to_old, order_before: self.order() }))
    }

    /// `G − U`.
    pub fn delete_vertices(&self, removed: VertexSet) -> Result<(Graph, VertexMap)> {
        self.check_set(removed)?;
        self.induced_subgraph(self.vertices().difference(removed))
    }

    /// `G − F`, keeping every vertex. Every edge of `F` must be present.
    pub fn delete_edges<I>(&self, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = self.adj.clone();
        for (u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            if !self.has_edge(u, v) {
                return Err(Error::NotAnEdge(u.min(v), u.max(v)));
            }
            adj[u].remove(v);
            adj[v].remove(u);
        }
        Ok(Graph { adj, label: None })
    }

    /// Same vertex set with one more edge. Used by random generators.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u].insert(v);
        adj[v].insert(u);
        Ok(Graph { adj, label: None })
    }

    /// `G1 ∪ G2`; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order();
        let n = shift + other.order();
        if n > MAX_ORDER {
            return Err(Error::TooManyVertices(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|row| VertexSet::from_bits(row.bits() << shift)));
        Ok(Graph { adj, label: None })
    }

    /// `qG`: `q` disjoint copies, copy `i` occupying ids `i*n..(i+1)*n`.
    pub fn copies(&self, q: usize) -> Result<Graph> {
        if q == 0 {
            return Err(Error::InvalidParameter("number of copies must be at least 1".into()));
        }
        let mut g = self.clone().unlabeled();
        for _ in 1..q {
            g = g.disjoint_union(self)?;
        }
        Ok(g)
    }

    /// The corona `G ∘ {H_v}`: `G` keeps ids `0..n(G)`, then the copy of
    /// `H_0`, then `H_1`, and so on; each `v` is joined to all of its copy.
    pub fn corona(&self, family: &[Graph]) -> Result<Graph> {
        if family.len() != self.order() {
            return Err(Error::InvalidParameter(format!(
                "corona needs one graph per vertex: {} given for {} vertices",
                family.len(),
                self.order()
            )));
        }
        let mut g = self.clone().unlabeled();
        for (v, h) in family.iter().enumerate() {
            let start = g.order();
            g = g.disjoint_union(h)?;
            for w in start..g.order() {
                g.adj[v].insert(w);
                g.adj[w].insert(v);
            }
        }
        Ok(g)
    }

    /// `G ∘ H` with the same `H` at every vertex.
    pub fn corona_uniform(&self, h: &Graph) -> Result<Graph> {
        self.corona(&vec![h.clone(); self.order()])
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = (0..self.order()).map(|v| all.difference(self.adj[v]).without(v)).collect();
        Graph { adj, label: None }
    }

    fn unlabeled(mut self) -> Self {
        self.label = None;
        self
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// Components of `G[within]`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(start) = left.first() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighbors_of_set(frontier).intersection(within).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            left = left.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.components().len() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.is_connected() && self.size() + 1 == self.order()
    }

    /// Bipartiteness test by BFS 2-colouring. Each component is rooted at its
    /// smallest vertex, which goes to the left side; isolated vertices are
    /// therefore always on the left.
    pub fn bipartiteness(&self) -> Bipartiteness {
        self.bipartiteness_within(self.vertices())
    }

    /// Bipartiteness of `G[within]`, reported in the ids of `G`.
    pub fn bipartiteness_within(&self, within: VertexSet) -> Bipartiteness {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        for root in within.iter() {
            if color[root] != u8::MAX {
                continue;
            }
            color[root] = 0;
            left.insert(root);
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                for w in self.adj[v].intersection(within).iter() {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        parent[w] = v;
                        depth[w] = depth[v] + 1;
                        if color[w] == 0 {
                            left.insert(w);
                        } else {
                            right.insert(w);
                        }
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return Bipartiteness::OddCycle(odd_cycle(v, w, &parent, &depth));
                    }
                }
            }
        }
        Bipartiteness::Bipartite { left, right }
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartiteness(), Bipartiteness::Bipartite { .. })
    }

    /// `(left, right)` if bipartite.
    pub fn bipartition(&self) -> Option<(VertexSet, VertexSet)> {
        match self.bipartiteness() {
            Bipartiteness::Bipartite { left, right } => Some((left, right)),
            Bipartiteness::OddCycle(_) => None,
        }
    }

    /// Length of a shortest cycle.
    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(v) = queue.pop_front() {
                if 2 * dist[v] + 1 >= best {
                    break;
                }
                for w in self.adj[v].iter() {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue.push_back(w);
                    } else if parent[v] != w {
                        best = best.min(dist[v] + dist[w] + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// The unique cycle of a connected graph with `m = n`, listed from its
    /// smallest vertex towards the smaller of that vertex's two cycle
    /// neighbours. `None` for every other graph.
    pub fn unique_cycle(&self) -> Option<Vec<usize>> {
        let n = self.order();
        if n < 3 || self.size() != n || !self.is_connected() {
            return None;
        }
        // strip leaves until only the cycle remains
        let mut alive = self.vertices();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        while let Some(v) = stack.pop() {
            alive.remove(v);
            for w in self.adj[v].intersection(alive).iter() {
                deg[w] -= 1;
                if deg[w] == 1 {
                    stack.push(w);
                }
            }
        }
        let start = alive.first()?;
        let mut cycle = vec![start];
        let mut prev = start;
        let mut cur = self.adj[start].intersection(alive).first()?;
        while cur != start {
            cycle.push(cur);
            let next = self.adj[cur].intersection(alive).without(prev).first()?;
            prev = cur;
            cur = next;
        }
        Some(cycle)
    }

    pub fn is_unicyclic(&self) -> bool {
        self.unique_cycle().is_some()
    }

    /// Renders the graph as a DOT `graph`. Each highlighted set gets its own
    /// fill colour; a vertex in several sets takes the colour of the first.
    pub fn to_dot(&self, highlights: &[(&str, VertexSet)]) -> String {
        const PALETTE: [&str; 6] = ["lightblue", "salmon", "palegreen", "khaki", "plum", "lightgray"];
        let mut out = String::from("graph G {\n");
        for (i, (name, set)) in highlights.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            out.push_str(&format!("  // {name}: {set}\n"));
            for v in set.iter().filter(|&v| v < self.order()) {
                if highlights[..i].iter().any(|(_, s)| s.contains(v)) {
                    continue;
                }
                out.push_str(&format!("  {v} [style=filled, fillcolor={color}];\n"));
            }
        }
        for v in 0..self.order() {
            if self.adj[v].is_empty() && !highlights.iter().any(|(_, s)| s.contains(v)) {
                out.push_str(&format!("  {v};\n"));
            }
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

fn odd_cycle(v: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    // climb both endpoints of the offending edge to their lowest common ancestor
    let (mut a, mut b) = (v, w);
    let mut path_a = vec![a];
    let mut path_b = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        path_a.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        path_b.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        path_a.push(a);
        path_b.push(b);
    }
    path_b.pop();
    path_a.extend(path_b.into_iter().rev());
    path_a
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.adj.hash(state);
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<Edge> = self.edges().collect();
        let mut s = f.debug_struct("Graph");
        if let Some(label) = &self.label {
            s.field("label", label);
        }
        s.field("n", &self.order()).field("edges", &edges).finish()
    }
}

/// Outcome of a bipartiteness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite {
        left: VertexSet,
        right: VertexSet,
    },
    /// Vertices of an odd cycle, in cyclic order.
    OddCycle(Vec<usize>),
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Girth::Finite(g) => g >= k,
            Girth::Infinite => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl serde::Serialize for Girth {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Map from the ids of a derived graph back to the ids of its source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    to_old: Vec<usize>,
    order_before: usize,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        VertexMap { to_old: (0..n).collect(), order_before: n }
    }

    #[inline]
    pub fn old(&self, new: usize) -> usize {
        self.to_old[new]
    }

    pub fn new_id(&self, old: usize) -> Option<usize> {
        self.to_old.binary_search(&old).ok()
    }

    pub fn old_set(&self, set: VertexSet) -> VertexSet {
        set.iter().map(|v| self.to_old[v]).collect()
    }

    /// Members of `set` that survive, renumbered.
    pub fn new_set(&self, set: VertexSet) -> VertexSet {
        set.iter().filter_map(|v| self.new_id(v)).collect()
    }

    pub fn old_edge(&self, (u, v): Edge) -> Edge {
        let (a, b) = (self.to_old[u], self.to_old[v]);
        (a.min(b), a.max(b))
    }

    pub fn len(&self) -> usize {
        self.to_old.len()
    }

    pub fn is_empty(&self) -> bool {
        self.to_old.is_empty()
    }

    pub fn source_order(&self) -> usize {
        self.order_before
    }
}
