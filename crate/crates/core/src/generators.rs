//! Named graph families with fixed vertex numbering, plus random generators.
//!
//! Numbering conventions:
//! - `path(n)`: edges `i, i+1`.
//! - `cycle(n)`: the path plus `n-1, 0`.
//! - `complete_bipartite(p, q)`: sides `0..p` and `p..p+q`.
//! - `star(p)` = `K_{1,p}` with centre `0`.
//! - `friendship(q)` = `K_1 ∘ qK_2`: centre `0`, triangles `{0, 2i+1, 2i+2}`.
//! - `spider(p)`: `K_{1,p}` (centre `0`, legs `1..=p`) with a pendant
//!   `p+i` attached to leg `i`.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

fn at_least(name: &str, value: usize, min: usize) -> Result<()> {
    if value < min {
        Err(Error::InvalidParameter(format!("{name} must be at least {min}, got {value}")))
    } else {
        Ok(())
    }
}

pub fn path(n: usize) -> Result<Graph> {
    at_least("path order", n, 1)?;
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle order", n, 3)?;
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("clique order", n, 1)?;
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    at_least("p", p, 1)?;
    at_least("q", q, 1)?;
    Graph::from_edges(p + q, (0..p).flat_map(|u| (p..p + q).map(move |v| (u, v))))
}

pub fn star(p: usize) -> Result<Graph> {
    complete_bipartite(1, p)
}

pub fn friendship(q: usize) -> Result<Graph> {
    at_least("q", q, 1)?;
    complete(1)?.corona(&[complete(2)?.copies(q)?])
}

pub fn spider(p: usize) -> Result<Graph> {
    at_least("p", p, 1)?;
    let legs = (1..=p).map(|i| (0, i));
    let feet = (1..=p).map(|i| (i, p + i));
    Graph::from_edges(2 * p + 1, legs.chain(feet))
}

/// `αK_2`-style perfect matching graph `qK_2`.
pub fn matching_graph(q: usize) -> Result<Graph> {
    complete(2)?.copies(q)
}

/// `G ∘ K_1`.
pub fn corona_k1(g: &Graph) -> Result<Graph> {
    g.corona_uniform(&complete(1)?)
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a labelled
/// tree on `n` vertices.
pub fn tree_from_pruefer(n: usize, seq: &[usize]) -> Result<Graph> {
    if n == 1 && seq.is_empty() {
        return Graph::empty(1);
    }
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidParameter(format!(
            "a Prüfer sequence for {n} vertices has length {}",
            n.saturating_sub(2)
        )));
    }
    if let Some(&bad) = seq.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: bad, order: n });
    }
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let leaf = (0..n).find(|&u| degree[u] == 1).expect("a leaf always exists");
        edges.push((leaf, v));
        degree[leaf] -= 1;
        degree[v] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&u| degree[u] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges)
}

/// Every labelled tree on `n` vertices, one per Prüfer sequence.
pub fn all_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let len = n.saturating_sub(2);
    let total = if n <= 2 { 1 } else { n.pow(len as u32) };
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut() {
            *slot = code % n;
            code /= n;
        }
        tree_from_pruefer(n.max(1), &seq).expect("valid sequence")
    })
}

/// Uniform random labelled tree.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    at_least("tree order", n, 1)?;
    if n <= 2 {
        return path(n);
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    tree_from_pruefer(n, &seq)
}

/// Random unicyclic graph: a uniform random labelled tree plus one uniformly
/// chosen non-edge.
pub fn random_unicyclic<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<Graph> {
    at_least("unicyclic order", n, 3)?;
    let tree = random_tree(n, rng)?;
    let non_edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !tree.has_edge(u, v)).collect();
    let &(u, v) = non_edges.choose(rng).expect("a tree on 3+ vertices has a non-edge");
    tree.add_edge(u, v)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Random forest: each vertex `v > 0` attaches to a uniformly chosen earlier
/// vertex with probability `attach`.
pub fn random_forest<R: Rng + ?Sized>(n: usize, attach: f64, rng: &mut R) -> Result<Graph> {
    let mut edges = Vec::new();
    for v in 1..n {
        if rng.gen_bool(attach) {
            edges.push((rng.gen_range(0..v), v));
        }
    }
    Graph::from_edges(n, edges)
}

/// Every graph obtained from `g` by adding one new vertex (id `g.order()`)
/// adjacent to some subset of the existing vertices.
pub fn one_vertex_extensions(g: &Graph) -> impl Iterator<Item = Graph> + '_ {
    let n = g.order();
    crate::vertex_set::all_subsets(g.vertices()).map(move |nbrs| {
        let mut adj: Vec<VertexSet> =
            (0..n).map(|v| if nbrs.contains(v) { g.adj(v).with(n) } else { g.adj(v) }).collect();
        adj.push(nbrs);
        Graph::from_adjacency(adj).expect("extension of a valid graph")
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_sizes() {
        assert_eq!(cycle(4).unwrap().size(), 4);
        assert_eq!(complete_bipartite(2, 3).unwrap().size(), 6);
        // K_1 ∘ 2K_2: 2 edges inside the copies plus 4 spokes
        let f2 = friendship(2).unwrap();
        assert_eq!((f2.order(), f2.size()), (5, 6));
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert_eq!(star(3).unwrap().degree(0), 3);
        let sp = spider(3).unwrap();
        assert!(sp.is_tree());
        assert_eq!(sp.order(), 7);
    }

    #[test]
    fn pruefer_counts_match_cayley() {
        for n in 1..=6usize {
            let trees: Vec<Graph> = all_labeled_trees(n).collect();
            let expected = if n <= 2 { 1 } else { n.pow(n as u32 - 2) };
            assert_eq!(trees.len(), expected);
            assert!(trees.iter().all(Graph::is_tree));
            let distinct: std::collections::HashSet<_> = trees.iter().cloned().collect();
            assert_eq!(distinct.len(), expected, "Prüfer decoding must be injective at n={n}");
        }
    }

    #[test]
    fn random_unicyclic_is_unicyclic() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 3..=14 {
            for _ in 0..20 {
                assert!(random_unicyclic(n, &mut rng).unwrap().is_unicyclic());
            }
        }
    }

    #[test]
    fn extensions_cover_all_neighbourhoods() {
        let ext: Vec<Graph> = one_vertex_extensions(&path(3).unwrap()).collect();
        assert_eq!(ext.len(), 8);
        assert!(ext.iter().all(|g| g.order() == 4));
        assert_eq!(ext.iter().filter(|g| g.degree(3) == 3).count(), 1);
    }
}
