//! Family instances for `generate`, described by a token list such as
//! `corona-k1 cycle 5`.

use dismis_core::generators::*;
use dismis_core::io::small_graph_catalog;
use dismis_core::{Error, Graph, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const FAMILIES: &str = "path N | cycle N | complete N | empty N | complete-bipartite P Q | star P | \
friendship Q | spider P | matching Q | trees N | catalog N | random-tree N | random-unicyclic N | \
gnp N P | corona-k1 FAMILY.. | corona-k2 FAMILY.. | complement FAMILY..";

struct Tokens<'a> {
    items: &'a [String],
    pos: usize,
}

impl Tokens<'_> {
    fn next(&mut self, what: &str) -> Result<&str> {
        let t = self.items.get(self.pos).ok_or_else(|| bad(format!("missing {what}")))?;
        self.pos += 1;
        Ok(t)
    }

    fn usize(&mut self, what: &str) -> Result<usize> {
        let t = self.next(what)?;
        t.parse().map_err(|_| bad(format!("{what} must be a non-negative integer, got `{t}`")))
    }

    fn f64(&mut self, what: &str) -> Result<f64> {
        let t = self.next(what)?;
        t.parse().map_err(|_| bad(format!("{what} must be a number, got `{t}`")))
    }
}

fn bad(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

/// Builds every instance named by `tokens`. Random families draw `count`
/// graphs from `seed`.
pub fn generate(tokens: &[String], count: usize, seed: u64) -> Result<Vec<Graph>> {
    let mut t = Tokens { items: tokens, pos: 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let graphs = family(&mut t, count, &mut rng)?;
    if t.pos != tokens.len() {
        return Err(bad(format!("unexpected argument `{}`", tokens[t.pos])));
    }
    Ok(graphs)
}

fn family(t: &mut Tokens<'_>, count: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Graph>> {
    let name = t.next("family name")?.to_string();
    let one = |g: Result<Graph>| g.map(|g| vec![g]);
    match name.as_str() {
        "path" => one(path(t.usize("n")?)),
        "cycle" => one(cycle(t.usize("n")?)),
        "complete" => one(complete(t.usize("n")?)),
        "empty" => one(Graph::empty(t.usize("n")?)),
        "complete-bipartite" => {
            let p = t.usize("p")?;
            one(complete_bipartite(p, t.usize("q")?))
        }
        "star" => one(star(t.usize("p")?)),
        "friendship" => one(friendship(t.usize("q")?)),
        "spider" => one(spider(t.usize("p")?)),
        "matching" => one(matching_graph(t.usize("q")?)),
        "trees" => Ok(all_labeled_trees(t.usize("n")?).collect()),
        "catalog" => {
            let nmax = t.usize("nmax")?;
            Ok(small_graph_catalog().into_iter().filter(|g| g.order() <= nmax).collect())
        }
        "random-tree" => {
            let n = t.usize("n")?;
            (0..count).map(|_| random_tree(n, rng)).collect()
        }
        "random-unicyclic" => {
            let n = t.usize("n")?;
            (0..count).map(|_| random_unicyclic(n, rng)).collect()
        }
        "gnp" => {
            let n = t.usize("n")?;
            let p = t.f64("p")?;
            (0..count).map(|_| random_gnp(n, p, rng)).collect()
        }
        "corona-k1" => family(t, count, rng)?.iter().map(corona_k1).collect(),
        "corona-k2" => {
            let k2 = complete(2)?;
            family(t, count, rng)?.iter().map(|g| g.corona_uniform(&k2)).collect()
        }
        "complement" => Ok(family(t, count, rng)?.iter().map(Graph::complement).collect()),
        other => Err(bad(format!("unknown family `{other}`; expected one of: {FAMILIES}"))),
    }
}
