//! Seeded inputs shared by the benchmarks in `benches/`.

use dismis_core::generators::{random_gnp, random_unicyclic};
use dismis_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed;

pub fn gnp_sample(n: usize, p: f64, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    (0..count).map(|_| random_gnp(n, p, &mut rng).expect("valid order")).collect()
}

pub fn unicyclic_sample(n: usize, count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ n as u64);
    (0..count).map(|_| random_unicyclic(n, &mut rng).expect("valid order")).collect()
}

/// A random bipartite graph with sides `0..l` and `l..l + r`.
pub fn bipartite_sample(l: usize, r: usize, p: f64, count: usize) -> Vec<Graph> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (l * 64 + r) as u64);
    (0..count)
        .map(|_| {
            let edges: Vec<(usize, usize)> =
                (0..l).flat_map(|u| (l..l + r).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
            Graph::from_edges(l + r, edges).expect("valid edges")
        })
        .collect()
}
