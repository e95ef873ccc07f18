//! Acceptance criteria 1 to 12. Every criterion is checked against brute-force
//! oracles defined in this file and prints one pass/fail line.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use dismis_core::families::{conjecture_search, unicyclic_two_disjoint_mis, FamilySpec};
use dismis_core::generators::*;
use dismis_core::independence::{
    berge_verify, equivalence_suite, has_two_disjoint_maximal_is, independence_number, is_konig_egervary,
    is_very_well_covered, is_well_covered, omega_family,
};
use dismis_core::io::{encode_graph6, small_graph_catalog};
use dismis_core::matching::max_matching_general;
use dismis_core::verify::{self, Suite, VerifyConfig};
use dismis_core::vertex_classes::{shedding_powerset_witnesses, shedding_vertices};
use dismis_core::{has_two_disjoint_mis, Graph, Limits, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20_240_601;

// ---- oracles over plain bitmasks ----

fn masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.order()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

fn to_mask(s: VertexSet) -> u64 {
    s.iter().fold(0, |m, v| m | 1 << v)
}

fn independent(adj: &[u64], s: u64) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

fn independent_sets(adj: &[u64]) -> Vec<u64> {
    (0..1u64 << adj.len()).filter(|&s| independent(adj, s)).collect()
}

/// `α` and every maximum independent set, ascending as integers.
fn oracle_omega(adj: &[u64]) -> (usize, Vec<u64>) {
    let sets = independent_sets(adj);
    let alpha = sets.iter().map(|s| s.count_ones() as usize).max().unwrap_or(0);
    (alpha, sets.into_iter().filter(|s| s.count_ones() as usize == alpha).collect())
}

fn oracle_maximal(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    independent_sets(adj).into_iter().filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || adj[v] & s != 0)).collect()
}

/// A set may pair with itself, which only happens for the empty set of `K_0`.
fn any_disjoint(sets: &[u64]) -> bool {
    sets.iter().enumerate().any(|(i, a)| sets[i..].iter().any(|b| a & b == 0))
}

fn oracle_two_disjoint_mis(adj: &[u64]) -> bool {
    any_disjoint(&oracle_omega(adj).1)
}

fn oracle_mu(adj: &[u64]) -> usize {
    fn go(adj: &[u64], rest: u64, memo: &mut HashMap<u64, usize>) -> usize {
        if rest == 0 {
            return 0;
        }
        if let Some(&m) = memo.get(&rest) {
            return m;
        }
        let v = rest.trailing_zeros() as usize;
        let without = rest & !(1 << v);
        let mut best = go(adj, without, memo);
        let mut cand = adj[v] & without;
        while cand != 0 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            best = best.max(1 + go(adj, without & !(1 << u), memo));
        }
        memo.insert(rest, best);
        best
    }
    go(adj, (1u64 << adj.len()) - 1, &mut HashMap::new())
}

fn oracle_bipartite(adj: &[u64]) -> bool {
    let full = (1u64 << adj.len()) - 1;
    (0..=full).any(|l| independent(adj, l) && independent(adj, full & !l))
}

fn oracle_well_covered(adj: &[u64]) -> bool {
    let maximal = oracle_maximal(adj);
    maximal.iter().all(|s| s.count_ones() == maximal[0].count_ones())
}

/// `v` sheds when every independent set outside `N[v]` misses some
/// neighbour of `v` entirely.
fn oracle_shedding(adj: &[u64]) -> u64 {
    let n = adj.len();
    let sets = independent_sets(adj);
    (0..n)
        .filter(|&v| {
            let closed = adj[v] | 1 << v;
            sets.iter().filter(|&&s| s & closed == 0).all(|&s| {
                let mut nb = adj[v];
                let mut ok = false;
                while nb != 0 {
                    let u = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    ok |= adj[u] & s == 0;
                }
                ok
            })
        })
        .fold(0, |m, v| m | 1 << v)
}

// ---- graph sources ----

fn catalog() -> Vec<Graph> {
    small_graph_catalog()
}

fn random_order8(count: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| {
            let p = rng.gen_range(0.1..0.9);
            random_gnp(8, p, &mut rng).unwrap()
        })
        .collect()
}

/// Every graph on eight vertices up to isomorphism appears among the
/// one-vertex extensions of the seven-vertex catalog.
fn order8_extensions() -> Vec<Graph> {
    catalog().iter().filter(|g| g.order() == 7).flat_map(one_vertex_extensions).collect()
}

// ---- reporting ----

struct Outcome {
    failures: Vec<String>,
    note: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { failures: Vec::new(), note: String::new() }
    }

    fn require(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            self.failures.push(what());
        }
    }
}

fn criterion(id: u32, title: &str, budget: Option<Duration>, f: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut o = Outcome::new();
    f(&mut o);
    let elapsed = start.elapsed();
    if let Some(b) = budget {
        o.require(elapsed <= b, || format!("took {elapsed:.1?}, budget {b:.0?}"));
    }
    let pass = o.failures.is_empty();
    println!(
        "criterion {id:>2} {}: {title} ({elapsed:.1?}{}{})",
        if pass { "PASS" } else { "FAIL" },
        if o.note.is_empty() { "" } else { "; " },
        o.note
    );
    for f in o.failures.iter().take(5) {
        println!("    {f}");
    }
    if o.failures.len() > 5 {
        println!("    ... {} more", o.failures.len() - 5);
    }
    pass
}

// ---- criteria ----

fn oracle_equivalence(o: &mut Outcome) {
    let l = Limits::default();
    let graphs: Vec<Graph> = catalog().into_iter().chain(random_order8(10_000)).collect();
    for g in &graphs {
        let adj = masks(g);
        let (alpha, sets) = oracle_omega(&adj);
        let omega = omega_family(g, &l).unwrap();
        let mut got: Vec<u64> = omega.sets.iter().map(|&s| to_mask(s)).collect();
        got.sort_unstable();
        o.require(omega.alpha == alpha && independence_number(g) == alpha && got == sets, || {
            format!("{}: alpha {} vs {alpha}", encode_graph6(g), omega.alpha)
        });
    }
    o.note = format!("{} graphs", graphs.len());
}

fn five_way(o: &mut Outcome) {
    let l = Limits::default();
    let graphs: Vec<Graph> = catalog().into_iter().chain(random_order8(10_000)).collect();
    for g in &graphs {
        let report = equivalence_suite(g, &l).unwrap();
        let truth = oracle_two_disjoint_mis(&masks(g));
        o.require(report.all_agree() && report.conditions()[0] == truth, || {
            format!("{}: conditions {:?}, oracle {truth}", encode_graph6(g), report.conditions())
        });
    }
    o.note = format!("{} graphs", graphs.len());
}

fn berge(o: &mut Outcome) {
    let l = Limits::default();
    let mut checked = 0;
    for g in catalog() {
        let adj = masks(&g);
        let (alpha, _) = oracle_omega(&adj);
        for s in independent_sets(&adj) {
            let set: VertexSet = (0..g.order()).filter(|&v| s >> v & 1 == 1).collect();
            let got = berge_verify(&g, set, &l).unwrap();
            checked += 1;
            o.require(got == (s.count_ones() as usize == alpha), || format!("{} S={set}", encode_graph6(&g)));
        }
    }
    o.note = format!("{checked} (G, S) pairs");
}

fn matching(o: &mut Outcome) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=10);
        let p = rng.gen_range(0.05..0.95);
        let g = random_gnp(n, p, &mut rng).unwrap();
        let m = max_matching_general(&g);
        let valid = m.validate(&g).is_ok();
        let mu = oracle_mu(&masks(&g));
        o.require(valid && m.len() == mu, || format!("{}: {} vs {mu}", encode_graph6(&g), m.len()));
    }
    o.note = "10000 graphs".into();
}

fn unicyclic(o: &mut Outcome) {
    let l = Limits::default();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let mut slowest = Duration::ZERO;
    let mut yes = 0;
    for i in 0..10_000 {
        let n = if i % 4 == 0 { 12 } else { rng.gen_range(3..=12) };
        let g = random_unicyclic(n, &mut rng).unwrap();
        let start = Instant::now();
        let cert = unicyclic_two_disjoint_mis(&g).unwrap();
        let t = start.elapsed();
        if n == 12 {
            slowest = slowest.max(t);
        }
        let truth = oracle_two_disjoint_mis(&masks(&g));
        yes += usize::from(truth);
        o.require(cert.verdict.is_yes() == truth && cert.validate(&g, &l).is_ok(), || {
            format!("{}: verdict {}, oracle {truth}", encode_graph6(&g), cert.verdict)
        });
    }
    o.require(slowest <= Duration::from_millis(10), || format!("slowest n=12 graph took {slowest:?}"));
    o.note = format!("10000 graphs, {yes} yes; slowest at n=12 {slowest:.1?}");
}

fn konig_egervary_graphs() -> Vec<Graph> {
    let l = Limits::default();
    catalog().into_iter().chain(order8_extensions()).filter(|g| is_konig_egervary(g, &l).unwrap()).collect()
}

fn ke_decision(o: &mut Outcome, ke: &[Graph]) {
    for g in ke {
        let adj = masks(g);
        let pm = 2 * oracle_mu(&adj) == g.order();
        let truth = oracle_two_disjoint_mis(&adj);
        o.require(truth == (oracle_bipartite(&adj) && pm), || encode_graph6(g));
    }
    o.note = format!("{} KE graphs", ke.len());
}

fn ke_counting(o: &mut Outcome, ke: &[Graph]) {
    let mut equal = 0;
    for g in ke {
        let adj = masks(g);
        let (alpha, sets) = oracle_omega(&adj);
        let bound = 1usize << alpha;
        let matching_graph = adj.iter().all(|a| a.count_ones() == 1);
        o.require(sets.len() <= bound, || format!("{}: |omega| {} > 2^{alpha}", encode_graph6(g), sets.len()));
        o.require((sets.len() == bound) == matching_graph, || format!("{}: equality case", encode_graph6(g)));
        equal += usize::from(sets.len() == bound);
    }
    let l = Limits::default();
    for q in [2, 3, 4] {
        let f = friendship(q).unwrap();
        let (alpha, sets) = oracle_omega(&masks(&f));
        let omega = omega_family(&f, &l).unwrap();
        o.require(alpha == q && sets.len() == 1 << q && omega.len() == 1 << q, || format!("friendship({q})"));
    }
    o.note = format!("{} KE graphs, {equal} attain 2^alpha", ke.len());
}

fn shedding(o: &mut Outcome) {
    let l = Limits::default();
    let named = [(complete(1).unwrap(), 0u64), (cycle(5).unwrap(), 0b11111), (path(4).unwrap(), 0b0110)];
    for (g, expected) in
        named.iter().chain(&(2..=6).map(|n| (complete(n).unwrap(), (1u64 << n) - 1)).collect::<Vec<_>>())
    {
        let got = to_mask(shedding_vertices(g, &l).unwrap());
        o.require(got == *expected && oracle_shedding(&masks(g)) == *expected, || {
            format!("Shed({})", encode_graph6(g))
        });
    }
    let mut pairs = 0;
    for g in catalog() {
        let adj = masks(&g);
        let shed = shedding_vertices(&g, &l).unwrap();
        o.require(to_mask(shed) == oracle_shedding(&adj), || format!("{}: Shed {shed}", encode_graph6(&g)));
        let count_by_size = |k: usize| independent_sets(&adj).iter().filter(|s| s.count_ones() as usize == k).count();
        for s in independent_sets(&adj) {
            let set: VertexSet = (0..g.order()).filter(|&v| s >> v & 1 == 1).collect();
            if !set.is_subset(shed) || set.len() > 5 {
                continue;
            }
            pairs += 1;
            let fam = shedding_powerset_witnesses(&g, set, &l).unwrap();
            let mut distinct: Vec<u64> = fam.iter().map(|&t| to_mask(t)).collect();
            distinct.sort_unstable();
            distinct.dedup();
            let ok = distinct.len() == 1 << set.len()
                && distinct.iter().all(|&t| independent(&adj, t) && t.count_ones() as usize == set.len())
                && count_by_size(set.len()) >= 1 << set.len();
            o.require(ok, || format!("{}: S={set}", encode_graph6(&g)));
        }
    }
    let cfg = VerifyConfig { nmax: 7, seed: SEED, ..VerifyConfig::default() };
    let report = verify::run(&[Suite::Shedding], &cfg).unwrap();
    let s = &report.suites[0];
    o.require(s.passed, || format!("shedding suite: {:?}", s.failures.first()));
    o.note = format!("{pairs} (G, S) pairs; suite {} checks", s.checks);
}

fn trees(o: &mut Outcome) {
    let l = Limits::default();
    let cfg = VerifyConfig { nmax: 8, seed: SEED, ..VerifyConfig::default() };
    let report = verify::run(&[Suite::Trees], &cfg).unwrap();
    let s = &report.suites[0];
    o.require(s.passed, || format!("trees suite: {:?}", s.failures.first()));
    let p3k1 = corona_k1(&path(3).unwrap()).unwrap();
    let sp3 = spider(3).unwrap();
    for (g, slack) in [(&p3k1, 0), (&sp3, 1)] {
        let adj = masks(g);
        let shed = oracle_shedding(&adj).count_ones() as usize;
        let alpha = oracle_omega(&adj).0;
        let lib = shedding_vertices(g, &l).unwrap().len();
        o.require(shed + slack == alpha && lib == shed, || {
            format!("{}: |Shed| {shed}, alpha {alpha}", encode_graph6(g))
        });
    }
    o.note = format!("{} trees, {} checks", s.graphs, s.checks);
}

fn named_facts(o: &mut Outcome) {
    let l = Limits::default();
    let c5k1 = corona_k1(&cycle(5).unwrap()).unwrap();
    let maximal = oracle_maximal(&masks(&c5k1));
    o.require(!any_disjoint(&maximal) && has_two_disjoint_maximal_is(&c5k1, &l).unwrap().is_none(), || {
        "C5 o K1 has a disjoint maximal pair".into()
    });
    let mut wc = Vec::new();
    let mut vwc = Vec::new();
    for n in 3..=12 {
        let c = cycle(n).unwrap();
        let adj = masks(&c);
        let oracle_wc = oracle_well_covered(&adj);
        let oracle_vwc = oracle_wc && 2 * oracle_omega(&adj).0 == n;
        o.require(is_well_covered(&c, &l).unwrap() == oracle_wc, || format!("well-covered C{n}"));
        o.require(is_very_well_covered(&c, &l).unwrap() == oracle_vwc, || format!("very well-covered C{n}"));
        if oracle_wc {
            wc.push(n);
        }
        if oracle_vwc {
            vwc.push(n);
        }
    }
    o.require(wc == [3, 4, 5, 7], || format!("well-covered cycles {wc:?}"));
    o.require(vwc == [4], || format!("very well-covered cycles {vwc:?}"));
    let mut bases = 0;
    for h in catalog().into_iter().filter(|h| h.order() >= 1 && h.order() <= 5) {
        let g = corona_k1(&h).unwrap();
        let oracle = oracle_two_disjoint_mis(&masks(&g));
        let lib = has_two_disjoint_mis(&g, &l).unwrap().verdict.is_yes();
        o.require(oracle == lib && oracle == oracle_bipartite(&masks(&h)), || format!("H = {}", encode_graph6(&h)));
        bases += 1;
    }
    o.note = format!("well-covered cycles {wc:?}, very well-covered {vwc:?}, {bases} coronas");
}

fn conjecture(o: &mut Outcome) {
    let l = Limits::default();
    let report = conjecture_search(&FamilySpec::Bundled { nmax: 7 }, usize::MAX, SEED, 4, &l).unwrap();
    o.require(report.counterexamples.is_empty(), || {
        let g6: Vec<&str> = report.counterexamples.iter().map(|c| c.graph6.as_str()).collect();
        format!("counterexamples: {g6:?}")
    });
    o.require(report.revalidate(&l).is_ok(), || "counterexample revalidation".into());
    let mut critical = 0;
    for g in catalog() {
        let adj = masks(&g);
        if adj.contains(&0) {
            continue;
        }
        let alpha = oracle_omega(&adj).0;
        let is_critical = g.edges().all(|(u, v)| {
            let mut cut = adj.clone();
            cut[u] &= !(1 << v);
            cut[v] &= !(1 << u);
            oracle_omega(&cut).0 > alpha
        });
        if is_critical {
            critical += 1;
            o.require(oracle_two_disjoint_mis(&adj), || format!("{} has no disjoint pair", encode_graph6(&g)));
        }
    }
    o.require(critical == report.critical && report.examined == 1253, || {
        format!("critical {} vs oracle {critical}, examined {}", report.critical, report.examined)
    });
    o.note = format!("{} graphs, {critical} edge-alpha-critical, 0 counterexamples", report.examined);
}

fn verify_all(o: &mut Outcome) {
    let cfg = VerifyConfig { seed: SEED, ..VerifyConfig::default() };
    let first = verify::run(&Suite::ALL, &cfg).unwrap();
    let second = verify::run(&Suite::ALL, &cfg).unwrap();
    let a = serde_json::to_string(&first).unwrap();
    let b = serde_json::to_string(&second).unwrap();
    o.require(a == b, || "summaries differ between runs".into());
    for s in &first.suites {
        o.require(s.passed, || format!("{}: {:?}", s.suite, s.failures.first()));
    }
    let checks: u64 = first.suites.iter().map(|s| s.checks).sum();
    o.note = format!("nmax {}, {checks} checks per run, identical JSON", cfg.nmax);
}

fn main() {
    let mut ok = true;
    ok &= criterion(1, "omega and alpha match the subset oracle", Some(Duration::from_secs(300)), oracle_equivalence);
    ok &= criterion(2, "five equivalent conditions agree", None, five_way);
    ok &= criterion(3, "Berge criterion on every independent set, n <= 7", None, berge);
    ok &= criterion(4, "blossom matching number equals brute force", None, matching);
    ok &= criterion(5, "unicyclic rule equals brute force", None, unicyclic);
    let ke = konig_egervary_graphs();
    ok &= criterion(6, "KE: disjoint pair iff bipartite with perfect matching", None, |o| ke_decision(o, &ke));
    ok &= criterion(7, "KE: |omega| <= 2^alpha, equality only for matchings", None, |o| ke_counting(o, &ke));
    ok &= criterion(8, "shedding suite", None, shedding);
    ok &= criterion(9, "tree suite and tight instances", None, trees);
    ok &= criterion(10, "named facts and coronas of graphs on <= 5 vertices", None, named_facts);
    ok &= criterion(11, "edge-alpha-critical graphs on <= 7 vertices", None, conjecture);
    ok &= criterion(12, "verify all twice: deterministic", Some(Duration::from_secs(900)), verify_all);
    if !ok {
        eprintln!("acceptance: some criteria failed");
        std::process::exit(1);
    }
}
