//! Property suites over graph catalogs and seeded random samples.
//!
//! A run is a pure function of its [`VerifyConfig`]: graphs are generated
//! serially from the seed, checked in parallel, and collected in order, so
//! the summary is identical for any worker count.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::{Certificate, Evidence};
use crate::decision::{decide, has_two_disjoint_mis, Strategy};
use crate::error::{Error, Result};
use crate::families::*;
use crate::generators::*;
use crate::graph::{Bipartiteness, Graph};
use crate::independence::*;
use crate::io::{encode_graph6, small_graph_catalog};
use crate::limits::Limits;
use crate::matching::matching_number;
use crate::vertex_classes::*;
use crate::vertex_set::{all_subsets, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Berge,
    FiveEquivalences,
    Shedding,
    Trees,
    Unicyclic,
    Ke,
    Corona,
    Schaudt,
    Conjecture,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Berge,
        Suite::FiveEquivalences,
        Suite::Shedding,
        Suite::Trees,
        Suite::Unicyclic,
        Suite::Ke,
        Suite::Corona,
        Suite::Schaudt,
        Suite::Conjecture,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Berge => "berge",
            Suite::FiveEquivalences => "five-equivalences",
            Suite::Shedding => "shedding",
            Suite::Trees => "trees",
            Suite::Unicyclic => "unicyclic",
            Suite::Ke => "ke",
            Suite::Corona => "corona",
            Suite::Schaudt => "schaudt",
            Suite::Conjecture => "conjecture",
        }
    }

    /// Parses a suite name; `all` yields every suite.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        s.parse().map(|suite| vec![suite])
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyConfig {
    /// Largest order for the general graph sweeps. Orders up to 7 come from
    /// the bundled catalog, order 8 from every one-vertex extension of the
    /// 7-vertex catalog, larger orders from `samples` random graphs each.
    pub nmax: usize,
    pub seed: u64,
    pub samples: usize,
    #[serde(skip)]
    pub workers: usize,
    #[serde(skip)]
    pub limits: Limits,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            nmax: 8,
            seed: 0,
            samples: 1000,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            limits: Limits::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub property: String,
    pub graph6: String,
    pub detail: String,
}

/// Kept per suite; the remaining failures are only counted.
pub const MAX_REPORTED_FAILURES: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub graphs: usize,
    pub checks: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub nmax: usize,
    pub seed: u64,
    pub samples: usize,
    pub suites: Vec<SuiteReport>,
    pub passed: bool,
}

#[derive(Default)]
struct Tally {
    checks: u64,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl Tally {
    fn check(&mut self, property: &str, g: &Graph, outcome: Result<bool>) {
        self.checks += 1;
        let detail = match outcome {
            Ok(true) => return,
            Ok(false) => "property does not hold".to_string(),
            Err(e) => e.to_string(),
        };
        self.fail(property, g, detail);
    }

    fn fail(&mut self, property: &str, g: &Graph, detail: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_REPORTED_FAILURES {
            self.failures.push(Failure { property: property.to_string(), graph6: encode_graph6(g), detail });
        }
    }

    fn absorb(&mut self, other: Tally) {
        self.checks += other.checks;
        self.failure_count += other.failure_count;
        let room = MAX_REPORTED_FAILURES - self.failures.len();
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

/// Largest accepted `nmax`; the general sweeps enumerate all vertex subsets.
pub const MAX_NMAX: usize = 14;

/// Runs the selected suites in order.
pub fn run(suites: &[Suite], cfg: &VerifyConfig) -> Result<VerifySummary> {
    if cfg.nmax > MAX_NMAX {
        return Err(Error::InvalidParameter(format!("nmax {} exceeds {MAX_NMAX}", cfg.nmax)));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let reports = pool.install(|| suites.iter().map(|&s| run_suite(s, cfg)).collect::<Result<Vec<_>>>())?;
    let passed = reports.iter().all(|r| r.passed);
    Ok(VerifySummary { nmax: cfg.nmax, seed: cfg.seed, samples: cfg.samples, suites: reports, passed })
}

fn run_suite(suite: Suite, cfg: &VerifyConfig) -> Result<SuiteReport> {
    // each suite draws from its own stream so suites can run alone
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (suite as u64 + 1).wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let l = &cfg.limits;
    let (graphs, tally) = match suite {
        Suite::Berge => sweep(general_graphs(cfg, &mut rng)?, |g, t| berge(g, l, t)),
        Suite::FiveEquivalences => sweep(general_graphs(cfg, &mut rng)?, |g, t| five(g, l, t)),
        Suite::Shedding => {
            let (n, mut t) = sweep(general_graphs(cfg, &mut rng)?, |g, t| shedding(g, l, t));
            shedding_named(l, &mut t)?;
            (n, t)
        }
        Suite::Trees => {
            let (n, mut t) = sweep(tree_graphs(cfg, &mut rng)?, |g, t| trees(g, l, t));
            trees_named(l, &mut t)?;
            (n, t)
        }
        Suite::Unicyclic => {
            let top = cfg.nmax + 4;
            let graphs = (0..cfg.samples)
                .map(|_| random_unicyclic(rng.gen_range(3..=top), &mut rng))
                .collect::<Result<Vec<_>>>()?;
            sweep(graphs, |g, t| unicyclic(g, l, t))
        }
        Suite::Ke => {
            let (n, mut t) = sweep(general_graphs(cfg, &mut rng)?, |g, t| ke(g, l, t));
            ke_named(l, &mut t)?;
            (n, t)
        }
        Suite::Corona => {
            let (n, mut t) = sweep(corona_graphs(cfg, &mut rng)?, |g, t| corona(g, l, t));
            corona_named(l, &mut t)?;
            (n, t)
        }
        Suite::Schaudt => {
            let mut graphs = general_graphs(cfg, &mut rng)?;
            graphs.extend(coronas_of_catalog(6)?);
            sweep(graphs, |g, t| schaudt(g, l, t))
        }
        Suite::Conjecture => conjecture(cfg, &mut rng)?,
    };
    Ok(SuiteReport {
        suite,
        graphs,
        checks: tally.checks,
        failure_count: tally.failure_count,
        passed: tally.failure_count == 0,
        failures: tally.failures,
    })
}

fn sweep<F>(graphs: Vec<Graph>, f: F) -> (usize, Tally)
where
    F: Fn(&Graph, &mut Tally) + Sync,
{
    let parts: Vec<Tally> = graphs
        .par_iter()
        .map(|g| {
            let mut t = Tally::default();
            f(g, &mut t);
            t
        })
        .collect();
    let mut total = Tally::default();
    for p in parts {
        total.absorb(p);
    }
    (graphs.len(), total)
}

/// Catalog graphs up to `min(nmax, 7)`, all one-vertex extensions of the
/// 7-vertex catalog when `nmax ≥ 8`, and `samples` `G(n, 1/2)` graphs for
/// each larger order.
pub fn general_graphs<R: Rng>(cfg: &VerifyConfig, rng: &mut R) -> Result<Vec<Graph>> {
    let catalog = small_graph_catalog();
    let mut out: Vec<Graph> = catalog.iter().filter(|g| g.order() <= cfg.nmax).cloned().collect();
    if cfg.nmax >= 8 {
        for g in catalog.iter().filter(|g| g.order() == 7) {
            out.extend(one_vertex_extensions(g));
        }
    }
    for n in 9..=cfg.nmax {
        for _ in 0..cfg.samples {
            out.push(random_gnp(n, 0.5, rng)?);
        }
    }
    Ok(out)
}

/// Every labelled tree up to `min(nmax, 8)` vertices, then `samples`
/// random trees per larger order.
fn tree_graphs<R: Rng>(cfg: &VerifyConfig, rng: &mut R) -> Result<Vec<Graph>> {
    let mut out: Vec<Graph> = (1..=cfg.nmax.min(8)).flat_map(all_labeled_trees).collect();
    for n in 9..=cfg.nmax {
        for _ in 0..cfg.samples {
            out.push(random_tree(n, rng)?);
        }
    }
    Ok(out)
}

fn coronas_of_catalog(max_base: usize) -> Result<Vec<Graph>> {
    small_graph_catalog().iter().filter(|h| h.order() >= 1 && h.order() <= max_base).map(corona_k1).collect()
}

fn corona_graphs<R: Rng>(cfg: &VerifyConfig, rng: &mut R) -> Result<Vec<Graph>> {
    let mut out = general_graphs(cfg, rng)?;
    out.extend(coronas_of_catalog(5)?);
    Ok(out)
}

fn berge(g: &Graph, l: &Limits, t: &mut Tally) {
    let alpha = independence_number(g);
    for s in all_subsets(g.vertices()).filter(|&s| g.is_independent_unchecked(s)) {
        let outcome = berge_verify(g, s, l).map(|b| b == (s.len() == alpha));
        t.check("berge: every disjoint independent set matches into S iff S is maximum", g, outcome);
    }
}

fn five(g: &Graph, l: &Limits, t: &mut Tally) {
    let report = match equivalence_suite(g, l) {
        Ok(r) => r,
        Err(e) => return t.check("five-equivalences: evaluation", g, Err(e)),
    };
    t.check("five-equivalences: all conditions agree", g, Ok(report.all_agree()));
    let alpha = report.alpha;
    let mut certs = Vec::new();
    if let Some((first, second)) = report.disjoint_pair {
        certs.push(Certificate::yes(Evidence::DisjointPair { alpha, first, second }));
    }
    if let Some(m) = &report.bipartite_alpha_matching {
        if let Bipartiteness::Bipartite { left, right } = g.bipartiteness_within(m.saturated()) {
            certs.push(Certificate::yes(Evidence::AlphaMatchingBipartite {
                alpha,
                matching: m.clone(),
                sides: Some((left, right)),
            }));
        }
    }
    if let Some((left, right)) = report.induced_bipartite {
        certs.push(Certificate::yes(Evidence::InducedBipartite2Alpha { alpha, left, right }));
    }
    for c in certs {
        t.check("five-equivalences: witness certificate validates", g, c.validate(g, l).map(|_| true));
    }
    if let Some((a, m)) = &report.deletion_with_perfect_matching {
        let rest = g.vertices().difference(*a);
        let ok = m.validate(g).is_ok()
            && m.saturated() == rest
            && m.len() == alpha
            && matches!(g.bipartiteness_within(rest), Bipartiteness::Bipartite { .. });
        t.check("five-equivalences: G - A is bipartite with a perfect matching of size alpha", g, Ok(ok));
    }
    t.check("mu >= alpha when a disjoint pair exists", g, mu_ge_alpha_check(g, l));
    let expected = report.conditions()[0];
    for st in [Strategy::Auto, Strategy::OmegaPairs, Strategy::ConditionTwo] {
        let outcome = decide(g, st, l).and_then(|c| {
            c.validate(g, l)?;
            Ok(c.verdict.is_yes() == expected)
        });
        t.check("decision strategies agree and certificates validate", g, outcome);
    }
    if g.isolated_vertices().is_empty() {
        let outcome = (|| Ok(is_very_well_covered(g, l)? == (is_well_covered(g, l)? && is_konig_egervary(g, l)?)))();
        t.check("very well-covered iff well-covered and Konig-Egervary", g, outcome);
    }
}

fn shedding(g: &Graph, l: &Limits, t: &mut Tally) {
    let class = match classify(g, l) {
        Ok(c) => c,
        Err(e) => return t.check("shedding: classification", g, Err(e)),
    };
    let shed = class.shedding;
    let codominated = class.codominated_set();
    t.check("codominated vertices are shedding", g, Ok(codominated.is_subset(shed)));
    if g.is_bipartite() {
        t.check("bipartite: shedding equals codominated", g, Ok(shed == codominated));
        let all_witnesses_leaves = g.vertices().iter().all(|x| {
            g.adj(x).iter().filter(|&y| g.adj(y).with(y).is_subset(g.adj(x).with(x))).all(|y| g.degree(y) == 1)
        });
        t.check("bipartite: every codominating vertex is a leaf", g, Ok(all_witnesses_leaves));
    }
    let dichotomy = shed.iter().all(|v| codominated.contains(v) || lies_on_five_cycle(g, v));
    t.check("shedding vertices are codominated or on a 5-cycle", g, Ok(dichotomy));
    let simplicial_ok = class.simplicial.iter().all(|v| g.adj(v).is_subset(shed));
    t.check("neighbours of simplicial vertices are shedding", g, Ok(simplicial_ok));

    // independent sets by size, for the 2^|S| lower bound
    let mut by_size = vec![0usize; g.order() + 1];
    for s in all_subsets(g.vertices()).filter(|&s| g.is_independent_unchecked(s)) {
        by_size[s.len()] += 1;
    }
    for s in all_subsets(shed).filter(|&s| s.len() <= 5 && g.is_independent_unchecked(s)) {
        let outcome = shedding_powerset_witnesses(g, s, l).map(|family| {
            let mut distinct = family.clone();
            distinct.sort_unstable();
            distinct.dedup();
            distinct.len() == 1 << s.len()
                && family.iter().all(|&i| i.len() == s.len() && g.is_independent_unchecked(i))
                && by_size[s.len()] >= 1 << s.len()
        });
        t.check("shedding subsets expand to 2^|S| distinct independent sets", g, outcome);
        let outcome = disjoint_maximal_from_shedding(g, s, l).map(|(u, m)| {
            let maximal = g.vertices().difference(u).iter().all(|v| !g.adj(v).is_disjoint(u));
            g.is_independent_unchecked(u) && maximal && u.is_disjoint(s) && m.matches_into(s, u)
        });
        t.check("shedding sets have a disjoint maximal set matched from S", g, outcome);
    }
    let outcome = omega_family(g, l).and_then(|omega| {
        if !omega.sets.iter().any(|s| s.is_subset(shed)) {
            return Ok(true);
        }
        let big = 1usize.checked_shl(omega.alpha as u32).is_some_and(|b| omega.len() >= b);
        Ok(big && has_two_disjoint_mis(g, l)?.verdict.is_yes())
    });
    t.check("a maximum set of shedding vertices forces 2^alpha sets and a disjoint pair", g, outcome);
}

fn expect(t: &mut Tally, property: &str, g: &Graph, cond: bool) {
    t.check(property, g, Ok(cond));
}

fn shedding_named(l: &Limits, t: &mut Tally) -> Result<()> {
    let k1 = complete(1)?;
    expect(t, "Shed(K_1) is empty", &k1, shedding_vertices(&k1, l)?.is_empty());
    for n in 2..=6 {
        let k = complete(n)?;
        expect(t, "Shed(K_n) is everything", &k, shedding_vertices(&k, l)? == k.vertices());
    }
    let c5 = cycle(5)?;
    expect(t, "Shed(C_5) is everything", &c5, shedding_vertices(&c5, l)? == c5.vertices());
    let p4 = path(4)?;
    expect(t, "Shed(P_4) is the degree-2 vertices", &p4, shedding_vertices(&p4, l)? == VertexSet::from([1, 2]));
    for q in [2, 3] {
        let f = friendship(q)?;
        let omega = omega_family(&f, l)?;
        expect(t, "friendship graphs have exactly 2^alpha maximum sets", &f, omega.len() == 1 << omega.alpha);
    }
    Ok(())
}

fn trees(g: &Graph, l: &Limits, t: &mut Tally) {
    t.check("tree shedding structure", g, tree_shed_structure_check(g, l));
    if g.order() != 2 {
        t.check("tree shedding bounds", g, tree_shed_bounds_check(g, l));
    }
}

fn trees_named(l: &Limits, t: &mut Tally) -> Result<()> {
    let g = corona_k1(&path(3)?)?;
    expect(t, "|Shed(P_3 o K_1)| = alpha", &g, shedding_vertices(&g, l)?.len() == independence_number(&g));
    for p in [2, 3] {
        let sp = spider(p)?;
        expect(t, "|Shed(spider)| = alpha - 1", &sp, shedding_vertices(&sp, l)?.len() + 1 == independence_number(&sp));
    }
    let k1 = complete(1)?;
    expect(t, "|Shed(K_1)| = alpha - 1", &k1, shedding_vertices(&k1, l)?.is_empty());
    Ok(())
}

fn unicyclic(g: &Graph, l: &Limits, t: &mut Tally) {
    let outcome = (|| {
        let cert = unicyclic_two_disjoint_mis(g)?;
        cert.validate(g, l)?;
        Ok(cert.verdict == has_two_disjoint_mis(g, l)?.verdict)
    })();
    t.check("unicyclic decision matches exhaustive search", g, outcome);
    t.check("n - 1 <= alpha + mu <= n", g, unicyclic_alpha_mu_range_check(g));
    let ke = unicyclic_decompose(g).map(|d| unicyclic_alpha(g, &d.cycle) + matching_number(g) == g.order());
    if let Ok(false) = ke {
        t.check("core is the union of the hanging-tree cores", g, unicyclic_core_union_check(g, l));
        t.check("hanging-tree maximum sets are traces of maximum sets", g, unicyclic_subtree_trace_check(g, l));
        t.check("disjoint pairs meet the cycle in (|C| - 1)/2 vertices", g, unicyclic_cycle_share_check(g, l));
    }
}

fn ke(g: &Graph, l: &Limits, t: &mut Tally) {
    match is_konig_egervary(g, l) {
        Ok(true) => {}
        Ok(false) => return,
        Err(e) => return t.check("ke: recognition", g, Err(e)),
    }
    t.check("KE: disjoint pair iff bipartite with a perfect matching", g, ke_two_disjoint_check(g, l));
    t.check("KE: |Omega| <= 2^alpha with equality only for alpha K_2", g, ke_omega_bound_check(g, l));
    t.check("KE: the six shedding conditions agree", g, ke_shed_equivalence_check(g, l));
    let outcome = decide(g, Strategy::Auto, l).and_then(|c| {
        c.validate(g, l)?;
        Ok(c.verdict.is_yes() == (g.is_bipartite() && 2 * matching_number(g) == g.order()))
    });
    t.check("KE: automatic decision agrees", g, outcome);
}

fn ke_named(l: &Limits, t: &mut Tally) -> Result<()> {
    for q in [2, 3, 4] {
        let f = friendship(q)?;
        let omega = omega_family(&f, l)?;
        let ok = omega.alpha == q && omega.len() == 1 << q && !is_konig_egervary(&f, l)?;
        expect(t, "friendship(q) is non-KE with |Omega| = 2^q", &f, ok);
    }
    for q in 1..=4 {
        let m = matching_graph(q)?;
        expect(t, "qK_2 attains |Omega| = 2^q", &m, omega_family(&m, l)?.len() == 1 << q);
    }
    Ok(())
}

fn corona(g: &Graph, l: &Limits, t: &mut Tally) {
    match in_girth_corollary_class(g, l) {
        Ok(true) => t.check("girth corollary", g, girth_corollary_check(g, l)),
        Ok(false) => {}
        Err(e) => t.check("girth corollary: class test", g, Err(e)),
    }
    if g.order() <= 10 && g.order() >= 1 && g.is_connected() && g.is_bipartite() {
        t.check("connected bipartite: perfect matching iff empty core", g, bipartite_core_check(g, l));
    }
}

fn corona_named(l: &Limits, t: &mut Tally) -> Result<()> {
    for h in small_graph_catalog().iter().filter(|h| h.order() <= 5) {
        t.check("H o K_1 has a disjoint pair iff H is bipartite", h, corona_bipartite_check(h, l));
    }
    for h in small_graph_catalog().iter().filter(|h| h.order() >= 1 && h.order() <= 4) {
        t.check("G o K_2 is all shedding with a disjoint pair", h, corona_k2_check(h, l));
    }
    for base in [cycle(5)?, cycle(7)?, path(2)?, path(3)?] {
        let g = corona_k1(&base)?;
        t.check("girth corollary on named coronas", &g, girth_corollary_check(&g, l));
    }
    let c5k1 = corona_k1(&cycle(5)?)?;
    expect(t, "C_5 o K_1 has no disjoint maximal pair", &c5k1, has_two_disjoint_maximal_is(&c5k1, l)?.is_none());
    let p3 = path(3)?;
    expect(t, "P_3 has a disjoint maximal pair", &p3, has_two_disjoint_maximal_is(&p3, l)?.is_some());
    for n in 3..=12 {
        let c = cycle(n)?;
        expect(
            t,
            "well-covered cycles are C_3, C_4, C_5, C_7",
            &c,
            is_well_covered(&c, l)? == matches!(n, 3 | 4 | 5 | 7),
        );
        expect(t, "C_4 is the only very well-covered cycle", &c, is_very_well_covered(&c, l)? == (n == 4));
    }
    Ok(())
}

fn schaudt(g: &Graph, l: &Limits, t: &mut Tally) {
    if g.order() > 12 || !g.isolated_vertices().is_empty() {
        return;
    }
    let outcome = (|| {
        if !is_well_covered(g, l)? || contains_induced_corona_odd_cycle(g, 3, l)?.is_some() {
            return Ok(true);
        }
        Ok(has_two_disjoint_mis(g, l)?.verdict.is_yes())
    })();
    t.check("well-covered without induced odd-cycle coronas has a disjoint pair", g, outcome);
}

fn conjecture<R: Rng>(cfg: &VerifyConfig, rng: &mut R) -> Result<(usize, Tally)> {
    let mut specs = vec![FamilySpec::Bundled { nmax: cfg.nmax.min(7) }, FamilySpec::OddCycles { nmax: 11 }];
    if cfg.nmax >= 8 {
        specs.push(FamilySpec::Gnp { n: cfg.nmax, p: 0.5 });
    }
    let mut total = Tally::default();
    let mut graphs = 0;
    for spec in specs {
        let budget = if matches!(spec, FamilySpec::Gnp { .. }) { cfg.samples } else { usize::MAX };
        let report = conjecture_search(&spec, budget, rng.gen(), cfg.workers, &cfg.limits)?;
        graphs += report.examined;
        total.checks += report.critical as u64;
        for c in report.counterexamples {
            total.failure_count += 1;
            if total.failures.len() < MAX_REPORTED_FAILURES {
                total.failures.push(Failure {
                    property: "edge-alpha-critical graphs have a disjoint pair".into(),
                    graph6: c.graph6,
                    detail: format!("alpha = {}", c.alpha),
                });
            }
        }
    }
    Ok((graphs, total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { nmax: 6, samples: 50, workers: 2, ..VerifyConfig::default() }
    }

    #[test]
    fn every_suite_passes_small() {
        let summary = run(&Suite::ALL, &small()).unwrap();
        for s in &summary.suites {
            assert!(s.passed, "{}: {:?}", s.suite, s.failures);
            assert!(s.checks > 0, "{}", s.suite);
        }
    }

    #[test]
    fn deterministic_across_workers() {
        let a = run(&[Suite::Unicyclic, Suite::Conjecture], &small()).unwrap();
        let b = run(&[Suite::Unicyclic, Suite::Conjecture], &VerifyConfig { workers: 1, ..small() }).unwrap();
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn suite_names() {
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 9);
        assert_eq!(Suite::parse_selection("ke").unwrap(), vec![Suite::Ke]);
        assert!(Suite::parse_selection("everything").is_err());
    }
}
