//! Edge-`α`-critical graphs and the search for a critical graph without
//! isolated vertices that lacks two disjoint maximum independent sets.

use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::Certificate;
use crate::decision::has_two_disjoint_mis;
use crate::error::{Error, Result};
use crate::generators::{all_labeled_trees, cycle, random_gnp, random_unicyclic};
use crate::graph::Graph;
use crate::independence::{independence_number, is_konig_egervary, omega_family};
use crate::io::{encode_graph6, parse_graph6, read_catalog, small_graph_catalog};
use crate::limits::Limits;

/// Deleting any edge raises `α`.
pub fn edge_alpha_critical(g: &Graph, limits: &Limits) -> Result<bool> {
    limits.check_order(g)?;
    let alpha = independence_number(g);
    for e in g.edges() {
        if independence_number(&g.delete_edges([e])?) <= alpha {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The graphs a search walks through.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    /// A file of graph6 lines.
    Catalog { path: PathBuf },
    /// The bundled catalog of all graphs on at most `nmax ≤ 7` vertices.
    Bundled { nmax: usize },
    /// A seeded stream of `G(n, p)` graphs.
    Gnp { n: usize, p: f64 },
    /// Every labelled tree on `2..=nmax` vertices.
    Trees { nmax: usize },
    /// A seeded stream of random unicyclic graphs on `n` vertices.
    Unicyclic { n: usize },
    /// `C_5, C_7, …` up to `nmax` together with their complements.
    OddCycles { nmax: usize },
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Catalog { path } => write!(f, "catalog {}", path.display()),
            FamilySpec::Bundled { nmax } => write!(f, "bundled catalog n<={nmax}"),
            FamilySpec::Gnp { n, p } => write!(f, "gnp n={n} p={p}"),
            FamilySpec::Trees { nmax } => write!(f, "trees n<={nmax}"),
            FamilySpec::Unicyclic { n } => write!(f, "unicyclic n={n}"),
            FamilySpec::OddCycles { nmax } => write!(f, "odd cycles n<={nmax}"),
        }
    }
}

impl FamilySpec {
    /// Up to `budget` graphs of the family, in a fixed order.
    pub fn graphs(&self, budget: usize, seed: u64) -> Result<Vec<Graph>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Ok(match self {
            FamilySpec::Catalog { path } => read_catalog(path)?.into_iter().take(budget).collect(),
            FamilySpec::Bundled { nmax } => {
                small_graph_catalog().into_iter().filter(|g| g.order() <= *nmax).take(budget).collect()
            }
            FamilySpec::Gnp { n, p } => {
                if !(0.0..=1.0).contains(p) {
                    return Err(Error::InvalidParameter(format!("edge probability {p} is outside [0, 1]")));
                }
                (0..budget).map(|_| random_gnp(*n, *p, &mut rng)).collect::<Result<_>>()?
            }
            FamilySpec::Trees { nmax } => (2..=*nmax).flat_map(all_labeled_trees).take(budget).collect(),
            FamilySpec::Unicyclic { n } => {
                (0..budget).map(|_| random_unicyclic(*n, &mut rng)).collect::<Result<_>>()?
            }
            FamilySpec::OddCycles { nmax } => (5..=*nmax)
                .step_by(2)
                .flat_map(|n| {
                    let c = cycle(n).expect("n >= 5");
                    let co = c.complement();
                    [c, co]
                })
                .take(budget)
                .collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub certificate: Certificate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub family: String,
    pub budget: usize,
    pub seed: u64,
    pub examined: usize,
    /// Edge-`α`-critical graphs without isolated vertices.
    pub critical: usize,
    pub counterexamples: Vec<Counterexample>,
    /// Exploratory only: non-König–Egerváry critical graphs with
    /// `|Ω| = 2^α`, as graph6.
    pub equality_candidates: Vec<String>,
    pub elapsed_ms: u64,
}

impl SearchReport {
    /// Re-checks every counterexample from its graph6 string.
    pub fn revalidate(&self, limits: &Limits) -> Result<()> {
        for c in &self.counterexamples {
            let g = parse_graph6(&c.graph6)?;
            if !edge_alpha_critical(&g, limits)? || !g.isolated_vertices().is_empty() {
                return Err(Error::InvalidCertificate(format!("{} is not critical", c.graph6)));
            }
            c.certificate.validate(&g, limits)?;
            if c.certificate.verdict.is_yes() {
                return Err(Error::InvalidCertificate(format!("{} has a disjoint pair", c.graph6)));
            }
        }
        Ok(())
    }
}

enum Outcome {
    Skipped,
    Critical { counterexample: Option<Counterexample>, equality: bool },
}

fn examine(g: &Graph, limits: &Limits) -> Result<Outcome> {
    if !g.isolated_vertices().is_empty() || !edge_alpha_critical(g, limits)? {
        return Ok(Outcome::Skipped);
    }
    let cert = has_two_disjoint_mis(g, limits)?;
    let omega = omega_family(g, limits)?;
    let equality = !is_konig_egervary(g, limits)? && 1usize.checked_shl(omega.alpha as u32) == Some(omega.len());
    let counterexample = (!cert.verdict.is_yes()).then(|| Counterexample {
        graph6: encode_graph6(g),
        n: g.order(),
        m: g.size(),
        alpha: omega.alpha,
        certificate: cert,
    });
    Ok(Outcome::Critical { counterexample, equality })
}

/// Examines up to `budget` graphs of the family on `workers` threads. The
/// report does not depend on the worker count.
pub fn conjecture_search(
    family: &FamilySpec,
    budget: usize,
    seed: u64,
    workers: usize,
    limits: &Limits,
) -> Result<SearchReport> {
    let start = Instant::now();
    let graphs = family.graphs(budget, seed)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    let outcomes: Vec<Outcome> =
        pool.install(|| graphs.par_iter().map(|g| examine(g, limits)).collect::<Result<_>>())?;
    let mut report = SearchReport {
        family: family.to_string(),
        budget,
        seed,
        examined: graphs.len(),
        critical: 0,
        counterexamples: Vec::new(),
        equality_candidates: Vec::new(),
        elapsed_ms: 0,
    };
    for (g, o) in graphs.iter().zip(outcomes) {
        if let Outcome::Critical { counterexample, equality } = o {
            report.critical += 1;
            report.counterexamples.extend(counterexample);
            if equality {
                report.equality_candidates.push(encode_graph6(g));
            }
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}
