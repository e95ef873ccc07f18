//! The `analyze` report.

use std::fmt::Write as _;
use std::time::Instant;

use dismis_core::families::unicyclic_alpha;
use dismis_core::independence::{
    alpha, has_two_disjoint_maximal_is, is_konig_egervary, is_very_well_covered, is_well_covered, omega_family,
};
use dismis_core::io::encode_graph6;
use dismis_core::matching::matching_number;
use dismis_core::vertex_classes::{classify, VertexClassification};
use dismis_core::{decide, Certificate, Error, Girth, Graph, Limits, Result, Strategy, VertexSet};
use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
pub struct Skipped {
    pub field: &'static str,
    pub reason: String,
}

/// Everything `analyze` derives from one graph. Fields that could not be
/// computed within the caps are absent and listed in `skipped`.
#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub graph6: String,
    pub label: Option<String>,
    pub n: usize,
    pub m: usize,
    pub girth: Girth,
    pub bipartite: bool,
    pub unicyclic: bool,
    pub mu: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub core: Option<VertexSet>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub konig_egervary: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub well_covered: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub very_well_covered: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<VertexClassification>,
    /// `null` when no two disjoint maximal independent sets exist.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub disjoint_maximal_pair: Option<Option<(VertexSet, VertexSet)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    pub skipped: Vec<Skipped>,
}

impl AnalysisReport {
    pub fn is_partial(&self) -> bool {
        !self.skipped.is_empty()
    }
}

struct Stages<'a> {
    limits: &'a Limits,
    deadline: Option<Instant>,
    skipped: Vec<Skipped>,
}

impl Stages<'_> {
    /// Runs one stage unless the deadline has passed; cap errors become
    /// skipped entries, other errors propagate.
    fn run<T>(&mut self, field: &'static str, f: impl FnOnce(&Limits) -> Result<T>) -> Result<Option<T>> {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.skipped.push(Skipped { field, reason: "timeout".into() });
            return Ok(None);
        }
        match f(self.limits) {
            Ok(v) => Ok(Some(v)),
            Err(e @ Error::CapExceeded { .. }) => {
                self.skipped.push(Skipped { field, reason: e.to_string() });
                Ok(None)
            }
            Err(e) => Err(e),
        }
    }
}

/// Builds the report. The deadline is checked between stages.
pub fn analyze(g: &Graph, limits: &Limits, deadline: Option<Instant>) -> Result<AnalysisReport> {
    let mut st = Stages { limits, deadline, skipped: Vec::new() };
    let omega = st.run("omega", |l| omega_family(g, l))?;
    let alpha_value = match &omega {
        Some(o) => Some(o.alpha),
        None => match g.unique_cycle() {
            Some(c) => Some(unicyclic_alpha(g, &c)),
            None => st.run("alpha", |l| alpha(g, l))?,
        },
    };
    let konig_egervary = match alpha_value {
        Some(a) if omega.is_none() => Some(a + matching_number(g) == g.order()),
        _ => st.run("konig_egervary", |l| is_konig_egervary(g, l))?,
    };
    let well_covered = st.run("well_covered", |l| is_well_covered(g, l))?;
    let very_well_covered = st.run("very_well_covered", |l| is_very_well_covered(g, l))?;
    let classification = st.run("classification", |l| classify(g, l))?;
    let disjoint_maximal_pair = st.run("disjoint_maximal_pair", |l| has_two_disjoint_maximal_is(g, l))?;
    let certificate = st.run("certificate", |l| {
        let c = decide(g, Strategy::Auto, l)?;
        c.validate(g, l)?;
        Ok(c)
    })?;
    Ok(AnalysisReport {
        graph6: encode_graph6(g),
        label: g.label().map(str::to_string),
        n: g.order(),
        m: g.size(),
        girth: g.girth(),
        bipartite: g.is_bipartite(),
        unicyclic: g.is_unicyclic(),
        mu: matching_number(g),
        alpha: alpha_value,
        omega_size: omega.as_ref().map(|o| o.len()),
        core: omega.as_ref().map(|o| o.core),
        konig_egervary,
        well_covered,
        very_well_covered,
        classification,
        disjoint_maximal_pair,
        certificate,
        skipped: st.skipped,
    })
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "skipped".to_string(), T::to_string)
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph6: {}", r.graph6);
    if let Some(label) = &r.label {
        let _ = writeln!(s, "label: {label}");
    }
    let _ = writeln!(s, "n: {}  m: {}  girth: {}", r.n, r.m, r.girth);
    let _ = writeln!(s, "bipartite: {}  unicyclic: {}", r.bipartite, r.unicyclic);
    let _ = writeln!(s, "alpha: {}  mu: {}  |omega|: {}", opt(&r.alpha), r.mu, opt(&r.omega_size));
    let _ = writeln!(s, "core: {}", opt(&r.core));
    let _ = writeln!(s, "konig-egervary: {}", opt(&r.konig_egervary));
    let _ = writeln!(s, "well-covered: {}  very well-covered: {}", opt(&r.well_covered), opt(&r.very_well_covered));
    match &r.classification {
        Some(c) => {
            let _ = writeln!(s, "leaves: {}", c.leaves);
            let _ = writeln!(s, "simplicial: {}", c.simplicial);
            let _ = writeln!(s, "codominated: {}", c.codominated_set());
            let _ = writeln!(s, "shedding: {}", c.shedding);
        }
        None => {
            let _ = writeln!(s, "classification: skipped");
        }
    }
    let pair = match &r.disjoint_maximal_pair {
        Some(Some((a, b))) => format!("{a} {b}"),
        Some(None) => "none".into(),
        None => "skipped".into(),
    };
    let _ = writeln!(s, "disjoint maximal pair: {pair}");
    match &r.certificate {
        Some(c) => {
            let _ = writeln!(s, "disjoint maximum pair: {}", c.verdict);
            if let Some((a, b)) = c.pair() {
                let _ = writeln!(s, "  {a} {b}");
            }
        }
        None => {
            let _ = writeln!(s, "disjoint maximum pair: skipped");
        }
    }
    for k in &r.skipped {
        let _ = writeln!(s, "skipped {}: {}", k.field, k.reason);
    }
    s
}

pub fn render_dot(g: &Graph, r: &AnalysisReport) -> String {
    let mut highlights = Vec::new();
    if let Some((a, b)) = r.certificate.as_ref().and_then(Certificate::pair) {
        highlights.push(("first maximum set", a));
        highlights.push(("second maximum set", b));
    }
    if let Some(core) = r.core {
        highlights.push(("core", core));
    }
    if let Some(c) = &r.classification {
        highlights.push(("shedding", c.shedding));
    }
    g.to_dot(&highlights)
}
