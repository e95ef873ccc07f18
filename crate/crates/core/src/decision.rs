//! Strategy dispatch for the disjoint maximum independent set decision.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, Evidence, ExhaustionMethod};
use crate::error::{Error, Result};
use crate::families::unicyclic_two_disjoint_mis;
use crate::graph::{Bipartiteness, Graph};
use crate::independence::{for_each_independent_set_of_size, independence_number_within, omega_family, OmegaFamily};
use crate::limits::Limits;
use crate::matching::max_matching_bipartite;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Unicyclic fast path, then the bipartite König–Egerváry fast path,
    /// then `Ω`.
    #[default]
    Auto,
    /// Enumerate `Ω` and compare pairs.
    OmegaPairs,
    /// Enumerate `Ω` and test `α(G − S) = α(G)` per set.
    ConditionTwo,
    /// Cycle-vertex rule; the graph must be unicyclic.
    Unicyclic,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Auto, Strategy::OmegaPairs, Strategy::ConditionTwo, Strategy::Unicyclic];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::OmegaPairs => "omega-pairs",
            Strategy::ConditionTwo => "condition-ii",
            Strategy::Unicyclic => "unicyclic",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Strategy::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown strategy `{s}`")))
    }
}

/// Decides whether `g` has two disjoint maximum independent sets and
/// returns the evidence.
pub fn decide(g: &Graph, strategy: Strategy, limits: &Limits) -> Result<Certificate> {
    match strategy {
        Strategy::Unicyclic => {
            if !g.is_unicyclic() {
                return Err(Error::StrategyMismatch {
                    strategy: strategy.name(),
                    reason: "graph is not connected with exactly one cycle".into(),
                });
            }
            unicyclic_two_disjoint_mis(g)
        }
        Strategy::OmegaPairs => by_pairs(g, &omega_family(g, limits)?),
        Strategy::ConditionTwo => by_condition_two(g, &omega_family(g, limits)?),
        Strategy::Auto => {
            if g.is_unicyclic() {
                return unicyclic_two_disjoint_mis(g);
            }
            if let Bipartiteness::Bipartite { left, right } = g.bipartiteness() {
                return bipartite(g, left, right);
            }
            has_two_disjoint_mis(g, limits)
        }
    }
}

/// The `Ω`-based decision: pairwise comparison, or condition (ii) once `Ω`
/// is larger than the pairing threshold.
pub fn has_two_disjoint_mis(g: &Graph, limits: &Limits) -> Result<Certificate> {
    let omega = omega_family(g, limits)?;
    if omega.len() > limits.pairing_threshold {
        by_condition_two(g, &omega)
    } else {
        by_pairs(g, &omega)
    }
}

fn by_pairs(_g: &Graph, omega: &OmegaFamily) -> Result<Certificate> {
    Ok(match omega.disjoint_pair() {
        Some((first, second)) => Certificate::yes(Evidence::DisjointPair { alpha: omega.alpha, first, second }),
        None => Certificate::no(Evidence::Exhaustion {
            alpha: omega.alpha,
            omega_size: omega.len(),
            method: ExhaustionMethod::OmegaPairs,
            checked: omega.len(),
        }),
    })
}

fn by_condition_two(g: &Graph, omega: &OmegaFamily) -> Result<Certificate> {
    for &s in &omega.sets {
        let rest = g.vertices().difference(s);
        if independence_number_within(g, rest) < omega.alpha {
            continue;
        }
        let mut partner = None;
        let _ = for_each_independent_set_of_size(g, rest, omega.alpha, |t| {
            partner = Some(t);
            std::ops::ControlFlow::Break(())
        });
        let t = partner.expect("α(G − S) = α(G) guarantees a set");
        return Ok(Certificate::yes(Evidence::DisjointPair { alpha: omega.alpha, first: s.min(t), second: s.max(t) }));
    }
    Ok(Certificate::no(Evidence::Exhaustion {
        alpha: omega.alpha,
        omega_size: omega.len(),
        method: ExhaustionMethod::ConditionTwo,
        checked: omega.len(),
    }))
}

/// Bipartite graphs are König–Egerváry: a disjoint pair exists exactly when
/// there is a perfect matching, and then the colour classes are the pair.
fn bipartite(g: &Graph, left: crate::VertexSet, right: crate::VertexSet) -> Result<Certificate> {
    let matching = max_matching_bipartite(g, left, right)?;
    let alpha = g.order() - matching.len();
    if 2 * matching.len() == g.order() {
        return Ok(Certificate::yes(Evidence::DisjointPair { alpha, first: left.min(right), second: left.max(right) }));
    }
    Ok(Certificate::no(Evidence::AlphaMatchingBipartite { alpha, matching, sides: None }))
}
