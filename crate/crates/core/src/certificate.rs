//! Machine-checkable evidence for the disjoint maximum independent set
//! decision. Every certificate names original vertex ids and can be
//! re-validated against the graph it was issued for.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, Graph};
use crate::independence::{independence_number, omega_family};
use crate::limits::Limits;
use crate::matching::{forest_perfect_matching, matching_number, ForestObstruction, Matching};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == Verdict::Yes
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(if self.is_yes() { "yes" } else { "no" })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub verdict: Verdict,
    #[serde(flatten)]
    pub evidence: Evidence,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Evidence {
    /// Two disjoint maximum independent sets.
    DisjointPair { alpha: usize, first: VertexSet, second: VertexSet },
    /// With `sides`: a matching of size `α` whose vertices induce a
    /// bipartite graph with the given sides. Without: a maximum matching
    /// smaller than `α`, which rules out a disjoint pair.
    AlphaMatchingBipartite { alpha: usize, matching: Matching, sides: Option<(VertexSet, VertexSet)> },
    /// An induced bipartite subgraph on `2α` vertices.
    InducedBipartite2Alpha { alpha: usize, left: VertexSet, right: VertexSet },
    /// Decision for a unicyclic graph read off its cycle.
    UnicyclicCycleVertex { cycle: Vec<usize>, route: UnicyclicRoute },
    /// Every candidate was examined and none works.
    Exhaustion { alpha: usize, omega_size: usize, method: ExhaustionMethod, checked: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExhaustionMethod {
    /// All pairs of maximum independent sets were compared.
    OmegaPairs,
    /// `α(G − S) < α(G)` for every maximum independent set `S`.
    ConditionTwo,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "route", rename_all = "kebab-case")]
pub enum UnicyclicRoute {
    /// Bipartite with a perfect matching: the colour classes are the pair.
    BipartitePerfectMatching { left: VertexSet, right: VertexSet, matching: Matching },
    /// A cycle vertex whose deletion leaves a forest with a perfect
    /// matching, in a graph that is not König–Egerváry.
    CycleVertex { vertex: usize, matching: Matching, alpha: usize, mu: usize },
    /// Neither condition holds.
    Neither {
        alpha: usize,
        mu: usize,
        bipartite: bool,
        konig_egervary: bool,
        /// Why `G − v` has no perfect matching, for each cycle vertex `v`
        /// whose deletion fails.
        obstructions: Vec<(usize, ForestObstruction)>,
    },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCertificate(msg.into())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(invalid(msg()))
    }
}

impl Certificate {
    pub fn yes(evidence: Evidence) -> Self {
        Certificate { verdict: Verdict::Yes, evidence }
    }

    pub fn no(evidence: Evidence) -> Self {
        Certificate { verdict: Verdict::No, evidence }
    }

    /// The disjoint pair carried or implied by a positive certificate.
    pub fn pair(&self) -> Option<(VertexSet, VertexSet)> {
        match &self.evidence {
            Evidence::DisjointPair { first, second, .. } => Some((*first, *second)),
            Evidence::InducedBipartite2Alpha { left, right, .. } => Some((*left, *right)),
            Evidence::UnicyclicCycleVertex {
                route: UnicyclicRoute::BipartitePerfectMatching { left, right, .. },
                ..
            } => Some((*left, *right)),
            _ => None,
        }
    }

    /// Recomputes everything the certificate claims. Exhaustion
    /// certificates are re-run in full, subject to `limits`.
    pub fn validate(&self, g: &Graph, limits: &Limits) -> Result<()> {
        match &self.evidence {
            Evidence::DisjointPair { alpha, first, second } => {
                self.expect_verdict(Verdict::Yes)?;
                g.check_set(first.union(*second))?;
                let a = independence_number(g);
                ensure(*alpha == a, || format!("claimed α = {alpha}, actual {a}"))?;
                ensure(first.len() == a && second.len() == a, || "pair members are not of size α".into())?;
                ensure(g.is_independent_unchecked(*first) && g.is_independent_unchecked(*second), || {
                    "pair member is not independent".into()
                })?;
                ensure(first.is_disjoint(*second) || a == 0, || "pair is not disjoint".into())
            }
            Evidence::AlphaMatchingBipartite { alpha, matching, sides } => {
                matching.validate(g)?;
                let a = independence_number(g);
                ensure(*alpha == a, || format!("claimed α = {alpha}, actual {a}"))?;
                match sides {
                    Some((left, right)) => {
                        self.expect_verdict(Verdict::Yes)?;
                        ensure(matching.len() == a, || "matching size differs from α".into())?;
                        ensure(left.is_disjoint(*right) && left.union(*right) == matching.saturated(), || {
                            "sides do not partition V(M)".into()
                        })?;
                        ensure(g.is_independent_unchecked(*left) && g.is_independent_unchecked(*right), || {
                            "G[V(M)] is not bipartite with the given sides".into()
                        })
                    }
                    None => {
                        self.expect_verdict(Verdict::No)?;
                        let mu = matching_number(g);
                        ensure(matching.len() == mu, || "matching is not maximum".into())?;
                        ensure(mu < a, || format!("μ = {mu} is not below α = {a}"))
                    }
                }
            }
            Evidence::InducedBipartite2Alpha { alpha, left, right } => {
                self.expect_verdict(Verdict::Yes)?;
                g.check_set(left.union(*right))?;
                let a = independence_number(g);
                ensure(*alpha == a, || format!("claimed α = {alpha}, actual {a}"))?;
                ensure(left.is_disjoint(*right) && left.len() + right.len() == 2 * a, || {
                    "sides do not span 2α vertices".into()
                })?;
                ensure(g.is_independent_unchecked(*left) && g.is_independent_unchecked(*right), || {
                    "induced subgraph is not bipartite with the given sides".into()
                })
            }
            Evidence::UnicyclicCycleVertex { cycle, route } => {
                let actual = g.unique_cycle().ok_or_else(|| invalid("graph is not unicyclic"))?;
                ensure(*cycle == actual, || format!("cycle {cycle:?} differs from {actual:?}"))?;
                self.validate_unicyclic(g, cycle, route)
            }
            Evidence::Exhaustion { alpha, omega_size, method, checked } => {
                self.expect_verdict(Verdict::No)?;
                let omega = omega_family(g, limits)?;
                ensure(*alpha == omega.alpha, || format!("claimed α = {alpha}, actual {}", omega.alpha))?;
                ensure(*omega_size == omega.len(), || format!("claimed |Ω| = {omega_size}, actual {}", omega.len()))?;
                ensure(*checked == omega.len(), || "not every maximum independent set was checked".into())?;
                let found = match method {
                    ExhaustionMethod::OmegaPairs => omega.disjoint_pair().is_some(),
                    ExhaustionMethod::ConditionTwo => omega.sets.iter().any(|&s| {
                        crate::independence::independence_number_within(g, g.vertices().difference(s)) == omega.alpha
                    }),
                };
                ensure(!found, || "a disjoint pair exists".into())
            }
        }
    }

    fn expect_verdict(&self, v: Verdict) -> Result<()> {
        ensure(self.verdict == v, || format!("evidence supports verdict {v:?}"))
    }

    fn validate_unicyclic(&self, g: &Graph, cycle: &[usize], route: &UnicyclicRoute) -> Result<()> {
        match route {
            UnicyclicRoute::BipartitePerfectMatching { left, right, matching } => {
                self.expect_verdict(Verdict::Yes)?;
                matching.validate(g)?;
                ensure(matching.is_perfect_in(g), || "matching is not perfect".into())?;
                ensure(left.is_disjoint(*right) && left.union(*right) == g.vertices(), || {
                    "sides do not partition V(G)".into()
                })?;
                ensure(g.is_independent_unchecked(*left) && g.is_independent_unchecked(*right), || {
                    "sides are not independent".into()
                })
            }
            UnicyclicRoute::CycleVertex { vertex, matching, alpha, mu } => {
                self.expect_verdict(Verdict::Yes)?;
                ensure(cycle.contains(vertex), || format!("{vertex} is not on the cycle"))?;
                matching.validate(g)?;
                ensure(matching.saturated() == g.vertices().without(*vertex), || {
                    "matching is not perfect in G − v".into()
                })?;
                let (a, m) = (independence_number(g), matching_number(g));
                ensure((*alpha, *mu) == (a, m), || format!("claimed (α, μ) = ({alpha}, {mu}), actual ({a}, {m})"))?;
                ensure(a + m < g.order(), || "graph is König–Egerváry".into())
            }
            UnicyclicRoute::Neither { alpha, mu, bipartite, konig_egervary, obstructions } => {
                self.expect_verdict(Verdict::No)?;
                let (a, m) = (independence_number(g), matching_number(g));
                ensure((*alpha, *mu) == (a, m), || format!("claimed (α, μ) = ({alpha}, {mu}), actual ({a}, {m})"))?;
                let n = g.order();
                ensure(*konig_egervary == (a + m == n), || "König–Egerváry flag is wrong".into())?;
                ensure(*bipartite == matches!(g.bipartiteness(), Bipartiteness::Bipartite { .. }), || {
                    "bipartite flag is wrong".into()
                })?;
                if *bipartite {
                    ensure(2 * m < n, || "bipartite graph has a perfect matching".into())?;
                }
                if *konig_egervary {
                    // only a bipartite graph with a perfect matching would qualify
                    return Ok(());
                }
                for &v in cycle {
                    let (h, _) = g.delete_vertices(VertexSet::singleton(v))?;
                    ensure(forest_perfect_matching(&h)?.matching().is_none(), || {
                        format!("G − {v} has a perfect matching")
                    })?;
                    ensure(obstructions.iter().any(|(u, _)| *u == v), || format!("no obstruction recorded for {v}"))?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn pair_validation() {
        let c4 = cycle(4).unwrap();
        let l = Limits::default();
        let good = Certificate::yes(Evidence::DisjointPair {
            alpha: 2,
            first: VertexSet::from([0, 2]),
            second: VertexSet::from([1, 3]),
        });
        good.validate(&c4, &l).unwrap();
        let overlapping = Certificate::yes(Evidence::DisjointPair {
            alpha: 2,
            first: VertexSet::from([0, 2]),
            second: VertexSet::from([0, 2]),
        });
        assert!(overlapping.validate(&c4, &l).is_err());
        let wrong_verdict = Certificate { verdict: Verdict::No, ..good };
        assert!(wrong_verdict.validate(&c4, &l).is_err());
    }

    #[test]
    fn deficit_validation() {
        // K_{1,3}: μ = 1 < α = 3
        let g = star(3).unwrap();
        let cert = Certificate::no(Evidence::AlphaMatchingBipartite {
            alpha: 3,
            matching: Matching::from_edges([(0, 1)]).unwrap(),
            sides: None,
        });
        cert.validate(&g, &Limits::default()).unwrap();
        // C_4 has μ = α
        let bad = Certificate::no(Evidence::AlphaMatchingBipartite {
            alpha: 2,
            matching: Matching::from_edges([(0, 1), (2, 3)]).unwrap(),
            sides: None,
        });
        assert!(bad.validate(&cycle(4).unwrap(), &Limits::default()).is_err());
    }

    #[test]
    fn serialized_shape() {
        let cert = Certificate::no(Evidence::Exhaustion {
            alpha: 3,
            omega_size: 1,
            method: ExhaustionMethod::OmegaPairs,
            checked: 1,
        });
        let json = serde_json::to_string(&cert).unwrap();
        assert_eq!(
            json,
            r#"{"verdict":"no","kind":"exhaustion","alpha":3,"omega_size":1,"method":"omega-pairs","checked":1}"#
        );
        let back: Certificate = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        back.validate(&star(3).unwrap(), &Limits::default()).unwrap();
    }
}
