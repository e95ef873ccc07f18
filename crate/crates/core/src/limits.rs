use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Size caps for the exponential routines. Exceeding one is an error, never
/// a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest graph handed to enumeration of independent sets.
    pub max_n: usize,
    /// Largest `|Ω(G)|` that will be materialised.
    pub max_omega: usize,
    /// Above this many maximum independent sets, the disjoint-pair decision
    /// switches from pairwise comparison to `α(G − S) = α(G)` per set.
    pub pairing_threshold: usize,
    /// Largest graph for the subset searches behind conditions (iii)–(v).
    pub max_subset_n: usize,
    /// Largest `2^|S|` witness family to build.
    pub max_witnesses: usize,
    /// Largest graph for induced odd-cycle corona detection.
    pub max_pattern_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 30,
            max_omega: 1_000_000,
            pairing_threshold: 10_000,
            max_subset_n: 16,
            max_witnesses: 1 << 16,
            max_pattern_n: 20,
        }
    }
}

impl Limits {
    pub fn check_order(&self, g: &Graph) -> Result<()> {
        if g.order() > self.max_n {
            return Err(Error::cap("vertex count", self.max_n, g.order()));
        }
        Ok(())
    }
}
