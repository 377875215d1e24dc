//! Exact classical invariants: χ, χ_d, γ, α, ν and Δ.

mod chromatic;
mod domination;
mod independence;
mod matching;

use serde::{Deserialize, Serialize};

pub use chromatic::{
    chromatic_number, chromatic_number_within, dominator_chromatic_number,
    dominator_chromatic_number_within, is_dominator_coloring,
};
pub use domination::{domination_number, is_dominating_set};
pub use independence::independence_number;
pub use matching::{is_matching, matching_number};

use crate::error::Result;
use crate::graph::Graph;

/// An invariant value with the certificate that attains it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantResult<W> {
    pub value: usize,
    pub witness: W,
    /// Search nodes visited (zero for polynomial algorithms).
    pub nodes: u64,
}

/// Δ(G).
pub fn max_degree(g: &Graph) -> Result<usize> {
    g.max_degree()
}
