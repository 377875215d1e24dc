//! Exact computation of the majority dominator chromatic number χ_md.
//!
//! A *majority dominator coloring* is a proper coloring in which every
//! vertex has, in its closed neighborhood, at least half of the members of
//! some color class. This crate provides the verifier and an exact solver,
//! the classical invariants the known bounds are phrased in (χ, χ_d, γ, α,
//! ν), closed forms with explicit witnesses for standard graph families, and
//! a harness that checks the bounds and characterizations over exhaustive
//! and random graph populations.

pub mod coloring;
pub mod error;
pub mod family;
pub mod formulas;
pub mod graph;
pub mod harness;
pub mod invariants;
pub mod mdc;
pub mod oracle;
mod search;

pub use coloring::Coloring;
pub use error::{Error, Result};
pub use family::{family_graph, FamilySpec};
pub use formulas::{chi_md_closed_form, witness_coloring, FormulaResult};
pub use graph::{corona_product, strong_product, Graph, VertexSet, MAX_ORDER};
pub use invariants::InvariantResult;
pub use mdc::{
    dominated_classes, mdc_feasible, mdc_number, mdc_number_within, verify_mdc, Verdict, Violation,
};
pub use search::Budget;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::graph::Graph;

    /// Naive isomorphism test by extending a partial vertex map.
    pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn go(a: &Graph, b: &Graph, perm: &mut Vec<usize>, used: u64) -> bool {
            let i = perm.len();
            if i == a.order() {
                return true;
            }
            for j in 0..b.order() {
                if used & (1 << j) != 0 {
                    continue;
                }
                if (0..i).all(|p| a.has_edge(p, i) == b.has_edge(perm[p], j)) {
                    perm.push(j);
                    if go(a, b, perm, used | (1 << j)) {
                        return true;
                    }
                    perm.pop();
                }
            }
            false
        }
        a.order() == b.order() && a.edge_count() == b.edge_count() && go(a, b, &mut Vec::new(), 0)
    }
}
