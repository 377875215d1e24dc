//! Checks of the known bounds and characterizations over graph populations.
//!
//! Every check evaluates its members in parallel and merges results in
//! member order, so reports are deterministic. A member whose solves run out
//! of budget is listed under `skipped`, never counted as passing.

mod checks;
pub mod graph6;
pub mod population;

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use checks::*;
pub use graph6::{from_graph6, to_graph6};
pub use population::{enumerate_graphs, random_graph, Connectivity, GraphPopulation, Member};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub graph6: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem_id: String,
    pub population: String,
    /// Members the check applied to and finished within budget.
    pub tested: usize,
    /// graph6 of members abandoned on budget exhaustion.
    pub skipped: Vec<String>,
    pub failures: Vec<Failure>,
    /// graph6 of members attaining the checked bound with equality.
    pub sharp: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} [{}]: {} tested, {} failures, {} skipped, {} sharp",
            self.theorem_id,
            self.population,
            self.tested,
            self.failures.len(),
            self.skipped.len(),
            self.sharp.len()
        )?;
        for x in &self.failures {
            writeln!(
                f,
                "  FAIL {}: expected {}, observed {}",
                x.graph6, x.expected, x.observed
            )?;
        }
        Ok(())
    }
}

/// What one member contributed to a report.
#[derive(Default)]
struct Outcome {
    failures: Vec<(String, String)>,
    sharp: bool,
}

impl Outcome {
    fn expect(&mut self, ok: bool, expected: impl Into<String>, observed: impl FnOnce() -> String) {
        if !ok {
            self.failures.push((expected.into(), observed()));
        }
    }
}

enum Evaluated {
    NotApplicable,
    Done(Outcome),
    Skipped,
}

/// Runs `eval` on every member; `Ok(None)` means the member is outside the
/// check's hypotheses. Errors other than budget exhaustion are failures.
fn run_check(
    theorem_id: &str,
    population: String,
    graphs: &[Graph],
    eval: impl Fn(&Graph) -> Result<Option<Outcome>> + Sync,
) -> CheckReport {
    let results: Vec<Evaluated> = graphs
        .par_iter()
        .map(|g| match eval(g) {
            Ok(None) => Evaluated::NotApplicable,
            Ok(Some(o)) => Evaluated::Done(o),
            Err(Error::BudgetExhausted { .. }) => Evaluated::Skipped,
            Err(e) => Evaluated::Done(Outcome {
                failures: vec![("no error".into(), e.to_string())],
                sharp: false,
            }),
        })
        .collect();
    let mut report = CheckReport {
        theorem_id: theorem_id.to_string(),
        population,
        tested: 0,
        skipped: Vec::new(),
        failures: Vec::new(),
        sharp: Vec::new(),
    };
    for (g, r) in graphs.iter().zip(results) {
        match r {
            Evaluated::NotApplicable => {}
            Evaluated::Skipped => report.skipped.push(to_graph6(g)),
            Evaluated::Done(o) => {
                report.tested += 1;
                if o.sharp {
                    report.sharp.push(to_graph6(g));
                }
                report
                    .failures
                    .extend(o.failures.into_iter().map(|(expected, observed)| Failure {
                        graph6: to_graph6(g),
                        expected,
                        observed,
                    }));
            }
        }
    }
    report
}
