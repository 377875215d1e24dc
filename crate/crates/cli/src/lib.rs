//! Front end for the `mdcolor` binary: graph input, commands and report
//! rendering. `main.rs` only maps flags onto [`RunConfig`].

pub mod input;

use std::path::PathBuf;

use anyhow::Result;
use mdcolor::harness::{self, CheckReport, Connectivity, GraphPopulation};
use mdcolor::invariants::{
    chromatic_number_within, domination_number, dominator_chromatic_number_within,
    independence_number, matching_number,
};
use mdcolor::{
    chi_md_closed_form, family_graph, mdc_number_within, verify_mdc, Budget, Coloring, Error,
    FamilySpec, Graph, Verdict,
};
use serde::Serialize;
use serde_json::json;

use input::{coloring_for, parse_graph_file, read_coloring, GraphFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphSource {
    File { path: PathBuf, format: GraphFormat },
    Family(FamilySpec),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    BoundChain,
    AlphaBound,
    MatchingBound,
    SmallValues,
    LargeValues,
    DisconnectedBounds,
    BipartiteCorona,
    CoronaSandwich,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::BoundChain,
        Suite::AlphaBound,
        Suite::MatchingBound,
        Suite::SmallValues,
        Suite::LargeValues,
        Suite::DisconnectedBounds,
        Suite::BipartiteCorona,
        Suite::CoronaSandwich,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BoundChain => "bound-chain",
            Suite::AlphaBound => "alpha-bound",
            Suite::MatchingBound => "matching-bound",
            Suite::SmallValues => "small-values",
            Suite::LargeValues => "large-values",
            Suite::DisconnectedBounds => "disconnected-bounds",
            Suite::BipartiteCorona => "bipartite-corona",
            Suite::CoronaSandwich => "corona-sandwich",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Command {
    Solve(GraphSource),
    Verify {
        graph: GraphSource,
        coloring: PathBuf,
    },
    Family(FamilySpec),
    Check {
        suites: Vec<Suite>,
        /// Exhaustive population order limit.
        max_n: usize,
        /// Samples per (order, probability) in the random population; 0 skips it.
        samples: usize,
    },
    Explore {
        max_n: usize,
    },
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub format: OutputFormat,
    /// Node budget per solve; `None` is unlimited.
    pub budget: Option<u64>,
    pub seed: u64,
}

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Violation = 1,
    InputError = 2,
    BudgetExhausted = 3,
}

#[derive(Debug)]
pub struct Report {
    pub status: Status,
    /// Primary output (stdout or `--output`).
    pub body: String,
    /// Warnings and error messages.
    pub diagnostics: Vec<String>,
}

impl Report {
    fn input_error(e: anyhow::Error) -> Report {
        Report {
            status: Status::InputError,
            body: String::new(),
            diagnostics: vec![format!("error: {e:#}")],
        }
    }
}

fn load(source: &GraphSource, diagnostics: &mut Vec<String>) -> Result<Graph> {
    match source {
        GraphSource::File { path, format } => {
            let parsed = parse_graph_file(path, *format)?;
            diagnostics.extend(parsed.warnings.into_iter().map(|w| format!("warning: {w}")));
            Ok(parsed.graph)
        }
        GraphSource::Family(spec) => Ok(family_graph(spec)?),
    }
}

pub fn run(config: &RunConfig) -> Report {
    let budget = config.budget.map_or(Budget::UNLIMITED, Budget::nodes);
    let json = config.format == OutputFormat::Json;
    let mut diagnostics = Vec::new();
    let result = match &config.command {
        Command::Solve(source) => {
            load(source, &mut diagnostics).and_then(|g| solve(&g, budget, json))
        }
        Command::Verify { graph, coloring } => load(graph, &mut diagnostics).and_then(|g| {
            let labels = read_coloring(coloring)?;
            Ok(verify(&g, labels, json))
        }),
        Command::Family(spec) => family(spec, json),
        Command::Check {
            suites,
            max_n,
            samples,
        } => check(suites, *max_n, *samples, config.seed, budget, json),
        Command::Explore { max_n } => explore(*max_n, budget, json),
    };
    match result {
        Ok((status, body)) => Report {
            status,
            body,
            diagnostics,
        },
        Err(e) => {
            let mut r = Report::input_error(e);
            diagnostics.append(&mut r.diagnostics);
            r.diagnostics = diagnostics;
            r
        }
    }
}

fn classes_text(c: &Coloring) -> String {
    c.classes()
        .iter()
        .enumerate()
        .map(|(i, cls)| format!("  {}: {:?}", i + 1, cls.to_vec()))
        .collect::<Vec<_>>()
        .join("\n")
}

fn colors_text(c: &Coloring) -> String {
    c.colors()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Serialize)]
struct Bounds {
    chi: Option<usize>,
    chi_d: Option<usize>,
    gamma: usize,
    alpha: usize,
    matching: usize,
}

/// `None` for a solve that ran out of budget.
fn budgeted<T>(r: mdcolor::Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExhausted { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn opt(v: Option<usize>) -> String {
    v.map_or("undecided".into(), |x| x.to_string())
}

fn solve(g: &Graph, budget: Budget, json: bool) -> Result<(Status, String)> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph.into());
    }
    let md = budgeted(mdc_number_within(g, budget))?;
    let bounds = Bounds {
        chi: budgeted(chromatic_number_within(g, budget))?.map(|r| r.value),
        chi_d: budgeted(dominator_chromatic_number_within(g, budget))?.map(|r| r.value),
        gamma: domination_number(g)?.value,
        alpha: independence_number(g)?.value,
        matching: matching_number(g).value,
    };
    let status = if md.is_some() {
        Status::Ok
    } else {
        Status::BudgetExhausted
    };
    let body = if json {
        let out = json!({
            "n": g.order(),
            "m": g.edge_count(),
            "chi_md": md.as_ref().map(|r| r.value),
            "coloring": md.as_ref().map(|r| r.witness.colors()),
            "bounds": bounds,
            "stats": {
                "nodes": md.as_ref().map(|r| r.nodes),
                "status": if md.is_some() { "ok" } else { "budget_exhausted" },
            },
        });
        serde_json::to_string_pretty(&out)? + "\n"
    } else {
        let mut s = format!("n {}, m {}\n", g.order(), g.edge_count());
        match &md {
            Some(r) => {
                s += &format!(
                    "chi_md {}\ncoloring {}\nclasses\n{}\n",
                    r.value,
                    colors_text(&r.witness),
                    classes_text(&r.witness)
                );
                s += &format!("nodes {}\n", r.nodes);
            }
            None => s += "chi_md undecided (node budget exhausted)\n",
        }
        s += &format!(
            "chi {} <= chi_md <= chi_d {} <= n {}\ngamma {}, alpha {}, matching {}\n",
            opt(bounds.chi),
            opt(bounds.chi_d),
            g.order(),
            bounds.gamma,
            bounds.alpha,
            bounds.matching
        );
        s
    };
    Ok((status, body))
}

fn verify(g: &Graph, labels: Vec<usize>, json: bool) -> (Status, String) {
    let verdict = coloring_for(g, labels).map(|c| verify_mdc(g, &c).expect("length checked"));
    let ok = matches!(verdict, Ok(Verdict::Valid));
    let body = match (&verdict, json) {
        (Ok(v), true) => json!({"ok": ok, "violations": v.violations()}).to_string() + "\n",
        (Err(msg), true) => json!({"ok": false, "error": msg}).to_string() + "\n",
        (Ok(Verdict::Valid), false) => "ok\n".to_string(),
        (Ok(v), false) => {
            let mut s = String::from("invalid\n");
            for x in v.violations() {
                s += &format!("  {}\n", serde_json::to_string(x).expect("serializable"));
            }
            s
        }
        (Err(msg), false) => format!("invalid coloring: {msg}\n"),
    };
    (if ok { Status::Ok } else { Status::Violation }, body)
}

fn family(spec: &FamilySpec, json: bool) -> Result<(Status, String)> {
    let r = chi_md_closed_form(spec)?;
    let g = family_graph(spec)?;
    let verified = verify_mdc(&g, &r.witness)?.is_valid();
    let body = if json {
        json!({
            "spec": spec.to_string(),
            "n": g.order(),
            "m": g.edge_count(),
            "chi_md": r.value,
            "coloring": r.witness.colors(),
            "construction": r.provenance,
            "verified": verified,
        })
        .to_string()
            + "\n"
    } else {
        format!(
            "{spec}: chi_md {}\ncoloring {}\nconstruction: {}\nverified: {}\n",
            r.value,
            colors_text(&r.witness),
            r.provenance,
            if verified { "ok" } else { "FAILED" }
        )
    };
    Ok((
        if verified {
            Status::Ok
        } else {
            Status::Violation
        },
        body,
    ))
}

fn check(
    suites: &[Suite],
    max_n: usize,
    samples: usize,
    seed: u64,
    budget: Budget,
    json: bool,
) -> Result<(Status, String)> {
    let suites = if suites.is_empty() {
        &Suite::ALL[..]
    } else {
        suites
    };
    let mut pops = vec![GraphPopulation::exhaustive(max_n)];
    if samples > 0 {
        pops.push(GraphPopulation::random(
            (7..=12).collect(),
            vec![0.2, 0.5, 0.8],
            samples,
            seed,
        ));
    }
    let mut reports: Vec<CheckReport> = Vec::new();
    for &suite in suites {
        for pop in &pops {
            let connected = pop.clone().with_filter(Connectivity::Connected);
            let r = match suite {
                Suite::BoundChain => harness::check_bound_chain(pop, budget)?,
                Suite::AlphaBound => harness::check_alpha_bound(&connected, budget)?,
                Suite::MatchingBound => harness::check_matching_bound(&connected, budget)?,
                Suite::SmallValues => harness::check_small_value_characterizations(pop, budget)?,
                Suite::LargeValues => {
                    harness::check_large_value_characterizations(&connected, budget)?
                }
                Suite::DisconnectedBounds => harness::check_disconnected_bounds(pop, budget)?,
                Suite::CoronaSandwich => harness::check_corona_sandwich(&connected, budget)?,
                Suite::BipartiteCorona => {
                    let graphs: Vec<Graph> = connected
                        .members()?
                        .into_iter()
                        .map(|m| m.graph)
                        .filter(|g| g.order() >= 2 && g.is_bipartite())
                        .collect();
                    let mut r = harness::check_bipartite_corona(&graphs, budget)?;
                    r.population = format!("{connected}, bipartite, order >= 2");
                    r
                }
            };
            reports.push(r);
        }
    }
    let status = if reports.iter().all(CheckReport::passed) {
        Status::Ok
    } else {
        Status::Violation
    };
    let body = if json {
        serde_json::to_string_pretty(&reports)? + "\n"
    } else {
        reports.iter().map(ToString::to_string).collect()
    };
    Ok((status, body))
}

fn explore(max_n: usize, budget: Budget, json: bool) -> Result<(Status, String)> {
    let e = harness::explore_equality_chi_d(&GraphPopulation::exhaustive(max_n), budget)?;
    let body = if json {
        serde_json::to_string_pretty(&e)? + "\n"
    } else {
        let mut s = format!(
            "chi_md = chi_d on {} of {} graphs ({}; {} skipped)\n",
            e.matches.len(),
            e.tested,
            e.population,
            e.skipped.len()
        );
        for g6 in &e.matches {
            s += g6;
            s.push('\n');
        }
        s
    };
    Ok((Status::Ok, body))
}
