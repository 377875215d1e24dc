use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::population::GraphPopulation;
use super::{run_check, to_graph6, CheckReport, Outcome};
use crate::error::{Error, Result};
use crate::formulas::{
    matching_bound_inputs, witness_from_alpha_bound, witness_from_matching_bound,
};
use crate::graph::{corona_product, Graph, VertexSet};
use crate::invariants::{
    chromatic_number_within, domination_number, dominator_chromatic_number_within,
    independence_number,
};
use crate::mdc::{is_mdc, mdc_number_within};
use crate::search::Budget;

fn graphs(pop: &GraphPopulation) -> Result<Vec<Graph>> {
    Ok(pop.members()?.into_iter().map(|m| m.graph).collect())
}

fn chi_md(g: &Graph, budget: Budget) -> Result<usize> {
    Ok(mdc_number_within(g, budget)?.value)
}

fn chi(g: &Graph, budget: Budget) -> Result<usize> {
    Ok(chromatic_number_within(g, budget)?.value)
}

/// χ ≤ χ_md ≤ χ_d ≤ n and χ_md ≤ χ + γ. Sharp members attain χ_md = χ + γ.
pub fn check_bound_chain(pop: &GraphPopulation, budget: Budget) -> Result<CheckReport> {
    Ok(run_check(
        "bound-chain",
        pop.to_string(),
        &graphs(pop)?,
        |g| {
            let n = g.order();
            let c = chi(g, budget)?;
            let md = chi_md(g, budget)?;
            let d = dominator_chromatic_number_within(g, budget)?.value;
            let gamma = domination_number(g)?.value;
            let mut o = Outcome::default();
            o.expect(
                c <= md && md <= d && d <= n,
                "chi <= chi_md <= chi_d <= n",
                || format!("chi {c}, chi_md {md}, chi_d {d}, n {n}"),
            );
            o.expect(md <= c + gamma, "chi_md <= chi + gamma", || {
                format!("chi_md {md}, chi {c}, gamma {gamma}")
            });
            o.sharp = md == c + gamma;
            Ok(Some(o))
        },
    ))
}

/// χ_md ≤ χ + ⌈α/2⌉ − 1 on connected members, plus soundness of the
/// constructive witness behind it.
pub fn check_alpha_bound(pop: &GraphPopulation, budget: Budget) -> Result<CheckReport> {
    Ok(run_check(
        "alpha-bound",
        pop.to_string(),
        &graphs(pop)?,
        |g| {
            if !g.is_connected() {
                return Ok(None);
            }
            let bound = chi(g, budget)? + independence_number(g)?.value.div_ceil(2) - 1;
            let md = chi_md(g, budget)?;
            let w = witness_from_alpha_bound(g)?;
            let mut o = Outcome::default();
            o.expect(md <= bound, format!("chi_md <= {bound}"), || {
                format!("chi_md {md}")
            });
            o.expect(
                is_mdc(g, &w) && w.num_colors() <= bound,
                format!("witness valid with <= {bound} colors"),
                || format!("{:?}", w.colors()),
            );
            o.sharp = md == bound;
            Ok(Some(o))
        },
    ))
}

/// χ_md ≤ n + 1 − α − ν(complement of G − I) on connected members with
/// n ≥ 2, with I the lexicographically least maximum independent set.
pub fn check_matching_bound(pop: &GraphPopulation, budget: Budget) -> Result<CheckReport> {
    Ok(run_check(
        "matching-bound",
        pop.to_string(),
        &graphs(pop)?,
        |g| {
            let n = g.order();
            if n < 2 || !g.is_connected() {
                return Ok(None);
            }
            let (i, m) = matching_bound_inputs(g)?;
            let bound = n + 1 - i.len() - m.len();
            let md = chi_md(g, budget)?;
            let w = witness_from_matching_bound(g, i, &m)?;
            let mut o = Outcome::default();
            o.expect(md <= bound, format!("chi_md <= {bound}"), || {
                format!("chi_md {md}")
            });
            o.expect(
                is_mdc(g, &w) && w.num_colors() == bound,
                format!("witness valid with {bound} colors"),
                || format!("{:?}", w.colors()),
            );
            o.sharp = md == bound;
            Ok(Some(o))
        },
    ))
}

/// K_1 or the edgeless graph on two vertices.
pub fn is_k1_or_two_isolated(g: &Graph) -> bool {
    (g.order() == 1 || g.order() == 2) && g.edge_count() == 0
}

/// Whether some bipartition (X, Y) with 1 ≤ |X| ≤ |Y| meets one of:
/// (i) |Y| ≤ 2; (ii) |X| ≤ 2 < |Y| and no vertex of Y is isolated;
/// (iii) |X| ≥ 3, 2·d(x) ≥ |Y| on X and 2·d(y) ≥ |X| on Y.
///
/// Components can be flipped independently, so for each candidate size of
/// X this is a subset-sum over component orientations whose vertices all
/// satisfy their side's degree condition.
pub fn bipartite_value_two_condition(g: &Graph) -> bool {
    let n = g.order();
    let Some(side) = g.bipartition() else {
        return false;
    };
    let comps: Vec<(VertexSet, VertexSet)> = g
        .components()
        .into_iter()
        .map(|c| (VertexSet(c.0 & side.0), VertexSet(c.0 & !side.0)))
        .collect();
    (1..=n / 2).any(|x| {
        let y = n - x;
        let ok = |v: usize, in_x: bool| {
            let d2 = 2 * g.degree(v);
            match (y <= 2, x <= 2) {
                (true, _) => true,
                (false, true) => in_x || d2 >= 2,
                (false, false) => d2 >= if in_x { y } else { x },
            }
        };
        let fits = |to_x: VertexSet, to_y: VertexSet| {
            to_x.iter().all(|v| ok(v, true)) && to_y.iter().all(|v| ok(v, false))
        };
        // reachable[s]: some valid orientation of the components so far puts s vertices in X
        let mut reachable = vec![false; n + 1];
        reachable[0] = true;
        for &(a, b) in &comps {
            let mut next = vec![false; n + 1];
            for s in (0..=n).filter(|&s| reachable[s]) {
                if fits(a, b) && s + a.len() <= n {
                    next[s + a.len()] = true;
                }
                if fits(b, a) && s + b.len() <= n {
                    next[s + b.len()] = true;
                }
            }
            reachable = next;
        }
        reachable[x]
    })
}

/// χ_md = 1 exactly for K_1 and two isolated vertices; χ_md = 2 exactly for
/// the other graphs meeting [`bipartite_value_two_condition`].
pub fn check_small_value_characterizations(
    pop: &GraphPopulation,
    budget: Budget,
) -> Result<CheckReport> {
    Ok(run_check(
        "small-values",
        pop.to_string(),
        &graphs(pop)?,
        |g| {
            let md = chi_md(g, budget)?;
            let one = is_k1_or_two_isolated(g);
            let two = !one && bipartite_value_two_condition(g);
            let mut o = Outcome::default();
            o.expect((md == 1) == one, format!("chi_md = 1 iff {one}"), || {
                format!("chi_md {md}")
            });
            o.expect((md == 2) == two, format!("chi_md = 2 iff {two}"), || {
                format!("chi_md {md}")
            });
            Ok(Some(o))
        },
    ))
}

/// Whether the missing edges of `g` form a star with 1..=n−2 edges, i.e.
/// `g` is K_n minus some edges at a single vertex that stays connected.
pub fn complement_is_small_star(g: &Graph) -> bool {
    let n = g.order();
    let missing = g.complement().edges();
    if missing.is_empty() || missing.len() > n.saturating_sub(2) {
        return false;
    }
    let (a, b) = missing[0];
    [a, b]
        .iter()
        .any(|&c| missing.iter().all(|&(u, v)| u == c || v == c))
}

/// χ_md = n iff complete; on connected members of order ≥ 3, χ_md = n − 1
/// iff [`complement_is_small_star`]; on connected members, Δ ≥ n − 2
/// forces χ_md = χ.
pub fn check_large_value_characterizations(
    pop: &GraphPopulation,
    budget: Budget,
) -> Result<CheckReport> {
    Ok(run_check(
        "large-values",
        pop.to_string(),
        &graphs(pop)?,
        |g| {
            let n = g.order();
            let md = chi_md(g, budget)?;
            let mut o = Outcome::default();
            let complete = g.is_complete();
            o.expect(
                (md == n) == complete,
                format!("chi_md = n iff {complete}"),
                || format!("chi_md {md}, n {n}"),
            );
            if g.is_connected() && n >= 3 {
                let star = complement_is_small_star(g);
                o.expect(
                    (md == n - 1) == star,
                    format!("chi_md = n - 1 iff {star}"),
                    || format!("chi_md {md}, n {n}"),
                );
            }
            if g.is_connected() && g.max_degree()? + 2 >= n {
                let c = chi(g, budget)?;
                o.expect(md == c, "chi_md = chi when max degree >= n - 2", || {
                    format!("chi_md {md}, chi {c}")
                });
            }
            Ok(Some(o))
        },
    ))
}

/// χ_md of each component, in component order.
pub fn component_values(g: &Graph, budget: Budget) -> Result<Vec<usize>> {
    g.components()
        .into_iter()
        .map(|c| chi_md(&g.induced_subgraph(c)?.0, budget))
        .collect()
}

/// max_j χ_md(G_j) ≤ χ_md(G) ≤ Σ_j χ_md(G_j) on members with at least two
/// components. Sharp members attain either side.
pub fn check_disconnected_bounds(pop: &GraphPopulation, budget: Budget) -> Result<CheckReport> {
    Ok(run_check(
        "disconnected-bounds",
        pop.to_string(),
        &graphs(pop)?,
        |g| {
            if g.components().len() < 2 {
                return Ok(None);
            }
            let parts = component_values(g, budget)?;
            let (lo, hi) = (*parts.iter().max().unwrap(), parts.iter().sum::<usize>());
            let md = chi_md(g, budget)?;
            let mut o = Outcome::default();
            o.expect(
                lo <= md && md <= hi,
                format!("{lo} <= chi_md <= {hi}"),
                || format!("chi_md {md}"),
            );
            o.sharp = md == lo || md == hi;
            Ok(Some(o))
        },
    ))
}

/// χ_md(G ∘ K_1) = ⌈n/2⌉ + 1 for each connected bipartite `g` of order ≥ 2.
pub fn check_bipartite_corona(graphs: &[Graph], budget: Budget) -> Result<CheckReport> {
    if let Some(bad) = graphs
        .iter()
        .find(|g| g.order() < 2 || !g.is_connected() || !g.is_bipartite())
    {
        return Err(Error::InvalidWitnessInput(format!(
            "{} is not a connected bipartite graph of order >= 2",
            to_graph6(bad)
        )));
    }
    let label = format!("{} explicit graphs", graphs.len());
    let k1 = Graph::complete(1)?;
    Ok(run_check("bipartite-corona", label, graphs, |g| {
        let expected = g.order().div_ceil(2) + 1;
        let md = chi_md(&corona_product(g, &k1)?, budget)?;
        let mut o = Outcome::default();
        o.expect(
            md == expected,
            format!("chi_md(G o K1) = {expected}"),
            || format!("{md}"),
        );
        o.sharp = true;
        Ok(Some(o))
    }))
}

/// max{χ, ⌈n/2⌉ + 1} ≤ χ_md(G ∘ K_1) ≤ χ + ⌈n/2⌉ − 1 on connected members of
/// order ≥ 2. Sharp members attain the upper end.
pub fn check_corona_sandwich(pop: &GraphPopulation, budget: Budget) -> Result<CheckReport> {
    let k1 = Graph::complete(1)?;
    Ok(run_check(
        "corona-sandwich",
        pop.to_string(),
        &graphs(pop)?,
        |g| {
            let n = g.order();
            if n < 2 || !g.is_connected() {
                return Ok(None);
            }
            let c = chi(g, budget)?;
            let (lo, hi) = (c.max(n.div_ceil(2) + 1), c + n.div_ceil(2) - 1);
            let md = chi_md(&corona_product(g, &k1)?, budget)?;
            let mut o = Outcome::default();
            o.expect(
                lo <= md && md <= hi,
                format!("{lo} <= chi_md(G o K1) <= {hi}"),
                || format!("{md}"),
            );
            o.sharp = md == hi;
            Ok(Some(o))
        },
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exploration {
    pub population: String,
    pub tested: usize,
    pub skipped: Vec<String>,
    /// graph6 of members with χ_md = χ_d.
    pub matches: Vec<String>,
}

/// Search aid: lists the members with χ_md = χ_d. Asserts nothing.
pub fn explore_equality_chi_d(pop: &GraphPopulation, budget: Budget) -> Result<Exploration> {
    let members = graphs(pop)?;
    let results: Vec<Result<bool>> = members
        .par_iter()
        .map(|g| Ok(chi_md(g, budget)? == dominator_chromatic_number_within(g, budget)?.value))
        .collect();
    let mut out = Exploration {
        population: pop.to_string(),
        tested: 0,
        skipped: Vec::new(),
        matches: Vec::new(),
    };
    for (g, r) in members.iter().zip(results) {
        match r {
            Ok(eq) => {
                out.tested += 1;
                if eq {
                    out.matches.push(to_graph6(g));
                }
            }
            Err(Error::BudgetExhausted { .. }) => out.skipped.push(to_graph6(g)),
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family_graph, FamilySpec};
    use crate::harness::Connectivity;

    fn fam(spec: FamilySpec) -> Graph {
        family_graph(&spec).unwrap()
    }

    fn one(g: Graph) -> GraphPopulation {
        GraphPopulation::explicit(vec![g])
    }

    const B: Budget = Budget::UNLIMITED;

    #[test]
    fn value_two_condition_examples() {
        assert!(bipartite_value_two_condition(&fam(
            FamilySpec::CompleteBipartite(2, 7)
        )));
        assert!(!bipartite_value_two_condition(&fam(FamilySpec::Cycle(5))));
        assert!(bipartite_value_two_condition(&fam(FamilySpec::Cycle(6))));
        // P_6 alternating fails at the endpoints: degree 1 < 3/2.
        assert!(!bipartite_value_two_condition(&fam(FamilySpec::Path(6))));
        assert!(bipartite_value_two_condition(&Graph::empty(4).unwrap()));
        assert!(!bipartite_value_two_condition(&Graph::empty(5).unwrap()));
        // K_2 plus an isolated vertex: X = {isolated, one end} has size 2.
        assert!(bipartite_value_two_condition(
            &Graph::new(3, &[(0, 1)]).unwrap()
        ));
    }

    #[test]
    fn small_star_complements() {
        let k5 = Graph::complete(5).unwrap();
        let minus_one = Graph::new(
            5,
            &k5.edges()
                .into_iter()
                .filter(|&e| e != (0, 1))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(complement_is_small_star(&minus_one));
        let minus_two_disjoint = Graph::new(
            5,
            &k5.edges()
                .into_iter()
                .filter(|&e| e != (0, 1) && e != (2, 3))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(!complement_is_small_star(&minus_two_disjoint));
        assert!(!complement_is_small_star(&k5));
        assert!(!complement_is_small_star(&fam(FamilySpec::Star(6))));
    }

    #[test]
    fn single_graph_reports() {
        let r = check_bound_chain(&one(Graph::complete(6).unwrap()), B).unwrap();
        assert!(r.passed() && r.tested == 1);
        let r = check_alpha_bound(&one(fam(FamilySpec::CoronaCycleK1(4))), B).unwrap();
        assert!(r.passed());
        assert_eq!(r.sharp.len(), 1);
        let r = check_matching_bound(&one(Graph::complete(5).unwrap()), B).unwrap();
        assert_eq!(r.sharp.len(), 1);
        let r = check_alpha_bound(&one(Graph::empty(3).unwrap()), B).unwrap();
        assert_eq!(r.tested, 0);
    }

    #[test]
    fn budget_exhaustion_is_reported_as_skipped() {
        let r = check_bound_chain(&one(fam(FamilySpec::Cycle(14))), Budget::nodes(50)).unwrap();
        assert_eq!(r.tested, 0);
        assert_eq!(r.skipped.len(), 1);
        assert!(r.passed());
    }

    #[test]
    fn corona_checks() {
        let graphs = vec![
            fam(FamilySpec::Path(3)),
            fam(FamilySpec::Cycle(4)),
            fam(FamilySpec::Path(5)),
        ];
        let r = check_bipartite_corona(&graphs, B).unwrap();
        assert!(r.passed() && r.tested == 3, "{r}");
        assert!(check_bipartite_corona(&[fam(FamilySpec::Cycle(5))], B).is_err());
        let r = check_corona_sandwich(&one(fam(FamilySpec::Cycle(5))), B).unwrap();
        assert!(r.passed() && r.tested == 1);
    }

    #[test]
    fn exhaustive_small_suites_pass() {
        let pop = GraphPopulation::exhaustive(4);
        for r in [
            check_bound_chain(&pop, B).unwrap(),
            check_small_value_characterizations(&pop, B).unwrap(),
            check_disconnected_bounds(&pop, B).unwrap(),
            check_large_value_characterizations(
                &pop.clone().with_filter(Connectivity::Connected),
                B,
            )
            .unwrap(),
        ] {
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn explorer_includes_complete_graphs() {
        let pop =
            GraphPopulation::explicit(vec![Graph::complete(4).unwrap(), fam(FamilySpec::Path(6))]);
        let e = explore_equality_chi_d(&pop, B).unwrap();
        assert_eq!(e.tested, 2);
        assert!(e.matches.contains(&to_graph6(&Graph::complete(4).unwrap())));
    }
}
