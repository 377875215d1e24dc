use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::InvariantResult;
use crate::search::{find_coloring, search_order, Budget, NodeCounter, Rule};

/// Size of a greedily grown clique, a cheap lower bound on χ.
fn greedy_clique(g: &Graph) -> usize {
    (0..g.order())
        .map(|start| {
            let mut cand = g.neighbors(start).0;
            let mut size = 1;
            while cand != 0 {
                let v = VertexSet(cand)
                    .iter()
                    .max_by_key(|&v| (g.neighbors(v).0 & cand).count_ones())
                    .unwrap();
                size += 1;
                cand &= g.neighbors(v).0;
            }
            size
        })
        .max()
        .unwrap_or(0)
}

fn scan(
    g: &Graph,
    rule: Rule,
    from: usize,
    counter: &mut NodeCounter,
) -> Result<InvariantResult<Coloring>> {
    let order = search_order(g);
    for k in from..=g.order() {
        if let Some(colors) = find_coloring(g, rule, k, &order, counter)? {
            let witness = Coloring::new(colors)?;
            debug_assert_eq!(witness.num_colors(), k);
            return Ok(InvariantResult {
                value: witness.num_colors(),
                witness,
                nodes: counter.nodes,
            });
        }
    }
    unreachable!("n colors always suffice")
}

/// χ(G) by iterative deepening on the color count.
pub fn chromatic_number(g: &Graph) -> Result<InvariantResult<Coloring>> {
    chromatic_number_within(g, Budget::UNLIMITED)
}

pub fn chromatic_number_within(g: &Graph, budget: Budget) -> Result<InvariantResult<Coloring>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    scan(
        g,
        Rule::Proper,
        greedy_clique(g),
        &mut NodeCounter::new(budget),
    )
}

/// χ_d(G), where `v` dominates V_i when V_i ⊆ N[v]. The scan starts at χ(G).
pub fn dominator_chromatic_number(g: &Graph) -> Result<InvariantResult<Coloring>> {
    dominator_chromatic_number_within(g, Budget::UNLIMITED)
}

pub fn dominator_chromatic_number_within(
    g: &Graph,
    budget: Budget,
) -> Result<InvariantResult<Coloring>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut counter = NodeCounter::new(budget);
    let chi = scan(g, Rule::Proper, greedy_clique(g), &mut counter)?.value;
    scan(g, Rule::Dominator, chi, &mut counter)
}

/// Proper, and every closed neighborhood contains a whole color class.
pub fn is_dominator_coloring(g: &Graph, c: &Coloring) -> bool {
    c.is_proper(g) && {
        let classes = c.classes();
        (0..g.order()).all(|v| {
            let closed = g.closed_row(v);
            classes.iter().any(|cls| cls.0 & !closed == 0)
        })
    }
}
