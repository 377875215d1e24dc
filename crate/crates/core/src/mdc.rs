//! Majority dominator colorings: verification and the exact χ_md solver.
//!
//! A vertex `v` majority-dominates class V_i when
//! `|N[v] ∩ V_i| ≥ ⌈|V_i| / 2⌉`. With the closed neighborhood, a vertex
//! always dominates its own class when that class has at most two members.

use serde::{Deserialize, Serialize};

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_number_within, InvariantResult};
use crate::search::{find_coloring, search_order, Budget, NodeCounter, Rule};

/// Per-class tally reported when a vertex dominates nothing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCount {
    pub color: usize,
    pub size: usize,
    /// |N[v] ∩ V_color|.
    pub in_closed_neighborhood: usize,
    /// ⌈size / 2⌉.
    pub threshold: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Violation {
    NotProper {
        u: usize,
        v: usize,
        color: usize,
    },
    NoDominatedClass {
        vertex: usize,
        counts: Vec<ClassCount>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Valid,
    Invalid(Vec<Violation>),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }

    pub fn violations(&self) -> &[Violation] {
        match self {
            Verdict::Valid => &[],
            Verdict::Invalid(v) => v,
        }
    }
}

#[inline]
fn threshold(size: usize) -> usize {
    size.div_ceil(2)
}

fn check_len(g: &Graph, c: &Coloring) -> Result<()> {
    if c.len() != g.order() {
        return Err(Error::ColoringLengthMismatch {
            coloring: c.len(),
            graph: g.order(),
        });
    }
    Ok(())
}

fn class_counts(g: &Graph, c: &Coloring, v: usize) -> Vec<ClassCount> {
    let closed = g.closed_row(v);
    c.classes()
        .iter()
        .enumerate()
        .map(|(i, cls)| ClassCount {
            color: i + 1,
            size: cls.len(),
            in_closed_neighborhood: (cls.0 & closed).count_ones() as usize,
            threshold: threshold(cls.len()),
        })
        .collect()
}

/// Colors of the classes `v` majority-dominates, ascending. Properness is
/// not required.
pub fn dominated_classes(g: &Graph, c: &Coloring, v: usize) -> Result<Vec<usize>> {
    check_len(g, c)?;
    g.check_vertex(v)?;
    Ok(class_counts(g, c, v)
        .into_iter()
        .filter(|cc| cc.in_closed_neighborhood >= cc.threshold)
        .map(|cc| cc.color)
        .collect())
}

/// Checks properness and the majority domination condition, reporting every
/// violation.
pub fn verify_mdc(g: &Graph, c: &Coloring) -> Result<Verdict> {
    check_len(g, c)?;
    let mut violations: Vec<Violation> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| c.color(u) == c.color(v))
        .map(|(u, v)| Violation::NotProper {
            u,
            v,
            color: c.color(u),
        })
        .collect();
    for v in 0..g.order() {
        let counts = class_counts(g, c, v);
        if counts
            .iter()
            .all(|cc| cc.in_closed_neighborhood < cc.threshold)
        {
            violations.push(Violation::NoDominatedClass { vertex: v, counts });
        }
    }
    Ok(if violations.is_empty() {
        Verdict::Valid
    } else {
        Verdict::Invalid(violations)
    })
}

/// Shorthand for a valid verdict; `false` on length mismatch.
pub fn is_mdc(g: &Graph, c: &Coloring) -> bool {
    matches!(verify_mdc(g, c), Ok(Verdict::Valid))
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k == 0 || k > g.order() {
        return Err(Error::ColorCountOutOfRange { k, n: g.order() });
    }
    Ok(())
}

/// A majority dominator coloring with at most `k` colors, if one exists.
pub fn mdc_feasible(g: &Graph, k: usize) -> Result<Option<Coloring>> {
    mdc_feasible_within(g, k, Budget::UNLIMITED)
}

pub fn mdc_feasible_within(g: &Graph, k: usize, budget: Budget) -> Result<Option<Coloring>> {
    check_k(g, k)?;
    let order = search_order(g);
    let mut counter = NodeCounter::new(budget);
    find_coloring(g, Rule::Majority, k, &order, &mut counter)?
        .map(|colors| {
            let c = Coloring::new(colors)?;
            debug_assert!(is_mdc(g, &c));
            Ok(c)
        })
        .transpose()
}

/// χ_md(G) by ascending scan from χ(G).
pub fn mdc_number(g: &Graph) -> Result<InvariantResult<Coloring>> {
    mdc_number_within(g, Budget::UNLIMITED)
}

/// As [`mdc_number`], failing with [`Error::BudgetExhausted`] once the
/// search (χ included) visits more than the budgeted node count.
pub fn mdc_number_within(g: &Graph, budget: Budget) -> Result<InvariantResult<Coloring>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let chi = chromatic_number_within(g, budget)?;
    let mut counter = NodeCounter::new(budget);
    counter.nodes = chi.nodes;
    let order = search_order(g);
    for k in chi.value..=g.order() {
        if let Some(colors) = find_coloring(g, Rule::Majority, k, &order, &mut counter)? {
            let witness = Coloring::new(colors)?;
            assert!(is_mdc(g, &witness), "solver produced an invalid witness");
            return Ok(InvariantResult {
                value: witness.num_colors(),
                witness,
                nodes: counter.nodes,
            });
        }
    }
    unreachable!("all-distinct coloring is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family_graph, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        family_graph(&spec).unwrap()
    }

    fn col(c: &[usize]) -> Coloring {
        Coloring::new(c.to_vec()).unwrap()
    }

    /// C_14 colors from the non-hereditary example.
    const C14_SEQUENCE: [usize; 14] = [1, 3, 2, 1, 3, 2, 1, 4, 2, 1, 4, 2, 1, 5];

    #[test]
    fn dominated_classes_examples() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(
            dominated_classes(&k3, &col(&[1, 2, 3]), 0).unwrap(),
            vec![1, 2, 3]
        );
        let p3 = fam(FamilySpec::Path(3));
        assert_eq!(
            dominated_classes(&p3, &col(&[1, 2, 1]), 0).unwrap(),
            vec![1, 2]
        );
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(
            dominated_classes(&e3, &col(&[1, 1, 2]), 2).unwrap(),
            vec![2]
        );
        assert!(dominated_classes(&e3, &col(&[1, 1, 2]), 3).is_err());
    }

    #[test]
    fn verify_examples() {
        let c14 = fam(FamilySpec::Cycle(14));
        assert_eq!(
            verify_mdc(&c14, &col(&C14_SEQUENCE)).unwrap(),
            Verdict::Valid
        );
        let p2 = fam(FamilySpec::Path(2));
        let v = verify_mdc(&p2, &col(&[1, 1])).unwrap();
        assert!(matches!(
            v.violations()[0],
            Violation::NotProper {
                u: 0,
                v: 1,
                color: 1
            }
        ));
        let c6 = fam(FamilySpec::Cycle(6));
        assert!(verify_mdc(&c6, &col(&[1, 2, 1, 2, 1, 2]))
            .unwrap()
            .is_valid());
        assert!(verify_mdc(&c6, &col(&[1, 2, 1])).is_err());
    }

    #[test]
    fn violation_reports_counts() {
        // P_6 alternating: endpoints see one member of each 3-class.
        let p6 = fam(FamilySpec::Path(6));
        let v = verify_mdc(&p6, &col(&[1, 2, 1, 2, 1, 2])).unwrap();
        let bad: Vec<usize> = v
            .violations()
            .iter()
            .filter_map(|x| match x {
                Violation::NoDominatedClass { vertex, counts } => {
                    assert!(counts.iter().all(|c| c.threshold == 2 && c.size == 3));
                    Some(*vertex)
                }
                _ => None,
            })
            .collect();
        assert_eq!(bad, vec![0, 5]);
    }

    #[test]
    fn feasibility_examples() {
        let c14 = fam(FamilySpec::Cycle(14));
        assert_eq!(mdc_feasible(&c14, 4).unwrap(), None);
        let chorded = Graph::new(14, &[c14.edges(), vec![(6, 13)]].concat()).unwrap();
        let c = mdc_feasible(&chorded, 4)
            .unwrap()
            .expect("4 colors suffice");
        assert!(is_mdc(&chorded, &c));
        assert_eq!(mdc_feasible(&Graph::complete(4).unwrap(), 3).unwrap(), None);
        assert!(mdc_feasible(&c14, 0).is_err());
        assert!(mdc_feasible(&c14, 15).is_err());
    }

    #[test]
    fn number_examples() {
        assert_eq!(mdc_number(&fam(FamilySpec::Path(7))).unwrap().value, 3);
        assert_eq!(
            mdc_number(&fam(FamilySpec::CompleteBipartite(3, 5)))
                .unwrap()
                .value,
            2
        );
        assert_eq!(mdc_number(&Graph::empty(5).unwrap()).unwrap().value, 3);
        assert_eq!(
            mdc_number(&Graph::empty(0).unwrap()),
            Err(Error::EmptyGraph)
        );
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let c14 = fam(FamilySpec::Cycle(14));
        assert!(matches!(
            mdc_number_within(&c14, Budget::nodes(100)),
            Err(Error::BudgetExhausted { .. })
        ));
    }
}
