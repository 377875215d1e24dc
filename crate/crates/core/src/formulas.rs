//! Closed-form χ_md values for graph families, with explicit witness
//! colorings, plus the two general constructions behind the independence
//! and matching upper bounds.

use serde::Serialize;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::graph::{Graph, VertexSet};
use crate::invariants::{chromatic_number, independence_number, matching_number};
use crate::mdc::is_mdc;

/// Optimal colorings of P_1 .. P_13, listed along the path.
pub const PATH_SEQUENCES: [&[usize]; 13] = [
    &[1],
    &[1, 2],
    &[1, 2, 1],
    &[1, 2, 1, 2],
    &[1, 2, 1, 2, 1],
    &[1, 2, 1, 2, 1, 3],
    &[3, 1, 2, 1, 2, 1, 3],
    &[3, 1, 2, 1, 2, 1, 2, 3],
    &[3, 1, 2, 1, 2, 1, 2, 3, 1],
    &[3, 1, 2, 1, 2, 1, 2, 1, 3, 2],
    &[3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 3],
    &[3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 3, 4],
    &[1, 2, 1, 2, 1, 3, 1, 3, 1, 4, 1, 4, 1],
];

/// C_11 with four colors. S_11 starts and ends with color 3, so it cannot
/// be closed into a cycle.
const CYCLE_11: [usize; 11] = [3, 4, 1, 2, 1, 2, 1, 2, 1, 2, 4];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormulaResult {
    pub value: usize,
    pub witness: Coloring,
    /// Which construction produced the witness.
    pub provenance: &'static str,
}

/// χ_md of P_n.
pub fn path_value(n: usize) -> usize {
    match n {
        1 => 1,
        2..=5 => 2,
        6..=10 => 3,
        11..=13 => 4,
        _ => n.div_ceil(6) + 2,
    }
}

/// χ_md of C_n (n ≥ 3). At n = 13 this is 5, one more than the 11..13
/// plateau of the path table.
pub fn cycle_value(n: usize) -> usize {
    match n {
        4 | 6 | 8 => 2,
        3 | 5 | 7 | 9 | 10 => 3,
        11 | 12 => 4,
        _ => n.div_ceil(6) + 2,
    }
}

/// Colors v_1..v_n for n ≥ 13: color 1 on every third vertex, color 2 on
/// the vertices before them, and each color ≥ 3 on exactly two vertices.
fn mod3_sequence(n: usize) -> Vec<usize> {
    (1..=n)
        .map(|i| match i % 3 {
            0 => 1,
            1 if i != n => 2,
            1 => n.div_ceil(6) + 2,
            _ => i.div_ceil(6) + 2,
        })
        .collect()
}

fn path_witness(n: usize) -> (Vec<usize>, &'static str) {
    if n <= 13 {
        (PATH_SEQUENCES[n - 1].to_vec(), "explicit path sequence")
    } else {
        (mod3_sequence(n), "mod-3 path construction")
    }
}

fn cycle_witness(n: usize) -> (Vec<usize>, &'static str) {
    match n {
        4 | 6 | 8 => (
            (0..n).map(|i| i % 2 + 1).collect(),
            "alternating 2-coloring",
        ),
        3 | 5 | 7 | 9 => {
            let mut c: Vec<usize> = (0..n).map(|i| i % 2 + 1).collect();
            c[n - 1] = 3;
            (c, "alternating coloring with one singleton class")
        }
        10 | 12 => (
            PATH_SEQUENCES[n - 1].to_vec(),
            "path sequence closed into a cycle",
        ),
        11 => (CYCLE_11.to_vec(), "explicit cycle sequence"),
        _ => (
            mod3_sequence(n),
            "mod-3 path construction closed into a cycle",
        ),
    }
}

/// Keeps the two lowest members of `class` on their color and pairs the rest
/// (ascending) into fresh colors `next, next+1, ...`.
fn split_into_pairs(colors: &mut [usize], class: VertexSet, next: usize) {
    for (i, v) in class.iter().skip(2).enumerate() {
        colors[v] = next + i / 2;
    }
}

fn corona_cycle_witness(n: usize) -> (Vec<usize>, &'static str) {
    // v_i at index i-1, its pendant u_i at index n+i-1.
    let v = |i: usize| i - 1;
    let u = |i: usize| n + i - 1;
    let mut c = vec![0; 2 * n];
    if n.is_multiple_of(2) {
        for i in 1..=n {
            let odd = i % 2 == 1;
            c[v(i)] = if odd { 1 } else { 2 };
            c[u(i)] = if odd { 2 } else { 1 };
        }
        let class2 = VertexSet::from_vertices((0..2 * n).filter(|&x| c[x] == 2));
        split_into_pairs(&mut c, class2, 3);
        (c, "maximal independent class split into pairs")
    } else {
        let top = n.div_ceil(2) + 1;
        for i in 1..=(n - 1) / 2 {
            c[v(2 * i + 1)] = i;
            c[u(2 * i)] = i;
            c[v(2 * i)] = top;
            c[u(2 * i - 1)] = top;
        }
        c[v(1)] = n.div_ceil(2);
        c[u(n)] = n.div_ceil(2);
        (c, "odd corona pairing")
    }
}

fn double_star_witness(a: usize, b: usize) -> (Vec<usize>, &'static str) {
    // u = 0, v = 1, X = 2..a+1, Y = a+1..a+b
    let mut c = vec![0; a + b];
    if a == 2 || b == 2 {
        c[1] = 1;
        c[0] = 2;
        c[2..a + 1].iter_mut().for_each(|x| *x = 1);
        c[a + 1..].iter_mut().for_each(|y| *y = 2);
        (c, "bipartition coloring")
    } else {
        c[0] = 1;
        c[1] = 2;
        c[2..].iter_mut().for_each(|x| *x = 3);
        (c, "centers as singletons, all leaves shared")
    }
}

fn multistar_witness(a: &[usize]) -> (Vec<usize>, &'static str) {
    let n = a.len();
    let mut c: Vec<usize> = (1..=n).collect();
    match (0..n).rev().find(|&i| a[i] < n) {
        Some(i) => {
            // Pendants of x_i take distinct colors of the other clique
            // vertices; all other pendants take x_i's color.
            let mut others = (0..n).filter(|&j| j != i).map(|j| j + 1);
            for (j, &count) in a.iter().enumerate() {
                for _ in 0..count {
                    c.push(if j == i {
                        others.next().unwrap()
                    } else {
                        i + 1
                    });
                }
            }
            (c, "clique coloring with one short pendant block")
        }
        None => {
            c.extend(std::iter::repeat_n(n + 1, a.iter().sum()));
            (c, "clique coloring plus one pendant color")
        }
    }
}

/// The closed-form χ_md of `spec`.
pub fn closed_form_value(spec: &FamilySpec) -> Result<usize> {
    spec.validate()?;
    Ok(match *spec {
        FamilySpec::Empty(n) => n.div_ceil(2),
        FamilySpec::Complete(n) => n,
        FamilySpec::Path(n) => path_value(n),
        FamilySpec::Cycle(n) => cycle_value(n),
        FamilySpec::CompleteBipartite(..) | FamilySpec::Star(_) => 2,
        FamilySpec::DoubleStar(a, b) => {
            if a >= 3 && b >= 3 {
                3
            } else {
                2
            }
        }
        FamilySpec::Multistar(ref a) => {
            let n = a.len();
            if a.iter().any(|&x| x < n) {
                n
            } else {
                n + 1
            }
        }
        FamilySpec::Wheel(n) => {
            if n % 2 == 0 {
                3
            } else {
                4
            }
        }
        FamilySpec::CoronaCycleK1(n) => n.div_ceil(2) + 1,
    })
}

fn witness_labels(spec: &FamilySpec) -> (Vec<usize>, &'static str) {
    match *spec {
        FamilySpec::Empty(n) => (
            (0..n).map(|v| v / 2 + 1).collect(),
            "pairs of isolated vertices",
        ),
        FamilySpec::Complete(n) => ((1..=n).collect(), "all colors distinct"),
        FamilySpec::Path(n) => path_witness(n),
        FamilySpec::Cycle(n) => cycle_witness(n),
        FamilySpec::CompleteBipartite(m, n) => {
            let mut c = vec![1; m];
            c.extend(std::iter::repeat_n(2, n));
            (c, "bipartition coloring")
        }
        FamilySpec::Star(n) => {
            let mut c = vec![2; n];
            c[0] = 1;
            (c, "bipartition coloring")
        }
        FamilySpec::DoubleStar(a, b) => double_star_witness(a, b),
        FamilySpec::Multistar(ref a) => multistar_witness(a),
        FamilySpec::Wheel(n) => {
            let mut c: Vec<usize> = (0..n).map(|i| i % 2 + 1).collect();
            if n % 2 == 1 {
                c[n - 1] = 3;
            }
            c.push(if n % 2 == 0 { 3 } else { 4 });
            (c, "proper rim coloring with the hub as a singleton")
        }
        FamilySpec::CoronaCycleK1(n) => corona_cycle_witness(n),
    }
}

/// The explicit optimal coloring of a family instance.
pub fn witness_coloring(spec: &FamilySpec) -> Result<Coloring> {
    spec.validate()?;
    Coloring::new(witness_labels(spec).0)
}

/// Closed-form value together with its witness.
pub fn chi_md_closed_form(spec: &FamilySpec) -> Result<FormulaResult> {
    let value = closed_form_value(spec)?;
    let (labels, provenance) = witness_labels(spec);
    Ok(FormulaResult {
        value,
        witness: Coloring::new(labels)?,
        provenance,
    })
}

/// Builds a majority dominator coloring with at most χ + ⌈α/2⌉ − 1 colors:
/// take an optimal proper coloring, grow its last class to a maximal
/// independent (hence dominating) set, keep two of its vertices and split
/// the rest into pairs with new colors.
pub fn witness_from_alpha_bound(g: &Graph) -> Result<Coloring> {
    if !g.is_connected() {
        return Err(if g.order() == 0 {
            Error::EmptyGraph
        } else {
            Error::Disconnected
        });
    }
    let chi = chromatic_number(g)?;
    let k = chi.value;
    let mut colors = chi.witness.colors().to_vec();
    let mut last = chi.witness.class(k);
    for v in 0..g.order() {
        if !last.contains(v) && g.neighbors(v).0 & last.0 == 0 {
            colors[v] = k;
            last.insert(v);
        }
    }
    split_into_pairs(&mut colors, last, k + 1);
    let c = Coloring::new(colors)?;
    debug_assert!(is_mdc(g, &c));
    Ok(c)
}

/// Colors `independent` with color 1, each pair of `matching` with its own
/// color and every other vertex with a singleton color, using
/// n − |M| − |I| + 1 colors (one fewer when `independent` is empty).
/// `matching` pairs must avoid `independent` and be non-adjacent in `g`.
pub fn witness_from_matching_bound(
    g: &Graph,
    independent: VertexSet,
    matching: &[(usize, usize)],
) -> Result<Coloring> {
    let n = g.order();
    if n < 2 {
        return Err(Error::InvalidWitnessInput(
            "need at least two vertices".into(),
        ));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if independent.0 & !g.vertices().0 != 0 || !g.is_independent(independent) {
        return Err(Error::InvalidWitnessInput("set is not independent".into()));
    }
    let mut covered = independent;
    for &(u, v) in matching {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if u == v || covered.contains(u) || covered.contains(v) || g.has_edge(u, v) {
            return Err(Error::InvalidWitnessInput(format!(
                "({u}, {v}) is not a matching edge of the complement outside the independent set"
            )));
        }
        covered.insert(u);
        covered.insert(v);
    }
    let mut labels = vec![0; n];
    for v in independent {
        labels[v] = 1;
    }
    for (i, &(u, v)) in matching.iter().enumerate() {
        labels[u] = i + 2;
        labels[v] = i + 2;
    }
    let mut next = matching.len() + 2;
    for v in 0..n {
        if !covered.contains(v) {
            labels[v] = next;
            next += 1;
        }
    }
    let c = Coloring::normalized(&labels);
    debug_assert!(is_mdc(g, &c));
    Ok(c)
}

/// The inputs the matching bound is evaluated with: the lexicographically
/// least maximum independent set I, and a maximum matching of the
/// complement of G − I in original vertex numbering.
pub fn matching_bound_inputs(g: &Graph) -> Result<(VertexSet, Vec<(usize, usize)>)> {
    let alpha = independence_number(g)?;
    let rest = VertexSet(g.vertices().0 & !alpha.witness.0);
    let (sub, map) = g.induced_subgraph(rest)?;
    let m = matching_number(&sub.complement())
        .witness
        .into_iter()
        .map(|(a, b)| (map[a], map[b]))
        .collect();
    Ok((alpha.witness, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::family_graph;
    use crate::mdc::verify_mdc;

    fn check(spec: FamilySpec) -> FormulaResult {
        let r = chi_md_closed_form(&spec).unwrap();
        let g = family_graph(&spec).unwrap();
        assert!(verify_mdc(&g, &r.witness).unwrap().is_valid(), "{spec}");
        assert_eq!(r.witness.num_colors(), r.value, "{spec}");
        r
    }

    #[test]
    fn path_examples() {
        assert_eq!(check(FamilySpec::Path(13)).value, 4);
        assert_eq!(
            witness_coloring(&FamilySpec::Path(13)).unwrap().colors(),
            &[1, 2, 1, 2, 1, 3, 1, 3, 1, 4, 1, 4, 1]
        );
        assert_eq!(check(FamilySpec::Path(20)).value, 6);
        assert_eq!(path_value(14), 5);
        assert_eq!(path_value(1), 1);
    }

    #[test]
    fn every_path_sequence_is_valid() {
        for n in 1..=13 {
            check(FamilySpec::Path(n));
        }
    }

    #[test]
    fn family_examples() {
        assert_eq!(check(FamilySpec::Multistar(vec![3, 3, 3])).value, 4);
        assert_eq!(check(FamilySpec::Multistar(vec![3, 2, 3])).value, 3);
        assert_eq!(check(FamilySpec::CoronaCycleK1(3)).value, 3);
        assert_eq!(check(FamilySpec::CoronaCycleK1(6)).value, 4);
        assert_eq!(
            check(FamilySpec::Empty(5)).witness.colors(),
            &[1, 1, 2, 2, 3]
        );
        assert_eq!(check(FamilySpec::Empty(2)).value, 1);
        assert_eq!(check(FamilySpec::Wheel(5)).value, 4);
        assert_eq!(check(FamilySpec::Wheel(4)).value, 3);
        assert_eq!(check(FamilySpec::DoubleStar(2, 5)).value, 2);
        assert_eq!(check(FamilySpec::DoubleStar(3, 3)).value, 3);
        assert_eq!(check(FamilySpec::Cycle(13)).value, 5);
        assert_eq!(check(FamilySpec::Cycle(11)).value, 4);
    }

    #[test]
    fn invalid_specs_error() {
        assert!(chi_md_closed_form(&FamilySpec::Cycle(2)).is_err());
        assert!(witness_coloring(&FamilySpec::Multistar(vec![])).is_err());
    }

    #[test]
    fn alpha_bound_witness_examples() {
        let c4 = family_graph(&FamilySpec::Cycle(4)).unwrap();
        assert_eq!(witness_from_alpha_bound(&c4).unwrap().num_colors(), 2);
        let corona = family_graph(&FamilySpec::CoronaCycleK1(6)).unwrap();
        let c = witness_from_alpha_bound(&corona).unwrap();
        assert!(is_mdc(&corona, &c));
        assert_eq!(c.num_colors(), 4);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(witness_from_alpha_bound(&k4).unwrap().num_colors(), 4);
        assert_eq!(
            witness_from_alpha_bound(&Graph::empty(2).unwrap()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn matching_bound_witness_examples() {
        let k5 = Graph::complete(5).unwrap();
        let c = witness_from_matching_bound(&k5, VertexSet::from_vertices([0]), &[]).unwrap();
        assert_eq!(c.num_colors(), 5);

        let c4 = family_graph(&FamilySpec::Cycle(4)).unwrap();
        let c = witness_from_matching_bound(&c4, VertexSet::from_vertices([0, 2]), &[]).unwrap();
        assert_eq!(c.num_colors(), 3);
        assert!(is_mdc(&c4, &c));

        let p4 = family_graph(&FamilySpec::Path(4)).unwrap();
        let c = witness_from_matching_bound(&p4, VertexSet::from_vertices([0, 3]), &[]).unwrap();
        assert!(is_mdc(&p4, &c));
        let c = witness_from_matching_bound(&p4, VertexSet::from_vertices([0]), &[(1, 3)]).unwrap();
        assert!(is_mdc(&p4, &c));
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn matching_bound_rejects_bad_inputs() {
        let p4 = family_graph(&FamilySpec::Path(4)).unwrap();
        let bad_i = witness_from_matching_bound(&p4, VertexSet::from_vertices([0, 1]), &[]);
        assert!(matches!(bad_i, Err(Error::InvalidWitnessInput(_))));
        // (1, 2) is an edge of P_4, so not an edge of the complement.
        let bad_m = witness_from_matching_bound(&p4, VertexSet::from_vertices([0]), &[(1, 2)]);
        assert!(matches!(bad_m, Err(Error::InvalidWitnessInput(_))));
        let overlap = witness_from_matching_bound(&p4, VertexSet::from_vertices([0]), &[(0, 2)]);
        assert!(overlap.is_err());
    }

    #[test]
    fn matching_inputs_on_c4() {
        let c4 = family_graph(&FamilySpec::Cycle(4)).unwrap();
        let (i, m) = matching_bound_inputs(&c4).unwrap();
        assert_eq!(i.to_vec(), vec![0, 2]);
        assert_eq!(m, vec![(1, 3)]);
    }
}
