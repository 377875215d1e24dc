use crate::error::{Error, Result};
use crate::graph::{low_bits, Graph, VertexSet};
use crate::invariants::InvariantResult;

/// N[S] = V.
pub fn is_dominating_set(g: &Graph, set: VertexSet) -> bool {
    let covered = set.iter().fold(0u64, |m, v| m | g.closed_row(v));
    covered & g.vertices().0 == g.vertices().0
}

struct Bnb<'a> {
    g: &'a Graph,
    max_cover: u32,
    best: u64,
    nodes: u64,
}

impl Bnb<'_> {
    fn go(&mut self, chosen: u64, covered: u64) {
        self.nodes += 1;
        let all = low_bits(self.g.order());
        let undominated = all & !covered;
        let size = chosen.count_ones();
        if undominated == 0 {
            if size < self.best.count_ones() {
                self.best = chosen;
            }
            return;
        }
        // Each further vertex covers at most Δ + 1 new vertices.
        let need = undominated.count_ones().div_ceil(self.max_cover);
        if size + need >= self.best.count_ones() {
            return;
        }
        // The lowest undominated vertex must be covered by some w in its N[u].
        let u = undominated.trailing_zeros() as usize;
        for w in VertexSet(self.g.closed_row(u)) {
            self.go(chosen | (1u64 << w), covered | self.g.closed_row(w));
        }
    }
}

/// γ(G) by branch and bound; the witness is a minimum dominating set.
pub fn domination_number(g: &Graph) -> Result<InvariantResult<VertexSet>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut bnb = Bnb {
        g,
        max_cover: g.max_degree()? as u32 + 1,
        best: low_bits(g.order()),
        nodes: 0,
    };
    bnb.go(0, 0);
    debug_assert!(is_dominating_set(g, VertexSet(bnb.best)));
    Ok(InvariantResult {
        value: bnb.best.count_ones() as usize,
        witness: VertexSet(bnb.best),
        nodes: bnb.nodes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{family_graph, FamilySpec};

    #[test]
    fn examples() {
        for n in 1..7 {
            assert_eq!(
                domination_number(&Graph::complete(n).unwrap())
                    .unwrap()
                    .value,
                1
            );
        }
        let c6 = family_graph(&FamilySpec::Cycle(6)).unwrap();
        let r = domination_number(&c6).unwrap();
        assert_eq!(r.value, 2);
        assert!(is_dominating_set(&c6, r.witness));
        assert_eq!(
            domination_number(&Graph::empty(4).unwrap()).unwrap().value,
            4
        );
        assert_eq!(
            domination_number(&Graph::empty(0).unwrap()),
            Err(Error::EmptyGraph)
        );
    }
}
