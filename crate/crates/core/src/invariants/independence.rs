use crate::error::{Error, Result};
use crate::graph::{low_bits, Graph, VertexSet};
use crate::invariants::InvariantResult;

struct Bnb<'a> {
    g: &'a Graph,
    best: u64,
    found: bool,
    nodes: u64,
}

impl Bnb<'_> {
    /// Include-before-exclude on the lowest candidate, so the first maximum
    /// found is the lexicographically least one; only strict improvements
    /// replace it.
    fn go(&mut self, chosen: u64, cand: u64) {
        self.nodes += 1;
        let size = chosen.count_ones();
        if cand == 0 {
            if !self.found || size > self.best.count_ones() {
                self.best = chosen;
                self.found = true;
            }
            return;
        }
        if self.found && size + cand.count_ones() <= self.best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        let rest = cand & !(1u64 << v);
        self.go(chosen | (1u64 << v), rest & !self.g.neighbors(v).0);
        self.go(chosen, rest);
    }
}

/// α(G); the witness is the lexicographically least maximum independent set.
pub fn independence_number(g: &Graph) -> Result<InvariantResult<VertexSet>> {
    if g.order() == 0 {
        return Err(Error::EmptyGraph);
    }
    let mut bnb = Bnb {
        g,
        best: 0,
        found: false,
        nodes: 0,
    };
    bnb.go(0, low_bits(g.order()));
    debug_assert!(g.is_independent(VertexSet(bnb.best)));
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

    fn fam(spec: FamilySpec) -> Graph {
        family_graph(&spec).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            independence_number(&fam(FamilySpec::Cycle(5)))
                .unwrap()
                .value,
            2
        );
        for (m, n) in [(1, 1), (2, 5), (4, 3)] {
            let r = independence_number(&fam(FamilySpec::CompleteBipartite(m, n))).unwrap();
            assert_eq!(r.value, m.max(n));
        }
        for n in 3..9 {
            let r = independence_number(&fam(FamilySpec::CoronaCycleK1(n))).unwrap();
            assert_eq!(r.value, n);
        }
    }

    #[test]
    fn witness_is_lexicographically_least() {
        // C_6: maximum sets {0,2,4} and {1,3,5}.
        let r = independence_number(&fam(FamilySpec::Cycle(6))).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 2, 4]);
        // P_4: maximum sets {0,2}, {0,3}, {1,3}.
        let r = independence_number(&fam(FamilySpec::Path(4))).unwrap();
        assert_eq!(r.witness.to_vec(), vec![0, 2]);
    }
}
