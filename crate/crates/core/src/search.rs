//! Backtracking over vertex colorings with at most `k` colors, shared by the
//! chromatic, dominator-chromatic and majority-dominator solvers.
//!
//! Vertices are colored in a fixed order. A vertex may only open color
//! `used + 1`, so each partition into classes is visited once. After every
//! assignment each vertex is tested for *viability*: whether its domination
//! requirement can still be met by some completion. Every test below is a
//! necessary condition, so pruning never discards a valid coloring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, low_bits, Graph, VertexSet};

/// Node limit for a search. Counts are cumulative across the successive
/// color counts tried by one solve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { max_nodes: None };

    pub fn nodes(max_nodes: u64) -> Budget {
        Budget {
            max_nodes: Some(max_nodes),
        }
    }
}

/// Running node count checked against a [`Budget`].
#[derive(Debug, Clone)]
pub(crate) struct NodeCounter {
    pub nodes: u64,
    limit: Option<u64>,
}

impl NodeCounter {
    pub fn new(budget: Budget) -> Self {
        NodeCounter {
            nodes: 0,
            limit: budget.max_nodes,
        }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.limit {
            Some(limit) if self.nodes > limit => Err(Error::BudgetExhausted { nodes: self.nodes }),
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rule {
    /// Proper colorings only.
    Proper,
    /// Every vertex's closed neighborhood contains a whole class.
    Dominator,
    /// Every vertex's closed neighborhood holds at least half of a class.
    Majority,
}

/// Static vertex order: highest degree first, then repeatedly the vertex with
/// the most already-ordered neighbors (ties to the lowest index), so that
/// closed neighborhoods become fully colored early.
pub(crate) fn search_order(g: &Graph) -> Vec<usize> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                let attached = (g.row(v) & placed).count_ones();
                // A fresh component starts from its highest-degree vertex.
                let key = if attached == 0 { g.degree(v) } else { 0 };
                (attached, key, std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed |= bit(next);
        order.push(next);
    }
    order
}

struct Search<'a> {
    g: &'a Graph,
    rule: Rule,
    k: usize,
    order: &'a [usize],
    colors: Vec<usize>,
    /// `classes[c]` is V_c; index 0 unused.
    classes: Vec<u64>,
    uncolored: u64,
    used: usize,
    counter: &'a mut NodeCounter,
}

impl Search<'_> {
    fn dfs(&mut self, depth: usize) -> Result<bool> {
        self.counter.tick()?;
        if depth == self.order.len() {
            return Ok(true);
        }
        let v = self.order[depth];
        let row = self.g.row(v);
        let limit = (self.used + 1).min(self.k);
        for c in 1..=limit {
            if c <= self.used && self.classes[c] & row != 0 {
                continue;
            }
            let opened = c > self.used;
            self.colors[v] = c;
            self.classes[c] |= bit(v);
            self.uncolored &= !bit(v);
            if opened {
                self.used = c;
            }
            if self.consistent(v) && self.dfs(depth + 1)? {
                return Ok(true);
            }
            if opened {
                self.used -= 1;
            }
            self.uncolored |= bit(v);
            self.classes[c] &= !bit(v);
            self.colors[v] = 0;
        }
        Ok(false)
    }

    fn consistent(&self, just_colored: usize) -> bool {
        if self.used == self.k {
            // Every uncolored neighbor still needs a free color.
            for w in VertexSet(self.g.row(just_colored) & self.uncolored) {
                let row = self.g.row(w);
                if self.classes[1..=self.used]
                    .iter()
                    .all(|&cls| cls & row != 0)
                {
                    return false;
                }
            }
        }
        match self.rule {
            Rule::Proper => true,
            Rule::Dominator | Rule::Majority => (0..self.g.order()).all(|v| self.viable(v)),
        }
    }

    /// Whether `v` can still end up dominating (or majority-dominating) a class.
    #[inline]
    fn viable(&self, v: usize) -> bool {
        let closed = self.g.closed_row(v);
        let open_nbrs = (closed & self.uncolored).count_ones();
        // A class not opened yet consists only of currently uncolored vertices,
        // so it is reachable only through an uncolored vertex of N[v].
        if open_nbrs > 0 && self.used < self.k {
            return true;
        }
        let classes = &self.classes[1..=self.used];
        match self.rule {
            Rule::Proper => true,
            // A class with a member outside N[v] stays lost.
            Rule::Dominator => classes.iter().any(|&cls| cls & !closed == 0),
            // Classes only grow and |N[v] ∩ V_i| can gain at most the uncolored
            // part of N[v], so 2(|N[v]∩V_i| + open) ≥ |V_i| is necessary.
            Rule::Majority => classes
                .iter()
                .any(|&cls| 2 * ((cls & closed).count_ones() + open_nbrs) >= cls.count_ones()),
        }
    }
}

/// Searches for a coloring with at most `k` colors satisfying `rule`.
/// Returns raw colors `1..=used` per vertex, or `None` if none exists.
pub(crate) fn find_coloring(
    g: &Graph,
    rule: Rule,
    k: usize,
    order: &[usize],
    counter: &mut NodeCounter,
) -> Result<Option<Vec<usize>>> {
    let n = g.order();
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut search = Search {
        g,
        rule,
        k,
        order,
        colors: vec![0; n],
        classes: vec![0; k + 1],
        uncolored: low_bits(n),
        used: 0,
        counter,
    };
    if search.dfs(0)? {
        Ok(Some(search.colors))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_follows_paths() {
        let p = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(search_order(&p), vec![1, 0, 2, 3, 4]);
    }

    #[test]
    fn order_covers_disconnected_graphs() {
        let g = Graph::new(5, &[(3, 4), (2, 4)]).unwrap();
        let mut order = search_order(&g);
        assert_eq!(order[0], 4);
        order.sort();
        assert_eq!(order, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn budget_is_enforced() {
        let g = Graph::complete(6).unwrap();
        let order = search_order(&g);
        let mut counter = NodeCounter::new(Budget::nodes(3));
        assert_eq!(
            find_coloring(&g, Rule::Proper, 5, &order, &mut counter),
            Err(Error::BudgetExhausted { nodes: 4 })
        );
    }
}
