//! Unpruned exhaustive oracles for testing the solvers on small graphs.
//!
//! Nothing here shares search code with the solvers: colorings are
//! enumerated as every set partition (restricted growth strings) and
//! vertex/edge sets as every subset.

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::{is_dominating_set, is_dominator_coloring, InvariantResult};
use crate::mdc::is_mdc;

/// Hard cap on the order accepted by the partition-based oracles.
pub const ORACLE_MAX_ORDER: usize = 10;

/// Calls `f` with every set partition of `0..n` as a restricted growth
/// string (block ids `0..`, each block opened in order).
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize])) {
    fn go(i: usize, blocks: usize, rgs: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == rgs.len() {
            f(rgs);
            return;
        }
        for b in 0..=blocks {
            rgs[i] = b;
            go(i + 1, blocks.max(b + 1), rgs, f);
        }
    }
    let mut rgs = vec![0; n];
    go(0, 0, &mut rgs, &mut f);
}

fn min_partition_where(
    g: &Graph,
    what: &'static str,
    accept: impl Fn(&Coloring) -> bool,
) -> Result<InvariantResult<Coloring>> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > ORACLE_MAX_ORDER {
        return Err(Error::AboveCap {
            what,
            order: n,
            cap: ORACLE_MAX_ORDER,
        });
    }
    let mut best: Option<Coloring> = None;
    let mut nodes = 0;
    for_each_partition(n, |rgs| {
        nodes += 1;
        let c = Coloring::new(rgs.iter().map(|b| b + 1).collect()).expect("rgs is contiguous");
        let better = best
            .as_ref()
            .is_none_or(|b| c.num_colors() < b.num_colors());
        if better && accept(&c) {
            best = Some(c);
        }
    });
    let witness = best.expect("the discrete partition always qualifies");
    Ok(InvariantResult {
        value: witness.num_colors(),
        witness,
        nodes,
    })
}

/// χ_md by checking every set partition with the verifier.
pub fn brute_force_mdc(g: &Graph) -> Result<InvariantResult<Coloring>> {
    min_partition_where(g, "brute_force_mdc", |c| is_mdc(g, c))
}

pub fn brute_force_chromatic(g: &Graph) -> Result<usize> {
    Ok(min_partition_where(g, "brute_force_chromatic", |c| c.is_proper(g))?.value)
}

pub fn brute_force_dominator(g: &Graph) -> Result<usize> {
    Ok(min_partition_where(g, "brute_force_dominator", |c| is_dominator_coloring(g, c))?.value)
}

fn subsets(g: &Graph) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << g.order()).map(VertexSet)
}

pub fn brute_force_domination(g: &Graph) -> Result<usize> {
    if g.order() == 0 || g.order() > 16 {
        return Err(Error::AboveCap {
            what: "brute_force_domination",
            order: g.order(),
            cap: 16,
        });
    }
    Ok(subsets(g)
        .filter(|&s| is_dominating_set(g, s))
        .map(VertexSet::len)
        .min()
        .unwrap())
}

pub fn brute_force_independence(g: &Graph) -> Result<usize> {
    if g.order() == 0 || g.order() > 16 {
        return Err(Error::AboveCap {
            what: "brute_force_independence",
            order: g.order(),
            cap: 16,
        });
    }
    Ok(subsets(g)
        .filter(|&s| g.is_independent(s))
        .map(VertexSet::len)
        .max()
        .unwrap())
}

/// ν by trying every edge subset.
pub fn brute_force_matching(g: &Graph) -> Result<usize> {
    let edges = g.edges();
    if edges.len() > 21 {
        return Err(Error::AboveCap {
            what: "brute_force_matching",
            order: g.order(),
            cap: 7,
        });
    }
    Ok((0u32..1 << edges.len())
        .filter_map(|mask| {
            let mut touched = 0u64;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    let pair = (1u64 << u) | (1u64 << v);
                    if touched & pair != 0 {
                        return None;
                    }
                    touched |= pair;
                }
            }
            Some(mask.count_ones() as usize)
        })
        .max()
        .unwrap_or(0))
}
