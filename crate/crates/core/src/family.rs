//! Named graph families and their constructors.
//!
//! Vertex numbering is fixed so witnesses and fixtures are reproducible:
//!
//! * `Path n`, `Cycle n`: `0..n` in order along the path/cycle.
//! * `CompleteBipartite m n`: first side `0..m`, second side `m..m+n`.
//! * `Star n`: center `0`, leaves `1..n`.
//! * `DoubleStar a b`: centers `u = 0`, `v = 1`; leaves of `u` are
//!   `2..a+1`, leaves of `v` are `a+1..a+b`.
//! * `Multistar (a_1..a_n)`: clique `0..n`, then the pendants of clique
//!   vertex `i` as one contiguous block, blocks in clique order.
//! * `Wheel n`: rim cycle `0..n`, hub `n`.
//! * `CoronaCycleK1 n`: cycle `0..n`, pendant of cycle vertex `j` at `n + j`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{corona_product, Graph, MAX_ORDER};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FamilySpec {
    /// Edgeless graph on `n` vertices.
    Empty(usize),
    Complete(usize),
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    /// K_{1,n-1}, order `n`.
    Star(usize),
    /// S_{a,b}: adjacent centers of degree `a` and `b`.
    DoubleStar(usize, usize),
    /// K_n(a_1..a_n); `n` is the length of the vector.
    Multistar(Vec<usize>),
    /// Rim of `n` vertices plus a hub (order `n + 1`).
    Wheel(usize),
    CoronaCycleK1(usize),
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidFamily(format!("{self}: {msg}")));
        match *self {
            FamilySpec::Empty(n) | FamilySpec::Complete(n) | FamilySpec::Path(n) if n < 1 => {
                return bad("n must be at least 1")
            }
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) | FamilySpec::CoronaCycleK1(n) if n < 3 => {
                return bad("n must be at least 3")
            }
            FamilySpec::CompleteBipartite(m, n) if m < 1 || n < 1 => {
                return bad("both sides must be nonempty")
            }
            FamilySpec::Star(n) if n < 2 => return bad("n must be at least 2"),
            FamilySpec::DoubleStar(a, b) if a < 2 || b < 2 => {
                return bad("center degrees must be at least 2")
            }
            FamilySpec::Multistar(ref a) if a.is_empty() || a.contains(&0) => {
                return bad("need n >= 1 and every a_i >= 1")
            }
            _ => {}
        }
        if self.order() > MAX_ORDER {
            return Err(Error::OrderTooLarge(self.order()));
        }
        Ok(())
    }

    /// Number of vertices of the instance (no validation).
    pub fn order(&self) -> usize {
        match *self {
            FamilySpec::Empty(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Star(n) => n,
            FamilySpec::CompleteBipartite(m, n) | FamilySpec::DoubleStar(m, n) => m + n,
            FamilySpec::Multistar(ref a) => a.len() + a.iter().sum::<usize>(),
            FamilySpec::Wheel(n) => n + 1,
            FamilySpec::CoronaCycleK1(n) => 2 * n,
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        family_graph(self)
    }

    /// Every valid spec of order at most `max_order` (capped at
    /// [`MAX_ORDER`]), family by family in ascending parameters.
    pub fn all_up_to(max_order: usize) -> Vec<FamilySpec> {
        let m = max_order.min(MAX_ORDER);
        let mut out = Vec::new();
        for n in 1..=m {
            out.extend([
                FamilySpec::Empty(n),
                FamilySpec::Complete(n),
                FamilySpec::Path(n),
            ]);
        }
        out.extend((3..=m).map(FamilySpec::Cycle));
        for a in 1..m {
            out.extend((1..=m - a).map(|b| FamilySpec::CompleteBipartite(a, b)));
        }
        out.extend((2..=m).map(FamilySpec::Star));
        for a in 2..m {
            out.extend((2..=m - a).map(|b| FamilySpec::DoubleStar(a, b)));
        }
        fn pendants(prefix: &mut Vec<usize>, len: usize, budget: usize, out: &mut Vec<FamilySpec>) {
            if prefix.len() == len {
                out.push(FamilySpec::Multistar(prefix.clone()));
                return;
            }
            let left = len - prefix.len() - 1;
            for a in 1..=budget.saturating_sub(left) {
                prefix.push(a);
                pendants(prefix, len, budget - a, out);
                prefix.pop();
            }
        }
        for n in 1..=m / 2 {
            pendants(&mut Vec::new(), n, m - n, &mut out);
        }
        out.extend((3..m).map(FamilySpec::Wheel));
        out.extend((3..=m / 2).map(FamilySpec::CoronaCycleK1));
        out
    }
}

fn path_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).map(|i| (i - 1, i)).collect()
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

/// Builds the graph described by `spec`.
pub fn family_graph(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    match *spec {
        FamilySpec::Empty(n) => Graph::empty(n),
        FamilySpec::Complete(n) => Graph::complete(n),
        FamilySpec::Path(n) => Graph::new(n, &path_edges(n)),
        FamilySpec::Cycle(n) => Graph::new(n, &cycle_edges(n)),
        FamilySpec::CompleteBipartite(m, n) => {
            let edges: Vec<_> = (0..m)
                .flat_map(|a| (m..m + n).map(move |b| (a, b)))
                .collect();
            Graph::new(m + n, &edges)
        }
        FamilySpec::Star(n) => {
            let edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
            Graph::new(n, &edges)
        }
        FamilySpec::DoubleStar(a, b) => {
            let mut edges = vec![(0, 1)];
            edges.extend((2..a + 1).map(|x| (0, x)));
            edges.extend((a + 1..a + b).map(|y| (1, y)));
            Graph::new(a + b, &edges)
        }
        FamilySpec::Multistar(ref a) => {
            let n = a.len();
            let mut edges: Vec<_> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect();
            let mut next = n;
            for (i, &count) in a.iter().enumerate() {
                edges.extend((next..next + count).map(|p| (i, p)));
                next += count;
            }
            Graph::new(next, &edges)
        }
        FamilySpec::Wheel(n) => {
            let mut edges = cycle_edges(n);
            edges.extend((0..n).map(|r| (r, n)));
            Graph::new(n + 1, &edges)
        }
        FamilySpec::CoronaCycleK1(n) => {
            let cycle = Graph::new(n, &cycle_edges(n))?;
            corona_product(&cycle, &Graph::complete(1)?)
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Empty(n) => write!(f, "empty:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::CompleteBipartite(m, n) => write!(f, "bipartite:{m},{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::DoubleStar(a, b) => write!(f, "doublestar:{a},{b}"),
            FamilySpec::Multistar(a) => {
                let parts: Vec<String> = a.iter().map(ToString::to_string).collect();
                write!(f, "multistar:{}", parts.join(","))
            }
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::CoronaCycleK1(n) => write!(f, "corona-cycle:{n}"),
        }
    }
}

/// Parses strings like `path:13`, `bipartite:3,5`, `multistar:3,3,3`.
impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let invalid = || Error::InvalidFamily(format!("cannot parse family spec {s:?}"));
        let (name, args) = s.trim().split_once(':').ok_or_else(invalid)?;
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| invalid())?;
        let one = || match nums[..] {
            [n] => Ok(n),
            _ => Err(invalid()),
        };
        let two = || match nums[..] {
            [a, b] => Ok((a, b)),
            _ => Err(invalid()),
        };
        let spec = match name.trim().to_ascii_lowercase().as_str() {
            "empty" => FamilySpec::Empty(one()?),
            "complete" => FamilySpec::Complete(one()?),
            "path" => FamilySpec::Path(one()?),
            "cycle" => FamilySpec::Cycle(one()?),
            "bipartite" | "complete-bipartite" => {
                let (m, n) = two()?;
                FamilySpec::CompleteBipartite(m, n)
            }
            "star" => FamilySpec::Star(one()?),
            "doublestar" | "double-star" => {
                let (a, b) = two()?;
                FamilySpec::DoubleStar(a, b)
            }
            "multistar" => FamilySpec::Multistar(nums.clone()),
            "wheel" => FamilySpec::Wheel(one()?),
            "corona-cycle" | "corona" => FamilySpec::CoronaCycleK1(one()?),
            _ => return Err(invalid()),
        };
        spec.validate()?;
        Ok(spec)
    }
}
