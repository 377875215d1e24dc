use std::fmt;

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

/// Largest order [`enumerate_graphs`] accepts (2^15 graphs at n = 6).
pub const EXHAUSTIVE_MAX_ORDER: usize = 6;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled simple graph on `n` vertices; the i-th graph contains pair
/// k (lexicographic `(u, v)`, `u < v`) iff bit k of i is set.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if n > EXHAUSTIVE_MAX_ORDER {
        return Err(Error::AboveCap {
            what: "enumerate_graphs",
            order: n,
            cap: EXHAUSTIVE_MAX_ORDER,
        });
    }
    let pairs = pairs(n);
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = (0..pairs.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| pairs[k])
            .collect();
        Graph::new(n, &edges).expect("pairs are in range")
    }))
}

/// G(n, p) sample: each pair, in lexicographic order, is an edge with
/// probability `p`, drawn from ChaCha8 seeded with `seed`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability(p.to_string()));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderTooLarge(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::new(n, &edges)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Connectivity {
    #[default]
    All,
    Connected,
    Disconnected,
}

impl Connectivity {
    fn admits(self, g: &Graph) -> bool {
        match self {
            Connectivity::All => true,
            Connectivity::Connected => g.is_connected(),
            Connectivity::Disconnected => !g.is_connected(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum PopulationMode {
    /// All labeled graphs of order `1..=max_n`.
    ExhaustiveLabeled {
        max_n: usize,
    },
    /// `count` samples for every (order, probability) pair. Sample seeds
    /// are drawn in that order from a ChaCha8 stream seeded with `seed`.
    Random {
        orders: Vec<usize>,
        probabilities: Vec<f64>,
        count: usize,
        seed: u64,
    },
    Explicit(Vec<Graph>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct GraphPopulation {
    pub mode: PopulationMode,
    pub filter: Connectivity,
}

/// One population member and where it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Member {
    pub graph: Graph,
    /// `Some((p, seed))` for random members, enough to regenerate the graph.
    pub sample: Option<(f64, u64)>,
}

impl GraphPopulation {
    pub fn exhaustive(max_n: usize) -> Self {
        GraphPopulation {
            mode: PopulationMode::ExhaustiveLabeled { max_n },
            filter: Connectivity::All,
        }
    }

    pub fn random(orders: Vec<usize>, probabilities: Vec<f64>, count: usize, seed: u64) -> Self {
        GraphPopulation {
            mode: PopulationMode::Random {
                orders,
                probabilities,
                count,
                seed,
            },
            filter: Connectivity::All,
        }
    }

    pub fn explicit(graphs: Vec<Graph>) -> Self {
        GraphPopulation {
            mode: PopulationMode::Explicit(graphs),
            filter: Connectivity::All,
        }
    }

    pub fn with_filter(mut self, filter: Connectivity) -> Self {
        self.filter = filter;
        self
    }

    /// Members in deterministic order, after the connectivity filter.
    pub fn members(&self) -> Result<Vec<Member>> {
        let mut out = Vec::new();
        match &self.mode {
            PopulationMode::ExhaustiveLabeled { max_n } => {
                for n in 1..=*max_n {
                    out.extend(enumerate_graphs(n)?.map(|graph| Member {
                        graph,
                        sample: None,
                    }));
                }
            }
            PopulationMode::Random {
                orders,
                probabilities,
                count,
                seed,
            } => {
                let mut seeds = ChaCha8Rng::seed_from_u64(*seed);
                for &n in orders {
                    for &p in probabilities {
                        for _ in 0..*count {
                            let s = seeds.next_u64();
                            out.push(Member {
                                graph: random_graph(n, p, s)?,
                                sample: Some((p, s)),
                            });
                        }
                    }
                }
            }
            PopulationMode::Explicit(graphs) => {
                out.extend(graphs.iter().cloned().map(|graph| Member {
                    graph,
                    sample: None,
                }));
            }
        }
        out.retain(|m| self.filter.admits(&m.graph));
        Ok(out)
    }
}

impl fmt::Display for GraphPopulation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.mode {
            PopulationMode::ExhaustiveLabeled { max_n } => write!(f, "exhaustive n <= {max_n}")?,
            PopulationMode::Random {
                orders,
                probabilities,
                count,
                seed,
            } => write!(
                f,
                "random n in {orders:?}, p in {probabilities:?}, {count} each, seed {seed}"
            )?,
            PopulationMode::Explicit(graphs) => write!(f, "{} explicit graphs", graphs.len())?,
        }
        match self.filter {
            Connectivity::All => Ok(()),
            Connectivity::Connected => write!(f, ", connected"),
            Connectivity::Disconnected => write!(f, ", disconnected"),
        }
    }
}
