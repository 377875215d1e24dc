use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Graph, VertexSet};

/// A total vertex coloring with colors `1..=k`, every color used.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Coloring {
    colors: Vec<usize>,
    k: usize,
}

impl Coloring {
    /// Validates that the colors used are exactly `1..=k` for some `k`.
    pub fn new(colors: Vec<usize>) -> Result<Coloring> {
        let k = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(Error::InvalidColoring("color ids start at 1".into()));
        }
        let mut seen = vec![false; k + 1];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !seen[c]) {
            return Err(Error::InvalidColoring(format!(
                "color {missing} is unused but color {k} is used"
            )));
        }
        Ok(Coloring { colors, k })
    }

    /// Relabels arbitrary labels to `1..=k` in order of first appearance.
    pub fn normalized(labels: &[usize]) -> Coloring {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let colors = labels
            .iter()
            .map(|&l| match map.iter().find(|&&(from, _)| from == l) {
                Some(&(_, to)) => to,
                None => {
                    map.push((l, map.len() + 1));
                    map.len()
                }
            })
            .collect();
        Coloring {
            colors,
            k: map.len(),
        }
    }

    /// Builds a coloring from color classes; `classes[i]` gets color `i + 1`.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Coloring> {
        let mut colors = vec![0; n];
        for (i, class) in classes.iter().enumerate() {
            for v in class.iter() {
                if v >= n || colors[v] != 0 {
                    return Err(Error::InvalidColoring(format!(
                        "vertex {v} missing from range or in two classes"
                    )));
                }
                colors[v] = i + 1;
            }
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidColoring(format!("vertex {v} is uncolored")));
        }
        Coloring::new(colors)
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of colors `k`.
    pub fn num_colors(&self) -> usize {
        self.k
    }

    /// Number of colored vertices.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// The class V_c.
    pub fn class(&self, c: usize) -> VertexSet {
        VertexSet(
            self.colors
                .iter()
                .enumerate()
                .filter(|&(_, &x)| x == c)
                .fold(0, |m, (v, _)| m | bit(v)),
        )
    }

    /// All classes, `classes()[i]` being V_{i+1}.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c - 1].insert(v);
        }
        out
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

impl TryFrom<Vec<usize>> for Coloring {
    type Error = Error;
    fn try_from(colors: Vec<usize>) -> Result<Coloring> {
        Coloring::new(colors)
    }
}

impl From<Coloring> for Vec<usize> {
    fn from(c: Coloring) -> Vec<usize> {
        c.colors
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contiguity_is_enforced() {
        assert!(Coloring::new(vec![1, 2, 1]).is_ok());
        assert!(Coloring::new(vec![1, 3]).is_err());
        assert!(Coloring::new(vec![0, 1]).is_err());
        assert_eq!(Coloring::new(vec![]).unwrap().num_colors(), 0);
    }

    #[test]
    fn normalizes_by_first_appearance() {
        let c = Coloring::normalized(&[7, 3, 7, 9]);
        assert_eq!(c.colors(), &[1, 2, 1, 3]);
        assert_eq!(c.num_colors(), 3);
    }

    #[test]
    fn classes_round_trip() {
        let c = Coloring::new(vec![2, 1, 2, 3]).unwrap();
        let classes = c.classes();
        assert_eq!(classes[1], VertexSet::from_vertices([0, 2]));
        assert_eq!(Coloring::from_classes(4, &classes).unwrap(), c);
        assert!(Coloring::from_classes(3, &[VertexSet::from_vertices([0, 1])]).is_err());
    }
}
