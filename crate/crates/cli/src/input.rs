//! Graph and coloring file formats.
//!
//! DIMACS `.col`: `c` comment lines, one `p edge <n> <m>` header, then
//! `e <u> <v>` lines with 1-indexed endpoints.
//! Edge list: first non-comment line is `n`, then one `u v` pair per line,
//! 0-indexed. `#` starts a comment in edge lists.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use mdcolor::{Coloring, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dimacs,
    Edgelist,
}

impl GraphFormat {
    /// `.col` and `.dimacs` files are DIMACS, anything else an edge list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("col" | "dimacs") => GraphFormat::Dimacs,
            _ => GraphFormat::Edgelist,
        }
    }
}

/// A parsed graph plus non-fatal complaints about the input.
#[derive(Debug)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| anyhow!("line {line}: missing {what}"))?;
    tok.parse()
        .with_context(|| format!("line {line}: bad {what} {tok:?}"))
}

pub fn parse_dimacs(text: &str) -> Result<Parsed> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut toks = line.split_whitespace();
        match toks.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    bail!("line {line_no}: second problem line");
                }
                match toks.next() {
                    Some("edge" | "col") => {}
                    other => bail!("line {line_no}: expected `p edge`, found {other:?}"),
                }
                let n = number(toks.next(), line_no, "vertex count")?;
                let m = number(toks.next(), line_no, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) =
                    header.ok_or_else(|| anyhow!("line {line_no}: edge before `p` line"))?;
                let u = number(toks.next(), line_no, "endpoint")?;
                let v = number(toks.next(), line_no, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        bail!("line {line_no}: endpoint {x} outside 1..={n}");
                    }
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => bail!("line {line_no}: unknown line type {other:?}"),
        }
    }
    let (n, m) = header.ok_or_else(|| anyhow!("missing `p edge <n> <m>` line"))?;
    finish(n, Some(m), edges)
}

pub fn parse_edgelist(text: &str) -> Result<Parsed> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first, n_line) = lines.next().ok_or_else(|| anyhow!("empty edge list"))?;
    let n = number(Some(n_line), first, "vertex count")?;
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let mut toks = line.split_whitespace();
        let u = number(toks.next(), line_no, "endpoint")?;
        let v = number(toks.next(), line_no, "endpoint")?;
        if toks.next().is_some() {
            bail!("line {line_no}: expected two endpoints");
        }
        for x in [u, v] {
            if x >= n {
                bail!("line {line_no}: endpoint {x} outside 0..{n}");
            }
        }
        edges.push((u, v));
    }
    finish(n, None, edges)
}

fn finish(n: usize, declared: Option<usize>, edges: Vec<(usize, usize)>) -> Result<Parsed> {
    let graph = Graph::new(n, &edges)?;
    let mut warnings = Vec::new();
    if let Some(m) = declared {
        if m != edges.len() {
            warnings.push(format!(
                "header declares {m} edges, file lists {}",
                edges.len()
            ));
        }
    }
    if graph.edge_count() != edges.len() {
        warnings.push(format!(
            "{} duplicate edges ignored",
            edges.len() - graph.edge_count()
        ));
    }
    Ok(Parsed { graph, warnings })
}

pub fn parse_graph_file(path: &Path, format: GraphFormat) -> Result<Parsed> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    match format {
        GraphFormat::Dimacs => parse_dimacs(&text),
        GraphFormat::Edgelist => parse_edgelist(&text),
    }
    .with_context(|| format!("parsing {}", path.display()))
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Whitespace-separated positive integers, one per vertex in index order.
/// Returns the raw labels; [`Coloring::new`] decides whether they are
/// contiguous.
pub fn parse_coloring(text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            tok.parse()
                .with_context(|| format!("color {} is not an integer: {tok:?}", i + 1))
        })
        .collect()
}

pub fn read_coloring(path: &Path) -> Result<Vec<usize>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_coloring(&text)
}

/// Checks length and contiguity against `g`.
pub fn coloring_for(g: &Graph, labels: Vec<usize>) -> std::result::Result<Coloring, String> {
    if labels.len() != g.order() {
        return Err(format!(
            "{} colors for {} vertices",
            labels.len(),
            g.order()
        ));
    }
    Coloring::new(labels).map_err(|e| e.to_string())
}
