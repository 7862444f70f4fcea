//! Edge-list text format.
//!
//! The first non-empty line is a JSON header
//! `{"N": .., "d": .., "seed": .., "weight_spec": ..}`; every following
//! non-empty line is `u v` or `u v weight` with 0-indexed vertices. Lines
//! starting with `#` are comments.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{RegularGraph, WeightSpec, WeightedGraph};

/// Refuse headers that would allocate absurd adjacency tables.
const MAX_VERTICES: usize = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphHeader {
    #[serde(rename = "N")]
    pub n: usize,
    pub d: usize,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub weight_spec: Option<WeightSpec>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EdgeListFile {
    pub header: GraphHeader,
    pub graph: RegularGraph,
    /// Present when every edge line carries a weight.
    pub weighted: Option<WeightedGraph>,
}

/// Writes the header and one `u v weight` line per edge (`u v` when the
/// graph is unweighted).
pub fn write_edge_list<W: Write>(
    out: &mut W,
    graph: &WeightedGraph,
    weighted: bool,
) -> Result<()> {
    let base = graph.base();
    let header = GraphHeader {
        n: base.n(),
        d: base.d(),
        seed: base.seed(),
        weight_spec: if weighted { graph.spec().cloned() } else { None },
    };
    serde_json::to_writer(&mut *out, &header)?;
    writeln!(out)?;
    for (&(u, v), &w) in base.edges().iter().zip(graph.weights()) {
        if weighted {
            writeln!(out, "{u} {v} {w:?}")?;
        } else {
            writeln!(out, "{u} {v}")?;
        }
    }
    Ok(())
}

pub fn parse_edge_list(text: &str) -> Result<EdgeListFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (_, header_line) = lines
        .next()
        .ok_or_else(|| Error::parse("edge list", text, "missing JSON header"))?;
    let header: GraphHeader = serde_json::from_str(header_line)
        .map_err(|e| Error::parse("edge list header", header_line, e.to_string()))?;
    if header.n > MAX_VERTICES {
        return Err(Error::parse("edge list header", header_line, "too many vertices"));
    }
    let expected = header
        .n
        .checked_mul(header.d)
        .map(|x| x / 2)
        .ok_or_else(|| Error::parse("edge list header", header_line, "N*d overflows"))?;

    let mut edges = Vec::new();
    let mut weights = Vec::new();
    for (lineno, line) in lines {
        let bad = |reason: &str| Error::parse("edge list", line, format!("line {lineno}: {reason}"));
        if edges.len() >= expected {
            return Err(bad("more edges than N*d/2"));
        }
        let mut fields = line.split_whitespace();
        let mut vertex = || -> Result<u32> {
            fields
                .next()
                .ok_or_else(|| bad("expected `u v [weight]`"))?
                .parse::<u32>()
                .map_err(|_| bad("vertex is not a non-negative integer"))
        };
        let (u, v) = (vertex()?, vertex()?);
        match fields.next() {
            Some(w) => {
                let w: f64 = w.parse().map_err(|_| bad("weight is not a number"))?;
                if !w.is_finite() {
                    return Err(bad("weight is not finite"));
                }
                weights.push(w);
            }
            None if !weights.is_empty() => return Err(bad("missing weight")),
            None => {}
        }
        if fields.next().is_some() {
            return Err(bad("trailing fields"));
        }
        if !weights.is_empty() && weights.len() != edges.len() + 1 {
            return Err(bad("weights must be given on every line or none"));
        }
        edges.push((u.min(v), u.max(v)));
    }
    if edges.len() != expected {
        return Err(Error::parse(
            "edge list",
            header_line,
            format!("expected {expected} edges, found {}", edges.len()),
        ));
    }

    let graph = RegularGraph::from_edges(header.n, header.d, &edges)?;
    let weighted = if weights.is_empty() {
        None
    } else {
        // reorder weights to the graph's canonical edge order
        let mut keyed: Vec<((u32, u32), f64)> = edges.into_iter().zip(weights).collect();
        keyed.sort_unstable_by_key(|&(e, _)| e);
        let ordered = keyed.into_iter().map(|(_, w)| w).collect();
        Some(WeightedGraph::with_weights(graph.clone(), ordered)?)
    };
    Ok(EdgeListFile {
        header,
        graph,
        weighted,
    })
}
