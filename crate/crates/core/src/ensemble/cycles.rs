use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};

use super::RegularGraph;

pub const DEFAULT_CYCLE_CAP: usize = 10;

/// Number of `i`-cycles for `3 <= i <= max_len`, each cycle counted once.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CycleCensus {
    pub max_len: usize,
    pub counts: BTreeMap<usize, u64>,
}

impl CycleCensus {
    pub fn get(&self, len: usize) -> u64 {
        self.counts.get(&len).copied().unwrap_or(0)
    }

    /// Entry-wise sum, e.g. for a disjoint union.
    pub fn merged(&self, other: &CycleCensus) -> CycleCensus {
        let mut counts = self.counts.clone();
        for (&len, &c) in &other.counts {
            *counts.entry(len).or_default() += c;
        }
        CycleCensus {
            max_len: self.max_len.max(other.max_len),
            counts,
        }
    }
}

/// Depth-first search from each vertex `s` through vertices larger than
/// `s`; a closing edge back to `s` is counted only when the second vertex
/// of the path is smaller than the last, which fixes one of the two
/// orientations.
pub fn count_cycles(graph: &RegularGraph, max_len: usize) -> Result<CycleCensus> {
    count_cycles_capped(graph, max_len, DEFAULT_CYCLE_CAP)
}

pub fn count_cycles_capped(graph: &RegularGraph, max_len: usize, cap: usize) -> Result<CycleCensus> {
    if max_len > cap {
        return Err(Error::CycleCap { max_len, cap });
    }
    let mut counts = vec![0u64; max_len + 1];
    let mut on_path = vec![false; graph.n()];
    let mut path = Vec::with_capacity(max_len);
    for start in 0..graph.n() {
        path.push(start);
        on_path[start] = true;
        extend(graph, start, max_len, &mut path, &mut on_path, &mut counts);
        on_path[start] = false;
        path.pop();
    }
    Ok(CycleCensus {
        max_len,
        counts: (3..=max_len).map(|i| (i, counts[i])).collect(),
    })
}

fn extend(
    graph: &RegularGraph,
    start: usize,
    max_len: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    counts: &mut [u64],
) {
    let last = *path.last().expect("path starts at the anchor");
    for &next in graph.neighbors(last) {
        let next = next as usize;
        if next == start {
            if path.len() >= 3 && path[1] < last {
                counts[path.len()] += 1;
            }
        } else if next > start && !on_path[next] && path.len() < max_len {
            path.push(next);
            on_path[next] = true;
            extend(graph, start, max_len, path, on_path, counts);
            on_path[next] = false;
            path.pop();
        }
    }
}
