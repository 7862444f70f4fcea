use rand::seq::SliceRandom;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::seed;

pub const DEFAULT_MAX_ATTEMPTS: usize = 1_000_000;

/// A simple `d`-regular graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularGraph {
    n: usize,
    d: usize,
    /// Sorted neighbor lists.
    adjacency: Vec<Vec<u32>>,
    seed: Option<u64>,
}

impl RegularGraph {
    /// Builds a graph from an undirected edge list, checking simplicity and
    /// regularity.
    pub fn from_edges(n: usize, d: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let not_regular = |reason: String| Error::NotRegular { d, reason };
        let mut adjacency = vec![Vec::with_capacity(d); n];
        for &(u, v) in edges {
            let (ui, vi) = (u as usize, v as usize);
            if ui >= n || vi >= n {
                return Err(not_regular(format!("edge ({u}, {v}) outside 0..{n}")));
            }
            if u == v {
                return Err(not_regular(format!("self-loop at {u}")));
            }
            adjacency[ui].push(v);
            adjacency[vi].push(u);
        }
        for (v, nbrs) in adjacency.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.len() != d {
                return Err(not_regular(format!("vertex {v} has degree {}", nbrs.len())));
            }
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(not_regular(format!("repeated edge at vertex {v}")));
            }
        }
        Ok(Self {
            n,
            d,
            adjacency,
            seed: None,
        })
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        Self::from_edges(n, n.saturating_sub(1), &edges).expect("complete graph is regular")
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n as u32).map(|u| (u, (u + 1) % n as u32)).collect();
        Self::from_edges(n, 2, &edges).expect("cycle is 2-regular")
    }

    /// Vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &RegularGraph) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::NotRegular {
                d: self.d,
                reason: format!("cannot join degree {} with degree {}", self.d, other.d),
            });
        }
        let shift = self.n as u32;
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|nbrs| nbrs.iter().map(|&v| v + shift).collect()),
        );
        Ok(Self {
            n: self.n + other.n,
            d: self.d,
            adjacency,
            seed: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    pub fn edge_count(&self) -> usize {
        self.n * self.d / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adjacency.iter().enumerate() {
            let u = u as u32;
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    reached += 1;
                    stack.push(v as usize);
                }
            }
        }
        reached == self.n
    }
}

/// Pairing-model sampler: `d` half-edges per vertex are matched uniformly at
/// random and the whole matching is redrawn whenever it produces a loop or a
/// repeated edge. Conditioned on simplicity the result is uniform over simple
/// `d`-regular graphs.
#[derive(Clone, Copy, Debug)]
pub struct Sampler {
    pub max_attempts: usize,
}

impl Default for Sampler {
    fn default() -> Self {
        Self {
            max_attempts: DEFAULT_MAX_ATTEMPTS,
        }
    }
}

impl Sampler {
    pub fn sample(&self, n: usize, d: usize, seed: u64) -> Result<RegularGraph> {
        if d == 0 {
            return Err(Error::domain("d", d, "degree must be at least 1"));
        }
        if d >= n {
            return Err(Error::DegreeTooLarge { n, d });
        }
        if (n * d) % 2 == 1 {
            return Err(Error::Parity { n, d });
        }
        let mut rng = seed::rng(seed);
        let mut points: Vec<u32> = (0..n as u32)
            .flat_map(|v| std::iter::repeat_n(v, d))
            .collect();
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::with_capacity(d); n];
        'attempt: for _ in 0..self.max_attempts {
            points.shuffle(&mut rng);
            adjacency.iter_mut().for_each(Vec::clear);
            for pair in points.chunks_exact(2) {
                let (u, v) = (pair[0], pair[1]);
                if u == v || adjacency[u as usize].contains(&v) {
                    continue 'attempt;
                }
                adjacency[u as usize].push(v);
                adjacency[v as usize].push(u);
            }
            adjacency.iter_mut().for_each(|nbrs| nbrs.sort_unstable());
            return Ok(RegularGraph {
                n,
                d,
                adjacency,
                seed: Some(seed),
            });
        }
        Err(Error::RetryLimit {
            attempts: self.max_attempts,
            n,
            d,
        })
    }
}

pub fn sample_regular_graph(n: usize, d: usize, seed: u64) -> Result<RegularGraph> {
    Sampler::default().sample(n, d, seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_simple_regular(g: &RegularGraph) {
        let again = RegularGraph::from_edges(g.n(), g.d(), &g.edges()).unwrap();
        assert_eq!(again.adjacency, g.adjacency);
        assert_eq!(g.edges().len(), g.n() * g.d() / 2);
    }

    #[test]
    fn four_vertices_three_regular_is_k4() {
        let g = sample_regular_graph(4, 3, 11).unwrap();
        assert_eq!(g.edges(), RegularGraph::complete(4).edges());
    }

    #[test]
    fn sampled_graph_invariants() {
        let g = sample_regular_graph(200, 4, 1).unwrap();
        assert_eq!(g.edges().len(), 400);
        assert!((0..200).all(|v| g.neighbors(v).len() == 4));
        assert_simple_regular(&g);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(sample_regular_graph(5, 3, 0), Err(Error::Parity { n: 5, d: 3 })));
        assert!(matches!(sample_regular_graph(4, 4, 0), Err(Error::DegreeTooLarge { .. })));
        assert!(sample_regular_graph(4, 0, 0).is_err());
        let tight = Sampler { max_attempts: 1 };
        let failures = (0..50).filter(|&s| tight.sample(10, 6, s).is_err()).count();
        assert!(failures > 0);
        assert!(matches!(
            Sampler { max_attempts: 0 }.sample(10, 3, 0),
            Err(Error::RetryLimit { attempts: 0, .. })
        ));
    }

    #[test]
    fn seed_determinism() {
        let a = sample_regular_graph(60, 3, 42).unwrap();
        let b = sample_regular_graph(60, 3, 42).unwrap();
        let c = sample_regular_graph(60, 3, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a.edges(), c.edges());
        assert_eq!(a.seed(), Some(42));
    }

    #[test]
    fn rejects_non_simple_edge_lists() {
        assert!(RegularGraph::from_edges(3, 2, &[(0, 1), (1, 2), (2, 0)]).is_ok());
        assert!(RegularGraph::from_edges(2, 2, &[(0, 1), (0, 1)]).is_err());
        assert!(RegularGraph::from_edges(2, 2, &[(0, 0), (1, 1)]).is_err());
        assert!(RegularGraph::from_edges(3, 1, &[(0, 1)]).is_err());
        assert!(RegularGraph::from_edges(3, 2, &[(0, 1), (1, 2), (2, 5)]).is_err());
    }

    #[test]
    fn union_and_connectivity() {
        let g = RegularGraph::cycle(5).disjoint_union(&RegularGraph::cycle(4)).unwrap();
        assert_eq!(g.n(), 9);
        assert!(!g.is_connected());
        assert!(RegularGraph::cycle(9).is_connected());
        assert_simple_regular(&g);
        assert!(RegularGraph::complete(4).disjoint_union(&RegularGraph::cycle(4)).is_err());
    }
}
