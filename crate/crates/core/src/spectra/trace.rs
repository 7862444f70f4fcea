use crate::ensemble::WeightedGraph;
use crate::error::{Error, Result};

/// Default cap on `N * K`.
pub const DEFAULT_TRACE_BUDGET: usize = 1 << 17;

#[derive(Clone, Copy, Debug)]
pub struct TraceMoments {
    pub budget: usize,
}

impl Default for TraceMoments {
    fn default() -> Self {
        Self {
            budget: DEFAULT_TRACE_BUDGET,
        }
    }
}

impl TraceMoments {
    /// `mu_k = Tr(A^k) / N` for `k = 1..=max_order`; `out[k-1]` is `mu_k`.
    ///
    /// For each vertex `i` the vectors `A^j e_i` are built up to
    /// `j = ceil(K/2)` with sparse products, and the diagonal entry
    /// `(A^k)_{ii}` is read off as `<A^a e_i, A^b e_i>` with `a + b = k`.
    pub fn compute(&self, graph: &WeightedGraph, max_order: usize) -> Result<Vec<f64>> {
        if max_order == 0 {
            return Err(Error::domain("max_order", max_order, "at least one moment is required"));
        }
        let n = graph.n();
        let work = n.saturating_mul(max_order);
        if work > self.budget {
            return Err(Error::Budget {
                work,
                budget: self.budget,
            });
        }
        let half = max_order.div_ceil(2);
        let mut sums = vec![0.0f64; max_order];
        let mut powers: Vec<Vec<f64>> = vec![vec![0.0; n]; half + 1];
        for i in 0..n {
            powers[0].iter_mut().for_each(|x| *x = 0.0);
            powers[0][i] = 1.0;
            for j in 1..=half {
                let (done, rest) = powers.split_at_mut(j);
                let (prev, next) = (&done[j - 1], &mut rest[0]);
                for (u, out) in next.iter_mut().enumerate() {
                    *out = graph.neighbors(u).iter().map(|&(v, w)| w * prev[v as usize]).sum();
                }
            }
            for k in 1..=max_order {
                let a = k / 2;
                let b = k - a;
                let dot: f64 = powers[a].iter().zip(&powers[b]).map(|(x, y)| x * y).sum();
                sums[k - 1] += dot;
            }
        }
        Ok(sums.into_iter().map(|s| s / n as f64).collect())
    }
}

pub fn trace_moments(graph: &WeightedGraph, max_order: usize) -> Result<Vec<f64>> {
    TraceMoments::default().compute(graph, max_order)
}
