use crate::ensemble::WeightedGraph;
use crate::error::{Error, Result};

pub const DEFAULT_EIGEN_TOL: f64 = 1e-10;

/// Dense symmetric eigensolver (Householder tridiagonalization followed by
/// implicit QR sweeps, via nalgebra). Every returned pair is checked
/// against `|A v - lambda v| <= tol * |A|_2`.
#[derive(Clone, Copy, Debug)]
pub struct EigenSolver {
    pub tol: f64,
    /// Zero means no cap.
    pub max_iterations: usize,
}

impl Default for EigenSolver {
    fn default() -> Self {
        Self {
            tol: DEFAULT_EIGEN_TOL,
            max_iterations: 100_000,
        }
    }
}

impl EigenSolver {
    /// All eigenvalues in increasing order.
    pub fn spectrum(&self, graph: &WeightedGraph) -> Result<Vec<f64>> {
        let a = graph.to_dense();
        let eig = a
            .clone()
            .try_symmetric_eigen(f64::EPSILON, self.max_iterations)
            .ok_or(Error::EigenNonConvergence {
                max_iterations: self.max_iterations,
            })?;
        let norm = eig.eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()));
        let residuals = &a * &eig.eigenvectors - &eig.eigenvectors * nalgebra::DMatrix::from_diagonal(&eig.eigenvalues);
        let bound = self.tol * norm;
        for col in residuals.column_iter() {
            let residual = col.norm();
            if residual > bound && residual > f64::MIN_POSITIVE {
                return Err(Error::EigenResidual { residual, bound });
            }
        }
        let mut values: Vec<f64> = eig.eigenvalues.iter().copied().collect();
        values.sort_by(f64::total_cmp);
        Ok(values)
    }
}

pub fn eigen_spectrum(graph: &WeightedGraph, tol: f64) -> Result<Vec<f64>> {
    EigenSolver {
        tol,
        ..EigenSolver::default()
    }
    .spectrum(graph)
}
