use rayon::prelude::*;
use serde::Serialize;

use crate::ensemble::{assign_weights, Sampler, WeightSpec};
use crate::error::{Error, Result};
use crate::seed::{derive_seed, GRAPH_STREAM, WEIGHT_STREAM};

use super::{EigenSolver, TraceMoments};

/// Parameters of a Monte Carlo run over the weighted `R_{N,d}` ensemble.
#[derive(Clone, Debug)]
pub struct MonteCarloConfig {
    pub n: usize,
    pub d: usize,
    pub weights: WeightSpec,
    pub trials: usize,
    pub max_order: usize,
    pub master_seed: u64,
    /// Also compute the full spectrum of every trial.
    pub keep_eigenvalues: bool,
    pub sampler: Sampler,
    pub trace: TraceMoments,
    pub eigen: EigenSolver,
}

impl MonteCarloConfig {
    pub fn new(n: usize, d: usize, weights: WeightSpec, trials: usize, max_order: usize, master_seed: u64) -> Self {
        Self {
            n,
            d,
            weights,
            trials,
            max_order,
            master_seed,
            keep_eigenvalues: false,
            sampler: Sampler::default(),
            trace: TraceMoments::default(),
            eigen: EigenSolver::default(),
        }
    }
}

/// One trial: graph and weights drawn from their derived seeds.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSample {
    pub trial: usize,
    pub graph_seed: u64,
    pub weight_seed: u64,
    pub n: usize,
    pub d: usize,
    pub weight_spec: WeightSpec,
    /// `trace_moments[k-1] = Tr(A^k) / N`.
    pub trace_moments: Vec<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MomentEstimate {
    pub order: usize,
    pub mean: f64,
    /// Sample standard deviation over `sqrt(trials)`; undefined below two
    /// trials.
    pub std_error: Option<f64>,
    pub trials: usize,
}

fn run_trial(config: &MonteCarloConfig, trial: usize) -> Result<SpectralSample> {
    let graph_seed = derive_seed(config.master_seed, trial as u64, GRAPH_STREAM);
    let weight_seed = derive_seed(config.master_seed, trial as u64, WEIGHT_STREAM);
    let graph = config.sampler.sample(config.n, config.d, graph_seed)?;
    let weighted = assign_weights(&graph, &config.weights, weight_seed);
    let trace_moments = config.trace.compute(&weighted, config.max_order)?;
    let eigenvalues = if config.keep_eigenvalues {
        Some(config.eigen.spectrum(&weighted)?)
    } else {
        None
    };
    Ok(SpectralSample {
        trial,
        graph_seed,
        weight_seed,
        n: config.n,
        d: config.d,
        weight_spec: config.weights.clone(),
        trace_moments,
        eigenvalues,
    })
}

/// Runs every trial (in parallel across trials) and returns them in trial
/// order.
pub fn run_trials(config: &MonteCarloConfig) -> Result<Vec<SpectralSample>> {
    if config.trials == 0 {
        return Err(Error::domain("trials", 0, "at least one trial is required"));
    }
    (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(config, trial))
        .collect()
}

/// Mean and standard error per order, folded in trial order.
pub fn aggregate(samples: &[SpectralSample], max_order: usize) -> Result<Vec<MomentEstimate>> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    let trials = samples.len();
    (1..=max_order)
        .map(|order| {
            let values: Vec<f64> = samples
                .iter()
                .map(|s| {
                    s.trace_moments.get(order - 1).copied().ok_or(Error::domain(
                        "max_order",
                        order,
                        "samples carry fewer trace moments",
                    ))
                })
                .collect::<Result<_>>()?;
            let mean = values.iter().sum::<f64>() / trials as f64;
            let std_error = (trials >= 2).then(|| {
                let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (trials - 1) as f64;
                (var / trials as f64).sqrt()
            });
            Ok(MomentEstimate {
                order,
                mean,
                std_error,
                trials,
            })
        })
        .collect()
}

pub fn monte_carlo_moments(config: &MonteCarloConfig) -> Result<Vec<MomentEstimate>> {
    aggregate(&run_trials(config)?, config.max_order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_weights_second_moment_exact() {
        let config = MonteCarloConfig::new(60, 4, WeightSpec::ConstantOne, 5, 2, 3);
        let est = monte_carlo_moments(&config).unwrap();
        assert_eq!(est[0].mean, 0.0);
        assert_eq!(est[1].mean, 4.0);
        assert_eq!(est[1].std_error, Some(0.0));
    }

    #[test]
    fn deterministic_given_master_seed() {
        let mut config = MonteCarloConfig::new(40, 3, WeightSpec::semicircle_quarter(), 6, 4, 99);
        config.keep_eigenvalues = true;
        let a = run_trials(&config).unwrap();
        let b = run_trials(&config).unwrap();
        assert_eq!(a, b);
        config.master_seed = 100;
        assert_ne!(a, run_trials(&config).unwrap());
    }

    #[test]
    fn single_trial_has_no_standard_error() {
        let config = MonteCarloConfig::new(20, 3, WeightSpec::Rademacher, 1, 2, 0);
        assert_eq!(monte_carlo_moments(&config).unwrap()[1].std_error, None);
        let zero = MonteCarloConfig::new(20, 3, WeightSpec::Rademacher, 0, 2, 0);
        assert!(run_trials(&zero).is_err());
        assert!(aggregate(&[], 2).is_err());
    }

    #[test]
    fn sampling_errors_propagate() {
        let config = MonteCarloConfig::new(5, 3, WeightSpec::ConstantOne, 2, 2, 0);
        assert!(matches!(run_trials(&config), Err(Error::Parity { n: 5, d: 3 })));
    }
}
