//! Empirical spectra of weighted graphs and their comparison with the
//! exact moment predictions.

mod compare;
mod density;
mod eigen;
mod kesten;
mod montecarlo;
mod trace;

pub use compare::{compare_moments, ComparisonRow, Tolerance};
pub use density::{
    density_table, empirical_density, kesten_range, total_variation, DensityRow, Histogram,
    DEFAULT_BINS, DEFAULT_RANGE_PADDING,
};
pub use eigen::{eigen_spectrum, EigenSolver, DEFAULT_EIGEN_TOL};
pub use kesten::{
    kesten_density, kesten_interval_mass, kesten_moment_numeric, semicircle_density,
    semicircle_interval_mass, KESTEN_ENDPOINT_SENTINEL,
};
pub use montecarlo::{
    aggregate, monte_carlo_moments, run_trials, MomentEstimate, MonteCarloConfig, SpectralSample,
};
pub use trace::{trace_moments, TraceMoments, DEFAULT_TRACE_BUDGET};
