//! Limiting spectral moments of randomly weighted regular graphs.
//!
//! * [`capp`] enumerates closed acyclic path patterns (closed walks on
//!   trees up to relabeling) and their diagrams, signatures and
//!   multiplicity polynomials.
//! * [`moments`] turns pattern counts into exact moments: the expansion of
//!   the spectral moments in terms of the weight moments, the moments of the
//!   eigendistribution, and Kesten's moments.
//! * [`ensemble`] samples uniform simple `d`-regular graphs, weights their
//!   edges and counts short cycles.
//! * [`spectra`] measures trace moments and spectra of sampled graphs and
//!   compares them against the exact predictions.

pub mod capp;
pub mod ensemble;
pub mod error;
pub mod moments;
pub mod poly;
pub mod rational;
pub mod seed;
pub mod spectra;

pub use error::{Error, Result};
