use num_traits::Zero;
use serde::Serialize;

use crate::rational::{format_rational, to_f64, Rational};

use super::MomentEstimate;

/// Acceptance band `max(z * SE, rel * |exact| + finite_n * d^k / N)`. The
/// second term allows for the `O(1/N)` contribution of short cycles, which
/// the limiting prediction ignores.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Tolerance {
    pub z: f64,
    pub relative: f64,
    pub finite_n: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            z: 5.0,
            relative: 0.02,
            finite_n: 0.5,
        }
    }
}

impl Tolerance {
    pub fn band(&self, exact: f64, std_error: f64, n: usize, d: usize, order: usize) -> f64 {
        let finite = self.relative * exact.abs() + self.finite_n * (d as f64).powi(order as i32) / n as f64;
        (self.z * std_error).max(finite)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub order: usize,
    #[serde(serialize_with = "serialize_exact")]
    pub exact_prediction: Rational,
    pub mc_mean: f64,
    pub mc_se: f64,
    pub z_score: f64,
    pub tolerance: f64,
    pub pass: bool,
}

fn serialize_exact<S: serde::Serializer>(value: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(&format_rational(value))
}

/// Joins exact predictions with Monte Carlo estimates.
pub fn compare_moments(
    estimates: &[MomentEstimate],
    exact: &[(usize, Rational)],
    n: usize,
    d: usize,
    tolerance: &Tolerance,
) -> Vec<ComparisonRow> {
    exact
        .iter()
        .filter_map(|(order, value)| {
            let est = estimates.iter().find(|e| e.order == *order)?;
            let target = to_f64(value);
            let se = est.std_error.unwrap_or(f64::NAN);
            let diff = est.mean - target;
            let z_score = if se > 0.0 {
                diff / se
            } else if diff == 0.0 || value.is_zero() && diff.abs() < f64::EPSILON {
                0.0
            } else {
                f64::INFINITY.copysign(diff)
            };
            let band = tolerance.band(target, if se.is_nan() { 0.0 } else { se }, n, d, *order);
            Some(ComparisonRow {
                order: *order,
                exact_prediction: value.clone(),
                mc_mean: est.mean,
                mc_se: se,
                z_score,
                tolerance: band,
                pass: diff.abs() <= band,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn band_and_verdict() {
        let tol = Tolerance::default();
        // 0.02 * 28 + 0.5 * 256 / 200
        assert!((tol.band(28.0, 0.01, 200, 4, 4) - (0.56 + 0.64)).abs() < 1e-12);
        assert_eq!(tol.band(28.0, 1.0, 200, 4, 4), 5.0);

        let est = vec![MomentEstimate {
            order: 4,
            mean: 28.5,
            std_error: Some(0.1),
            trials: 100,
        }];
        let rows = compare_moments(&est, &[(4, int(28)), (6, int(1))], 200, 4, &tol);
        assert_eq!(rows.len(), 1);
        assert!(rows[0].pass);
        assert!((rows[0].z_score - 5.0).abs() < 1e-9);
        let rows = compare_moments(&est, &[(4, int(30))], 200, 4, &tol);
        assert!(!rows[0].pass);
    }

    #[test]
    fn zero_standard_error() {
        let est = vec![MomentEstimate {
            order: 2,
            mean: 4.0,
            std_error: Some(0.0),
            trials: 10,
        }];
        let rows = compare_moments(&est, &[(2, int(4))], 200, 4, &Tolerance::default());
        assert_eq!(rows[0].z_score, 0.0);
        assert!(rows[0].pass);
    }
}
