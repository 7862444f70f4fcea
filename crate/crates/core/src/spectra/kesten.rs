//! Kesten's density for unweighted random `d`-regular graphs,
//!
//! `f(x) = d sqrt(4(d-1) - x^2) / (2 pi (d^2 - x^2))` on `|x| <= 2 sqrt(d-1)`,
//!
//! and its moments by quadrature. With `x = R cos(theta)`, `R = 2 sqrt(d-1)`,
//! the measure becomes
//! `d R^2 sin^2 / (2 pi ((d-2)^2 + R^2 sin^2)) d(theta)` on `[0, pi]`, which
//! is smooth and periodic even at `d = 2` where the density itself has
//! inverse square-root endpoint singularities.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Value reported at the two endpoints `x = +-2` of the `d = 2` density.
pub const KESTEN_ENDPOINT_SENTINEL: f64 = f64::INFINITY;

const MAX_TRAPEZOID_POINTS: usize = 1 << 20;

fn check_d(d: u64) -> Result<()> {
    if d < 2 {
        return Err(Error::domain("d", d, "Kesten's density needs d >= 2"));
    }
    Ok(())
}

fn radius(d: u64) -> f64 {
    2.0 * ((d - 1) as f64).sqrt()
}

pub fn kesten_density(d: u64, x: f64) -> Result<f64> {
    check_d(d)?;
    let r = radius(d);
    if x.is_nan() || x.abs() > r {
        return Ok(0.0);
    }
    let df = d as f64;
    let denom = df * df - x * x;
    if d == 2 && denom <= 0.0 {
        return Ok(KESTEN_ENDPOINT_SENTINEL);
    }
    Ok(df * (r * r - x * x).max(0.0).sqrt() / (2.0 * PI * denom))
}

/// Density of the substituted measure on `theta in [0, pi]`.
fn theta_weight(d: u64, theta: f64) -> f64 {
    let df = d as f64;
    let r = radius(d);
    let s = theta.sin().powi(2);
    let gap = (df - 2.0).powi(2);
    let ratio = if d == 2 { 1.0 } else { r * r * s / (gap + r * r * s) };
    df / (2.0 * PI) * ratio
}

/// `int x^k f(x) dx` by the trapezoidal rule over a full period in `theta`,
/// doubling the node count until two successive estimates agree to
/// `1e-9` (or to rounding level for very large moments).
pub fn kesten_moment_numeric(d: u64, order: u32) -> Result<f64> {
    check_d(d)?;
    let r = radius(d);
    let g = |theta: f64| (r * theta.cos()).powi(order as i32) * theta_weight(d, theta);
    const TARGET: f64 = 1e-9;

    let mut points = 16usize;
    let (mut previous, _) = periodic_trapezoid(&g, points);
    loop {
        points *= 2;
        let (current, magnitude) = periodic_trapezoid(&g, points);
        let diff = (current - previous).abs();
        let rounding = 64.0 * f64::EPSILON * magnitude;
        if diff <= TARGET.max(rounding) {
            return Ok(current);
        }
        if points >= MAX_TRAPEZOID_POINTS {
            return Err(Error::Quadrature {
                estimate: diff,
                target: TARGET,
            });
        }
        previous = current;
    }
}

/// `(pi / M) sum_j g(2 pi j / M)` with compensated summation; also returns
/// the sum of magnitudes for a rounding estimate.
fn periodic_trapezoid(g: &impl Fn(f64) -> f64, points: usize) -> (f64, f64) {
    let h = 2.0 * PI / points as f64;
    let mut sum = 0.0f64;
    let mut carry = 0.0f64;
    let mut magnitude = 0.0f64;
    for j in 0..points {
        let v = g(j as f64 * h);
        magnitude += v.abs();
        let t = sum + v;
        if sum.abs() >= v.abs() {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    let scale = PI / points as f64;
    ((sum + carry) * scale, magnitude * scale)
}

/// Kesten mass of `[lo, hi]`.
pub fn kesten_interval_mass(d: u64, lo: f64, hi: f64) -> Result<f64> {
    check_d(d)?;
    let r = radius(d);
    let (a, b) = (lo.max(-r), hi.min(r));
    if a >= b {
        return Ok(0.0);
    }
    // x = R cos(theta) is decreasing in theta
    let (t0, t1) = ((b / r).clamp(-1.0, 1.0).acos(), (a / r).clamp(-1.0, 1.0).acos());
    if d == 2 {
        return Ok((t1 - t0) / PI);
    }
    let out = quadrature::double_exponential::integrate(|t| theta_weight(d, t), t0, t1, 1e-13);
    if out.error_estimate > 1e-10 {
        return Err(Error::Quadrature {
            estimate: out.error_estimate,
            target: 1e-10,
        });
    }
    Ok(out.integral)
}

/// Semicircle law with the given variance.
pub fn semicircle_density(variance: f64, x: f64) -> f64 {
    let r2 = 4.0 * variance;
    if x * x >= r2 {
        return 0.0;
    }
    2.0 / (PI * r2) * (r2 - x * x).sqrt()
}

pub fn semicircle_interval_mass(variance: f64, lo: f64, hi: f64) -> f64 {
    let r = 2.0 * variance.sqrt();
    let (a, b) = (lo.max(-r), hi.min(r));
    if a >= b {
        return 0.0;
    }
    let antiderivative = |t: f64| (t - 0.5 * (2.0 * t).sin()) / PI;
    let (t0, t1) = ((b / r).clamp(-1.0, 1.0).acos(), (a / r).clamp(-1.0, 1.0).acos());
    antiderivative(t1) - antiderivative(t0)
}
