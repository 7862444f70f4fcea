use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_BINS: usize = 50;
/// Relative padding of the default unweighted range past Kesten's support.
pub const DEFAULT_RANGE_PADDING: f64 = 0.05;

/// Normalized histogram over `[lo, hi]`; samples outside the range are
/// counted separately and excluded from the normalization.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Histogram {
    pub lo: f64,
    pub hi: f64,
    pub counts: Vec<u64>,
    pub density: Vec<f64>,
    pub in_range: u64,
    pub out_of_range: u64,
}

impl Histogram {
    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn bin_width(&self) -> f64 {
        (self.hi - self.lo) / self.bins() as f64
    }

    pub fn bin_edges(&self, i: usize) -> (f64, f64) {
        let w = self.bin_width();
        (self.lo + i as f64 * w, self.lo + (i + 1) as f64 * w)
    }

    pub fn bin_center(&self, i: usize) -> f64 {
        let (a, b) = self.bin_edges(i);
        0.5 * (a + b)
    }
}

/// `[-2 sqrt(d-1) (1 + eps), 2 sqrt(d-1) (1 + eps)]`.
pub fn kesten_range(d: u64) -> (f64, f64) {
    let r = 2.0 * (d.saturating_sub(1) as f64).sqrt() * (1.0 + DEFAULT_RANGE_PADDING);
    (-r, r)
}

/// Bins pooled eigenvalues. Without an explicit range the data's own extent
/// is used (widened to unit width when all samples coincide).
pub fn empirical_density(samples: &[f64], bins: usize, range: Option<(f64, f64)>) -> Result<Histogram> {
    if samples.is_empty() {
        return Err(Error::EmptySample);
    }
    if bins == 0 {
        return Err(Error::domain("bins", bins, "at least one bin is required"));
    }
    let (lo, hi) = match range {
        Some((lo, hi)) if lo < hi && lo.is_finite() && hi.is_finite() => (lo, hi),
        Some((lo, hi)) => {
            return Err(Error::domain("range", format!("[{lo}, {hi}]"), "need finite lo < hi"))
        }
        None => {
            let lo = samples.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = samples.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            if !(lo.is_finite() && hi.is_finite()) {
                return Err(Error::domain("samples", "non-finite", "eigenvalues must be finite"));
            }
            if lo == hi {
                (lo - 0.5, hi + 0.5)
            } else {
                (lo, hi)
            }
        }
    };
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0u64; bins];
    let mut out_of_range = 0;
    for &x in samples {
        if !(lo..=hi).contains(&x) {
            out_of_range += 1;
            continue;
        }
        let i = (((x - lo) / width) as usize).min(bins - 1);
        counts[i] += 1;
    }
    let in_range = samples.len() as u64 - out_of_range;
    if in_range == 0 {
        return Err(Error::EmptySample);
    }
    let density = counts
        .iter()
        .map(|&c| c as f64 / (in_range as f64 * width))
        .collect();
    Ok(Histogram {
        lo,
        hi,
        counts,
        density,
        in_range,
        out_of_range,
    })
}

/// `(1/2) sum_i |p_i - q_i|` between the histogram's bin masses and the
/// reference masses, plus half the reference mass falling outside the range.
pub fn total_variation(hist: &Histogram, reference_mass: impl Fn(f64, f64) -> Result<f64>) -> Result<f64> {
    let w = hist.bin_width();
    let mut tv = 0.0;
    let mut covered = 0.0;
    for i in 0..hist.bins() {
        let (a, b) = hist.bin_edges(i);
        let q = reference_mass(a, b)?;
        covered += q;
        tv += (hist.density[i] * w - q).abs();
    }
    tv += (1.0 - covered).max(0.0);
    Ok(0.5 * tv)
}

/// One plot-ready row; reference columns are bin-averaged densities.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityRow {
    pub bin_center: f64,
    pub empirical: f64,
    pub kesten: Option<f64>,
    pub semicircle_ref: Option<f64>,
}

/// Rows for the histogram; `kesten_d` adds Kesten's density, and
/// `semicircle_variance` a semicircle of that variance.
pub fn density_table(
    hist: &Histogram,
    kesten_d: Option<u64>,
    semicircle_variance: Option<f64>,
) -> Result<Vec<DensityRow>> {
    let w = hist.bin_width();
    (0..hist.bins())
        .map(|i| {
            let (a, b) = hist.bin_edges(i);
            let kesten = kesten_d
                .map(|d| super::kesten_interval_mass(d, a, b).map(|m| m / w))
                .transpose()?;
            let semicircle_ref = semicircle_variance.map(|v| super::semicircle_interval_mass(v, a, b) / w);
            Ok(DensityRow {
                bin_center: hist.bin_center(i),
                empirical: hist.density[i],
                kesten,
                semicircle_ref,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization() {
        let samples: Vec<f64> = (0..1000).map(|i| ((i * 7919) % 1000) as f64 / 250.0 - 2.0).collect();
        let h = empirical_density(&samples, 37, Some((-3.0, 3.0))).unwrap();
        let total: f64 = h.density.iter().map(|p| p * h.bin_width()).sum();
        assert!((total - 1.0).abs() < 1e-12);
        assert_eq!(h.in_range, 1000);
    }

    #[test]
    fn degenerate_sample_single_bin() {
        let h = empirical_density(&[1.5; 20], 10, None).unwrap();
        let occupied: Vec<_> = h.counts.iter().filter(|&&c| c > 0).collect();
        assert_eq!(occupied.len(), 1);
        let i = h.counts.iter().position(|&c| c > 0).unwrap();
        assert!((h.density[i] - 1.0 / h.bin_width()).abs() < 1e-12);
    }

    #[test]
    fn errors() {
        assert!(matches!(empirical_density(&[], 5, None), Err(Error::EmptySample)));
        assert!(matches!(empirical_density(&[9.0], 5, Some((0.0, 1.0))), Err(Error::EmptySample)));
        assert!(empirical_density(&[0.5], 0, None).is_err());
        assert!(empirical_density(&[0.5], 3, Some((1.0, 0.0))).is_err());
    }

    #[test]
    fn tv_of_exact_masses_is_zero() {
        // histogram built to match the semicircle masses exactly
        let mut h = empirical_density(&[0.0], 20, Some((-1.2, 1.2))).unwrap();
        let w = h.bin_width();
        for i in 0..20 {
            let (a, b) = h.bin_edges(i);
            h.density[i] = crate::spectra::semicircle_interval_mass(0.25, a, b) / w;
        }
        let tv = total_variation(&h, |a, b| Ok(crate::spectra::semicircle_interval_mass(0.25, a, b))).unwrap();
        assert!(tv < 1e-12);
        let tv = total_variation(&h, |a, b| Ok(crate::spectra::semicircle_interval_mass(1.0, a, b))).unwrap();
        assert!(tv > 0.1);
    }
}
