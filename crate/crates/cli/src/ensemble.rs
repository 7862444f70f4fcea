//! `simulate` and `compare`: Monte Carlo runs that write data files and a
//! manifest into an output directory.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context as _, Result};
use regspec::capp::Enumerator;
use regspec::ensemble::{Sampler, WeightSpec};
use regspec::moments::MomentEngine;
use regspec::rational::{format_rational, to_f64, Rational};
use regspec::seed::{RNG_ALGORITHM, SEED_SPLITTING};
use regspec::spectra::{
    aggregate, compare_moments, density_table, empirical_density, kesten_interval_mass, kesten_range,
    run_trials, semicircle_interval_mass, total_variation, MomentEstimate, MonteCarloConfig, Tolerance,
};
use serde_json::json;

use crate::cli::{CompareArgs, EnsembleArgs};
use crate::config::{pick, require, FileConfig};
use crate::table::{Cell, Table};
use crate::{Context, Outcome, UsageError};

pub const DEFAULT_OUTPUT_DIR: &str = "regspec-output";
const DEFAULT_TRIALS: usize = 100;
const DEFAULT_MAX_ORDER: usize = 8;

/// Ensemble parameters after applying flags, config file and defaults.
struct Ensemble {
    n: usize,
    d: usize,
    weights: WeightSpec,
    trials: usize,
    max_order: usize,
    bins: usize,
    density: bool,
    max_attempts: usize,
    seed: u64,
    seed_source: &'static str,
}

fn resolve(ctx: &Context, args: &EnsembleArgs) -> Result<Ensemble> {
    let file = &ctx.file;
    let weights_text = pick(args.weights.clone(), file.weights.clone(), "constant".to_owned());
    let weights: WeightSpec = weights_text
        .parse()
        .map_err(|e| UsageError(format!("--weights: {e}")))?;
    let (seed, seed_source) = match (ctx.seed, file.seed) {
        (Some(s), _) => (s, "flag"),
        (None, Some(s)) => (s, "config"),
        (None, None) => (generated_seed(), "generated"),
    };
    let e = Ensemble {
        n: require(args.n, file.n, "N")?,
        d: require(args.d, file.d, "d")?,
        weights,
        trials: pick(args.trials, file.trials, DEFAULT_TRIALS),
        max_order: pick(args.max_order, file.max_order, DEFAULT_MAX_ORDER),
        bins: pick(args.bins, file.bins, regspec::spectra::DEFAULT_BINS),
        density: if args.no_density { false } else { file.density.unwrap_or(true) },
        max_attempts: pick(args.max_attempts, file.max_attempts, regspec::ensemble::DEFAULT_MAX_ATTEMPTS),
        seed,
        seed_source,
    };
    if e.trials == 0 {
        bail!(UsageError("--trials must be at least 1".into()));
    }
    if e.max_order == 0 {
        bail!(UsageError("--max-order must be at least 1".into()));
    }
    if e.bins == 0 {
        bail!(UsageError("--bins must be at least 1".into()));
    }
    if e.max_attempts == 0 {
        bail!(UsageError("--max-attempts must be at least 1".into()));
    }
    Ok(e)
}

fn generated_seed() -> u64 {
    use std::hash::{BuildHasher, Hasher};
    let mut h = std::collections::hash_map::RandomState::new().build_hasher();
    if let Ok(t) = std::time::SystemTime::now().duration_since(std::time::UNIX_EPOCH) {
        h.write_u128(t.as_nanos());
    }
    h.write_u32(std::process::id());
    h.finish()
}

impl Ensemble {
    fn file_config(&self, ctx: &Context) -> FileConfig {
        FileConfig {
            seed: Some(self.seed),
            format: Some(ctx.format),
            threads: ctx.threads,
            max_length: Some(ctx.max_length),
            n: Some(self.n),
            d: Some(self.d),
            weights: Some(self.weights.to_string()),
            trials: Some(self.trials),
            max_order: Some(self.max_order),
            bins: Some(self.bins),
            density: Some(self.density),
            max_attempts: Some(self.max_attempts),
            ..FileConfig::default()
        }
    }

    fn monte_carlo(&self, keep_eigenvalues: bool) -> MonteCarloConfig {
        let mut c = MonteCarloConfig::new(self.n, self.d, self.weights.clone(), self.trials, self.max_order, self.seed);
        c.keep_eigenvalues = keep_eigenvalues;
        c.sampler = Sampler {
            max_attempts: self.max_attempts,
        };
        c
    }

    /// Exact limiting moments for orders `1..=max_order`.
    fn exact(&self, ctx: &Context, orders: &[usize]) -> Result<Vec<(usize, Rational)>> {
        let engine = MomentEngine::new(Enumerator::with_max_length(ctx.max_length));
        orders
            .iter()
            .map(|&k| {
                let moments = self.weights.moments(k as u32);
                Ok((k, engine.moment_expansion(k as u32, self.d as u64, &moments)?))
            })
            .collect()
    }
}

/// Creates the output directory and refuses to overwrite the config file.
fn prepare_output(ctx: &Context, files: &[String]) -> Result<PathBuf> {
    let dir = ctx.output.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_OUTPUT_DIR));
    if dir.is_file() {
        bail!("output {} exists and is not a directory", dir.display());
    }
    std::fs::create_dir_all(&dir).with_context(|| format!("cannot create output directory {}", dir.display()))?;
    for f in files {
        ctx.guard_input(&dir.join(f))?;
    }
    Ok(dir)
}

fn write(dir: &Path, name: &str, bytes: &[u8]) -> Result<()> {
    let path = dir.join(name);
    std::fs::write(&path, bytes).with_context(|| format!("cannot write {}", path.display()))
}

fn manifest(command: &str, ctx: &Context, e: &Ensemble, config: &FileConfig, outputs: &[String], summary: serde_json::Value) -> Result<Vec<u8>> {
    let value = json!({
        "tool": "regspec",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "config": config,
        "seed_source": e.seed_source,
        "rng": { "algorithm": RNG_ALGORITHM, "seed_splitting": SEED_SPLITTING },
        "outputs": outputs,
        "format": ctx.format,
        "summary": summary,
    });
    let mut bytes = serde_json::to_vec_pretty(&value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

fn estimate_columns(row: &mut Vec<Cell>, est: &MomentEstimate) {
    row.push(Cell::Float(est.mean));
    row.push(est.std_error.map_or(Cell::Empty, Cell::Float));
}

pub fn simulate(ctx: &Context, args: &EnsembleArgs) -> Result<Outcome> {
    let e = resolve(ctx, args)?;
    let ext = ctx.format.extension();
    let mut names = vec![format!("moments.{ext}")];
    if e.density {
        names.push(format!("density.{ext}"));
    }
    names.push("manifest.json".into());
    let orders: Vec<usize> = (1..=e.max_order).collect();
    // the exact column also checks the length limit before any sampling
    let exact = e.exact(ctx, &orders)?;
    let dir = prepare_output(ctx, &names)?;

    let samples = ctx.install(|| run_trials(&e.monte_carlo(e.density)))??;
    let estimates = aggregate(&samples, e.max_order)?;

    let mut moments = Table::new(vec!["order", "exact_prediction", "mc_mean", "mc_se", "z_score"]);
    for ((k, value), est) in exact.iter().zip(&estimates) {
        let target = to_f64(value);
        let mut row = vec![Cell::Int(*k as i128), Cell::Exact(format_rational(value))];
        estimate_columns(&mut row, est);
        row.push(match est.std_error {
            Some(se) if se > 0.0 => Cell::Float((est.mean - target) / se),
            _ => Cell::Empty,
        });
        moments.push(row);
    }
    write(&dir, &names[0], &moments.to_bytes(ctx.format)?)?;

    let mut summary = json!({ "trials": samples.len() });
    if e.density {
        let eigenvalues: Vec<f64> = samples.iter().flat_map(|s| s.eigenvalues.clone().unwrap_or_default()).collect();
        let unweighted = e.weights == WeightSpec::ConstantOne;
        let range = unweighted.then(|| kesten_range(e.d as u64));
        let hist = empirical_density(&eigenvalues, e.bins, range)?;
        let variance = e.d as f64 * to_f64(&e.weights.moment(2));
        let rows = density_table(&hist, unweighted.then_some(e.d as u64), Some(variance))?;
        let mut t = Table::new(vec!["bin_center", "empirical", "kesten", "semicircle_ref"]);
        for r in rows {
            t.push(vec![
                Cell::Float(r.bin_center),
                Cell::Float(r.empirical),
                r.kesten.map_or(Cell::Empty, Cell::Float),
                r.semicircle_ref.map_or(Cell::Empty, Cell::Float),
            ]);
        }
        write(&dir, &names[1], &t.to_bytes(ctx.format)?)?;
        let tv_semicircle = total_variation(&hist, |a, b| Ok(semicircle_interval_mass(variance, a, b)))?;
        summary["histogram"] = json!({
            "range": [hist.lo, hist.hi],
            "bins": hist.bins(),
            "in_range": hist.in_range,
            "out_of_range": hist.out_of_range,
            "tv_semicircle_ref": tv_semicircle,
        });
        if unweighted {
            let tv = total_variation(&hist, |a, b| kesten_interval_mass(e.d as u64, a, b))?;
            summary["histogram"]["tv_kesten"] = json!(tv);
            eprintln!("total variation to Kesten's density: {tv:.4}");
        }
    }
    let config = e.file_config(ctx);
    write(&dir, "manifest.json", &manifest("simulate", ctx, &e, &config, &names[..names.len() - 1], summary)?)?;
    eprintln!("wrote {} (seed {})", dir.display(), e.seed);
    Ok(Outcome::Success)
}

pub fn compare(ctx: &Context, args: &CompareArgs) -> Result<Outcome> {
    let mut ensemble_args = args.ensemble.clone();
    ensemble_args.no_density = true;
    let mut e = resolve(ctx, &ensemble_args)?;
    e.density = false;
    let orders: Vec<usize> = match args.orders.as_ref().map(|o| o.0.clone()).or(ctx.file.orders.clone()) {
        Some(o) => o,
        None => (2..=e.max_order).step_by(2).collect(),
    };
    if orders.is_empty() || orders.contains(&0) {
        bail!(UsageError("--orders must list positive orders".into()));
    }
    e.max_order = *orders.iter().max().expect("non-empty");
    let defaults = Tolerance::default();
    let tolerance = Tolerance {
        z: pick(args.z, ctx.file.z, defaults.z),
        relative: pick(args.rel, ctx.file.rel, defaults.relative),
        finite_n: pick(args.finite_n, ctx.file.finite_n, defaults.finite_n),
    };
    let ext = ctx.format.extension();
    let names = vec![format!("comparison.{ext}"), "manifest.json".to_owned()];
    let exact = e.exact(ctx, &orders)?;
    let dir = prepare_output(ctx, &names)?;

    let samples = ctx.install(|| run_trials(&e.monte_carlo(false)))??;
    let estimates = aggregate(&samples, e.max_order)?;
    let rows = compare_moments(&estimates, &exact, e.n, e.d, &tolerance);

    let mut t = Table::new(vec!["order", "exact_prediction", "mc_mean", "mc_se", "z_score", "tolerance", "pass"]);
    for r in &rows {
        t.push(vec![
            Cell::Int(r.order as i128),
            Cell::Exact(format_rational(&r.exact_prediction)),
            Cell::Float(r.mc_mean),
            Cell::Float(r.mc_se),
            Cell::Float(r.z_score),
            Cell::Float(r.tolerance),
            Cell::Bool(r.pass),
        ]);
    }
    let bytes = t.to_bytes(ctx.format)?;
    write(&dir, &names[0], &bytes)?;
    let all_pass = rows.iter().all(|r| r.pass);
    let mut config = e.file_config(ctx);
    config.density = None;
    config.bins = None;
    config.orders = Some(orders);
    config.z = Some(tolerance.z);
    config.rel = Some(tolerance.relative);
    config.finite_n = Some(tolerance.finite_n);
    let summary = json!({
        "trials": samples.len(),
        "verdict": if all_pass { "pass" } else { "fail" },
        "failed_orders": rows.iter().filter(|r| !r.pass).map(|r| r.order).collect::<Vec<_>>(),
    });
    write(&dir, "manifest.json", &manifest("compare", ctx, &e, &config, &names[..1], summary)?)?;
    ctx.emit_bytes(&bytes)?;
    eprintln!(
        "verdict: {} ({} of {} orders within tolerance; seed {})",
        if all_pass { "pass" } else { "fail" },
        rows.iter().filter(|r| r.pass).count(),
        rows.len(),
        e.seed
    );
    Ok(if all_pass { Outcome::Success } else { Outcome::GateFailed })
}
