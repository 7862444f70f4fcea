//! `regspec` command-line tool.
//!
//! Exit status: 0 on success, 1 on a runtime error, 2 on a usage error, 3
//! when a requested tolerance gate fails.

mod capps;
mod cli;
mod config;
mod ensemble;
mod moments;
mod range;
mod table;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context as _, Result};
use clap::Parser;
use regspec::capp::DEFAULT_MAX_LENGTH;

use cli::{Cli, Command, Format};
use config::FileConfig;
use table::Table;

/// Invalid combination of arguments, reported with exit status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub enum Outcome {
    Success,
    GateFailed,
}

/// Resolved global settings shared by every command.
pub struct Context {
    pub seed: Option<u64>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub threads: Option<usize>,
    pub max_length: usize,
    pub file: FileConfig,
    config_path: Option<PathBuf>,
}

impl Context {
    fn new(cli: &Cli) -> Result<Self> {
        let file = match &cli.config {
            Some(path) => config::load_config(path)?,
            None => FileConfig::default(),
        };
        let threads = cli.threads.or(file.threads);
        if threads == Some(0) {
            bail!(UsageError("--threads must be at least 1".into()));
        }
        Ok(Self {
            seed: cli.seed,
            output: cli.output.clone(),
            format: config::pick(cli.format, file.format, Format::Json),
            threads,
            max_length: config::pick(cli.max_length, file.max_length, DEFAULT_MAX_LENGTH),
            config_path: cli.config.clone(),
            file,
        })
    }

    /// Errors if writing `path` would overwrite the config file.
    pub fn guard_input(&self, path: &Path) -> Result<()> {
        if let (Some(config), Ok(target)) = (&self.config_path, path.canonicalize()) {
            if config.canonicalize().is_ok_and(|c| c == target) {
                bail!(UsageError(format!(
                    "refusing to overwrite the input file {}",
                    path.display()
                )));
            }
        }
        Ok(())
    }

    /// Writes a table to `--output`, or stdout when no output is given.
    pub fn emit(&self, table: &Table) -> Result<()> {
        let bytes = table.to_bytes(self.format)?;
        match &self.output {
            Some(path) => {
                self.guard_input(path)?;
                std::fs::write(path, bytes).with_context(|| format!("cannot write {}", path.display()))
            }
            None => self.emit_bytes(&bytes),
        }
    }

    pub fn emit_bytes(&self, bytes: &[u8]) -> Result<()> {
        let mut out = std::io::stdout().lock();
        out.write_all(bytes)?;
        out.flush()?;
        Ok(())
    }

    /// Runs `f` on a pool of `--threads` workers.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(n) = self.threads {
            builder = builder.num_threads(n);
        }
        Ok(builder.build()?.install(f))
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let ctx = Context::new(cli)?;
    match &cli.command {
        Command::Capps(args) => capps::run(&ctx, args),
        Command::Moments { kind } => moments::run(&ctx, kind),
        Command::Simulate(args) => ensemble::simulate(&ctx, args),
        Command::Compare(args) => ensemble::compare(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::GateFailed) => ExitCode::from(3),
        Err(err) => {
            if let Some(usage) = err.downcast_ref::<UsageError>() {
                eprintln!("usage error: {usage}");
                return ExitCode::from(2);
            }
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
