//! Run configuration. Precedence: command-line flags (and their `REGSPEC_*`
//! environment variables) over the config file over built-in defaults.

use std::path::Path;

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

use crate::cli::Format;

/// Keys accepted in a config file, and the shape of the `config` object in
/// a run manifest. Every key is optional.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_length: Option<usize>,
    #[serde(rename = "N")]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bins: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub density: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_attempts: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orders: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finite_n: Option<f64>,
}

/// Parses TOML, or JSON when the text starts with `{`. A JSON document with
/// a top-level `config` object (a run manifest) contributes that object.
pub fn parse_config(text: &str) -> Result<FileConfig> {
    if text.trim_start().starts_with('{') {
        let value: serde_json::Value = serde_json::from_str(text).context("invalid JSON config")?;
        let inner = match value.get("config") {
            Some(c) if value.get("tool").is_some() => c.clone(),
            _ => value,
        };
        return serde_json::from_value(inner).context("invalid config keys");
    }
    toml::from_str(text).context("invalid TOML config")
}

pub fn load_config(path: &Path) -> Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    parse_config(&text).with_context(|| format!("in config file {}", path.display()))
}

/// First present value wins.
pub fn pick<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

pub fn require<T>(flag: Option<T>, file: Option<T>, name: &str) -> Result<T> {
    match flag.or(file) {
        Some(v) => Ok(v),
        None => bail!(crate::UsageError(format!("--{name} is required (flag or config file)"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn toml_and_manifest() {
        let c = parse_config("N = 200\nd = 4\nweights = \"semicircle:1/4\"\nseed = 7\nformat = \"csv\"\n").unwrap();
        assert_eq!((c.n, c.d, c.seed, c.format), (Some(200), Some(4), Some(7), Some(Format::Csv)));
        let m = parse_config(r#"{"tool": "regspec", "config": {"N": 10, "trials": 3}, "outputs": []}"#).unwrap();
        assert_eq!((m.n, m.trials), (Some(10), Some(3)));
        let plain = parse_config(r#"{"N": 12}"#).unwrap();
        assert_eq!(plain.n, Some(12));
        assert!(parse_config("nonsense = 1").is_err());
        assert!(parse_config("{").is_err());
    }

    #[test]
    fn precedence() {
        assert_eq!(pick(Some(1), Some(2), 3), 1);
        assert_eq!(pick(None, Some(2), 3), 2);
        assert_eq!(pick(None, None, 3), 3);
    }

    proptest::proptest! {
        #[test]
        fn arbitrary_text_never_panics(text in ".{0,200}") {
            let _ = parse_config(&text);
        }

        #[test]
        fn arbitrary_json_objects_never_panic(key in "[a-zA-Z_]{1,12}", value in "[-0-9a-z.\"]{0,12}") {
            let _ = parse_config(&format!("{{\"{key}\": {value}}}"));
            let _ = parse_config(&format!("{key} = {value}"));
        }
    }
}
