use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn regspec() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_regspec"));
    for var in ["SEED", "OUTPUT", "FORMAT", "THREADS", "MAX_LENGTH", "CONFIG"] {
        cmd.env_remove(format!("REGSPEC_{var}"));
    }
    cmd
}

fn run(cmd: &mut Command) -> Output {
    cmd.output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json_lines(text: &str) -> Vec<Value> {
    text.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn capps_length_four_lists_three_patterns() {
    let out = run(regspec().args(["capps", "--length", "4"]));
    assert!(out.status.success());
    let rows = json_lines(&stdout(&out));
    let patterns: Vec<_> = rows.iter().map(|r| r["pattern"].as_str().unwrap()).collect();
    assert_eq!(patterns, ["0 0 0 0", "0 0 1 1", "0 1 1 0"]);
    assert_eq!(rows[1]["multiplicity_roots"], serde_json::json!([0, 1]));
    assert!(stderr(&out).contains("|T| = 2|P4|: pass"));
}

#[test]
fn capps_signature_filter_and_csv() {
    let out = run(regspec().args(["--format", "csv", "capps", "--length", "6", "--signature", "2,2,2"]));
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("pattern,signature,multiplicity_roots"));
    assert_eq!(lines.count(), 5);
}

#[test]
fn capps_summary_counts() {
    let out = run(regspec().args(["--format", "csv", "capps", "--length", "6", "--summary"]));
    let text = stdout(&out);
    for line in ["total,12", "(6),1", "\"(4,2)\",6", "\"(2,2,2)\",5", "triples,12", "two_to_one,pass"] {
        assert!(text.lines().any(|l| l == line), "missing {line} in\n{text}");
    }
}

#[test]
fn capps_odd_length_is_empty_with_note() {
    let out = run(regspec().args(["capps", "--length", "5"]));
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("empty for odd"));
}

#[test]
fn capps_length_above_cap_is_refused() {
    let out = run(regspec().args(["capps", "--length", "22"]));
    assert_eq!(out.status.code(), Some(1));
    let out = run(regspec().args(["--max-length", "4", "capps", "--length", "6"]));
    assert_eq!(out.status.code(), Some(1));
    let out = run(regspec().args(["capps", "--length", "6"]).env("REGSPEC_MAX_LENGTH", "4"));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn eigen_moments_at_d3() {
    let out = run(regspec().args(["moments", "eigen", "--d", "3", "--max", "8"]));
    assert!(out.status.success());
    let values: Vec<_> = json_lines(&stdout(&out))
        .iter()
        .map(|r| r["value"].as_str().unwrap().to_owned())
        .collect();
    assert_eq!(values, ["1/4", "1/8", "5/64", "23/416"]);
}

#[test]
fn expand_unweighted_and_semicircle() {
    let out = run(regspec().args(["--format", "csv", "moments", "expand", "--order", "2:8", "--d", "4"]));
    assert!(out.status.success());
    let exact: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.rsplit(',').next().unwrap().to_owned())
        .collect();
    assert_eq!(exact, ["4/1", "0/1", "28/1", "0/1", "232/1", "0/1", "2092/1"]);

    let out = run(regspec().args([
        "moments", "expand", "--order", "8", "--d", "4", "--weights", "semicircle:1/4",
    ]));
    assert_eq!(json_lines(&stdout(&out))[0]["value"], "451/32");
}

#[test]
fn deviation_rejects_odd_order() {
    let out = run(regspec().args(["moments", "deviation", "--d", "4", "--order", "7"]));
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("usage error"));
}

#[test]
fn domain_errors_exit_one() {
    let out = run(regspec().args(["moments", "eigen", "--d", "1", "--max", "4"]));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error:"));
    let out = run(regspec().args(["moments", "expand", "--order", "4", "--d", "3", "--weights", "bogus"]));
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bad_flags_are_usage_errors() {
    let out = run(regspec().args(["--format", "xml", "capps", "--length", "4"]));
    assert_eq!(out.status.code(), Some(2));
    let out = run(regspec().args(["--threads", "0", "capps", "--length", "4"]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eigen.csv");
    let out = run(regspec()
        .args(["--format", "csv", "--output"])
        .arg(&path)
        .args(["moments", "eigen", "--d", "4", "--max", "4"]));
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().next(), Some("d,order,value_num,value_den,value"));
    assert_eq!(text.lines().count(), 3);
}

fn simulate(dir: &Path, extra: &[&str]) -> Output {
    run(regspec()
        .args(["--output"])
        .arg(dir)
        .args(["simulate", "--N", "40", "--d", "3", "--trials", "6", "--max-order", "6"])
        .args(extra))
}

#[test]
fn simulate_writes_manifest_and_reruns_identically() {
    let root = tempfile::tempdir().unwrap();
    let first = root.path().join("first");
    let out = simulate(&first, &["--seed", "11", "--weights", "semicircle:1/4"]);
    assert!(out.status.success(), "{}", stderr(&out));

    let manifest = read_json(&first.join("manifest.json"));
    assert_eq!(manifest["tool"], "regspec");
    assert_eq!(manifest["command"], "simulate");
    assert_eq!(manifest["config"]["seed"], 11);
    assert_eq!(manifest["config"]["N"], 40);
    assert_eq!(manifest["config"]["weights"], "semicircle:1/4");
    assert_eq!(manifest["seed_source"], "flag");

    let moments = json_lines(&std::fs::read_to_string(first.join("moments.jsonl")).unwrap());
    assert_eq!(moments.len(), 6);
    assert!(moments.iter().all(|r| r["mc_mean"].is_number()));
    assert!(first.join("density.jsonl").exists());

    let second = root.path().join("second");
    let out = run(regspec()
        .arg("--config")
        .arg(first.join("manifest.json"))
        .arg("--output")
        .arg(&second)
        .args(["--threads", "1", "simulate"]));
    assert!(out.status.success(), "{}", stderr(&out));
    for file in ["moments.jsonl", "density.jsonl"] {
        assert_eq!(
            std::fs::read(first.join(file)).unwrap(),
            std::fs::read(second.join(file)).unwrap(),
            "{file} differs"
        );
    }
}

#[test]
fn missing_seed_is_generated_and_recorded() {
    let dir = tempfile::tempdir().unwrap();
    let out = simulate(dir.path(), &["--no-density"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let manifest = read_json(&dir.path().join("manifest.json"));
    assert!(manifest["config"]["seed"].is_u64());
    assert_eq!(manifest["seed_source"], "generated");
}

#[test]
fn simulate_parameter_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(regspec()
        .arg("--output")
        .arg(dir.path())
        .args(["simulate", "--N", "5", "--d", "3", "--seed", "1"]));
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("must be even"));

    let out = run(regspec()
        .arg("--output")
        .arg(dir.path())
        .args(["simulate", "--N", "40", "--d", "3", "--trials", "0"]));
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn config_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.toml");
    std::fs::write(&config, "seed = 5\nN = 30\nd = 3\ntrials = 4\nmax_order = 4\ndensity = false\n").unwrap();

    let read_seed = |out_dir: &Path| read_json(&out_dir.join("manifest.json"))["config"]["seed"].clone();

    let from_file = dir.path().join("a");
    let out = run(regspec().arg("--config").arg(&config).arg("--output").arg(&from_file).arg("simulate"));
    assert!(out.status.success(), "{}", stderr(&out));
    assert_eq!(read_seed(&from_file), 5);
    assert_eq!(read_json(&from_file.join("manifest.json"))["seed_source"], "config");

    let from_env = dir.path().join("b");
    let out = run(regspec()
        .env("REGSPEC_SEED", "6")
        .arg("--config")
        .arg(&config)
        .arg("--output")
        .arg(&from_env)
        .arg("simulate"));
    assert!(out.status.success());
    assert_eq!(read_seed(&from_env), 6);

    let from_flag = dir.path().join("c");
    let out = run(regspec()
        .env("REGSPEC_SEED", "6")
        .args(["--seed", "7", "--config"])
        .arg(&config)
        .arg("--output")
        .arg(&from_flag)
        .args(["simulate", "--trials", "2"]));
    assert!(out.status.success());
    assert_eq!(read_seed(&from_flag), 7);
    assert_eq!(read_json(&from_flag.join("manifest.json"))["config"]["trials"], 2);
}

#[test]
fn config_with_unknown_key_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.toml");
    std::fs::write(&config, "sed = 5\n").unwrap();
    let out = run(regspec().arg("--config").arg(&config).args(["simulate", "--N", "30", "--d", "3"]));
    assert_ne!(out.status.code(), Some(0));
}

#[test]
fn refuses_to_overwrite_config() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("eigen.toml");
    std::fs::write(&config, "format = \"csv\"\n").unwrap();
    let out = run(regspec()
        .arg("--config")
        .arg(&config)
        .arg("--output")
        .arg(&config)
        .args(["moments", "eigen", "--d", "3", "--max", "4"]));
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(std::fs::read_to_string(&config).unwrap(), "format = \"csv\"\n");
}

#[test]
fn compare_reports_exact_column_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(regspec()
        .arg("--output")
        .arg(dir.path())
        .args([
            "--seed", "3", "compare", "--N", "60", "--d", "4", "--weights", "semicircle:1/4",
            "--trials", "20", "--max-order", "8",
        ]));
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let rows = json_lines(&std::fs::read_to_string(dir.path().join("comparison.jsonl")).unwrap());
    let orders: Vec<_> = rows.iter().map(|r| r["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, [2, 4, 6, 8]);
    assert_eq!(rows[3]["exact_prediction"], "451/32");
    assert!(rows.iter().all(|r| r["pass"] == true));
    assert_eq!(read_json(&dir.path().join("manifest.json"))["command"], "compare");
}

#[test]
fn compare_gate_failure_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(regspec()
        .arg("--output")
        .arg(dir.path())
        .args([
            "--seed", "3", "compare", "--N", "60", "--d", "4", "--trials", "20", "--orders", "4",
            "--z", "0", "--rel", "0", "--finite-n", "0",
        ]));
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
}
