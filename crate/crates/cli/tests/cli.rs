use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn proxdual(args: &[&str], dir: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_proxdual"));
    cmd.args(args);
    if let Some(d) = dir {
        cmd.current_dir(d);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn evens_odds_matches_golden_json() {
    let script = data("evens_odds.prox");
    let o = proxdual(&["run", script.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let golden = fs::read_to_string(data("evens_odds.json")).unwrap();
    assert_eq!(stdout(&o), golden);
}

#[test]
fn evens_odds_parses_to_seven_declarations_and_three_commands() {
    let script = data("evens_odds.prox");
    let o = proxdual(&["parse", script.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "7 declarations, 3 commands");
}

#[test]
fn finite_cofinite_counterexample_exits_one() {
    let script = data("finite_cofinite.prox");
    let o = proxdual(&["run", "--format", "text", script.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("p_aleph1 [dM] counterexample"));
    assert!(text.contains("sequence: prefixes(periodic(p=2, residues={0}))"));
}

#[test]
fn partition_sweep_holds_everywhere() {
    let script = data("partitions.prox");
    let o = proxdual(&["run", script.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 31);
    let smirnov = reports.iter().filter(|r| r["law"] == "smirnov").count();
    assert_eq!(smirnov, 15);
    assert!(reports.iter().all(|r| r["status"] == "holds-exhaustive"));
}

#[test]
fn unknown_identifier_is_a_config_error_with_location() {
    let script = data("bad_ident.prox");
    let o = proxdual(&["run", script.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("2:17: unknown identifier M"), "{err}");
}

#[test]
fn refusal_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("metric.prox");
    fs::write(&script, "universe I = unit_interval\nproximity m = metric(I)\ncheck thm.2.3 m\n").unwrap();
    let o = proxdual(&["run", script.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("PreconditionNotEstablished"));
}

#[test]
fn stone_writes_dot_relative_to_working_directory() {
    let dir = tempfile::tempdir().unwrap();
    fs::copy(data("stone.prox"), dir.path().join("stone.prox")).unwrap();
    let o = proxdual(&["run", "stone.prox"], Some(dir.path()));
    assert_eq!(o.status.code(), Some(0));
    let dot = fs::read_to_string(dir.path().join("stone.dot")).unwrap();
    assert!(dot.starts_with("digraph stone {"));
    assert!(dot.contains("u2 [shape=circle, label=\"{3}\"];"));
}

#[test]
fn seeded_runs_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let script = data("finite_cofinite.prox");
    let mut outs = Vec::new();
    for jobs in ["1", "4", "4"] {
        let out = dir.path().join(format!("out{}.json", outs.len()));
        let o = proxdual(
            &[
                "run",
                "--seed",
                "11",
                "--samples",
                "60",
                "--jobs",
                jobs,
                "--out",
                out.to_str().unwrap(),
                script.to_str().unwrap(),
            ],
            None,
        );
        assert_eq!(o.status.code(), Some(1));
        outs.push(fs::read(out).unwrap());
    }
    assert_eq!(outs[1], outs[2]);
    assert_eq!(outs[0], outs[1]);
}

#[test]
fn fmt_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let script = data("evens_odds.prox");
    let first = stdout(&proxdual(&["fmt", script.to_str().unwrap()], None));
    let again = dir.path().join("again.prox");
    fs::write(&again, &first).unwrap();
    let second = stdout(&proxdual(&["fmt", again.to_str().unwrap()], None));
    assert_eq!(first, second);
}

#[test]
fn laws_lists_the_catalog() {
    let o = proxdual(&["laws"], None);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("thm.2.1.4"));
    assert!(text.contains("stone.functor"));
}
