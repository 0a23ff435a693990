use std::process::{Command, Output};

fn lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iterant-lab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_all_passes_with_table() {
    let o = lab(&["verify-all", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("01-iterant-sqrt"));
    assert!(out.contains("17b-norm"));
    assert!(!out.contains("FAIL"));
}

#[test]
fn verify_all_json_covers_every_criterion() {
    let o = lab(&["verify-all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let ids: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["check_id"].as_str().unwrap())
        .collect();
    for n in 1..=17 {
        let prefix = format!("{n:02}");
        assert!(ids.iter().any(|id| id.starts_with(&prefix)), "{prefix}");
    }
}

#[test]
fn crossing_gives_unmarked_and_exit_one() {
    let o = lab(&["lof", "reduce", "(())"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "unmarked");
}

#[test]
fn marked_reduction_exits_zero_with_trace() {
    let o = lab(&["lof", "reduce", "(((()())())())()", "--trace"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 6);
    assert!(lines[1].starts_with("calling"));
    assert_eq!(lines[5], "marked");
}

#[test]
fn confluence_fuzz_from_cli() {
    let o = lab(&["lof", "reduce", "--random", "100", "4", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS  confluence"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(lab(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(lab(&["lof", "reduce", "(()"]).status.code(), Some(2));
    assert_eq!(
        lab(&["group", "table", "--group", "q8"]).status.code(),
        Some(2)
    );
    assert_eq!(
        lab(&["iterant", "sqrt", "--format", "csv"]).status.code(),
        Some(2)
    );
}

#[test]
fn output_is_deterministic() {
    let args = [
        "matrep", "isocheck", "--group", "s3", "--seed", "3", "--format", "json",
    ];
    let a = lab(&args);
    let b = lab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let fuzz = [
        "lof", "reduce", "--random", "50", "4", "9", "--format", "json",
    ];
    assert_eq!(lab(&fuzz).stdout, lab(&fuzz).stdout);
}

#[test]
fn g_table_json() {
    let o = lab(&[
        "group", "table", "--group", "s3", "--gtable", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let table = v["table"].as_array().unwrap();
    assert_eq!(table.len(), 6);
    // g_i⁻¹ g_i on the diagonal
    for (i, row) in table.iter().enumerate() {
        assert_eq!(row[i], "1");
    }
}

#[test]
fn dirac_report_is_json_by_default() {
    let o = lab(&[
        "dirac",
        "verify",
        "--E",
        "5",
        "--p",
        "3",
        "--m",
        "4",
        "--version",
        "time_reversed",
        "--dim",
        "1d",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["check"] == "U^2 = 0"));
    assert!(checks
        .iter()
        .all(|c| c.get("lhs").is_some() && c.get("rhs").is_some()));
}

#[test]
fn off_shell_dirac_fails_the_check() {
    let o = lab(&[
        "dirac", "verify", "--E", "5", "--p", "3", "--m", "3", "--format", "text",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  U^2 = 0"));
}

#[test]
fn discrete_commutator_agrees() {
    let o = lab(&["discrete", "commutator", "--seq", "0,1,0,1,0", "--dt", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["equal"], true);
}

#[test]
fn decompose_matrix_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.json");
    std::fs::write(&path, "[[1,2,3],[4,5,6],[7,8,10]]").unwrap();
    let o = lab(&["matrep", "decompose", "--matrix", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["terms"].as_array().unwrap().len(), 6);
    assert_eq!(v["terms"][0]["perm"], "()");
    assert_eq!(v["reassembles"], true);
}

#[test]
fn clifford_commands() {
    let q = lab(&["clifford", "quaternions", "--variant", "klein4", "--verify"]);
    assert_eq!(q.status.code(), Some(0));
    assert_eq!(stdout(&q).matches("PASS").count(), 17);
    let b = lab(&[
        "clifford",
        "braid",
        "--n",
        "4",
        "--word",
        "1 2 1",
        "--compare",
        "2 1 2",
    ]);
    assert_eq!(b.status.code(), Some(0));
    let f = lab(&["clifford", "fusion", "--power", "10"]);
    assert_eq!(stdout(&f).trim(), "P^10 = 34 + 55P");
}

#[test]
fn distant_generators_do_not_satisfy_the_braid_relation() {
    let b = lab(&[
        "clifford",
        "braid",
        "--n",
        "4",
        "--word",
        "1 3 1",
        "--compare",
        "3 1 3",
    ]);
    assert_eq!(b.status.code(), Some(1));
}

#[test]
fn schrodinger_run_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.csv");
    let o = lab(&[
        "schrodinger",
        "run",
        "--n",
        "64",
        "--dx",
        "1",
        "--dt",
        "0.05",
        "--kappa",
        "1",
        "--steps",
        "40",
        "--init",
        "gaussian:mu=32,sigma=4",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = std::fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("t_index,cell,psi_e,psi_o,re,im,abs2"));
    assert_eq!(lines.count(), 41 * 64);
}

#[test]
fn schrodinger_dispersion_json() {
    let o = lab(&[
        "schrodinger",
        "run",
        "--n",
        "64",
        "--dt",
        "0.05",
        "--steps",
        "400",
        "--dispersion",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["k_mode"], 3);
    assert!(v["rel_error"].as_f64().unwrap() < 0.02);
}

#[test]
fn unstable_ratio_warns_on_stderr() {
    let o = lab(&[
        "schrodinger",
        "run",
        "--n",
        "16",
        "--dt",
        "0.5",
        "--steps",
        "4",
    ]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}
