//! End-to-end tests of the `bridge-spectra` binary: exit codes, output
//! formats, and the gen -> eig round trip.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bridge-spectra"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn gen_edge_list_header() {
    let out = run(&["gen", "--family", "dumbbell", "--n", "8", "--m", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.starts_with("17 58\n"),
        "got header {:?}",
        text.lines().next()
    );
    assert_eq!(text.lines().count(), 59);
}

#[test]
fn gen_dot_nodes() {
    let out = run(&[
        "gen",
        "--family",
        "tree-chain",
        "--n",
        "7",
        "--l",
        "3",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let nodes = text
        .lines()
        .filter(|l| l.trim_end().ends_with(';') && !l.contains("--"))
        .count();
    assert_eq!(nodes, 21);
}

#[test]
fn gen_json_carries_family_params() {
    let out = run(&[
        "gen",
        "--family",
        "star-bridge",
        "--n",
        "5",
        "--m",
        "4",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["family"], "star_bridge");
    assert_eq!(v["params"]["n"], 5);
    assert_eq!(v["n"], 12);
}

#[test]
fn eig_p2_spectrum() {
    let out = run(&["eig", "--family", "path", "--m", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0\n2\n");
}

#[test]
fn eig_lambda2_flag() {
    let out = run(&["eig", "--family", "complete", "--n", "9", "--lambda2"]);
    assert!(out.status.success());
    let l2: f64 = stdout(&out).trim().parse().unwrap();
    assert!((l2 - 9.0).abs() <= 1e-9);
}

#[test]
fn gen_eig_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.edges");
    let out = run(&[
        "gen",
        "--family",
        "dumbbell",
        "--n",
        "6",
        "--m",
        "4",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&["eig", "--input", file.to_str().unwrap(), "--lambda2"]);
    assert!(out.status.success());
    let via_file: f64 = stdout(&out).trim().parse().unwrap();

    let g = bridge_spectra::families::dumbbell(6, 4).unwrap();
    let direct = bridge_spectra::lambda2(&g).unwrap();
    assert!(
        (via_file - direct).abs() <= 1e-12,
        "file route {via_file} vs direct {direct}"
    );
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(
        run(&["gen", "--family", "nonsense", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["gen", "--family", "dumbbell", "--n", "8", "--m", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["eig", "--input", "/no/such/file"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["loewner", "--check", "bogus"]).status.code(), Some(2));
}

#[test]
fn stderr_carries_diagnostics_stdout_stays_clean() {
    let out = run(&["gen", "--family", "dumbbell", "--n", "8", "--m", "1"]);
    assert!(stdout(&out).is_empty());
    assert!(String::from_utf8(out.stderr.clone())
        .unwrap()
        .contains("error"));
}

#[test]
fn loewner_path_check() {
    let out = run(&["loewner", "--check", "path", "--len", "7"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("holds c=7 "));
}

#[test]
fn loewner_domination_default_scale() {
    let out = run(&[
        "loewner",
        "--check",
        "domination",
        "--family",
        "dumbbell",
        "--n",
        "4",
        "--m",
        "2",
    ]);
    assert!(out.status.success());
    // N = 8, c = C(8,2)*(m+1) = 84, bound = 8/84
    let text = stdout(&out);
    assert!(text.contains("certified c=84 "), "got {text}");
}

#[test]
fn bound_csv_and_show_vector() {
    let out = run(&[
        "bound",
        "--family",
        "dumbbell",
        "--n",
        "8",
        "--m",
        "3",
        "--show-vector",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("family,n,m,k,l,N,lambda2,certified_ub,claim_id,claim_side,claim_variant,claim_value,holds,margin"));
    assert!(text.contains("dumbbell,8,3,"));
    assert!(text.contains("1:2 "), "vector pairs missing: {text}");
}

#[test]
fn bound_random_bases_row_count() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("chains.csv");
    let out = run(&[
        "bound",
        "--family",
        "bridge-chain",
        "--base-random",
        "20",
        "--seed",
        "42",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&csv).unwrap();
    // 20 instances x 2 claims + header
    assert_eq!(text.lines().count(), 41);
    // deterministic under the same seed
    let out2 = run(&[
        "bound",
        "--family",
        "bridge-chain",
        "--base-random",
        "20",
        "--seed",
        "42",
    ]);
    assert_eq!(stdout(&out2), text);
}

#[test]
fn tol_env_var_accepted() {
    let out = bin()
        .args(["eig", "--family", "complete", "--n", "5", "--lambda2"])
        .env("BRIDGE_SPECTRA_TOL", "1e-10")
        .output()
        .unwrap();
    assert!(out.status.success());
    let l2: f64 = stdout(&out).trim().parse().unwrap();
    assert!((l2 - 5.0).abs() <= 1e-6);
}

#[test]
fn sweep_writes_csv_and_errata() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("sweep.csv");
    let errata = dir.path().join("errata.txt");
    let out = run(&[
        "sweep",
        "--out",
        csv.to_str().unwrap(),
        "--errata-out",
        errata.to_str().unwrap(),
        "--jobs",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.lines().count() > 200);
    let table = std::fs::read_to_string(&errata).unwrap();
    assert!(table.contains("tree_chain_upper"));
    assert_eq!(stdout(&out), table);
}
