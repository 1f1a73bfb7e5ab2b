use std::path::Path;
use std::process::{Command, Output};

fn chromasum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromasum"))
        .args(args)
        .env_remove("CHROMASUM_CACHE")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_prints_one_json_line() {
    let o = chromasum(&["solve", "helm:3", "--quantity", "b_sum_min"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["quantity"], "b_sum_min");
    // the printed closed form says 14; the optimum is 13
    assert_eq!(v["value"], 13);
    assert_eq!(v["witness"]["k"], 4);
}

#[test]
fn solve_matches_library() {
    let g = chromasum::FamilyKind::Web.build(4).unwrap();
    let lib = chromasum::solve(&g, chromasum::Quantity::BSumMax, &Default::default()).unwrap();
    let v: serde_json::Value =
        serde_json::from_str(&stdout(&chromasum(&["solve", "web:4", "-q", "b_sum_max"]))).unwrap();
    assert_eq!(v["value"], lib.value);
    assert_eq!(v["witness"]["colors"], serde_json::to_value(lib.witness.colours()).unwrap());
}

#[test]
fn generate_edge_list_and_dot() {
    let out = stdout(&chromasum(&["generate", "sunlet:3", "--edgelist"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "6 6");
    assert_eq!(lines.len(), 7);
    assert_eq!(stdout(&chromasum(&["generate", "sunlet:3"])), out);
    let dot = stdout(&chromasum(&["generate", "helm:3", "--dot"]));
    assert!(dot.starts_with("graph helm_3 {"));
    assert_eq!(dot.matches(" -- ").count(), 9);
}

#[test]
fn table_rows() {
    let o = chromasum(&["table", "--family", "web", "--quantity", "b_sum_max", "--n-max", "5"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,b_sum_max\n3,27\n4,35\n5,45\n");
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["solve", "hexagon:3", "-q", "chi"][..],
        &["solve", "helm:3", "-q", "chi_sum"],
        &["solve", "helm:2", "-q", "chi"],
        &["table", "--family", "wheel", "--quantity", "chi", "--n-max", "5"],
        &["verify", "--n-max", "4", "--out", "/tmp/x", "--format", "xml"],
        &["frobnicate"],
    ] {
        let o = chromasum(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_2() {
    let o = chromasum(&["solve", "web:5", "-q", "b_sum_min", "--budget-nodes", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

fn verify(out: &Path, extra: &[&str]) -> Output {
    let mut args = vec![
        "verify",
        "--families",
        "sunlet,web",
        "--n-min",
        "3",
        "--n-max",
        "4",
        "--quantities",
        "b_chromatic,b_sum_min,b_sum_max",
        "--out",
        out.to_str().unwrap(),
    ];
    args.extend_from_slice(extra);
    chromasum(&args)
}

#[test]
fn verify_writes_reports_and_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let o = verify(dir.path(), &["--format", "csv,json,md"]);
    assert!(o.status.success());
    // sunlet(3,4) and web(3) match; web(4) matches b_chromatic and misses both sums
    assert_eq!(stdout(&o), "matches=8 mismatches=2 aborted=0\n");
    for f in ["report.csv", "report.json", "report.md", "cache/results.json"] {
        assert!(dir.path().join(f).is_file(), "{f}");
    }
    let w = chromasum::verification::load_witness(&dir.path().join("witnesses/web-4-b_sum_min.json")).unwrap();
    let g = chromasum::FamilyKind::Web.build(4).unwrap();
    assert!(chromasum::colouring::is_b_colouring(&g, &w));
    assert_eq!(chromasum::colouring::colouring_sum(&w), 24);
}

#[test]
fn strict_mismatch_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(verify(dir.path(), &["--strict"]).status.code(), Some(3));
    let ok = chromasum(&[
        "verify", "--families", "sunlet", "--n-max", "4", "--quantities", "b_sum_min", "--strict", "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(ok.status.code(), Some(0));
}

#[test]
fn over_cap_rows_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let o = verify(dir.path(), &["--b-cap", "10"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).ends_with("aborted=3\n"));
}

#[test]
fn cache_env_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("elsewhere.json");
    let run = |out: &str| {
        let out = dir.path().join(out);
        let o = Command::new(env!("CARGO_BIN_EXE_chromasum"))
            .args(["verify", "--families", "helm", "--n-max", "5", "--out", out.to_str().unwrap()])
            .env("CHROMASUM_CACHE", &cache)
            .output()
            .unwrap();
        assert!(o.status.success());
        std::fs::read(out.join("report.csv")).unwrap()
    };
    let cold = run("a");
    assert!(cache.is_file());
    assert!(!dir.path().join("a/cache").exists());
    assert_eq!(cold, run("b"));
}
