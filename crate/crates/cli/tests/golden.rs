use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kmeasure"))
        .args(args)
        .env_remove("WORKBENCH_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn stats_examples() {
    for (partition, k, expected) in [("9,9,8,7,4,3,1", "3", (3, 4, 4)), ("5", "2", (1, 1, 1)), ("", "1", (0, 0, 0))] {
        let out = run(&["stats", partition, "-k", k]);
        assert!(out.status.success(), "{partition}");
        let v = json_of(&out);
        assert_eq!(v["k_measure"], expected.0);
        assert_eq!(v["durfee_side"], expected.1);
        assert_eq!(v["durfee_polygon_order"], expected.2);
    }
}

#[test]
fn stats_accepts_plus_separators_and_rejects_garbage() {
    let out = run(&["stats", "9+9+8+7+4+3+1", "-k", "3", "--format", "text"]);
    assert!(stdout(&out).starts_with("partition: 9,9,8,7,4,3,1\n"));
    let bad = run(&["stats", "3,0", "-k", "2"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("positive"));
    let zero_k = run(&["stats", "3", "-k", "0"]);
    assert_eq!(zero_k.status.code(), Some(2));
    let unknown = run(&["stats", "3", "-k", "2", "--bogus"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn map_examples() {
    let out = run(&["map", "9,7,5,3,1", "-k", "2", "-m", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("5,5,5,5,5"));
    assert!(text.contains("offsets: -4,-2,+0,+2,+4"));

    let out = run(&["map", "5,5,5,5,5", "-k", "2", "-m", "5", "--inverse"]);
    assert_eq!(stdout(&out).lines().next(), Some("9,7,5,3,1"));

    let out = run(&["map", "3", "-k", "2", "-m", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("2-measure is 1 < 2"));

    let out = run(&["map", "9,5,5,5", "-k", "3", "-m", "4", "--inverse"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("needs 2 part(s) >= 6"));
}

#[test]
fn map_json_exposes_selection() {
    let out = run(&["map", "5,5,1", "-k", "2", "-m", "2", "--strategy", "max-index-lex", "--format", "json"]);
    let v = json_of(&out);
    assert_eq!(v["selected_indices"], serde_json::json!([1, 2]));
    assert_eq!(v["image"], serde_json::json!([5, 4, 2]));
    let bad = run(&["map", "5,5,1", "-k", "2", "-m", "2", "--strategy", "random"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn polygon_figures() {
    let out = run(&["polygon", "-k", "4", "-m", "3", "9,9,8,7,4,3,1"]);
    let expected = "\
(4,3)-polygon rows: 5,5,5
contained in 9,9,8,7,4,3,1: true
# # # # # . . . .
# # # # # . . . .
# # # # # . . .
. . . . . . .
. . . .
. . .
.
";
    assert_eq!(stdout(&out), expected);
    let out = run(&["polygon", "-k", "3", "-m", "4", "--format", "json"]);
    assert_eq!(json_of(&out)["rows"], serde_json::json!([6, 6, 5, 5]));
}

#[test]
fn count_examples() {
    let a = stdout(&run(&["count", "--kind", "a", "-k", "2", "--n-max", "5"]));
    assert!(a.lines().any(|l| l == "5,2,2"));
    let b = stdout(&run(&["count", "--kind", "b", "--n-max", "5"]));
    assert!(b.lines().any(|l| l == "5,2,2"));
    let zero = stdout(&run(&["count", "--kind", "a", "--n-max", "0"]));
    assert_eq!(zero, "n,m,count\n0,0,1\n");
    let by_len = stdout(&run(&["count", "--kind", "a", "--n-max", "5", "--by-length"]));
    assert!(by_len.starts_with("n,m,l,count\n"));
    assert!(by_len.lines().any(|l| l == "5,2,2,1"));
    let bad = run(&["count", "--kind", "c", "--by-length"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn count_writes_output_file() {
    let dir = std::env::temp_dir().join(format!("kmeasure-golden-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b.json");
    let out = run(&["count", "--kind", "b", "--n-max", "6", "--format", "json", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["counts"]["5"]["2"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_theorem1_passes() {
    let out = run(&["verify", "--suite", "theorem1", "--n-max", "20"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["reports"][0]["suite"], "theorem1");
}

#[test]
fn verify_theorem3_small() {
    let out = run(&["verify", "--suite", "theorem3", "--n-max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["reports"][0]["checks_run"], 9);
}

#[test]
fn strategy_search_findings() {
    let args = ["verify", "--suite", "strategy-search", "--k-max", "2", "--n-max", "11", "--no-timing"];
    let strict = run(&args);
    assert_eq!(strict.status.code(), Some(1));
    let mut lenient_args = args.to_vec();
    lenient_args.push("--findings-ok");
    let lenient = run(&lenient_args);
    assert_eq!(lenient.status.code(), Some(0));
    let v = json_of(&lenient);
    let report = &v["reports"][0];
    assert!(report["elapsed_ms"].is_null());
    let found = report["counterexamples"].as_array().unwrap().iter().any(|c| {
        c["check"] == "greedy-top k=2 m=2 phi-injective"
            && c["inputs"]["n"] == 11
            && c["inputs"]["partitions"] == serde_json::json!([[5, 5, 1], [6, 3, 2]])
    });
    assert!(found);
    // byte-stable in comparison mode
    assert_eq!(stdout(&lenient), stdout(&run(&lenient_args)));
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&["verify", "--suite", "theorem-general", "--k-max", "1", "--n-max", "6", "--format", "text"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).starts_with("FAIL theorem-general"));
}

#[test]
fn workers_env_and_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_kmeasure"))
        .args(["excess", "--n-max", "8"])
        .env("WORKBENCH_WORKERS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "8,2,2"));
    let out = run(&["--workers", "1", "excess", "--n-max", "2"]);
    assert_eq!(stdout(&out), "n,signed_excess,distinct_odd\n0,1,1\n1,1,1\n2,0,0\n");
}
