use std::fs;
use std::process::{Command, Output};

fn weary(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_weary"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn decode_worked_examples() {
    let out = weary(&["decode", "9", "7", "5", "7", "2", "0", "1", "5", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "9 7 5 7 2 0 1 0 5 1\n");
    assert_eq!(stdout(&weary(&["decode", "3", "1", "1"])), "3 0 1 1\n");
    assert_eq!(stdout(&weary(&["decode", "1"])), "1 0\n");
}

#[test]
fn encode_examples() {
    assert_eq!(stdout(&weary(&["encode", "1", "0"])), "1\n");
    assert_eq!(
        stdout(&weary(&["encode", "9 7 5 7 2 0 1 0 5 1"])),
        "9 7 5 7 2 0 1 5 1\n"
    );
    let out = weary(&["encode", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("bare root"));
}

#[test]
fn park_examples() {
    let out = weary(&["park", "9", "5", "2", "5", "3", "1", "6", "1", "2", "6"]);
    assert_eq!(stdout(&out), "5 2 4 7 1 3 6 8 9\n");

    let out = weary(&["park", "2", "2", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("car 2"), "{}", stderr(&out));

    let out = weary(&["park", "--trace", "3", "1", "1", "2"]);
    let text = stdout(&out);
    assert!(
        text.contains("car 2 prefers 1: tries 1 2, parks in 2"),
        "{text}"
    );
    assert!(text.ends_with("1 2 3\n"));
}

#[test]
fn weary_on_increasing_path_is_identity() {
    assert_eq!(
        stdout(&weary(&["weary", "4", "0", "1", "2", "3"])),
        "1 2 3 4\n"
    );
    let out = weary(&[
        "weary",
        "--trace",
        "--format",
        "json",
        "9 7 5 7 2 0 1 0 5 1",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["weary_permutation"], "5 2 4 7 1 3 6 8 9");
    assert_eq!(v["trace"].as_array().unwrap().len(), 9);
}

#[test]
fn stats_of_ten_car_example() {
    let out = weary(&[
        "stats",
        "--side",
        "pf",
        "--format",
        "json",
        "10 1 2 5 1 5 5 6 5 1 1",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["stats"]["probes"], 33);
    assert_eq!(v["stats"]["lucky"], 3);
    assert_eq!(v["hexad"][1], 33);
    let text = stdout(&weary(&["stats", "--side", "pf", "10 1 2 5 1 5 5 6 5 1 1"]));
    assert!(text.contains("dis 23\n"));
}

#[test]
fn dist_totals() {
    let text = stdout(&weary(&["dist", "0"]));
    assert_eq!(text.lines().count(), 3, "{text}");
    assert!(text.starts_with("# n=0 side=tree family=all total=1"));

    let out = weary(&["dist", "4", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["total"], 125);

    let trees = weary(&["dist", "4", "--format", "csv", "--side", "tree"]);
    let pfs = weary(&["dist", "4", "--format", "csv", "--side", "pf"]);
    let body = |o: &Output| {
        stdout(o)
            .lines()
            .skip(1)
            .map(String::from)
            .collect::<Vec<_>>()
    };
    assert_eq!(body(&trees), body(&pfs));
}

#[test]
fn count_reports_match() {
    let out = weary(&[
        "count",
        "5",
        "--family",
        "first_records:2",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (
            v["count"].as_u64(),
            v["formula_value"].as_u64(),
            v["k"].as_u64()
        ),
        (Some(50), Some(50), Some(2))
    );
    assert_eq!(v["match"], true);

    let out = weary(&["count", "5", "--family", "pf02", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["side"], "parking");
    assert_eq!(v["count"], v["dual_count"]);

    let out = weary(&["count", "3", "--family", "catalan", "--side", "pf"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let out = weary(&["verify", "0"]);
    assert!(out.status.success());
    assert!(stdout(&out).trim_end().ends_with("PASS"));

    let out = weary(&["verify", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--max-n"));

    let out = weary(&["verify", "3", "--shard", "3/3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_csv_has_one_row_per_check() {
    let json = weary(&["verify", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["schema"], "weary-verify/1");
    let csv = stdout(&weary(&["verify", "3", "--format", "csv"]));
    assert_eq!(
        csv.lines().count() - 1,
        v["checks"].as_array().unwrap().len()
    );
}

#[test]
fn merge_rejects_incomplete_sets() {
    let dir = std::env::temp_dir().join(format!("weary-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s0.json");
    fs::write(&path, weary(&["verify", "2", "--shard", "0/2"]).stdout).unwrap();
    let out = weary(&["verify-merge", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("1 of 2"));

    let garbage = dir.join("bad.json");
    fs::write(&garbage, "{").unwrap();
    let out = weary(&["verify-merge", garbage.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn input_files_report_line_and_token() {
    let dir = std::env::temp_dir().join(format!("weary-input-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let path = dir.join("codes.txt");
    fs::write(&path, "# codes\n3 1 1\n\n3 0 0\n3 0 z\n").unwrap();
    let out = weary(&["decode", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 5, token 3"), "{}", stderr(&out));

    fs::write(&path, "3 1 1\n3 0 0\n").unwrap();
    let out = weary(&["decode", "--format", "csv", "-i", path.to_str().unwrap()]);
    assert_eq!(stdout(&out), "code,tree\n3 1 1,3 0 1 1\n3 0 0,3 0 0 0\n");

    fs::write(&path, "2 0 0\n2 1 2\n").unwrap();
    let out = weary(&["encode", "--input", path.to_str().unwrap()]);
    assert!(stderr(&out).contains("line 2"), "{}", stderr(&out));
    fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["dist", "5", "--format", "json"][..],
        &["verify", "4", "--format", "json"][..],
        &["verify", "4", "--shard", "1/3"][..],
    ] {
        assert_eq!(weary(args).stdout, weary(args).stdout, "{args:?}");
    }
}

#[test]
fn unknown_arguments_are_input_errors() {
    assert_eq!(weary(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        weary(&["dist", "3", "--family", "bogus"]).status.code(),
        Some(2)
    );
    assert_eq!(weary(&["decode", "3", "-1", "0"]).status.code(), Some(2));
    assert!(weary(&["--help"]).status.success());
}
