use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradcount"))
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

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gradcount-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn count_examples() {
    for (args, expected) in [
        (vec!["count", "e", "--group", "Z2", "--m", "2"], "2"),
        (vec!["count", "n", "--group", "Z2xZ2", "--m", "2"], "5"),
        (
            vec!["count", "e", "--group", "Z2", "--blocks", "1,1,1"],
            "4",
        ),
        (vec!["count", "e", "--group", "Z1", "--m", "7"], "1"),
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", stderr(&out));
        assert_eq!(stdout(&out).trim(), expected, "{args:?}");
    }
}

#[test]
fn count_with_cayley_table() {
    let s3 = r#"{"order": 6, "table": [
        [0,1,2,3,4,5],[1,2,0,5,3,4],[2,0,1,4,5,3],
        [3,4,5,0,1,2],[4,5,3,2,0,1],[5,3,4,1,2,0]]}"#;
    let path = temp_file("s3.json", s3);
    let path = path.to_str().unwrap();
    let out = run(&["count", "e", "--cayley", path, "--blocks", "1,1,1"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "36");

    let out = run(&["count", "n", "--cayley", path, "--m", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("abelian"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["count", "e", "--group", "Zx", "--m", "2"],
        vec!["count", "e", "--group", "Z2"],
        vec!["count", "e", "--group", "Z2", "--m", "2", "--blocks", "1,1"],
        vec!["count", "e", "--group", "Z2", "--m", "0"],
        vec!["count", "q", "--group", "Z2", "--m", "2"],
        vec!["table", "--group", "Z2", "--max-m", "3", "--format", "xml"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn data_errors_exit_4() {
    let path = temp_file("bad.json", r#"{"order": 2, "table": [[0, 1], [0, 1]]}"#);
    let out = run(&["count", "e", "--cayley", path.to_str().unwrap(), "--m", "2"]);
    assert_eq!(out.status.code(), Some(4));

    let path = temp_file("bad.csv", "m,count\n1,1\n2,7\n3,2\n4,3\n");
    let out = run(&[
        "identify",
        "--sequence",
        path.to_str().unwrap(),
        "--order",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(4));

    let out = run(&["identify", "--sequence", "/nonexistent/seq.csv"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn table_csv() {
    let out = run(&[
        "table", "--group", "Z2", "--max-m", "4", "--kind", "e", "--format", "csv",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "m,count\n1,1\n2,2\n3,2\n4,3\n");

    let out = run(&["table", "--group", "Z1", "--max-m", "5", "--kind", "both"]);
    assert_eq!(stdout(&out), "m,e,n\n1,1,1\n2,1,1\n3,1,1\n4,1,1\n5,1,1\n");
}

#[test]
fn table_json_uses_string_counts() {
    let out = run(&[
        "table", "--group", "Z2xZ2", "--max-m", "2", "--kind", "both", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["group"], "Z2xZ2");
    let row = &doc["rows"][1];
    assert_eq!(row["m"], 2);
    assert_eq!(row["e"], "4");
    assert_eq!(row["n"], "5");

    // Counts beyond 64 bits survive as strings.
    let out = run(&[
        "table", "--group", "Z64", "--max-m", "64", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let big: num_bigint::BigUint = doc["rows"][63]["e"].as_str().unwrap().parse().unwrap();
    assert!(big > num_bigint::BigUint::from(u64::MAX));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "table", "--group", "Z6", "--max-m", "12", "--kind", "both", "--format", "json",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_small() {
    let out = run(&["verify", "--max-order", "4", "--max-size", "4"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("Z2xZ2")));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_cap_is_respected() {
    let out = Command::new(env!("CARGO_BIN_EXE_gradcount"))
        .args(["verify", "--max-order", "4", "--max-size", "4"])
        .env("GRADCOUNT_ENUM_CAP", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("gamma enumeration"));
}

#[test]
fn identify_round_trip() {
    let out = run(&["table", "--group", "Z4", "--max-m", "8"]);
    let path = temp_file("z4.csv", &stdout(&out));
    let out = run(&[
        "identify",
        "--sequence",
        path.to_str().unwrap(),
        "--order",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out).trim(), "Z4");

    let out = run(&["table", "--group", "Z2xZ6", "--max-m", "12"]);
    let path = temp_file("z2z6.csv", &stdout(&out));
    let out = run(&["identify", "--sequence", path.to_str().unwrap()]);
    assert_eq!(stdout(&out).trim(), "Z2xZ6");
}

#[test]
fn identify_s3_gives_certificate() {
    let s3 = r#"{"order": 6, "table": [
        [0,1,2,3,4,5],[1,2,0,5,3,4],[2,0,1,4,5,3],
        [3,4,5,0,1,2],[4,5,3,2,0,1],[5,3,4,1,2,0]]}"#;
    let table = temp_file("s3-table.json", s3);
    let out = run(&["table", "--cayley", table.to_str().unwrap(), "--max-m", "6"]);
    let seq = temp_file("s3.csv", &stdout(&out));
    let out = run(&[
        "identify",
        "--sequence",
        seq.to_str().unwrap(),
        "--order",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert!(stdout(&out).starts_with("non-abelian"), "{}", stdout(&out));
}
