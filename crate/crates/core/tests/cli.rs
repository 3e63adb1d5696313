use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wiener-ecc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn profile_of_family_member() {
    let o = run(&["profile", "--family", "z:1"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["tr_set"], serde_json::json!([8, 12]));
    assert_eq!(v["ec_set"], serde_json::json!([2, 3, 4]));
}

#[test]
fn profile_reads_graph6_from_stdin() {
    let o = run(&["profile", "--g6", "-"], "Ch\nA_\n");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["tr_set"], serde_json::json!([4, 6]));
    assert_eq!(lines[1]["wiener"], 1);
}

#[test]
fn encode_decode_round_trip() {
    let o = run(&["encode"], "4\n0 1\n1 2\n2 3\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "Ch");
    let d = run(&["decode", "--g6", "-"], "Ch\n");
    let v: serde_json::Value = serde_json::from_str(stdout(&d).trim()).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn bad_record_is_an_input_error() {
    let o = run(&["decode", "--g6", "-"], "Ch\nA_\n!!\n");
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
    let skipped = run(&["profile", "--g6", "-", "--skip-bad"], "Ch\n!!\nA_\n");
    assert_eq!(skipped.status.code(), Some(0));
    assert_eq!(stdout(&skipped).lines().count(), 2);
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["search", "--universe", "connected:11"], "").status.code(), Some(2));
    assert_eq!(run(&["search", "--universe", "connected:6", "--pred", "nonsense"], "").status.code(), Some(2));
    assert_eq!(run(&["reproduce", "no-such-task"], "").status.code(), Some(2));
    assert_eq!(run(&["profile"], "").status.code(), Some(2));
}

#[test]
fn search_output_is_independent_of_workers() {
    let args = ["search", "--universe", "connected:8", "--pred", "transmission-irregular", "--witnesses", "--histogram", "cw"];
    let one = run(&[&args[..], &["--workers", "1"]].concat(), "");
    let three = run(&[&args[..], &["--workers", "3"]].concat(), "");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, three.stdout);
    let v: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["examined"], 11117);
}

#[test]
fn shards_sum_to_the_whole() {
    let total: u64 = (0..3)
        .map(|i| {
            let shard = format!("{i}/3");
            let o = run(&["search", "--universe", "trees:12", "--shard", &shard], "");
            let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
            v["examined"].as_u64().unwrap()
        })
        .sum();
    assert_eq!(total, 551);
}

#[test]
fn verify_single_suite() {
    let o = run(&["verify", "family"], "");
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
