use std::process::{Command, Output};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreath-specht")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn worked_example_json() {
    let o = bin(&["branch-first", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains(r#"{"nu":[[3],[2,1]],"mult":1}"#), "{out}");
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["rule"], "first");
    assert_eq!(doc["n"], 6);
}

#[test]
fn both_methods_agree() {
    let o = bin(&["branch-first", "-m", "4", "--lambda", "[[1],[1],[],[1],[]]", "--method", "both"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(!stdout(&o).is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["branch-first", "-m", "4", "--lambda", "[[2],[1],[1],[],[1]]", "--json"];
    let a = stdout(&bin(&args));
    let b = stdout(&bin(&args));
    assert_eq!(a, b);
    let args = ["verify", "--suite", "cosets", "--max-n", "4", "--json"];
    assert_eq!(stdout(&bin(&args)), stdout(&bin(&args)));
}

#[test]
fn simple_commands() {
    assert_eq!(stdout(&bin(&["partitions", "0", "--json"])).trim(), "[[]]");
    assert_eq!(stdout(&bin(&["partitions", "3"])).trim(), "[3]\n[2,1]\n[1,1,1]");
    assert_eq!(stdout(&bin(&["dim", "--partition", "[3,2,1]"])).trim(), "16");
    assert_eq!(stdout(&bin(&["lr", "--lambda", "[3,2,1]", "--alpha", "[2,1]", "--beta", "[2,1]"])).trim(), "2");
    assert_eq!(stdout(&bin(&["lr-multi", "--lambda", "[3,2,1]", "--parts", "[2,1];[2];[1]"])).trim(), "3");
    assert_eq!(stdout(&bin(&["wreath-dim", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]"])).trim(), "360");
    let layer = stdout(&bin(&["young-layer", "3"]));
    assert_eq!(layer.trim(), "[3] -> [2]\n[2,1] -> [2]\n[2,1] -> [1,1]\n[1,1,1] -> [1,1]");
}

#[test]
fn labellings_listing() {
    let o = bin(&["labellings", "-m", "3", "--lambda", "[[2],[1,1],[1,1]]", "--nu", "[[3],[2,1]]"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("[2] [1] [1] [1,1] 1"), "{out}");
    assert!(out.trim_end().ends_with("total 1"), "{out}");
}

#[test]
fn rho_and_cosets() {
    let out = stdout(&bin(&["rho", "--sizes", "(3,1,0,2,3)"]));
    assert_eq!(out.trim(), "1 (3,9,8,7,6,5,4)\n2 (4,9,8,7,6,5)\n4 (6,9,8,7)\n5 e");
    let o = bin(&["cosets", "--gamma", "(3,1,0,2,3)", "--alpha", "(8,1)", "--json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let perms: Vec<&str> =
        doc["representatives"].as_array().unwrap().iter().map(|r| r["permutation"].as_str().unwrap()).collect();
    assert_eq!(perms, ["e", "(6,9,8,7)", "(4,9,8,7,6,5)", "(3,9,8,7,6,5,4)"]);
}

#[test]
fn exit_codes() {
    let o = bin(&["branch-first"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Usage"));
    assert_eq!(bin(&["dim", "--partition", "[1,2]"]).status.code(), Some(1));
    assert_eq!(bin(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(bin(&["--help"]).status.code(), Some(0));

    let o = bin(&["branch-second", "-m", "2", "--lambda", "[[],[]]", "--json"]);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(err["status"], "error");
    assert_eq!(err["code"], "invalid_argument");

    let o = bin(&["young-layer", "0"]);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_str(String::from_utf8_lossy(&o.stderr).trim()).unwrap();
    assert_eq!(err["code"], "invalid_argument");
}

#[test]
fn verify_reports_counts() {
    let o = bin(&["verify", "--suite", "length-lemma", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("length-lemma: ok (checked "));
}
