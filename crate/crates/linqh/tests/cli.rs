use std::process::{Command, Output};

use serde_json::Value;

fn linqh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_linqh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const ROOT4: [&str; 4] = ["--orientation", "RRRRR", "--trees", "(((..)(..))(.(..)))"];

#[test]
fn trees_listing_and_count() {
    let o = linqh(&["trees", "--n", "4", "--count-only"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "14");
    assert_eq!(stdout(&linqh(&["trees", "--n", "1"])).trim(), "(..)");
    assert_eq!(stdout(&linqh(&["trees", "--n", "3"])).lines().count(), 5);
    assert_eq!(linqh(&["trees", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn structure_root4() {
    let o = linqh(&[&["structure"][..], &ROOT4].concat());
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let keys: Vec<_> = v.as_object().unwrap().keys().map(String::as_str).collect();
    for k in [
        "quiver",
        "segments",
        "trees",
        "order",
        "essential_order",
        "standard",
        "costandard",
        "tilting",
        "ext_algebra",
        "ringel_dual",
        "borel",
        "formality",
    ] {
        assert!(keys.contains(&k), "missing {k}");
    }
    assert_eq!(v["ext_algebra"]["relations"], serde_json::json!(["ε_2^4ε_1^2"]));
    assert_eq!(v["standard"][1]["interval"], serde_json::json!([2, 3]));
    let gens: Vec<_> = v["borel"]["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    for g in ["α_1", "α_3", "α_3α_2"] {
        assert!(gens.contains(&g));
    }
    assert_eq!(v["formality"]["passed"], Value::Bool(true));
}

#[test]
fn structure_llrr_and_single_vertex() {
    let o = linqh(&["structure", "--orientation", "LLRR", "--trees", "(((..).).);(((..).).)"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ext_algebra"]["dimension"], 10);
    assert_eq!(v["ext_algebra"]["relations"].as_array().unwrap().len(), 2);
    assert_eq!(v["quiver"]["cuts"][0]["kind"], "source");

    let o = linqh(&["structure", "--trees", "(..)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["quiver"]["n"], 1);
    assert_eq!(v["ext_algebra"]["dimension"], 1);
    assert_eq!(v["borel"]["generators"], serde_json::json!(["e_1"]));
}

#[test]
fn structure_input_errors() {
    let o = linqh(&["structure", "--orientation", "RRLL", "--trees", "(..)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(linqh(&["structure", "--orientation", "RX", "--trees", "(.(..))"]).status.code(), Some(2));
    assert_eq!(linqh(&["structure", "--orientation", "R", "--trees", "(.("]).status.code(), Some(2));
}

#[test]
fn verify_small_and_faulty() {
    let o = linqh(&["verify", "--max-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS")));
    let o = linqh(&["verify", "--max-n", "4", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL presentations"));
    assert_eq!(linqh(&["verify", "--max-n", "9"]).status.code(), Some(2));
    assert_eq!(linqh(&["verify", "--orientation", "RRLLRR"]).status.code(), Some(0));
}

#[test]
fn dot_exports() {
    let arrows = |s: &str| s.lines().filter(|l| l.contains("->")).count();
    let ext = stdout(&linqh(&[&["dot", "--what", "ext"][..], &ROOT4].concat()));
    assert_eq!(arrows(&ext), 5);
    assert_eq!(ext.lines().filter(|l| l.trim_start().starts_with("//")).count(), 1);
    assert!(ext.contains("ε_2^4ε_1^2"));
    let ringel = stdout(&linqh(&[&["dot", "--what", "ringel"][..], &ROOT4].concat()));
    assert_eq!(arrows(&ringel), 5);
    let borel = linqh(&["dot", "--what", "borel", "--orientation", "RRR", "--trees", "(.(.(.(..))))"]);
    assert_eq!(borel.status.code(), Some(0));
    assert_eq!(arrows(&stdout(&borel)), 0);
    assert_eq!(linqh(&[&["dot", "--what", "quiver"][..], &ROOT4].concat()).status.code(), Some(2));
}

#[test]
fn dot_to_file_and_refused_borel() {
    let path = std::env::temp_dir().join(format!("linqh-ext-{}.dot", std::process::id()));
    let o = linqh(&[&["dot", "--what", "ext", "--out", path.to_str().unwrap()][..], &ROOT4].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("digraph ext {"));

    let o =
        linqh(&["dot", "--what", "borel", "--orientation", "RRLLRR", "--trees", "(.(.(..)));(.((..).));(((..).).)"]);
    assert_eq!(o.status.code(), Some(1));
}
