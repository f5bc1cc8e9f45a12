use std::process::{Command, Output};

use serde_json::Value;

fn ebi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ebi"))
        .args(args)
        .output()
        .expect("run ebi")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn index_set(descriptor: &str) -> Value {
    let out = ebi(&["ebi", descriptor]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    json(&out)["index_set"].clone()
}

#[test]
fn ebi_small_graphs() {
    assert_eq!(index_set("crown:3"), serde_json::json!([0]));
    assert_eq!(index_set("crown:4"), serde_json::json!([0, 2, 4]));
    assert_eq!(index_set("complete:3"), serde_json::json!([1]));
}

#[test]
fn ebi_report_shape() {
    let report = json(&ebi(&["ebi", "crown:4"]));
    assert_eq!(report["graph"]["p"], 8);
    assert_eq!(report["graph"]["q"], 12);
    assert_eq!(report["complete"], true);
    assert_eq!(report["enumerated"], 924);
    for w in report["witnesses"].as_array().unwrap() {
        assert_eq!(w["labels"].as_str().unwrap().len(), 12);
        assert_eq!(w["counts"]["index"], w["index"]);
    }
}

#[test]
fn construct_single_index() {
    for (n, k) in [(8, 12), (7, 6), (5, 1), (3, 0)] {
        let out = ebi(&["construct", &n.to_string(), "-k", &k.to_string()]);
        assert_eq!(out.status.code(), Some(0));
        let w = json(&out);
        assert_eq!(w["n"], n);
        assert_eq!(w["index"], k);
        let c = &w["counts"];
        let (e0, e1) = (c["e0"].as_u64().unwrap(), c["e1"].as_u64().unwrap());
        assert!(e0.abs_diff(e1) <= 1);
    }
}

#[test]
fn construct_all_and_dot() {
    let all = json(&ebi(&["construct", "6"]));
    let indices: Vec<_> = all
        .as_array()
        .unwrap()
        .iter()
        .map(|w| w["index"].as_u64().unwrap())
        .collect();
    assert_eq!(indices, [0, 2, 4, 6, 8]);

    let out = ebi(&["construct", "4", "-k", "4", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert!(dot.starts_with("graph"), "{dot}");
    assert!(dot.contains("a0") && dot.contains("b3"));
}

#[test]
fn construct_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let out = ebi(&[
        "construct",
        "9",
        "-k",
        "10",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let w: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(w["index"], 10);
}

#[test]
fn verify_batteries_pass() {
    for args in [
        &["verify", "crown-range", "4..12"][..],
        &["verify", "prop2", "--trials", "100", "--max-p", "8"],
        &[
            "verify",
            "lemma5",
            "--graph",
            "crown:4",
            "--samples",
            "1000",
        ],
        &["verify", "lemma3"],
    ] {
        let out = ebi(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report = json(&out);
        assert_eq!(report["passed"], true);
        assert!(!report["checks"].as_array().unwrap().is_empty());
    }
}

#[test]
fn graph_subcommand_prints_edge_list() {
    let out = ebi(&["graph", "product:direct:complete:3:complete:2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines().filter(|l| !l.starts_with('#'));
    assert_eq!(lines.next(), Some("6"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn exit_codes() {
    assert_eq!(ebi(&["ebi", "wheel:5"]).status.code(), Some(2));
    assert_eq!(ebi(&["ebi", "crown:"]).status.code(), Some(2));
    assert_eq!(ebi(&["construct", "6", "-k", "3"]).status.code(), Some(2));
    assert_eq!(ebi(&["construct", "5", "-k", "3"]).status.code(), Some(2));
    assert_eq!(ebi(&["construct", "2"]).status.code(), Some(2));
    assert_eq!(
        ebi(&["verify", "crown-range", "9..4"]).status.code(),
        Some(2)
    );

    let partial = ebi(&["ebi", "crown:4", "--budget", "10"]);
    assert_eq!(partial.status.code(), Some(3));
    let report = json(&partial);
    assert_eq!(report["complete"], false);
    assert_eq!(report["enumerated"], 10);

    // crown(5) has even-degree vertices, so the parity check fails
    assert_eq!(
        ebi(&["verify", "lemma5", "--graph", "crown:5"])
            .status
            .code(),
        Some(1)
    );
}
