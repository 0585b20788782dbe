//! End-to-end runs of the `mvgraph` binary.

use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn mvgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mvgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = mvgraph(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("mvgraph-cli-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const M: &str = "product:chain:2xchain:2xchain:3";

#[test]
fn chain_five_is_a_path() {
    assert_eq!(
        stdout(&["metrics", "chain:5"]),
        "{\"diameter\":2,\"girth\":\"inf\"}\n"
    );
}

#[test]
fn ideal_graph_of_m_as_dot() {
    let dot = stdout(&["graph", M, "--ideal", "0,1,2", "--dot"]);
    assert!(dot.starts_with("graph {"));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 9);
    assert_eq!(
        dot.lines()
            .filter(|l| l.trim_end().ends_with(';') && !l.contains(" -- "))
            .count(),
        6
    );
    assert_eq!(
        stdout(&["metrics", M, "--ideal", "0,1,2"]),
        "{\"diameter\":2,\"girth\":4}\n"
    );
    assert_eq!(
        stdout(&["metrics", M, "--ideal", "0,3"]),
        "{\"diameter\":3,\"girth\":3}\n"
    );
}

#[test]
fn graph_json_lists_vertices_and_edges() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["graph", "chain:6"])).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn algebra_round_trips_through_a_file() {
    let text = stdout(&["algebra", M]);
    let path = scratch("m.json");
    fs::write(&path, &text).unwrap();
    let spec = format!("file:{}", path.display());
    assert_eq!(stdout(&["algebra", &spec]), text);
    assert_eq!(
        stdout(&["iso", &spec, M]),
        format!(
            "{{\"isomorphic\":true,\"mapping\":{:?}}}\n",
            (0..12).collect::<Vec<_>>()
        )
        .replace(' ', "")
    );
}

#[test]
fn out_flag_writes_a_file() {
    let path = scratch("l3.json");
    let out = mvgraph(&["algebra", "chain:3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        fs::read_to_string(&path).unwrap(),
        "{\"order\":3,\"zero\":0,\"oplus\":[[0,1,2],[1,2,2],[2,2,2]],\"star\":[2,1,0],\"labels\":[\"0\",\"1/2\",\"1\"]}\n"
    );
}

#[test]
fn non_involutive_star_is_rejected() {
    let path = scratch("bad.json");
    fs::write(
        &path,
        r#"{"order":3,"zero":0,"oplus":[[0,1,2],[1,2,2],[2,2,2]],"star":[2,2,0]}"#,
    )
    .unwrap();
    let out = mvgraph(&["algebra", &format!("file:{}", path.display())]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("M2"));
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["algebra", "chain:1"][..],
        &["algebra", "ring:4"],
        &["quotient", "chain:4", "--ideal", "0,1"],
        &["graph", "chain:4", "--ideal", "0,9"],
        &["verify", "2"],
        &["iso", "chain:3", "chain:3", "--ideal-a", "0"],
    ] {
        assert_eq!(mvgraph(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn ideals_and_quotients() {
    assert_eq!(
        stdout(&["ideals", "product:chain:2xchain:2"]),
        "[[0],[0,1],[0,2],[0,1,2,3]]\n"
    );
    let q: serde_json::Value =
        serde_json::from_str(&stdout(&["quotient", M, "--ideal", "0,1,2"])).unwrap();
    assert_eq!(q["order"], 4);
    assert_eq!(
        q["classes"],
        serde_json::json!([[0, 1, 2], [3, 4, 5], [6, 7, 8], [9, 10, 11]])
    );
}

#[test]
fn isomorphism_decisions() {
    assert_eq!(
        stdout(&["iso", "product:chain:2xchain:3", "chain:6"]),
        "{\"isomorphic\":false}\n"
    );
    let same_graph = stdout(&[
        "iso",
        M,
        "product:chain:2xchain:2xchain:3",
        "--kind",
        "graph",
        "--ideal-a",
        "0,1,2",
        "--ideal-b",
        "0,1,2",
    ]);
    assert!(same_graph.starts_with("{\"isomorphic\":true"));
    // Γ(L2xL3) is a path on four vertices, Γ(L6) contains a triangle.
    assert_eq!(
        stdout(&[
            "iso",
            "product:chain:2xchain:3",
            "chain:6",
            "--kind",
            "graph"
        ]),
        "{\"isomorphic\":false}\n"
    );
}

#[test]
fn verify_passes_and_is_stable() {
    let first = mvgraph(&["verify", "7"]);
    assert_eq!(first.status.code(), Some(0));
    let second = mvgraph(&["verify", "--max-order", "7"]);
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let last: serde_json::Value = serde_json::from_str(text.lines().last().unwrap()).unwrap();
    assert_eq!(last["record"], "total");
    assert_eq!(last["status"], "pass");
    assert_eq!(last["failures"], 0);
    assert!(text.lines().all(|l| !l.contains("\"record\":\"failure\"")));
}

#[test]
fn enumerate_lists_classes() {
    let text = stdout(&["enumerate", "6"]);
    let descriptors: Vec<String> = text
        .lines()
        .map(|l| {
            serde_json::from_str::<serde_json::Value>(l).unwrap()["descriptor"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert_eq!(
        descriptors,
        ["L2", "L3", "L2xL2", "L4", "L5", "L2xL3", "L6"]
    );
}
