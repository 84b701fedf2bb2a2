use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn xclust(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xclust"))
        .args(args)
        .output()
        .expect("spawn xclust")
}

fn report(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn fit_then_eval_round_trip() {
    let dir = TempDir::new().unwrap();
    let data = write(&dir, "line.csv", "0\n1\n3\n");
    let tree = dir.path().join("tree.json");
    let fitted = report(&xclust(&["fit", "--input", s(&data), "--k", "2", "--out", s(&tree)]));
    assert_eq!(fitted["cost"], 2.0);
    assert_eq!(fitted["details"]["spacings"], serde_json::json!([2.0]));
    assert_eq!(
        std::fs::read_to_string(&tree).unwrap(),
        r#"{"cut":{"dim":0,"theta":2.0},"left":{"leaf":0},"right":{"leaf":1}}"#
    );
    let evaluated = report(&xclust(&[
        "eval", "--tree", s(&tree), "--input", s(&data), "--objective", "spacing",
    ]));
    assert_eq!(evaluated["cost"], fitted["cost"]);
}

#[test]
fn fit_rejects_k_below_two() {
    let dir = TempDir::new().unwrap();
    let data = write(&dir, "line.csv", "0\n1\n3\n");
    let out = xclust(&["fit", "--input", s(&data), "--k", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn fit_full_refinement() {
    let dir = TempDir::new().unwrap();
    let data = write(&dir, "pts.csv", "x,y\n0,0\n3,0\n0,4\n10,10\n");
    let r = report(&xclust(&["fit", "--input", s(&data), "--header", "--k", "4"]));
    assert_eq!(r["cost"], 3.0);
    assert_eq!(r["n"], 4);
    assert_eq!(r["d"], 2);
}

#[test]
fn eval_cover_tree_and_errors() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p3.txt", "3 2\n1 2\n2 3\n");
    let data = dir.path().join("p3.csv");
    let tree = dir.path().join("cover.json");
    report(&xclust(&["reduce", "--graph", s(&graph), "--out", s(&data)]));
    assert_eq!(std::fs::read_to_string(&data).unwrap(), "1,1,0\n0,1,1\n");
    let ct = report(&xclust(&["cover-tree", "--graph", s(&graph), "--out", s(&tree)]));
    assert_eq!(ct["details"]["cover"], serde_json::json!([2]));
    assert_eq!(ct["details"]["predicted_kmeans"], 1.0);

    let r = report(&xclust(&[
        "eval", "--tree", s(&tree), "--input", s(&data), "--objective", "kmeans",
    ]));
    assert!((r["cost"].as_f64().unwrap() - 1.0).abs() < 1e-9);
    assert_eq!(r["details"]["representatives"][0], serde_json::json!([0.5, 1.0, 0.5]));

    let out = xclust(&[
        "eval", "--tree", s(&tree), "--input", s(&data), "--objective", "spacing",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reduce_to_stdout() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "p3.txt", "3 2\n1 2\n2 3\n");
    let r = report(&xclust(&["reduce", "--graph", s(&graph)]));
    assert_eq!(r["details"]["csv"], "1,1,0\n0,1,1\n");
}

#[test]
fn eval_rejects_incompatible_dimensions() {
    let dir = TempDir::new().unwrap();
    let data = write(&dir, "line.csv", "0\n1\n3\n");
    let tree = write(
        &dir,
        "t.json",
        r#"{"cut":{"dim":1,"theta":0.5},"left":{"leaf":0},"right":{"leaf":1}}"#,
    );
    let out = xclust(&["eval", "--tree", s(&tree), "--input", s(&data), "--objective", "kmeans"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn vc_baseline_oracle_price() {
    let dir = TempDir::new().unwrap();
    let p4 = write(&dir, "p4.txt", "4 3\n1 2\n2 3\n3 4\n");
    let r = report(&xclust(&["vc", "--graph", s(&p4)]));
    assert_eq!(r["details"]["size"], 2);

    let data = write(&dir, "line.csv", "0\n1\n3\n");
    let r = report(&xclust(&["baseline-spacing", "--input", s(&data), "--k", "2"]));
    assert_eq!(r["cost"], 2.0);
    let r = report(&xclust(&["oracle", "--input", s(&data), "--k", "2", "--objective", "kmeans"]));
    assert_eq!(r["cost"], 0.5);
    let r = report(&xclust(&["price", "--input", s(&data), "--k", "2", "--objective", "spacing"]));
    assert_eq!(r["cost"], 1.0);
    let r = report(&xclust(&["price", "--input", s(&data), "--k", "2", "--objective", "kmeans"]));
    assert_eq!(r["cost"], 1.0);
}

#[test]
fn limit_exceeded_exits_with_three() {
    let dir = TempDir::new().unwrap();
    let rows: String = (0..13).map(|i| format!("{i}\n")).collect();
    let data = write(&dir, "big.csv", &rows);
    let out = xclust(&["oracle", "--input", s(&data), "--k", "2", "--objective", "kmeans"]);
    assert_eq!(out.status.code(), Some(3));
    let out = xclust(&[
        "oracle", "--input", s(&data), "--k", "2", "--objective", "kmeans", "--max-points", "13",
    ]);
    assert!(out.status.success());
}

#[test]
fn malformed_inputs_fail_cleanly() {
    let dir = TempDir::new().unwrap();
    let ragged = write(&dir, "r.csv", "0,1\n2\n");
    let out = xclust(&["fit", "--input", s(&ragged), "--k", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("expected 2 fields"));
    let out = xclust(&["fit", "--input", "/no/such/file.csv", "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_graph_is_seeded() {
    let args = [
        "gen-graph", "--family", "random-tf", "--vertices", "12", "--edges", "14", "--seed", "7",
    ];
    let a = report(&xclust(&args));
    let b = report(&xclust(&args));
    assert_eq!(a["details"]["graph"], b["details"]["graph"]);
    assert_eq!(a["details"]["triangle_free"], true);
    assert!(a["details"]["max_degree"].as_u64().unwrap() <= 3);
    let out = xclust(&["gen-graph", "--family", "cycle", "--vertices", "3"]);
    assert_eq!(out.status.code(), Some(2));
}
