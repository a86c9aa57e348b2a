use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn polycover(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polycover"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn circumscribe_json_and_text_agree() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("p.json"), r#"{"vertices": [[0,0],[4,0],[5,2],[2,4],[-1,2]]}"#).unwrap();
    fs::write(dir.path().join("p.txt"), "0 0\n4 0\n5 2\n2 4\n-1 2\n").unwrap();
    let a = polycover(dir.path(), &["circumscribe", "--input", "p.json", "--sides", "4"]);
    let b = polycover(dir.path(), &["circumscribe", "--input", "p.txt", "--sides", "4"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("ratio="));
}

#[test]
fn json_output_parses() {
    let dir = tempfile::tempdir().unwrap();
    let o = polycover(dir.path(), &["--json", "certify", "pentagon"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn svg_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let o = polycover(dir.path(), &["regular", "--n", "6", "--out", "h.json"]);
        assert_eq!(o.status.code(), Some(0));
        let o = polycover(dir.path(), &["circumscribe", "--input", "h.json", "--sides", "5", "--svg", name]);
        assert_eq!(o.status.code(), Some(0));
        fs::read_to_string(dir.path().join(name)).unwrap()
    };
    let first = run("a.svg");
    assert_eq!(first, run("b.svg"));
    assert!(first.starts_with("<svg"));
}

#[test]
fn bad_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    fs::write(dir.path().join("bad.txt"), "0 0\n1 0\n2 0\n0 1\n").unwrap();
    fs::write(dir.path().join("junk.json"), "{not json").unwrap();
    for file in ["bad.txt", "junk.json", "missing.json"] {
        let o = polycover(dir.path(), &["circumscribe", "--input", file, "--sides", "4"]);
        assert_eq!(o.status.code(), Some(2), "{file}");
    }
    assert_eq!(polycover(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(polycover(dir.path(), &["search", "--inner", "4", "--outer", "4", "--iters", "5"]).status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let o = polycover(dir.path(), &["regular", "--n", "5", "--out", "no/such/dir/p.json"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_passes_and_leaves_no_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    for shape in ["pentagon", "hexagon"] {
        let o = polycover(dir.path(), &["verify", shape, "--samples", "3000", "--seed", "9"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(stdout(&o).contains("status=pass"));
    }
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 0);
}

#[test]
fn oracle_and_bounds_report() {
    let dir = tempfile::tempdir().unwrap();
    polycover(dir.path(), &["regular", "--n", "7", "--out", "h.json"]);
    let o = polycover(dir.path(), &["oracle", "--input", "h.json", "--sides", "6"]);
    assert!(stdout(&o).contains("ratio=1.08626792"));
    let o = polycover(dir.path(), &["bounds", "--max-n", "7"]);
    let s = stdout(&o);
    assert!(s.contains("n6.conflict=true"));
    assert!(s.contains("heptagon.printed=1.1725"));
}

#[test]
fn short_search_runs() {
    let dir = tempfile::tempdir().unwrap();
    let o = polycover(dir.path(), &["--json", "search", "--inner", "4", "--outer", "5", "--iters", "200", "--seed", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["metrics"]["best_ratio"].as_f64().unwrap() <= 3.0 / 5f64.sqrt() + 1e-9);
}
