use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_grassclique"))
        .args(args)
        .env_remove("GRASSCLIQUE_GUARD")
        .output()
        .unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_line_over_gf4() {
    let out = run(&[
        "analyze", "--q", "4", "--n", "4", "--k", "2", "--matrix", "1 1 1 1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "Star");
    assert_eq!(v["equals_top"], true);
    assert_eq!(v["actual_size"], 2);
    assert_eq!(v["profile"]["lS"], 1);
}

#[test]
fn analyze_reads_matrix_file_and_explicit_modulus() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    std::fs::write(&path, "1 0 1 1 1\n0 1 0 0 0\n").unwrap();
    let out = run(&[
        "analyze",
        "--q",
        "4",
        "--modulus",
        "1,1,1",
        "--matrix-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["kind"], "NotMaximal");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["analyze", "--q", "2", "--matrix", "1 2"][..],
        &["analyze", "--q", "6", "--matrix", "1 1"],
        &["analyze", "--q", "2", "--matrix", "1 0; 0"],
        &["analyze", "--q", "4", "--k", "3", "--matrix", "1 1 1 1"],
        &[
            "analyze",
            "--q",
            "4",
            "--modulus",
            "1,0,1",
            "--matrix",
            "1 1 1 1",
        ],
        &["census", "--q", "2", "--n", "4", "--k", "3"],
        &["count", "--q", "2", "--n", "3", "--k", "4"],
        &["graph", "--q", "2"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn guard_exits_2_unless_forced() {
    let bin = env!("CARGO_BIN_EXE_grassclique");
    let args = ["graph", "--q", "2", "--n", "5", "--k", "3"];
    let guarded = Command::new(bin)
        .args(args)
        .env("GRASSCLIQUE_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(guarded.status.code(), Some(2));
    let forced = Command::new(bin)
        .args(args)
        .arg("--force")
        .env("GRASSCLIQUE_GUARD", "10")
        .output()
        .unwrap();
    assert_eq!(forced.status.code(), Some(0));
}

#[test]
fn count_and_graph() {
    let v = json(&run(&["count", "--q", "2", "--n", "5", "--k", "2"]));
    assert_eq!(
        v,
        serde_json::json!({"n":5,"k":2,"q":2,"grassmannian":155,"star_size":15,"top_size":7})
    );
    let v = json(&run(&["graph", "--q", "2", "--n", "5", "--k", "3"]));
    assert_eq!(
        v,
        serde_json::json!({"vertices":15,"edges":45,"components":1})
    );
}

#[test]
fn census_outputs_are_independent_of_jobs() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["json", "csv"] {
        let mut files = Vec::new();
        for jobs in ["1", "4"] {
            let path = dir.path().join(format!("c{jobs}.{format}"));
            let out = run(&[
                "census",
                "--q",
                "3",
                "--n",
                "5",
                "--k",
                "3",
                "--jobs",
                jobs,
                "--format",
                format,
                "--out",
                path.to_str().unwrap(),
            ]);
            assert_eq!(out.status.code(), Some(0));
            files.push(std::fs::read(&path).unwrap());
        }
        assert_eq!(files[0], files[1], "{format}");
    }
    let csv = std::fs::read_to_string(dir.path().join("c1.csv")).unwrap();
    assert!(csv.starts_with("s,c,class_sizes,lS,L_size,predicted_size,actual_size,w_dim,kind,equals_top,oracle_maximal,agree\n"));
    assert_eq!(csv.lines().count(), 1211);
    let v: serde_json::Value =
        serde_json::from_slice(&std::fs::read(dir.path().join("c1.json")).unwrap()).unwrap();
    assert_eq!(v["summary"]["mismatches"], 0);
    assert_eq!(v["rows"].as_array().unwrap().len(), 1210);
}

#[test]
fn verify_passes() {
    let out = run(&["verify"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(!text.contains("FAIL"));
}
