use std::io::Write;
use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_orbifold-fusion");

fn gram_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn a1() -> tempfile::NamedTempFile {
    gram_file(r#"{"gram": [[2]]}"#)
}

#[test]
fn modules_lists_nine_for_a1() {
    let f = a1();
    let o = run(&["modules", f.path().to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn fuse_worked_example() {
    let f = a1();
    let o = run(&["fuse", f.path().to_str().unwrap(), "T(0;0)", "T(0;1)"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "D(0;1)\nD(1/2;0)\n");
}

#[test]
fn output_is_deterministic_and_labels_round_trip() {
    let f = gram_file(r#"{"gram": [[2, -1], [-1, 2]]}"#);
    let p = f.path().to_str().unwrap();
    let first = stdout(&run(&["table", p]));
    assert_eq!(first, stdout(&run(&["table", p])));
    let modules = stdout(&run(&["modules", p]));
    for label in modules.lines() {
        let o = run(&["decompose", p, label]);
        assert!(o.status.success(), "{label}");
        assert_eq!(stdout(&run(&["fuse", p, "D(0,0;0)", label])).trim(), label);
    }
}

#[test]
fn table_formats() {
    let f = a1();
    let p = f.path().to_str().unwrap();
    let csv = stdout(&run(&["table", p, "--csv"]));
    assert!(csv.starts_with("a,b,c,N\n"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&run(&["table", p, "--json"]))).unwrap();
    assert_eq!(json["modules"].as_array().unwrap().len(), 9);
    assert_eq!(json["products"].as_array().unwrap().len(), 81);
    assert_eq!(json["modules"][0], serde_json::json!({"kind": "diag", "lambda": ["0"], "eps": 0}));
}

#[test]
fn verify_exit_codes() {
    let e8 = gram_file(
        r#"{"gram": [[2,0,-1,0,0,0,0,0],[0,2,0,-1,0,0,0,0],[-1,0,2,-1,0,0,0,0],[0,-1,-1,2,-1,0,0,0],
                     [0,0,0,-1,2,-1,0,0],[0,0,0,0,-1,2,-1,0],[0,0,0,0,0,-1,2,-1],[0,0,0,0,0,0,-1,2]]}"#,
    );
    let o = run(&["verify", e8.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let a2 = gram_file(r#"{"gram": [[2, -1], [-1, 2]]}"#);
    let o = run(&["verify", a2.path().to_str().unwrap(), "--max-l", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let odd = gram_file(r#"{"gram": [[1]]}"#);
    let o = run(&["modules", odd.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not even"));
    let f = a1();
    let p = f.path().to_str().unwrap();
    for bad in ["N(1,0)", "D(1/4;0)", "Q(0;0)", "D(0;0"] {
        let o = run(&["fuse", p, bad, "D(0;0)"]);
        assert_eq!(o.status.code(), Some(2), "{bad}");
    }
    let o = run(&["modules", "/nonexistent.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn qdims_and_glob() {
    let f = a1();
    let out = stdout(&run(&["qdims", f.path().to_str().unwrap()]));
    assert!(out.contains("N(0,1/2) 2\n"));
    assert!(out.contains("T(0;0) sqrt(2)\n"));
    assert!(out.ends_with("glob 16\n"));
}
