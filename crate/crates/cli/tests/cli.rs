use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matradix")).args(args).output().expect("binary runs")
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn digits_of_paper_examples() {
    assert_eq!(ok_json(&["digits", &fixture("two.json")])["digits"], json!([[-1], [0]]));
    assert_eq!(ok_json(&["digits", &fixture("twin_dragon.json")])["digits"], json!([[-1, 0], [0, 0]]));
    assert_eq!(
        ok_json(&["digits", &fixture("neg_two.json"), "--convention", "u"])["digits"],
        json!([[-1], [0]])
    );
    let lw = ok_json(&["digits", &fixture("lagarias_wang.json")]);
    assert_eq!(lw["det"], json!(2));
}

#[test]
fn identity_is_a_domain_violation() {
    assert_eq!(code(&["digits", &fixture("identity.json")]), 3);
    assert_eq!(code(&["pseudodigits", &fixture("identity.json")]), 3);
}

#[test]
fn pseudodigit_tables() {
    let two = ok_json(&["pseudodigits", &fixture("two.json")]);
    assert_eq!(two["pseudodigits"], json!([[1]]));
    assert_eq!(two["summary"], json!("yields pseudodigit representation"));

    let neg = ok_json(&["pseudodigits", &fixture("neg_two.json"), "--convention", "u"]);
    assert_eq!(neg["summary"], json!("yields radix representation"));
    assert_eq!(neg["pseudodigits"], json!([]));

    let td = ok_json(&["pseudodigits", &fixture("twin_dragon.json")]);
    assert_eq!(td["pseudodigits"], json!([[0, 1]]));

    let lw = ok_json(&[
        "pseudodigits",
        &fixture("lagarias_wang.json"),
        "--digits",
        "[[0,0,0,0],[0,0,-1,-1]]",
    ]);
    let cycles = lw["cycles"].as_array().unwrap();
    assert_eq!(cycles.len(), 2);
    let holder = |v: Value| cycles.iter().position(|c| c["elements"].as_array().unwrap().contains(&v)).unwrap();
    assert_ne!(holder(json!([0, 1, 0, 0])), holder(json!([-1, 0, 0, 0])));
}

#[test]
fn represent_and_decode() {
    let neg = fixture("neg_two.json");
    let rep = ok_json(&["represent", &neg, "--convention", "u", "1"]);
    assert_eq!(rep, json!({"kind": "radix", "N": 1, "digits": [[-1], [-1]]}));
    let back = ok_json(&["represent", &neg, "--convention", "u", "--decode", &rep.to_string()]);
    assert_eq!(back, json!([1]));

    let td = fixture("twin_dragon.json");
    let rep = ok_json(&["represent", &td, "0,1"]);
    assert_eq!(rep, json!({"kind": "pseudo", "N": 0, "digits": [], "pseudodigit": [0, 1]}));
    assert_eq!(ok_json(&["represent", &td, "--decode", &rep.to_string()]), json!([0, 1]));

    let rep = ok_json(&["represent", &fixture("two.json"), "-5"]);
    assert_eq!(rep["digits"], json!([[-1], [0], [-1]]));
}

#[test]
fn decode_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    std::fs::write(&path, r#"{"kind":"radix","digits":[[-1,0],[0,0],[-1,0]]}"#).unwrap();
    let arg = format!("@{}", path.display());
    // (−1,0) + A²(−1,0) with A² = [[0,2],[−2,0]]
    assert_eq!(ok_json(&["represent", &fixture("twin_dragon.json"), "--decode", &arg]), json!([-1, 2]));
}

#[test]
fn input_errors_exit_2() {
    let td = fixture("twin_dragon.json");
    assert_eq!(code(&["represent", &td, "1,2,3"]), 2);
    assert_eq!(code(&["represent", &td, "x"]), 2);
    assert_eq!(code(&["represent", &td, "--decode", r#"{"kind":"radix","digits":[[5,5]]}"#]), 2);
    assert_eq!(code(&["digits", "/nonexistent.json"]), 2);
    assert_eq!(code(&["digits"]), 2);
    assert_eq!(code(&["digits", &td, "--digits", "[[0,0],[1,1]]"]), 4);

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"n":2,"rows":[[1,2]]}"#).unwrap();
    assert_eq!(code(&["digits", &bad.display().to_string()]), 2);
    let rational = dir.path().join("rational.json");
    std::fs::write(&rational, r#"{"n":1,"rows":[["5/2"]]}"#).unwrap();
    assert_eq!(code(&["digits", &rational.display().to_string()]), 2);
}

#[test]
fn check_reports() {
    let d = ok_json(&["check", &fixture("diag22.json")]);
    assert_eq!(d["verdict"], json!("inconclusive"));
    assert_eq!(d["mu_gt_2"], json!(false));
    assert_eq!(d["cross_validation"]["yields_radix"], json!(false));

    let t = ok_json(&["check", &fixture("three_i.json")]);
    assert_eq!(t["verdict"], json!("guaranteed_radix"));
    assert_eq!(t["cross_validation"]["yields_radix"], json!(true));

    let td = ok_json(&["check", &fixture("twin_dragon.json")]);
    assert_eq!(td["verdict"], json!("inconclusive"));
    assert_eq!(td["jeong_c_in_au"], json!(false));

    let id = ok_json(&["check", &fixture("identity.json")]);
    assert_eq!(id["is_dilation"], json!(false));
    assert_eq!(id["cross_validation"], Value::Null);
}

#[test]
fn powers() {
    assert_eq!(ok_json(&["power", &fixture("twin_dragon.json")])["beta"], json!(3));
    assert_eq!(ok_json(&["power", &fixture("three_i.json")])["beta"], json!(1));
    assert_eq!(ok_json(&["power", &fixture("two.json"), "--threshold", "mu2"])["beta"], json!(2));
    assert_eq!(code(&["power", &fixture("twin_dragon.json"), "--beta-max", "2"]), 3);
    assert_eq!(code(&["power", &fixture("twin_dragon.json"), "--threshold", "bogus"]), 2);
}

fn csv_rows(bytes: &[u8]) -> Vec<Vec<String>> {
    let text = String::from_utf8(bytes.to_vec()).unwrap();
    assert!(!text.contains('\r'));
    text.lines().map(|l| l.split(',').map(String::from).collect()).collect()
}

#[test]
fn atlas_csv() {
    let out = run(&["atlas", &fixture("twin_dragon.json"), "--n-max", "6"]);
    assert!(out.status.success());
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows[0], vec!["x1", "x2", "tag"]);
    let count = |tag: &str| rows.iter().filter(|r| r[2] == tag).count();
    assert_eq!((count("radix"), count("pseudo")), (128, 64));

    let out = run(&["atlas", &fixture("two.json"), "--n-max", "2"]);
    let rows = csv_rows(&out.stdout);
    let radix: Vec<i64> = rows[1..].iter().filter(|r| r[1] == "radix").map(|r| r[0].parse().unwrap()).collect();
    assert_eq!(radix, (-7..=0).collect::<Vec<_>>());

    let out = run(&["atlas", &fixture("twin_dragon.json"), "--n-max", "0"]);
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows[1..], [vec!["-1", "0", "radix"], vec!["0", "0", "radix"], vec!["0", "1", "pseudo"]]);
}

#[test]
fn atlas_to_file_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("atlas.csv");
    let p = path.display().to_string();
    let summary = ok_json(&["atlas", &fixture("twin_dragon.json"), "--n-max", "4", "--out", &p]);
    assert_eq!(summary["radix"], json!(32));
    let first = std::fs::read(&path).unwrap();
    run(&["atlas", &fixture("twin_dragon.json"), "--n-max", "4", "--out", &p]);
    assert_eq!(first, std::fs::read(&path).unwrap());

    for args in [
        vec!["pseudodigits", "lagarias_wang.json"],
        vec!["check", "twin_dragon.json"],
        vec!["digits", "diag22.json"],
    ] {
        let f = fixture(args[1]);
        let a = run(&[args[0], &f]).stdout;
        let b = run(&[args[0], &f]).stdout;
        assert_eq!(a, b);
        assert!(a.ends_with(b"\n"));
    }
}

#[test]
fn transport_command() {
    let out = ok_json(&[
        "transport",
        &fixture("shear_twin_dragon.json"),
        "--basis",
        &fixture("shear_basis.json"),
    ]);
    assert_eq!(out["rows"], json!([[1, 1], [-1, 1]]));
    assert_eq!(out["is_dilation"], json!(true));

    // A preserves Z² but not the lattice 2Z × Z.
    let dir = tempfile::tempdir().unwrap();
    let basis = dir.path().join("basis.json");
    std::fs::write(&basis, r#"{"n":2,"rows":[[2,0],[0,1]]}"#).unwrap();
    let swap = dir.path().join("swap.json");
    std::fs::write(&swap, r#"{"n":2,"rows":[[0,1],[1,0]]}"#).unwrap();
    assert_eq!(
        code(&["transport", &swap.display().to_string(), "--basis", &basis.display().to_string()]),
        3
    );

    let gauss = dir.path().join("gauss.json");
    std::fs::write(&gauss, r#"{"n":1,"rows":[[[1,1]]]}"#).unwrap();
    let out = ok_json(&["transport", &fixture("two.json"), "--basis", &gauss.display().to_string()]);
    assert_eq!(out["rows"], json!([[2]]));
}
