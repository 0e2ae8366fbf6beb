use std::fs;
use std::process::{Command, Output};

use sympow_core::harness::{kr_example, Report, Status};

fn sympow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sympow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const A4: &str = "char=0; vars=x,y,z,u";

#[test]
fn symorder_of_the_hypersurface() {
    let o = sympow(&["symorder", "--ring", A4, "--p", "x,u", "--f", "x*y*(z+u)-u^3*z"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn kr_example_json_matches_library() {
    let o = sympow(&["kr-example", "--s", "3", "--q", "2", "--char", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let lib = kr_example(3, 2, 5).unwrap();
    assert_eq!(stdout(&o), format!("{}\n", lib.to_json()));
    let parsed = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(parsed.status, Status::Verified);
    assert_eq!(parsed, lib);
}

#[test]
fn kr_example_divisibility_is_a_usage_error() {
    let o = sympow(&["kr-example", "--s", "4", "--q", "2", "--char", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("divide"));
}

#[test]
fn check_precondition_failure_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("inst.json");
    fs::write(
        &path,
        r#"{"ring": {"characteristic": 0, "variables": ["x","y","z"], "relation": null},
            "p": ["x"], "q": ["y"], "f": "x*y", "m": 1, "n": 1, "check": "SP1"}"#,
    )
    .unwrap();
    let o = sympow(&["check", path.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(3));
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.status, Status::PreconditionFailed);
}

#[test]
fn check_verified_and_unknown_keys() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.json");
    fs::write(
        &good,
        r#"{"ring": {"characteristic": 5, "variables": ["x","y","z","w"], "relation": null},
            "p": ["x","y"], "q": ["z","w"], "f": "x^2*z^3", "m": 2, "n": 3, "check": "SP2", "seed": 4}"#,
    )
    .unwrap();
    let o = sympow(&["check", good.to_str().unwrap(), "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(Report::from_json(&stdout(&o)).unwrap().seed, Some(4));

    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"ring": {"characteristic": 5, "variables": ["x"], "relation": null},
            "p": ["x"], "q": ["x"], "f": "x", "m": 1, "n": 1, "check": "SP2", "colour": 1}"#,
    )
    .unwrap();
    assert_eq!(sympow(&["check", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn check_directory_batches() {
    let dir = tempfile::tempdir().unwrap();
    let o = sympow(&[
        "family", "coordinate-hypersurface", "--count", "6", "--char", "5", "--seed", "3",
        "--out", dir.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 6);
    let o = sympow(&["check", dir.path().to_str().unwrap(), "--json"]);
    let code = o.status.code().unwrap();
    assert!(code == 0 || code == 3, "exit {code}");
    let reports: Vec<Report> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(reports.len(), 6);
    assert!(reports.iter().all(|r| r.status != Status::Counterexample));
}

#[test]
fn plain_queries() {
    let o = sympow(&["gb", "--ring", "char=0; vars=x,y", "--order", "lex", "--gens", "x^2+y^2-1, x-y"]);
    assert_eq!(stdout(&o), "y^2 - 1/2\nx - y\n");
    let o = sympow(&["member", "--ring", "char=7; vars=x,y", "--f", "x^2*y", "--gens", "x*y"]);
    assert_eq!(stdout(&o), "true\n");
    let o = sympow(&["dim", "--ring", "char=0; vars=x,y,z", "--gens", "x*y, x*z"]);
    assert_eq!(stdout(&o), "2\n");
    let o = sympow(&["intersect", "--ring", "char=0; vars=x,y", "--i", "x", "--j", "y"]);
    assert_eq!(stdout(&o), "x*y\n");
    let o = sympow(&["saturate", "--ring", "char=0; vars=x,y", "--gens", "x^2*y, x*y^2", "--f", "x"]);
    assert_eq!(stdout(&o), "y\n");
    let o = sympow(&["sympow-member", "--ring", A4, "--p", "x,u", "--f", "x*u", "--m", "2", "--json"]);
    let r = Report::from_json(&stdout(&o)).unwrap();
    assert_eq!(r.quantities["member"], true);
    assert_eq!(r.witness_named("symbolic_witness"), Some("1"));
}

#[test]
fn probe_tc_reports_failure_at_zero() {
    let o = sympow(&[
        "probe-tc", "--ring", "char=5; vars=x,y", "--z", "y", "--ideal", "x", "--c", "1", "--e", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("fails at e = 0"));
}

#[test]
fn error_exit_codes() {
    assert_eq!(sympow(&["gb", "--ring", "char=0; vars=x", "--gens", "x^"]).status.code(), Some(1));
    assert_eq!(sympow(&["gb", "--gens", "x"]).status.code(), Some(1));
    assert_eq!(sympow(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(sympow(&["--help"]).status.code(), Some(0));
    let cyclic4 = "a+b+c+d,a*b+b*c+c*d+d*a,a*b*c+b*c*d+c*d*a+d*a*b,a*b*c*d-1";
    let o = sympow(&["gb", "--ring", "char=0; vars=a,b,c,d", "--cap-basis", "3", "--gens", cyclic4]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn family_json_round_trips_through_check() {
    let o = sympow(&["family", "kurano-roberts", "--char", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let files: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(files.len(), 1);
    assert_eq!(files[0]["f"], "x^3*y");
    assert!(sympow(&["family", "nope"]).status.code() == Some(1));
}
