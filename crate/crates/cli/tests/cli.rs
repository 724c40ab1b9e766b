use std::path::PathBuf;
use std::process::{Command, Output};

fn primideal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_primideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

const SMALL_GRID: &str = r#"
version = 7
max_cases = 100000

[lgts2]
lambda_width = 2
lambda_bound = 1
mu_widths = [3]
mu_bound = 2

[interlace]
max_width = 3
bound = 2

[lemmas]
max_lambda_width = 2
max_mu_width = 3
bound = 2

[pmain]
lambda_width = 2
lambda_bound = 1
mu_widths = [3]
mu_bound = 2

[tiap_order]
max_inf = 1
max_head_len = 1
max_head_entry = 1
max_tail = 1

[ideal_family]
max_x = 1
max_y = 1
max_cols = 1
max_len = 1

[acc]
chains = 20
seed = 3
"#;

fn grid_file(name: &str, text: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, text).unwrap();
    path
}

#[test]
fn exit_codes_follow_the_answer() {
    let yes = primideal(&["dominates", "[1,0]", "[0]"]);
    assert_eq!(yes.status.code(), Some(0));
    assert_eq!(stdout(&yes), "true\n");

    let no = primideal(&["dominates", "[1,0]", "[2,0]"]);
    assert_eq!(no.status.code(), Some(1));
    assert_eq!(stdout(&no), "false\n");

    let bad = primideal(&["dominates", "[0,1]", "[0]"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stdout(&bad).is_empty());
    assert!(stderr(&bad).starts_with("error: "));
}

#[test]
fn methods_agree() {
    for method in ["oracle", "interlace"] {
        let out = primideal(&["dominates", "[3,1,0]", "[2,0]", "--method", method]);
        assert_eq!(stdout(&out), "true\n", "{method}");
    }
    let wrong_order = primideal(&["dominates", "[0]", "[1,0]", "--method", "criterion4x"]);
    assert_eq!(wrong_order.status.code(), Some(2));
}

#[test]
fn local_system_checks() {
    assert_eq!(primideal(&["qvee", "[1,0]", "[0]"]).status.code(), Some(0));
    assert_eq!(
        primideal(&["qlambda", "[1,0]", "[0]"]).status.code(),
        Some(0)
    );
    let pls = primideal(&[
        "plscheck",
        "forbidden",
        "[[1,0]]",
        "--widths",
        "2..3",
        "--bound",
        "2",
    ]);
    assert_eq!(pls.status.code(), Some(0));
    let cls = primideal(&[
        "clscheck", "qlambda", "[1,0]", "--widths", "2..3", "--bound", "2",
    ]);
    assert_eq!(cls.status.code(), Some(0));
    let bad_window = primideal(&["plscheck", "qvee", "[1,0]", "--widths", "1..3"]);
    assert_eq!(bad_window.status.code(), Some(2));
}

#[test]
fn ideal_inclusion_and_codes() {
    let y1 = r#"{"x":0,"y":1,"yl":[],"yr":[]}"#;
    let aug = r#"{"x":0,"y":0,"yl":[],"yr":[]}"#;
    assert_eq!(
        primideal(&["ideal", "include", y1, aug]).status.code(),
        Some(0)
    );
    assert_eq!(
        primideal(&["ideal", "include", aug, y1]).status.code(),
        Some(1)
    );
    assert_eq!(
        primideal(&["ideal", "include", r#"{"zero":true}"#, aug])
            .status
            .code(),
        Some(0)
    );

    let codes = primideal(&["ideal", "cls", r#"{"x":1,"y":0,"yl":[1],"yr":[]}"#]);
    assert_eq!(codes.status.code(), Some(0));
    let codes: serde_json::Value = serde_json::from_slice(&codes.stdout).unwrap();
    assert_eq!(codes.as_array().unwrap().len(), 2);

    let zero = primideal(&["ideal", "weight", r#"{"zero":true}"#]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn hasse_dot_for_the_four_node_family() {
    let out = primideal(&["ideal", "hasse", "--max-cols", "1", "--max-len", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = "digraph ideals {
  rankdir=BT;
  node [shape=box];
  n0 [label=\"I(0,0,∅,∅)\"];
  n1 [label=\"I(0,0,∅,(1))\"];
  n2 [label=\"I(0,0,(1),∅)\"];
  n3 [label=\"I(0,0,(1),(1))\"];
  n1 -> n0;
  n2 -> n0;
  n3 -> n1;
  n3 -> n2;
}
";
    assert_eq!(stdout(&out), expected);
}

#[test]
fn hasse_json_lists_covers() {
    let out = primideal(&["ideal", "hasse", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["nodes"][3]["covered_by"], serde_json::json!([1, 2]));
    assert_eq!(json["nodes"][0]["label"], "I(0,0,∅,∅)");
}

#[test]
fn verify_with_a_grid_file() {
    let path = grid_file("small.toml", SMALL_GRID);
    for suite in [
        "lgts2",
        "interlace",
        "lemmas",
        "pmain",
        "tiap-order",
        "ideal-order",
        "maximal",
        "acc",
    ] {
        let out = primideal(&["verify", suite, "--grid-file", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{suite}: {}", stderr(&out));
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(report["grid_version"], 7);
        assert_eq!(report["planned"], report["checked"]);
        assert_eq!(report["failed"], 0);
        assert!(stderr(&out).contains("checks planned"));
    }
}

#[test]
fn verify_is_reproducible() {
    let path = grid_file("repeat.toml", SMALL_GRID);
    let args = ["verify", "acc", "--grid-file", path.to_str().unwrap()];
    assert_eq!(primideal(&args).stdout, primideal(&args).stdout);
    let hasse = ["ideal", "hasse", "--max-x", "1", "--max-y", "1"];
    assert_eq!(primideal(&hasse).stdout, primideal(&hasse).stdout);
}

#[test]
fn verify_rejects_bad_requests() {
    let unknown = primideal(&["verify", "nope"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("nope"));

    let path = grid_file("tiny-ceiling.toml", SMALL_GRID);
    let capped = primideal(&[
        "verify",
        "ideal-order",
        "--grid-file",
        path.to_str().unwrap(),
        "--max-cases",
        "10",
    ]);
    assert_eq!(capped.status.code(), Some(2));
    assert!(capped.stdout.is_empty());

    let broken = grid_file("broken.toml", "version = \"one\"");
    let out = primideal(&["verify", "acc", "--grid-file", broken.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}
