use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_skein"))
        .args(args)
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).expect("json on stdout");
    (v, out.status.code().unwrap())
}

fn assert_schema(v: &Value, command: &str) {
    assert_eq!(v["command"], command);
    for k in ["inputs", "outputs", "verdict"] {
        assert!(v.get(k).is_some(), "missing {k}");
    }
}

#[test]
fn jones_of_figure_eight() {
    let (v, code) = run(&["jones", "3: -1,2,-1,2"]);
    assert_eq!(code, 0);
    assert_schema(&v, "jones");
    assert_eq!(
        v["outputs"]["jones_t"],
        "1*t^-2 + -1*t^-1 + 1*t^0 + -1*t^1 + 1*t^2"
    );
}

#[test]
fn bracket_of_a_word_file() {
    let dir = std::env::temp_dir().join(format!("skein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("hopf.txt");
    std::fs::write(&path, "STRANDS 0\nCAP 0\nCAP 2\nX+ 1\nX+ 1\nCUP 0\nCUP 0\n").unwrap();
    let (v, code) = run(&["bracket", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_schema(&v, "bracket");
    assert_eq!(v["outputs"]["crossings"], 2);
    assert_eq!(v["outputs"]["reduced"], "-1*A^-4 + -1*A^4");
}

#[test]
fn genus1_ideal_of_ten_57() {
    let (v, code) = run(&["genus1-ideal", "4: 1,1,1,2,-1,2,-3,2,2,-3,-3"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "nontrivial");
    assert_eq!(v["outputs"]["ideal"]["witness"], serde_json::json!([11, 3]));
    assert_eq!(v["outputs"]["gen_x"].as_array().unwrap().len(), 4);
}

#[test]
fn ball_ideal_of_a_twist() {
    let (v, code) = run(&["ball-ideal", "2: 1,1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "trivial");
    assert_eq!(v["outputs"]["ideals_agree"], true);
}

#[test]
fn search_filters_by_strands() {
    let dir = std::env::temp_dir().join(format!("skein-cli-s-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c.csv");
    std::fs::write(
        &path,
        "4_1,3,{-1;2;-1;2}\n10_57,4,{1;1;1;2;-1;2;-3;2;2;-3;-3}\n",
    )
    .unwrap();
    let (v, code) = run(&["search", path.to_str().unwrap(), "--strands", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["entries"], 1);
    assert_eq!(v["outputs"]["nontrivial"], serde_json::json!(["10_57"]));
}

#[test]
fn bad_input_is_reported_as_json() {
    let (v, code) = run(&["jones", "3: 1,7"]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "error");
}

#[test]
fn verify_paper_lists_every_criterion() {
    let (v, code) = run(&["verify-paper"]);
    assert_schema(&v, "verify-paper");
    let list = v["outputs"]["criteria"].as_array().unwrap();
    assert_eq!(list.len(), 8);
    let all = list.iter().all(|c| c["passed"] == true);
    assert_eq!(code, if all { 0 } else { 2 });
    assert_eq!(v["verdict"], if all { "pass" } else { "fail" });
}
