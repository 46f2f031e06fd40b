use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_patterngf")).args(args).output().expect("spawn patterngf")
}

fn run_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_patterngf"))
        .args(args)
        .env(key, val)
        .output()
        .expect("spawn patterngf")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn bijection_examples() {
    let o = run(&["bijection", "--map", "phi", "--input", "74352681"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "UUDUUUDUDDUDDDUD\n");
    let o = run(&["bijection", "--map", "psi-inv", "--input", "UUDUUUDUDDUDDDUD"]);
    assert_eq!(stdout(&o), "58327641\n");
    let o = run(&["bijection", "--map", "convert", "--input", "58327641"]);
    assert_eq!(stdout(&o), "74352681\n");
    let o = run(&["bijection", "--map", "phi-inv", "--input", "UUDD"]);
    assert_eq!(stdout(&o), "12\n");
}

#[test]
fn forbidden_input_names_the_occurrence() {
    let o = run(&["bijection", "--map", "phi", "--input", "132"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("132") && err.contains("(1,2,3)"), "{err}");
}

#[test]
fn series_examples() {
    let o = run(&["series", "--theorem", "2", "--k", "3", "--order", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1, 1, 2, 4, 8, 16\n");
    let o = run(&["series", "--theorem", "1", "--k", "2", "--order", "3"]);
    assert_eq!(stdout(&o), "1, 1, y + 1, y^3 + y^2 + 2*y + 1\n");
    let o = run(&["series", "--theorem", "8", "--k", "4", "--order", "9", "--y-at", "1"]);
    assert_eq!(stdout(&o), "1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862\n");
    let o = run(&["series", "--theorem", "10", "--k", "3", "--r", "1", "--order", "6"]);
    assert_eq!(stdout(&o), "0, 0, 0, 1, 4, 12, 32\n");
    let o = run(&["series", "--theorem", "a1", "--b", "1", "--lambda", "1", "--order", "6"]);
    assert_eq!(stdout(&o), "1, 1, 2, 4, 9, 21, 51\n");
    let o = run(&["series", "--theorem", "A2", "--k", "1", "--b", "0", "--lambda", "1/2", "--r", "0", "--s", "1", "--order", "5"]);
    assert_eq!(stdout(&o), "0, 1, 0, 1/2, 0, 1/4\n");
    let o = run(&["series", "--theorem", "A5", "--nu", "1,0", "--lambda", "0", "--order", "4"]);
    assert_eq!(stdout(&o), "1, 1, 1, 1, 1\n");
}

#[test]
fn series_json_schema() {
    let o = run(&["--json", "series", "--theorem", "3", "--k", "2", "--r", "1", "--order", "4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "patterngf/1");
    assert_eq!(v["coefficients"], serde_json::json!(["0", "0", "1", "2", "3"]));
    let o = run(&["series", "--theorem", "1", "--k", "2", "--order", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"][2], serde_json::json!({"0": "1", "1": "1"}));
}

#[test]
fn domain_errors_exit_one() {
    for args in [
        &["series", "--theorem", "2", "--k", "3", "--order", "-1"][..],
        &["series", "--theorem", "7", "--k", "2", "--r", "1", "--order", "4"],
        &["series", "--theorem", "10", "--k", "3", "--r", "3", "--order", "4"],
        &["series", "--theorem", "4", "--k", "3", "--order", "4"],
        &["series", "--theorem", "2", "--order", "4"],
        &["series", "--theorem", "A1", "--order", "4"],
        &["census", "--n", "3", "--avoid", "1x2", "--count", "12"],
        &["census", "--n", "3", "--avoid", "132", "--count", "113"],
        &["bijection", "--map", "phi-inv", "--input", "UDD"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn census_output_and_bound() {
    let o = run(&["census", "--n", "3", "--avoid", "132", "--count", "12"]);
    assert_eq!(stdout(&o), "occurrences,count\n0,1\n1,2\n2,1\n3,1\n");
    let o = run(&["census", "--n", "3", "--avoid", "123", "--count", "213", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], "patterngf/1");
    assert_eq!(v["histogram"], serde_json::json!({"0": "4", "1": "1"}));
    let o = run(&["census", "--n", "4", "--avoid", "132,123", "--count", "21"]);
    assert_eq!(stdout(&o), "occurrences,count\n3,1\n4,3\n5,3\n6,1\n");
    let o = run_env(&["census", "--n", "6", "--avoid", "132", "--count", "12"], "PATTERNGF_MAX_N", "5");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bound 5"));
}

#[test]
fn asymptotics_table() {
    let o = run(&["asymptotics", "--k", "3", "--r", "0", "--n-max", "4"]);
    assert_eq!(stdout(&o), "n,exact,estimate,ratio\n1,1,1,0.5\n2,2,2,0.5\n3,4,4,0.5\n4,8,8,0.5\n");
    let o = run(&["asymptotics", "--k", "3", "--r", "1", "--n-max", "0"]);
    assert_eq!(stdout(&o), "n,exact,estimate,ratio\n");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["asymptotics", "--k", "5", "--r", "2", "--n-max", "15"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let args = ["--json", "census", "--n", "8", "--avoid", "132", "--count", "123"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify", "--suite", "all", "--max-n", "9"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{out}\n{}", stderr(&o));
    assert!(out.lines().count() >= 20);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}

#[test]
fn verify_respects_bound() {
    let o = run_env(&["verify", "--suite", "bijections", "--max-n", "7"], "PATTERNGF_MAX_N", "6");
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["--json", "verify", "--suite", "asymptotics"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}
