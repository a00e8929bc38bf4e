use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boolschur"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn boolean_expand_json_is_exact() {
    let o = run(&["boolean", "expand", "3", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), r#"{"n":3,"terms":[{"lambda":[2,1],"coeff":"1"}]}"#);
}

#[test]
fn lascoux_verify_reports_asm() {
    let o = run(&["lascoux", "verify", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sum r_mu = 7 = ASM(3)"));
}

#[test]
fn verify_all_small() {
    let o = run(&["verify", "all", "--max-n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains("PASS")).count(), 15);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["boolean", "expand", "2", "3"]).status.code(), Some(2));
    assert_eq!(run(&["boolean", "expand", "x", "1"]).status.code(), Some(2));
    assert_eq!(run(&["nonsense"]).status.code(), Some(2));
    let o = run(&["chern", "roots", "wedge(2, E:)"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 11"));
}

#[test]
fn undefined_hrs_terms_error_on_request() {
    let args = ["frob", "hrs", "3", "2", "1", "--superspace"];
    assert_eq!(run(&args).status.code(), Some(0));
    let mut strict = args.to_vec();
    strict.extend(["--undefined-terms", "error"]);
    assert_eq!(run(&strict).status.code(), Some(2));
}

#[test]
fn latex_matches_display_form() {
    let o = run(&["lascoux", "wedge", "3", "--format", "latex"]);
    assert_eq!(stdout(&o).trim_end(), "1 + 2s_{1} + s_{2} + 2s_{11} + s_{21}");
}

#[test]
fn json_independent_of_threads() {
    for args in [
        vec!["boolean", "total", "4"],
        vec!["frob", "positroid", "4"],
        vec!["chern", "total", "sym(2, E:3)"],
        vec!["boolean", "bivariate", "3", "2", "2", "1"],
    ] {
        let outs: Vec<String> = ["1", "4"]
            .iter()
            .map(|t| {
                let mut a = args.clone();
                a.extend(["--format", "json", "--threads", t]);
                stdout(&run(&a))
            })
            .collect();
        assert_eq!(outs[0], outs[1], "{args:?}");
        assert_eq!(outs[0], stdout(&run(&[&args[..], &["--format", "json"]].concat())));
    }
}

#[test]
fn pragacz_two_alphabets() {
    let o = run(&["chern", "pragacz", "[2]", "tensor(E:2, F:2)", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    assert_eq!(v["positive"], true);
    assert_eq!(v["expansion"]["m"], 2);
}

#[test]
fn chern_roots_of_wedge() {
    let o = run(&["chern", "roots", "wedge(2, E:4)", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    assert_eq!(v["rank"], 6);
}

#[test]
fn rff_single_shape() {
    let o = run(&["lascoux", "rff", "3", "--shape", "[2,1]"]);
    assert_eq!(stdout(&o).trim_end(), "(2,1) [1]: 2 1 / 1");
    assert_eq!(run(&["lascoux", "rff", "3", "--shape", "[3]"]).status.code(), Some(2));
}
