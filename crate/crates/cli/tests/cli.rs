use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_antidirected"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn gen(args: &[&str]) -> String {
    let o = run(args, None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("json output")
}

#[test]
fn two_cliques_have_no_adf() {
    let d = gen(&["gen", "dn", "6"]);
    let o = run(&["check", "adf", "-"], Some(&d));
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["decision"], "no");
    assert_eq!(v["stats"]["total"], "20");
}

#[test]
fn complete_four_has_adhc() {
    let d = gen(&["gen", "complete", "4"]);
    let o = run(&["check", "adhc", "-"], Some(&d));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["decision"], "yes");
    assert_eq!(v["cycles"][0].as_array().unwrap().len(), 4);
    assert_eq!(v["arc_directions"].as_array().unwrap().len(), 4);
}

#[test]
fn odd_order_is_refuted_by_parity() {
    let d = gen(&["gen", "complete", "5"]);
    let o = run(&["check", "adf", "-"], Some(&d));
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["method"], "parity");
}

#[test]
fn threshold_brackets() {
    let o = run(&["count", "threshold", "24/46", "--variant", "two_factor"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1420 < bound < 1421");
    let o = run(&["count", "threshold", "9/16", "--variant", "hamilton"], None);
    assert_eq!(stdout(&o).trim(), "177 < bound < 178");
}

#[test]
fn threshold_outside_range_is_usage_error() {
    assert_eq!(run(&["count", "threshold", "3/4"], None).status.code(), Some(64));
    assert_eq!(run(&["count", "threshold", "x/y"], None).status.code(), Some(64));
}

#[test]
fn count_verify_reports_exact_values() {
    let o = run(&["count", "verify", "48", "22"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["N"], "32247603683100");
    assert_eq!(v["terms"]["0"], "50");
}

#[test]
fn scan_csv_shape() {
    let o = run(&["count", "scan", "--nmax", "40"], None);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,delta,N,S,holds"));
    let rows: Vec<&str> = lines.collect();
    // even n from 12 to 38
    assert_eq!(rows.len(), 14);
    assert!(rows[0].starts_with("12,7,"));
}

#[test]
fn reduction_cross_validates() {
    let petersen = gen(&["gen", "cubic", "petersen"]);
    let o = run(&["reduce", "3ec", "-", "--cross-validate"], Some(&petersen));
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["colorable"], false);
    assert_eq!(v["direct_colorable"], false);

    let k33 = gen(&["gen", "cubic", "k33"]);
    let o = run(&["reduce", "3ec", "-", "--cross-validate"], Some(&k33));
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["colorable"], true);
    assert_eq!(v["coloring"]["colors"].as_array().unwrap().len(), 9);
}

#[test]
fn directed_two_factor_exit_codes() {
    let d = gen(&["gen", "complete", "3"]);
    assert_eq!(run(&["check", "d2f", "-"], Some(&d)).status.code(), Some(0));
    let star = "3\n0 1\n0 2\n";
    assert_eq!(run(&["check", "d2f", "-"], Some(star)).status.code(), Some(1));
}

#[test]
fn malformed_input_exits_65() {
    let o = run(&["check", "adf", "-"], Some("not a graph"));
    assert_eq!(o.status.code(), Some(65));
    let o = run(&["check", "adf", "/definitely/not/here"], None);
    assert_eq!(o.status.code(), Some(65));
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(64));
    assert_eq!(run(&["check", "adf"], None).status.code(), Some(64));
    assert_eq!(run(&["--help"], None).status.code(), Some(0));
}

#[test]
fn exhaustive_limit_is_usage_error() {
    let d = gen(&["gen", "complete", "12"]);
    let o = run(&["check", "adf", "-", "--strategy", "exhaustive", "--max-exhaustive", "10"], Some(&d));
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let d = gen(&["gen", "random", "12", "6", "--seed", "9"]);
    for args in [
        vec!["census", "-"],
        vec!["check", "adf", "-", "--strategy", "sampled", "--samples", "50"],
    ] {
        let one = run(&[&["--jobs", "1"][..], &args].concat(), Some(&d));
        let four = run(&[&["--jobs", "4"][..], &args].concat(), Some(&d));
        assert_eq!(stdout(&one), stdout(&four));
    }
    let a = run(&["--jobs", "1", "conjecture", "scan", "--n", "6..8", "--trials", "6"], None);
    let b = run(&["--jobs", "3", "conjecture", "scan", "--n", "6..8", "--trials", "6"], None);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn generators_are_seeded() {
    let a = gen(&["gen", "random", "10", "5", "--seed", "1"]);
    let b = gen(&["gen", "random", "10", "5", "--seed", "1"]);
    let c = gen(&["gen", "random", "10", "5", "--seed", "2"]);
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn bipartite_subcommands() {
    // C4 with parts {0,1} and {2,3}
    let g = "4\nX: 0 1\n0 2\n0 3\n1 2\n1 3\n";
    assert_eq!(run(&["bipartite", "two-factor", "-"], Some(g)).status.code(), Some(0));
    assert_eq!(run(&["bipartite", "deficient", "-"], Some(g)).status.code(), Some(1));
    assert_eq!(run(&["bipartite", "hamilton", "-"], Some(g)).status.code(), Some(0));
    let path = "4\nX: 0 1\n0 2\n1 2\n1 3\n";
    assert_eq!(run(&["bipartite", "two-factor", "-"], Some(path)).status.code(), Some(1));
    let o = run(&["bipartite", "deficient", "-"], Some(path));
    assert_eq!(o.status.code(), Some(0));
}
