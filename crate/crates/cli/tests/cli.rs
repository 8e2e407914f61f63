use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

const PLANE3: &str = "ring R = poly(char=0, vars=[x,y,z], order=grevlex);\n";

/// Runs the binary with `doc` on stdin; returns exit code, stdout, stderr.
fn summand(args: &[&str], doc: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_summand"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(doc.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).expect("valid JSON")
}

#[test]
fn zero_ideal_has_empty_basis() {
    let doc = format!("{PLANE3}ideal Z over R = [];\n");
    let (code, out, _) = summand(&["gb", "-", "--ideal", "Z", "--format", "json", "--omit-timing"], &doc);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["schema"], "summand-report/1");
    assert_eq!(v["result"]["basis"], Value::Array(vec![]));
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn residue_field_resolution() {
    let doc = format!("{PLANE3}module k over R = cyclic [\"x\", \"y\", \"z\"];\n");
    let (code, out, _) = summand(&["resolve", "-", "--module", "k", "--format", "json"], &doc);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["verdict"], "complete");
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 3, 3, 1]));
    let (code, text, _) = summand(&["betti", "-", "--module", "k", "--cap", "1"], &doc);
    assert_eq!(code, 0);
    assert!(text.contains("verdict: truncated"), "{text}");
}

#[test]
fn syntax_errors_carry_positions_and_exit_one() {
    let doc = format!("{PLANE3}ideal I over R = [\"x\" \"y\"];\n");
    let (code, out, err) = summand(&["gb", "-", "--ideal", "I"], &doc);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.contains("line 2, column"), "{err}");
    let (code, _, err) = summand(&["gb", "-", "--ideal", "J"], &format!("{PLANE3}ideal I over R = [\"x\"];\n"));
    assert_eq!(code, 1);
    assert!(err.contains("J"), "{err}");
}

#[test]
fn degree_cap_exits_two() {
    let doc = "ring R = poly(char=0, vars=[x,y,z,w], order=grevlex);\n\
               ideal C over R = [\"x*z - y^2\", \"x*w - y*z\", \"y*w - z^2\"];\n";
    let (code, out, _) = summand(&["gb", "-", "--ideal", "C", "--cap-degree", "2", "--format", "json"], doc);
    assert_eq!(code, 2);
    assert_eq!(json(&out)["error"]["kind"], "resource-cap");
    let (code, _, _) = summand(&["gb", "-", "--ideal", "C"], doc);
    assert_eq!(code, 0);
}

#[test]
fn missed_expectation_exits_three_and_wins_the_batch() {
    let doc = format!(
        "{PLANE3}ideal I over R = [\"x\", \"y\"];\n\
         check sympow(ideal=I, n=2) expect \"equals-ordinary-power\";\n\
         check sympow(ideal=I, n=2) expect \"strictly-contains-ordinary-power\";\n"
    );
    let (code, out, err) = summand(&["run", "-", "--format", "json", "--omit-timing"], &doc);
    assert_eq!(code, 3);
    let reports = json(&out);
    assert_eq!(reports.as_array().unwrap().len(), 2);
    assert!(reports[0].get("error").is_none());
    assert_eq!(reports[1]["error"]["kind"], "cross-check");
    assert!(err.contains("cross-check"), "{err}");
}

#[test]
fn printing_round_trips_through_both_syntaxes() {
    let doc = format!(
        "{PLANE3}# comment\nring S = quotient(R, [\"x*y\"], domain=false);\n\
         module M over R = coker [[\"x\", \"y\"], [\"z\", \"0\"]];\n\
         sequence P over R = [\"x\", \"y\"];\n\
         complex K over R = koszul [\"x\", \"y\"];\n\
         check be-check(complex=K) expect \"acyclic\";\n"
    );
    let (code, dsl, _) = summand(&["print", "-"], &doc);
    assert_eq!(code, 0);
    let (_, again, _) = summand(&["print", "-"], &dsl);
    assert_eq!(dsl, again);
    let (code, as_json, _) = summand(&["print", "-", "--format", "json"], &doc);
    assert_eq!(code, 0);
    let (_, from_json, _) = summand(&["print", "-"], &as_json);
    assert_eq!(dsl, from_json);
    let (code, _, _) = summand(&["print", "-", "--input-format", "dsl"], &as_json);
    assert_eq!(code, 1);
}

#[test]
fn worker_count_does_not_change_batch_output() {
    let doc = format!(
        "{PLANE3}module k over R = cyclic [\"x\", \"y\", \"z\"];\n\
         ideal I over R = [\"x*z - y^2\"];\n\
         check betti(module=k);\ncheck syzygy-bounds(module=k);\ncheck gb(ideal=I);\ncheck cm-check(module=k);\n"
    );
    let serial = summand(&["run", "-", "--format", "json", "--omit-timing", "--jobs", "1"], &doc);
    let parallel = summand(&["run", "-", "--format", "json", "--omit-timing", "--jobs", "3"], &doc);
    assert_eq!(serial.0, 0);
    assert_eq!(serial, parallel);
}

#[test]
fn random_modules_need_a_seed_and_repeat_with_one() {
    let (code, _, _) = summand(&["random-modules", "--count", "2"], "");
    assert_eq!(code, 1);
    let a = summand(&["random-modules", "--count", "2", "--seed", "7"], "");
    let b = summand(&["random-modules", "--count", "2", "--seed", "7"], "");
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    assert!(a.1.contains("check syzygy-bounds"), "{}", a.1);
}
