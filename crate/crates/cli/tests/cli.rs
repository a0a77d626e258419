use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_preadm"));
    c.env_remove("PREADM_ORDER_CAP");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}\nstderr: {}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

/// The single stderr line of a failed run, parsed.
fn error_line(out: &Output) -> Value {
    let text = String::from_utf8_lossy(&out.stderr);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1, "stderr: {text}");
    serde_json::from_str(lines[0]).expect("error line is JSON")
}

fn write_group(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn psl32_file() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/psl32.group")
}

#[test]
fn sylow_writes_a_group_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("s8.group");
    let out = run(&["sylow", "--l", "2", "--n", "3", "--out", out_path.to_str().unwrap()]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["result"]["order"], "128");
    assert_eq!(r["result"]["generators"].as_array().unwrap().len(), 3);
    let text = std::fs::read_to_string(&out_path).unwrap();
    let gens: Vec<&str> = text.lines().filter(|l| l.starts_with('(')).collect();
    assert_eq!(gens, ["(1,2)", "(1,3)(2,4)", "(1,5)(2,6)(3,7)(4,8)"]);

    let out = run(&["sylow", "--l", "3", "--n", "2"]);
    assert_eq!(report(&out)["result"]["order"], "81");
    assert_eq!(report(&out)["result"]["max_element_order"], 9);
}

#[test]
fn sylow_rejects_composite_l() {
    let out = run(&["sylow", "--l", "4", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let e = error_line(&out);
    assert_eq!(e["error"]["kind"], "precondition");
    assert!(e["error"]["message"].as_str().unwrap().contains("not prime"));
    assert!(out.stdout.is_empty());
}

#[test]
fn sylow_beyond_the_cap_still_reports_generators() {
    let out = run(&["sylow", "--l", "2", "--n", "3", "--cap", "100"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["result"]["materialized"], false);
    assert_eq!(r["result"]["order"], "128");
}

#[test]
fn verify_equivalence_on_s8_and_s9() {
    let dir = tempfile::tempdir().unwrap();
    let s8 = dir.path().join("s8.group");
    assert!(run(&["sylow", "--l", "2", "--n", "3", "--out", s8.to_str().unwrap()]).status.success());
    let out = run(&["verify-equivalence", "--group", s8.to_str().unwrap(), "--subgroup", "(1,2)"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["result"]["pass"], true);
    assert_eq!(r["result"]["failures"].as_array().unwrap().len(), 0);

    let s9 = dir.path().join("s9.group");
    assert!(run(&["sylow", "--l", "3", "--n", "2", "--out", s9.to_str().unwrap()]).status.success());
    let out = run(&["verify-equivalence", "--group", s9.to_str().unwrap(), "--subgroup", "(1,2,3)"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["result"]["pass"], false);
    let failures = r["result"]["failures"].as_array().unwrap();
    let witness = failures
        .iter()
        .find(|f| {
            let mut g: Vec<&str> = f["generators"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
            g.sort();
            g == ["(1,2,3)", "(4,5,6)"]
        })
        .expect("witness listed");
    assert_eq!(witness["split_count"], 1);
}

#[test]
fn verify_equivalence_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let s4 = write_group(dir.path(), "s4.group", "degree 4\n(1,2)\n(1,3)(2,4)\n");
    let out = run(&["verify-equivalence", "--group", s4.to_str().unwrap(), "--subgroup", "(1,3)"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_line(&out)["error"]["kind"], "not-in-group");

    let out = run(&["verify-equivalence", "--group", s4.to_str().unwrap(), "--subgroup", "(1,2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_line(&out)["error"]["kind"], "malformed");

    let bad = write_group(dir.path(), "bad.group", "degree 4\n(1,5)\n");
    let out = run(&["verify-equivalence", "--group", bad.to_str().unwrap(), "--subgroup", "()"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(error_line(&out)["error"]["message"].as_str().unwrap().contains("position 12"));

    let out = run(&["verify-equivalence", "--group", "/nonexistent/file", "--subgroup", "()"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_line(&out)["error"]["kind"], "io");

    let out = run(&["verify-equivalence", "--group", s4.to_str().unwrap(), "--subgroup", "(1,2)", "--scope", "some"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["--bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_line(&out)["error"]["kind"], "usage");
}

#[test]
fn s4_fails_with_the_whole_group() {
    let dir = tempfile::tempdir().unwrap();
    let s4 = write_group(dir.path(), "s4.group", "degree 4\n(1,2)\n(1,3)(2,4)\n");
    let out = run(&["verify-equivalence", "--group", s4.to_str().unwrap(), "--subgroup", "(1,2)", "--scope", "all-subgroups"]);
    assert_eq!(out.status.code(), Some(1));
    let r = report(&out);
    let failures = r["result"]["failures"].as_array().unwrap();
    assert!(failures.iter().any(|f| f["order"] == 8 && f["split_count"] == 0));
}

#[test]
fn resource_cap_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let s8 = dir.path().join("s8.group");
    assert!(run(&["sylow", "--l", "2", "--n", "3", "--out", s8.to_str().unwrap()]).status.success());
    let out = run(&["--cap", "100", "verify-equivalence", "--group", s8.to_str().unwrap(), "--subgroup", "(1,2)"]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(error_line(&out)["error"]["kind"], "cap-exceeded");

    let out = bin()
        .env("PREADM_ORDER_CAP", "100")
        .args(["verify-equivalence", "--group", s8.to_str().unwrap(), "--subgroup", "(1,2)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn gassmann_examples() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write_group(dir.path(), "s3.group", "degree 3\n(1,2)\n(1,2,3)\n");
    let s3 = s3.to_str().unwrap();

    let r = report(&run(&["gassmann", "--group", s3, "--h", "(1,2)", "--h2", "(1,3)"]));
    assert_eq!(r["result"]["equivalent"], true);
    assert_eq!(r["result"]["conjugate"], true);
    assert_eq!(r["result"]["conjugating_element"], "(2,3)");

    let r = report(&run(&["gassmann", "--group", s3, "--h", "(1,2)", "--h2", "(1,2,3)"]));
    assert_eq!(r["result"]["equivalent"], false);
    assert_eq!(r["result"]["cyclic_check"], false);

    let psl = psl32_file();
    let out = run(&[
        "gassmann",
        "--group",
        psl.to_str().unwrap(),
        "--h",
        "(1,6,3,2)(4,5); (2,4)(5,6)",
        "--h2",
        "(2,4)(3,5,7,6); (1,4)(3,6,5,7)",
    ]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["inputs"]["group_order"], 168);
    assert_eq!(r["result"]["equivalent"], true);
    assert_eq!(r["result"]["conjugate"], false);
    for row in r["result"]["class_table"].as_array().unwrap() {
        assert_eq!(row["in_H"], row["in_H2"]);
    }
}

#[test]
fn padic_verify_reports() {
    let out = run(&["padic", "verify", "--m", "129", "--precision", "40"]);
    assert!(out.status.success());
    let r = report(&out);
    assert_eq!(r["result"]["factorization"]["first"], true);
    assert_eq!(r["result"]["factorization"]["second"], true);
    assert_eq!(r["result"]["witness"]["k_count"], 2);
    assert_eq!(r["result"]["witness"]["l_count"], 1);
    assert_eq!(r["result"]["witness"]["verdict"], "not equivalent by preadmissibility");

    let out = run(&["padic", "verify", "--m", "641", "--precision", "40", "--target", "2"]);
    let r = report(&out);
    assert_eq!(r["result"]["witness"]["separated"], false);

    let out = run(&["padic", "verify", "--m", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_line(&out)["error"]["kind"], "precondition");

    let out = run(&["padic", "verify", "--m", "-127"]);
    assert!(out.status.success());
}

#[test]
fn padic_descriptor_files() {
    let dir = tempfile::tempdir().unwrap();
    let k = dir.path().join("k.json");
    std::fs::write(&k, r#"[{"label":"a","degree":16,"roots_of_unity":32},{"label":"b","degree":8,"roots_of_unity":16}]"#).unwrap();
    let l = dir.path().join("l.json");
    std::fs::write(&l, r#"[{"label":"c","degree":16,"roots_of_unity":2},{"label":"d","degree":8,"roots_of_unity":2}]"#).unwrap();
    let out = run(&["padic", "verify", "--m", "129", "--k-data", k.to_str().unwrap(), "--l-data", l.to_str().unwrap()]);
    let r = report(&out);
    assert_eq!(r["result"]["witness"]["k_realizing"], serde_json::json!(["a", "b"]));
    assert_eq!(r["result"]["witness"]["l_realizing"], serde_json::json!(["c"]));

    std::fs::write(&l, r#"[{"label":"c","degree":16,"roots_of_unity":3}]"#).unwrap();
    let out = run(&["padic", "verify", "--m", "129", "--l-data", l.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    std::fs::write(&l, "not json").unwrap();
    let out = run(&["padic", "verify", "--m", "129", "--l-data", l.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_line(&out)["error"]["kind"], "malformed");
}

#[test]
fn paper_suite_filter_and_fault() {
    let out = run(&["paper-suite", "--filter", "s8"]);
    assert!(out.status.success());
    let r = report(&out);
    let ids: Vec<&str> = r["result"]["claims"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert!(!ids.is_empty());
    assert!(ids.iter().all(|id| id.starts_with("s8")), "{ids:?}");

    let out = run(&["paper-suite", "--inject-fault"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(report(&out)["result"]["pass"], false);

    let out = run(&["paper-suite", "--filter", "nothing-matches-this"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["paper-suite", "--no-timing"][..],
        &["padic", "verify", "--m", "129", "--no-timing"],
        &["sylow", "--l", "3", "--n", "2", "--no-timing", "--jobs", "1"],
    ] {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn text_format() {
    let out = run(&["paper-suite", "--format", "text", "--filter", "threshold"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("PASS threshold-table"));
    let out = run(&["sylow", "--l", "2", "--n", "2", "--format", "text", "--no-timing"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("result.order = \"8\""), "{text}");
}
