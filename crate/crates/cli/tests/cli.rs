//! End-to-end checks of the command line surface.

use std::process::Command;

fn origami(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_origami"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code(),
    )
}

#[test]
fn butterfly_golden_values() {
    let (out, _, code) = origami(&[
        "butterfly",
        "--stratum",
        "h2",
        "--prototype",
        "(1,24,2,2)",
        "--q",
        "2",
    ]);
    assert_eq!(code, Some(0));
    assert_eq!(out.trim(), "(1,12,2,-10)");

    let (out, _, _) = origami(&[
        "butterfly",
        "--stratum",
        "prym4",
        "--prototype",
        "(6,1,0,-11,+)",
        "--q",
        "2",
    ]);
    assert_eq!(out.trim(), "(10,2,1,3,-)");

    let (out, _, _) = origami(&[
        "butterfly",
        "--stratum",
        "prym6",
        "--prototype",
        "(6,1,0,-5)",
        "--q",
        "2",
    ]);
    assert_eq!(out.trim(), "(5,2,0,-3)");
}

#[test]
fn orbit_summary_matches_formula() {
    let (out, _, code) = origami(&["orbit", "--seed", "5;2,1,4,5,3;3,4,5,1,2"]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["vertices"], 18);
    assert_eq!(doc["hlk"], "(0,[3,1,1])");
}

#[test]
fn parse_failure_exits_4() {
    let (_, err, code) = origami(&["orbit", "--seed", "not an origami"]);
    assert_eq!(code, Some(4));
    assert!(err.contains("parse error"));
}

#[test]
fn inadmissible_q_is_an_error() {
    let (_, _, code) = origami(&[
        "butterfly",
        "--stratum",
        "h2",
        "--prototype",
        "(1,24,2,2)",
        "--q",
        "7",
    ]);
    assert_eq!(code, Some(1));
}

#[test]
fn sweep_csv_header_and_cap() {
    let (out, _, code) = origami(&["sweep", "--stratum", "h2", "--n-min", "5", "--n-max", "6"]);
    assert_eq!(code, Some(0));
    assert!(out.starts_with("n,stratum,orbit,label_hlk,vertices,edges,diameter,bound,ratio,ms"));
    assert_eq!(out.lines().count(), 4); // header + A + B + Even

    // resource cap gives exit code 3
    let (_, _, code) = origami(&["sweep", "--stratum", "h2", "--n-min", "5", "--n-max", "99"]);
    assert_eq!(code, Some(3));
}

#[test]
fn census_and_export_are_deterministic() {
    let (a, _, _) = origami(&["census", "--n", "5"]);
    let (b, _, _) = origami(&["census", "--n", "5"]);
    assert_eq!(a, b);
    assert_eq!(a.lines().count(), 8);

    let (dot, _, _) = origami(&["export", "--seed", "3;2,3,1;1,2,3", "--format", "dot"]);
    assert!(dot.starts_with("graph orbit {"));
    let (csv, _, _) = origami(&["export", "--seed", "3;2,3,1;1,2,3", "--format", "edge-csv"]);
    assert!(csv.starts_with("src,dst,label"));
}

#[test]
fn verify_golden_suite_passes() {
    let (out, _, code) = origami(&["verify", "golden"]);
    assert_eq!(code, Some(0), "{out}");
    assert!(out.contains("[PASS] golden-h2-butterfly"));
}

#[test]
fn path_component_mismatch_is_diagnosed() {
    let (_, err, code) = origami(&[
        "path",
        "--stratum",
        "h2",
        "--from",
        "(0,6,1,-1)",
        "--to",
        "(0,6,1,1)",
    ]);
    assert_eq!(code, Some(1));
    assert!(err.contains("different spin components"));
}

#[test]
fn config_overrides_caps() {
    let dir = std::env::temp_dir().join("origami-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("config.txt");
    std::fs::write(&path, "sweep_max_n = 5\n").unwrap();
    let (_, _, code) = origami(&[
        "--config",
        path.to_str().unwrap(),
        "sweep",
        "--stratum",
        "h2",
        "--n-min",
        "5",
        "--n-max",
        "6",
    ]);
    assert_eq!(code, Some(3));
}
