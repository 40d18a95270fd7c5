use std::process::{Command, Output};

fn qleech(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qleech")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn diagram_verify_passes() {
    let o = qleech(&["diagram", "verify"]);
    assert_eq!(o.status.code(), Some(0));
    let certs: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let w = certs.as_array().unwrap().iter().find(|c| c["claim"] == "diagram.w_norms").unwrap();
    assert_eq!(w["witness"]["w_P_norm"], "2");
    assert_eq!(w["schema"], 1);
    assert_eq!(w["statement"], "w_P norm = 2 and w_L norm = 2");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qleech(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(qleech(&["diagram", "verify", "--nope"]).status.code(), Some(2));
}

#[test]
fn recheck_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bounds.json");
    let p = path.to_str().unwrap();
    assert_eq!(qleech(&["height", "bounds", "--output", p]).status.code(), Some(0));
    let o = qleech(&["recheck", p]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let text = std::fs::read_to_string(&path).unwrap();
    let mut certs: serde_json::Value = serde_json::from_str(&text).unwrap();
    certs[0]["witness"]["rho_norm"] = "1".into();
    std::fs::write(&path, serde_json::to_string(&certs).unwrap()).unwrap();
    assert_eq!(qleech(&["recheck", p]).status.code(), Some(1));
}

#[test]
fn deterministic_apart_from_timing() {
    let strip = |o: Output| {
        let mut v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        for c in v.as_array_mut().unwrap() {
            c["wall_ms"] = 0.into();
        }
        v
    };
    assert_eq!(strip(qleech(&["diagram", "verify"])), strip(qleech(&["diagram", "verify"])));
}

#[test]
fn emits_81_generators() {
    let o = qleech(&["heisen", "emit-generators"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 81);
    assert!(text.lines().last().unwrap().starts_with("r3\t"));
}

#[test]
fn lattice_report() {
    let o = qleech(&["lattice", "e8", "--shell", "-2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["p_modular"], true);
    assert_eq!(v["shell"][1], 240);
    assert_eq!(v["real_signature"][1], 8);
}

#[test]
fn reflect_subcommands() {
    let root = "(2,0,0,0)/2 (-2,0,0,0)/2";
    let e8_root = "(2,0,0,0)/2 (0,0,0,0)/2";
    let o = qleech(&["reflect", "order", "--lattice", "e8", "--root", e8_root]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 4);
    let o = qleech(&["reflect", "braid-type", "--lattice", "e8", "--root", e8_root, "--other", "(0,0,0,0)/2 (2,0,0,0)/2"]);
    assert_eq!(stdout(&o).trim(), "\"braid\"");
    // i-reflections in H² are not integral
    assert_eq!(qleech(&["reflect", "order", "--lattice", "std:2", "--root", root]).status.code(), Some(1));
    let o = qleech(&["reflect", "apply", "--lattice", "std:2", "--root", root, "--unit", "(-2,0,0,0)/2", "--vector", root]);
    assert_eq!(stdout(&o).trim(), "(-2,0,0,0)/2 (2,0,0,0)/2");
    let o = qleech(&["reflect", "apply", "--lattice", "std:2", "--root", "(2,0,0,0)/2 (0,0,0,0)/2", "--unit", "(2,0,0,0)/2", "--vector", root]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn reduce_a_single_root() {
    // a·j in 3E8+H coordinates
    let o = qleech(&["height", "reduce", "--root", "(0,0,0,0)/2 (0,0,0,0)/2 (0,0,0,0)/2 (0,0,0,0)/2 (0,0,0,0)/2 (0,0,0,0)/2 (0,0,2,0)/2 (0,0,-2,0)/2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terminal_label"], "a");
    assert_eq!(v["steps"].as_array().unwrap().len(), 0);
}

#[test]
fn fixture_directory_override() {
    let dir = tempfile::tempdir().unwrap();
    let src = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures");
    for f in ["leech_basis.txt", "roots14.txt", "basis_change.txt"] {
        std::fs::copy(format!("{src}/{f}"), dir.path().join(f)).unwrap();
    }
    let run = || Command::new(env!("CARGO_BIN_EXE_qleech")).args(["iso", "verify-reference-matrix"]).env("QLEECH_FIXTURES", dir.path()).output().unwrap();
    assert_eq!(run().status.code(), Some(0));
    let bad = std::fs::read_to_string(dir.path().join("basis_change.txt")).unwrap().replacen("(2,", "(4,", 1);
    std::fs::write(dir.path().join("basis_change.txt"), bad).unwrap();
    assert_eq!(run().status.code(), Some(1));
    std::fs::remove_file(dir.path().join("roots14.txt")).unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_qleech")).args(["diagram", "verify"]).env("QLEECH_FIXTURES", dir.path()).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
}
