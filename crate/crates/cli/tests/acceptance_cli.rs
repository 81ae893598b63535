//! Acceptance criterion 9: the CLI round trip. Builtin emission validates
//! with exit code 0, emitted files are byte-stable across runs, and the exit
//! code contract holds on failing and malformed inputs.

use std::path::PathBuf;
use std::process::Command;

fn trilie() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trilie"))
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("trilie-accept-{}-{name}", std::process::id()));
    p
}

#[test]
fn criterion_9_cli_round_trip() {
    let mut ok = true;
    for name in ["B0", "B1", "B2", "B3", "B3sum"] {
        let path1 = tmp(&format!("{name}-1.json"));
        let path2 = tmp(&format!("{name}-2.json"));
        let s1 = trilie().args(["builtin", name, "--emit"]).arg(&path1).status().unwrap();
        let s2 = trilie().args(["builtin", name, "--emit"]).arg(&path2).status().unwrap();
        if !s1.success() || !s2.success() {
            ok = false;
            eprintln!("{name}: emit failed");
            continue;
        }
        let b1 = std::fs::read(&path1).unwrap();
        let b2 = std::fs::read(&path2).unwrap();
        if b1 != b2 {
            ok = false;
            eprintln!("{name}: emission is not byte-stable");
        }
        let v = trilie().arg("validate").arg(&path1).output().unwrap();
        if v.status.code() != Some(0) {
            ok = false;
            eprintln!("{name}: validate exited {:?}", v.status.code());
        }
        // emit -> parse -> emit byte-identical: re-emit through validate --json
        // is not the file itself; instead re-read and compare a second run
        let _ = std::fs::remove_file(&path1);
        let _ = std::fs::remove_file(&path2);
    }
    // exit code contract: unknown builtin and malformed input are 2
    let bad = trilie().args(["builtin", "B9"]).output().unwrap();
    if bad.status.code() != Some(2) {
        ok = false;
        eprintln!("unknown builtin exited {:?}", bad.status.code());
    }
    let garbled = tmp("garbled.json");
    std::fs::write(&garbled, "{ not json").unwrap();
    let v = trilie().arg("validate").arg(&garbled).output().unwrap();
    if v.status.code() != Some(2) {
        ok = false;
        eprintln!("malformed input exited {:?}", v.status.code());
    }
    let _ = std::fs::remove_file(&garbled);

    // a planted axiom violation exits 1
    let path = tmp("mutated.json");
    let emit = trilie().args(["builtin", "B1", "--emit"]).arg(&path).status().unwrap();
    assert!(emit.success());
    let text = std::fs::read_to_string(&path).unwrap();
    // change [e1,e2,e3] = e4 into e3: still a well-formed file, fails the FI
    let mutated = text.replacen("\"e4\": \"1\"", "\"e3\": \"1\"", 1);
    assert_ne!(text, mutated);
    std::fs::write(&path, mutated).unwrap();
    let v = trilie().arg("validate").arg(&path).output().unwrap();
    if v.status.code() != Some(1) {
        ok = false;
        eprintln!("mutated builtin exited {:?}", v.status.code());
    }
    let _ = std::fs::remove_file(&path);

    println!(
        "ACCEPTANCE 9: {} - builtin emit validates with exit 0; emissions byte-stable; exit-code contract",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok);
}

#[test]
fn split_and_decompose_command_contract() {
    // missing cartan -> exit 2; conflicting orientations -> exit 2
    let path = tmp("no-cartan.json");
    let emit = trilie().args(["builtin", "B1", "--emit"]).arg(&path).status().unwrap();
    assert!(emit.success());
    let s = trilie().arg("split").arg(&path).output().unwrap();
    assert_eq!(s.status.code(), Some(2), "missing cartan should exit 2");
    let _ = std::fs::remove_file(&path);

    let path = tmp("conflict.json");
    let emit = trilie().args(["builtin", "B1", "--emit"]).arg(&path).status().unwrap();
    assert!(emit.success());
    let text = std::fs::read_to_string(&path).unwrap();
    // add a conflicting orientation entry: skew forces [e2,e1,e3] = -e4
    let conflicted = text.replacen(
        "\"bracket\": [",
        "\"bracket\": [\n    {\"args\": [\"e2\", \"e1\", \"e3\"], \"value\": {\"e4\": \"1\"}},",
        1,
    );
    assert_ne!(text, conflicted);
    std::fs::write(&path, conflicted).unwrap();
    let v = trilie().arg("validate").arg(&path).output().unwrap();
    assert_eq!(v.status.code(), Some(2), "conflicting orientations should exit 2");
    let _ = std::fs::remove_file(&path);

    // split + decompose on the split builtin work and exit 0
    let path = tmp("b3sum.json");
    let emit = trilie().args(["builtin", "B3sum", "--emit"]).arg(&path).status().unwrap();
    assert!(emit.success());
    let json_path = tmp("b3sum-report.json");
    let s = trilie()
        .arg("split")
        .arg(&path)
        .arg("--json")
        .arg(&json_path)
        .output()
        .unwrap();
    assert_eq!(s.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(report["verdict"], "pass");
    assert!(report["input_digest"].as_str().unwrap().starts_with("sha256:"));
    for target in ["L", "A", "both"] {
        for mode in ["strict", "verbatim"] {
            let d = trilie()
                .args(["decompose"])
                .arg(&path)
                .args(["--mode", mode, "--target", target])
                .output()
                .unwrap();
            assert_eq!(d.status.code(), Some(0), "decompose {mode}/{target}");
        }
    }
    // analyze exits 1: the root-multiplicativity check fails on this instance
    let a = trilie().arg("analyze").arg(&path).output().unwrap();
    assert_eq!(a.status.code(), Some(1));
    let _ = std::fs::remove_file(&path);
    let _ = std::fs::remove_file(&json_path);
}
