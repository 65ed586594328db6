use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coalgebra"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into()
}

fn temp_document(name: &str, text: &str) -> String {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into()
}

#[test]
fn bundled_files_match_builtins() {
    for name in [
        "delta0",
        "delta1",
        "delta2",
        "delta3",
        "delta4",
        "boundary3",
        "rp2",
        "rp3",
        "klein",
        "torus",
    ] {
        let from_file = run(&["homology", &fixture(name), "--format", "json"]);
        let builtin = run(&["homology", name, "--format", "json"]);
        assert_eq!(from_file.status.code(), Some(0), "{name}");
        assert_eq!(stdout(&from_file), stdout(&builtin), "{name}");
    }
}

#[test]
fn homology_reports() {
    let out = stdout(&run(&["homology", &fixture("rp2")]));
    assert!(out.contains("f-vector, (6, 15, 10)"), "{out}");
    assert!(out.contains("H₁,") && out.contains("Z/2"), "{out}");
    let torus = stdout(&run(&["homology", "torus"]));
    assert!(
        torus.lines().any(|l| l.starts_with("H₁,") && l.ends_with("Z^2")),
        "{torus}"
    );
    let point = temp_document("point.json", r#"{"vertices":["a"],"facets":[["a"]]}"#);
    let out = stdout(&run(&["homology", &point]));
    assert!(
        out.contains("f-vector, (1)") && out.starts_with("homology point"),
        "{out}"
    );
}

#[test]
fn steenrod_on_rp2() {
    let o = run(&["steenrod", "rp2.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Sq¹: H¹ → H², rank 1"), "{}", stdout(&o));
    let rp3 = stdout(&run(&["steenrod", "rp3"]));
    assert!(rp3.contains("Sq¹: H² → H³, rank 0"), "{rp3}");
}

#[test]
fn diagonal_suite_passes() {
    let o = run(&["verify-diagonal", "--max-dim", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn injectivity_certificate() {
    let o = run(&["injectivity-cert", "--rank", "4", "--t", "5", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rank 5/5 PASS"), "{}", stdout(&o));
    let small = stdout(&run(&["injectivity-cert", "--rank", "2", "--t", "3"]));
    assert!(
        small
            .lines()
            .any(|l| l.starts_with("determinant") && l.ends_with("PASS")),
        "{small}"
    );
}

#[test]
fn json_reports_are_deterministic() {
    for args in [
        &[
            "injectivity-cert",
            "--rank",
            "3",
            "--t",
            "4",
            "--seed",
            "11",
            "--format",
            "json",
        ][..],
        &["resolution-check", "--seed", "5", "--format", "json"],
        &["doldkan-roundtrip", "s1", "--max-dim", "2", "--format", "json"],
    ] {
        let a = run(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, run(args).stdout);
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(v["passed"], serde_json::Value::Bool(true));
    }
}

#[test]
fn dold_kan_and_resolution_pass() {
    assert_eq!(run(&["doldkan-roundtrip"]).status.code(), Some(0));
    assert_eq!(
        run(&["doldkan-roundtrip", "rp2", "--max-dim", "3"]).status.code(),
        Some(0)
    );
    assert_eq!(run(&["resolution-check"]).status.code(), Some(0));
    assert_eq!(run(&["resolution-check", "rp2"]).status.code(), Some(0));
}

#[test]
fn grouplike_reports_the_sign_mismatch() {
    let o = run(&["grouplike"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("f(e₀ ⊗ ι₀"), "{out}");
    assert!(
        out.lines().any(|l| l.starts_with("f(e₁ ⊗ ι₁)") && l.ends_with("FAIL")),
        "{out}"
    );
}

#[test]
fn usage_and_input_errors_exit_with_two() {
    let reversed = temp_document("reversed.json", r#"{"vertices":["a","b"],"facets":[["b","a"]]}"#);
    let unknown = temp_document("unknown.json", r#"{"vertices":["a"],"facets":[["a"]],"basepoint":"q"}"#);
    let malformed = temp_document("malformed.json", r#"{"vertices":["a"],"facets":"#);
    let unpointed = temp_document("unpointed.json", r#"{"vertices":["a","b"],"facets":[["a","b"]]}"#);
    for args in [
        &["homology", reversed.as_str()][..],
        &["homology", unknown.as_str()],
        &["homology", malformed.as_str()],
        &["homology", "no-such-file.json"],
        &["resolution-check", unpointed.as_str()],
        &["injectivity-cert", "--rank", "2"],
        &["injectivity-cert", "--rank", "1", "--t", "40"],
        &["frobnicate"],
        &["homology", "rp2", "--format", "xml"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
