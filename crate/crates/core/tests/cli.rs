use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn config(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn rhall(cfg: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhall"))
        .arg("--config")
        .arg(cfg)
        .args(args)
        .output()
        .unwrap()
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("rhall-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn jordan_classes_are_partition_numbers() {
    let o = rhall(&config("jordan.toml"), &["--format", "json", "classify"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["command"], "classify");
    let text = stdout(&rhall(&config("jordan.toml"), &["classify"]));
    let counts: Vec<&str> = text.lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap()).collect();
    assert_eq!(counts, ["1", "1", "2", "3", "5"]);
}

#[test]
fn a2_cartan_matrix() {
    let o = rhall(&config("a2.toml"), &["--format", "json", "cartan"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["matrix"], serde_json::json!([[2, -1], [-1, 2]]));
}

#[test]
fn kronecker_roots_to_height_three() {
    let o = rhall(&config("kronecker.toml"), &["roots", "--height", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for r in ["(1,0) real", "(0,1) real", "(1,1) imaginary", "(2,1) real", "(1,2) real"] {
        assert!(text.contains(r), "{r} missing from\n{text}");
    }
}

#[test]
fn verify_report_layout() {
    let o = rhall(&config("a2.toml"), &["--format", "json", "verify", "--suite", "composition"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "composition");
    assert_eq!(v["overall"], "pass");
    for c in v["checks"].as_array().unwrap() {
        assert!(c["name"].is_string());
        assert!(["pass", "fail", "skipped"].contains(&c["status"].as_str().unwrap()));
    }
    assert!(stdout(&o).ends_with("}\n"));
}

#[test]
fn kronecker_serre_checks_are_skipped_at_small_bound() {
    let o = rhall(&config("kronecker.toml"), &["verify", "--suite", "composition"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SKIPPED"));
}

#[test]
fn digest_ignores_formatting() {
    let a = scratch("a.toml", "[quiver]\nvertices = 2\narrows = [[1, 2]]\n[field]\nq = 2\n[limits]\nbound = [2, 2]\n");
    let b = scratch("b.toml", "# same\n[field]\nq=2\n[limits]\nbound=[2,2]\n[quiver]\narrows=[[1,2]]\nvertices=2\n");
    let digest = |p: &Path| {
        let v: serde_json::Value = serde_json::from_slice(&rhall(p, &["--format", "json", "cartan"]).stdout).unwrap();
        v["config_digest"].as_str().unwrap().to_owned()
    };
    assert_eq!(digest(&a), digest(&b));
    assert_eq!(digest(&a), digest(&config("a2.toml")));
}

#[test]
fn config_errors_exit_with_two() {
    let bad = scratch("unknown.toml", "[quiver]\nvertices = 1\narrows = []\ncolour = 1\n[field]\nq = 2\n");
    let o = rhall(&bad, &["classify"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4"));

    let composite = scratch("q4.toml", "[quiver]\nvertices = 1\narrows = []\n[field]\nq = 4\n");
    assert_eq!(rhall(&composite, &["classify"]).status.code(), Some(2));

    let missing = rhall(Path::new("/nonexistent/rhall.toml"), &["classify"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn resource_limit_exits_with_three() {
    let p = scratch(
        "small.toml",
        "[quiver]\nvertices = 1\narrows = [[1, 1]]\n[field]\nq = 2\n[limits]\nbound = [5]\nmax_states = 10\n",
    );
    let o = rhall(&p, &["classify"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
}
