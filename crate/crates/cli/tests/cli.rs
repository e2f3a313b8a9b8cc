mod common;

use common::{cilie, jobs_dir, run_job};

fn job(name: &str) -> std::path::PathBuf {
    jobs_dir().join(format!("{name}.toml"))
}

fn temp_job(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("cilie-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn tangent_report_for_a1() {
    let r = run_job(&job("a1_tangent"), &[]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.contains("  bracket:\n    [0]\n      2  0\n      0  2\n"), "{}", r.stdout);
    assert!(r.stdout.contains("direct = snake: true"));

    let r = run_job(&job("a1_tangent"), &["--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["result"]["bracket"], serde_json::json!([[["2", "0"], ["0", "2"]]]));
    assert_eq!(v["checks"]["direct = snake"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(run_job(&job("off_locus"), &[]).code, 2);
    assert_eq!(run_job(&job("bad_poly"), &[]).code, 1);
    assert_eq!(run_job(&job("inhomogeneous_resolve"), &[]).code, 2);
    assert_eq!(run_job(&job("two_squares_ext"), &["--max-terms", "3"]).code, 3);
    assert_eq!(run_job(&job("a1_fgcheck"), &["--max-width", "1"]).code, 3);
    assert_eq!(run_job(&job("a1_fgcheck"), &["--window", "6:5"]).code, 1);
    assert_eq!(cilie(&["tangent", "/nonexistent/job.toml"]).code, 1);
    let not_ci = temp_job("not_ci.toml", "variables = [\"x\", \"y\"]\nmap = [\"x*y\", \"x^2\"]\n");
    assert_eq!(cilie(&["resolve", not_ci.to_str().unwrap()]).code, 2);
    let linear = temp_job("linear.toml", "variables = [\"x\", \"y\"]\nmap = [\"x\"]\n");
    let r = cilie(&["ext", linear.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("eliminate the variable first"), "{}", r.stderr);
}

#[test]
fn validate_findings() {
    let r = cilie(&["validate", job("a1_tangent").to_str().unwrap(), "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["result"]["findings"], serde_json::json!([]));

    let r = cilie(&["validate", job("undeclared_validate").to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    let findings = v["result"]["findings"].as_array().unwrap();
    assert_eq!(findings.len(), 1);
    assert!(findings[0].as_str().unwrap().contains("`w`"));

    let r = cilie(&["validate", job("window_validate").to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["result"]["findings"].as_array().unwrap().len(), 1);

    let broken = temp_job("broken.toml", "variables = [\"x\"\n");
    let r = cilie(&["validate", broken.to_str().unwrap(), "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["result"]["findings"].as_array().unwrap().len(), 1);
}

#[test]
fn digest_tracks_input_bytes() {
    let text = std::fs::read_to_string(job("a1_tangent")).unwrap();
    let same = temp_job("same.toml", &text);
    let edited = temp_job("edited.toml", &format!("# edited\n{text}"));
    let digest = |p: &std::path::Path| {
        let r = cilie(&["tangent", p.to_str().unwrap(), "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
        v["input_digest"].as_str().unwrap().to_string()
    };
    let original = digest(&job("a1_tangent"));
    assert!(original.starts_with("sha256:") && original.len() == 7 + 64);
    assert_eq!(digest(&same), original);
    assert_ne!(digest(&edited), original);
}

#[test]
fn command_line_overrides_job_parameters() {
    let r = run_job(&job("dual_numbers_resolve"), &["--degree", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["result"]["betti"], serde_json::json!([1, 1, 1]));
    let r = run_job(&job("two_squares_squarezero"), &["--n", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["result"]["stages"], serde_json::json!([true, true]));
    let r = run_job(&job("dual_numbers_resolve"), &["--order", "lex", "--degree", "3", "--format", "json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = run_job(&job("dual_numbers_resolve"), &["--order", "revlex"]);
    assert_eq!(r.code, 1);
}

#[test]
fn mismatched_command_is_rejected() {
    let r = cilie(&["resolve", job("two_squares_ext").to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("declares command `ext`"));
}
