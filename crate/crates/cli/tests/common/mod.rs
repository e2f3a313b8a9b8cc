#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub fn jobs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/jobs")
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Job files in name order.
pub fn jobs() -> Vec<PathBuf> {
    let mut out: Vec<PathBuf> = std::fs::read_dir(jobs_dir())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "toml"))
        .collect();
    out.sort();
    out
}

/// The command a golden job runs: `validate` for `*_validate.toml`,
/// otherwise the one the file declares.
pub fn command_of(job: &Path) -> String {
    let name = job.file_stem().unwrap().to_str().unwrap();
    if name.ends_with("_validate") {
        return "validate".into();
    }
    let text = std::fs::read_to_string(job).unwrap();
    text.lines()
        .find_map(|l| l.strip_prefix("command = "))
        .map(|c| c.trim_matches('"').to_string())
        .expect("golden jobs declare a command")
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn cilie(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cilie")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn run_job(job: &Path, extra: &[&str]) -> Run {
    let command = command_of(job);
    let mut args = vec![command.as_str(), job.to_str().unwrap()];
    args.extend_from_slice(extra);
    cilie(&args)
}

/// What a golden file records: stdout, then the exit code and stderr.
pub fn transcript(r: &Run) -> String {
    format!("{}--- exit {}\n{}", r.stdout, r.code, r.stderr)
}
