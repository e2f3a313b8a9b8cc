//! `cilie <command> <jobfile>`: runs one job and prints a report.
//!
//! Exit codes: 0 success, 1 parse or validation error, 2 violated
//! mathematical precondition, 3 resource limit.

mod commands;
mod job;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use cilie::ErrorKind;

use job::{Command, JobFile, Overrides};
use report::Report;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "cilie", version, about = "Exact invariants of graded complete intersections")]
struct Cli {
    command: Command,
    jobfile: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Degree bound (homological degree, polynomial degree or DG degree).
    #[arg(long)]
    degree: Option<usize>,
    /// Finite-generation window `D0:D`.
    #[arg(long, value_parser = parse_window)]
    window: Option<(usize, usize)>,
    /// Monomial order: grevlex or lex.
    #[arg(long)]
    order: Option<String>,
    /// Tower or square-zero index.
    #[arg(long)]
    n: Option<u32>,
    /// Maximum number of monomials held by one Gröbner computation.
    #[arg(long)]
    max_terms: Option<usize>,
    /// Maximum rank of a free module in a resolution.
    #[arg(long)]
    max_width: Option<usize>,
}

fn parse_window(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(':').ok_or_else(|| format!("expected D0:D, got `{s}`"))?;
    let a = a.trim().parse().map_err(|_| format!("bad window start `{a}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad window end `{b}`"))?;
    Ok((a, b))
}

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Input => 1,
        ErrorKind::Precondition => 2,
        ErrorKind::Resource => 3,
    }
}

fn emit(report: &Report, format: Format) {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
}

fn validation_report(digest: String, findings: Vec<String>) -> Report {
    let ok = findings.is_empty();
    Report {
        command: "validate".into(),
        input_digest: digest,
        result: serde_json::json!({ "findings": findings }),
        checks: vec![("valid".into(), ok)],
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let bytes = match std::fs::read(&cli.jobfile) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", cli.jobfile.display());
            return ExitCode::from(1);
        }
    };
    let digest = report::digest(&bytes);
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(_) => {
            eprintln!("error: job file is not UTF-8");
            return ExitCode::from(1);
        }
    };
    let job = match JobFile::parse(&text) {
        Ok(j) => j,
        Err(e) if cli.command == Command::Validate => {
            emit(&validation_report(digest, vec![e.to_string()]), cli.format);
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let overrides = Overrides {
        degree: cli.degree,
        window: cli.window,
        order: cli.order.clone(),
        n: cli.n,
        max_terms: cli.max_terms,
        max_width: cli.max_width,
    };
    let findings = job.findings(Some(cli.command), &overrides);

    if cli.command == Command::Validate {
        emit(&validation_report(digest, findings), cli.format);
        return ExitCode::SUCCESS;
    }
    if !findings.is_empty() {
        for f in &findings {
            eprintln!("error: {f}");
        }
        return ExitCode::from(1);
    }

    let settings = job.settings(&overrides);
    match commands::run(cli.command, &job, &settings) {
        Ok(outcome) => {
            let report = Report {
                command: cli.command.name().into(),
                input_digest: digest,
                result: outcome.result,
                checks: outcome.checks,
            };
            emit(&report, cli.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(e.kind()))
        }
    }
}
