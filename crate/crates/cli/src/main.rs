mod cli;
mod construct;
mod error;
mod files;
mod output;
mod solve;
mod summary;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use cli::{Cli, Command};
use error::{CliError, Result};

/// Worker threads for the verifiers; unset means one per core.
const THREADS_VAR: &str = "COLORLIE_THREADS";

fn threads() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_VAR) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("{THREADS_VAR} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

fn status(passed: bool) -> ExitCode {
    ExitCode::from(if passed { 0 } else { 1 })
}

/// Prints a one-line summary for a file written with `-o`.
fn written(json: bool, what: &str, path: &std::path::Path) {
    if json {
        println!("{}", serde_json::json!({ "passed": true, "output": path.display().to_string(), "kind": what }));
    } else {
        println!("{what}: re-verified, written to {}", path.display());
    }
}

fn dispatch(cli: &Cli) -> Result<ExitCode> {
    threads()?;
    match &cli.command {
        Command::Verify { file, checks, form, algebra, target, map } => {
            let opts = verify::Options {
                form: form.as_deref(),
                algebra: algebra.as_deref(),
                target: target.as_deref(),
                map: map.as_deref(),
            };
            let (reports, flags) = verify::run(file, checks, &opts)?;
            let passed = output::print(&reports, cli.json);
            if let (Some(f), false) = (flags, cli.json) {
                println!(
                    "twist: multiplicative {}, regular {}, involutive {}",
                    f.multiplicative, f.regular, f.involutive
                );
            }
            Ok(status(passed))
        }
        Command::Construct { name, inputs, output, form, assoc_form, algebra } => {
            let req = construct::Request {
                name: *name,
                inputs,
                form: form.as_deref(),
                assoc_form: assoc_form.as_deref(),
                algebra: algebra.as_deref(),
            };
            let text = construct::run(&req)?;
            files::emit(output.as_deref(), &text)?;
            if let Some(p) = output {
                written(cli.json, name.name(), p);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve { kind, file, degree, antisymmetric, form, samples, output } => {
            let req = solve::Request {
                kind: *kind,
                file,
                degree: degree.as_deref(),
                antisymmetric: antisymmetric.as_deref(),
                form: form.as_deref(),
                samples: *samples,
            };
            let sol = solve::run(&req)?;
            files::emit(output.as_deref(), &solve::render(&sol))?;
            if let Some(p) = output {
                written(cli.json, kind.name(), p);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Report { file, algebra } => {
            let s = summary::run(file, algebra.as_deref())?;
            if cli.json {
                print!("{}", output::json(&s.reports));
            } else {
                for line in &s.lines {
                    println!("{line}");
                }
                for r in &s.reports {
                    print!("{}", output::text(r));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            if let Some(report) = e.report() {
                output::print(std::slice::from_ref(report), cli.json);
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
