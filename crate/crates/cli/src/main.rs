use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use evenset_cli::{render, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn execute(cli: &Cli) -> anyhow::Result<u8> {
    let report = run(cli)?;
    let out = if cli.json {
        render::json(&report)
    } else {
        render::text(&report)
    };
    match &cli.output {
        Some(path) => {
            std::fs::write(path, out).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{out}"),
    }
    Ok(report.status.exit_code() as u8)
}
