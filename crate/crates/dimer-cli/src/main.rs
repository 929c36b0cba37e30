use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use dimer_cli::error::CliError;
use dimer_cli::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli).and_then(|report| deliver(&cli, &report)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

/// Writes the rendered report to the requested sink.
fn deliver(cli: &Cli, report: &str) -> Result<(), CliError> {
    match &cli.output {
        Some(path) => std::fs::write(path, report)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            lock.write_all(report.as_bytes())
                .and_then(|()| lock.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}
