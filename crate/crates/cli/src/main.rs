use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use scf_secrecy_cli::{init_threads, run, Cli, CliError};

fn execute(cli: &Cli) -> Result<(), CliError> {
    init_threads(cli.threads)?;
    let text = run(cli)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            // clap's message up to the first blank line, on one line
            let text = e.to_string();
            let reason: Vec<&str> = text.lines().map(str::trim).take_while(|l| !l.is_empty()).collect();
            let reason = reason.join(" ");
            eprintln!("error: {}", reason.strip_prefix("error: ").unwrap_or(&reason));
            return ExitCode::from(2);
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
