use std::io::Write;
use std::process::ExitCode;

use bsymbols::cli::{run, RunConfig, EXIT_USAGE};

fn main() -> ExitCode {
    let config = match RunConfig::parse_from(std::env::args_os()) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let outcome = run(&config);
    let written = match &config.output {
        Some(path) if outcome.status != EXIT_USAGE => std::fs::write(path, &outcome.document),
        _ if outcome.status == EXIT_USAGE => std::io::stderr().write_all(outcome.document.as_bytes()),
        _ => std::io::stdout().write_all(outcome.document.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE as u8);
    }
    ExitCode::from(outcome.status as u8)
}
