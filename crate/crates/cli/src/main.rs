use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use leibhom_cli::{error_exit_code, run, RunConfig};

fn main() -> ExitCode {
    let config = RunConfig::parse();
    let outcome = match run(&config) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("leibhom: {e}");
            return ExitCode::from(error_exit_code(&e));
        }
    };
    let text = outcome.render(config.format);
    let written = match &config.out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("leibhom: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(outcome.exit_code())
}
