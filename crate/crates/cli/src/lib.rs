//! Command-line driver for `leibhom-core`: algebra input, experiment
//! commands, and deterministic text/JSON/CSV reports.

pub mod commands;
pub mod config;
pub mod report;

pub use commands::{error_exit_code, run, Outcome, Output};
pub use config::{Action, CommandName, Format, RunConfig};
pub use report::{Item, Report};

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match &self.output {
            Output::Raw(text) => format!("{text}\n"),
            Output::Report(r) => match format {
                Format::Text => r.to_text(),
                Format::Json => r.to_json(),
                Format::Csv => r.to_csv(),
            },
        }
    }
}
