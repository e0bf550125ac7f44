use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use leibhom_core::eulerian::Convention;
use leibhom_core::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CommandName {
    /// Check the Leibniz identity of an algebra
    Validate,
    /// Leibniz homology HL_n for n <= degree
    Hl,
    /// Homology Li_n of the Lie subcomplex for n <= degree
    Li,
    /// Weight-graded Li_n of free Leibniz algebras
    Conjecture1,
    /// Eulerian filtration test of the Loday boundary
    Conjecture2,
    /// Seeded Wigner and Friedrichs identity grids
    Wigner,
    /// Print an algebra in the JSON file format
    Export,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Action {
    Signed,
    Unsigned,
    Both,
}

impl Action {
    pub fn conventions(self) -> Vec<Convention> {
        match self {
            Action::Signed => vec![Convention::Signed],
            Action::Unsigned => vec![Convention::Unsigned],
            Action::Both => vec![Convention::Signed, Convention::Unsigned],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Everything a run depends on. The serialized form is echoed in reports;
/// the output path is left out since it does not affect results.
#[derive(Clone, Debug, Parser, Serialize)]
#[command(name = "leibhom", version, about = "Exact Leibniz homology and Lie subcomplex experiments")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: CommandName,

    /// Algebra file (JSON) or builtin name
    pub input: Option<String>,

    /// Largest homological degree N
    #[arg(long, default_value_t = 3)]
    pub degree: usize,

    /// Largest weight W (conjecture1)
    #[arg(long, default_value_t = 4)]
    pub weight: usize,

    /// Number of free generators g (conjecture1)
    #[arg(long, default_value_t = 2)]
    pub generators: usize,

    /// Symmetric-group action used by conjecture2
    #[arg(long, value_enum, default_value_t = Action::Both)]
    pub action: Action,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Largest number of basis words allowed in one chain group
    #[arg(long, default_value_t = 20_000)]
    pub cap: usize,

    #[arg(long)]
    #[serde(skip)]
    pub out: Option<PathBuf>,

    /// dim V for the wigner grids
    #[arg(long, default_value_t = 2)]
    pub dim: usize,

    /// Trials per degree for the wigner grids
    #[arg(long, default_value_t = 50)]
    pub trials: usize,

    /// Emit cycle representatives with homology tables
    #[arg(long)]
    pub representatives: bool,

    /// Include wall-clock timing (makes reports non-reproducible)
    #[arg(long)]
    pub timing: bool,

    /// Self-test: corrupt e^(1) before certification (conjecture2)
    #[arg(long, hide = true)]
    pub corrupt_idempotent: bool,
}

impl RunConfig {
    /// A configuration with every option at its default.
    pub fn new(command: CommandName, input: Option<&str>) -> Self {
        let mut args = vec!["leibhom".to_string(), format!("{command:?}").to_lowercase()];
        args.extend(input.map(str::to_string));
        Self::parse_from(args)
    }

    pub fn caps(&self) -> Caps {
        Caps {
            max_columns: self.cap,
            ..Caps::default()
        }
    }
}
