use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Units {
    /// Seconds, metres, kilograms, joules.
    Si,
    /// Planck units (G = ħ = c = 1).
    Planck,
}

impl Units {
    pub fn label(self) -> &'static str {
        match self {
            Units::Si => "si",
            Units::Planck => "planck",
        }
    }
}

/// Fundamental bounds on time measurement from quantum uncertainty and
/// gravitational time dilation.
#[derive(Debug, Parser)]
#[command(name = "chronobound", version, about)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,

    /// Unit system for inputs and outputs.
    #[arg(long, global = true, value_enum, default_value_t = Units::Si)]
    pub units: Units,

    /// JSON file overriding G, hbar and c (SI values).
    #[arg(long, global = true, value_name = "PATH")]
    pub constants: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Minimum uncertainty in measuring a duration.
    Bound {
        /// Duration measured by a distant observer.
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Bound over log-spaced durations, endpoints included.
    Sweep {
        #[arg(long, allow_negative_numbers = true)]
        t_min: f64,
        #[arg(long, allow_negative_numbers = true)]
        t_max: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
    },
    /// Profile of the clock that saturates the bound.
    Clock {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
    },
    /// Check closed-form optima against a brute-force minimizer.
    Verify {
        #[arg(long, default_value_t = 1e-6, allow_negative_numbers = true)]
        rel_tol: f64,
    },
    /// Compare with the Salecker-Wigner and Ng-Lloyd bounds.
    Compare {
        #[arg(long, allow_negative_numbers = true)]
        t: f64,
        /// Clock mass (kilograms, or Planck masses with --units planck).
        #[arg(long, allow_negative_numbers = true)]
        mass: f64,
    },
}
