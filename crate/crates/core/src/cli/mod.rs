//! Command-line front end: surface files in, JSON reports out.

pub mod parse;
pub mod report;
mod run;
pub mod surface_file;

use std::path::PathBuf;

use clap::{Parser, ValueEnum};

pub use parse::{parse_polynomial, ParseError};
pub use run::{render, run, run_cli, ExitCode, Flags, Outcome};
pub use surface_file::{SurfaceFile, SurfaceFileError, SurfaceOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Minimal model, fibres, trivial lattice rank and bad primes
    Analyze,
    /// Sections over F_p(t) within degree bounds
    Sections,
    /// Double cover for a section modulo p, and the torsion witness
    Cover,
    /// Analyze, then search sections and build covers at several primes
    Verify,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Sections => "sections",
            Command::Cover => "cover",
            Command::Verify => "verify",
        }
    }
}

/// Elliptic surfaces y^2 = x^3 + a4(t) x + a6(t) over Q(t).
#[derive(Clone, Debug, Parser)]
#[command(name = "ellsurf", version, about)]
pub struct Cli {
    #[arg(value_enum)]
    pub command: Command,
    /// Surface file (key = value lines: name, a4, a6, primes, ...)
    #[arg(long, value_name = "FILE")]
    pub input: PathBuf,
    #[arg(long, value_name = "P")]
    pub prime: Option<u64>,
    /// x-coordinate of the section, a polynomial in t reduced modulo P
    #[arg(long = "x", value_name = "EXPR", allow_hyphen_values = true)]
    pub x: Option<String>,
    #[arg(long, value_name = "N")]
    pub num_deg: Option<usize>,
    #[arg(long, value_name = "M")]
    pub den_deg: Option<usize>,
    #[arg(long, value_name = "L")]
    pub lambda_max: Option<u64>,
    /// Build covers at primes failing the good-prime check
    #[arg(long)]
    pub force: bool,
    #[arg(long, value_name = "S")]
    pub seed: Option<u64>,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

impl Cli {
    pub fn flags(&self) -> Flags {
        Flags {
            prime: self.prime,
            x: self.x.clone(),
            num_deg: self.num_deg,
            den_deg: self.den_deg,
            lambda_max: self.lambda_max,
            force: self.force,
            seed: self.seed,
        }
    }
}
