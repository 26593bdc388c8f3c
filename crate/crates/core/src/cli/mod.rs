//! Command-line front end. Each subcommand evaluates one computation over a
//! parameter grid and writes a CSV or JSON table.
//!
//! Exit status: 0 success, 1 usage error, 2 domain error, 3 numerical or
//! output failure. Every failure prints one line on stderr.

mod commands;
mod params;
mod table;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::error::{Error, ErrorCategory};
pub use params::{parse_sweep, Params};
pub use table::{format_real, Cell, Table};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Compute(#[from] Error),
    #[error("output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(e) => match e.category() {
                ErrorCategory::Domain => EXIT_DOMAIN,
                ErrorCategory::Numerical => EXIT_NUMERICAL,
            },
            CliError::Output(_) => EXIT_NUMERICAL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "ptdrsc", version, about = "Deterministic tables for the ring-shaped Coulomb problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Output format
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Write the table here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Plain-text `key = value` file; command-line flags take precedence
    #[arg(long)]
    config: Option<PathBuf>,
}

// Numeric flags are kept as text so sweeps (`a:step:b`) and config-file
// merging share one parser.
macro_rules! flag_struct {
    ($name:ident { $($field:ident => $key:literal, $help:literal;)* }) => {
        #[derive(Debug, Args)]
        struct $name {
            $(
                #[doc = $help]
                #[arg(long = $key, allow_hyphen_values = true)]
                $field: Option<String>,
            )*
            #[command(flatten)]
            common: Common,
        }

        impl $name {
            fn flags(&self) -> Vec<(&'static str, Option<String>)> {
                vec![$(($key, self.$field.clone())),*]
            }
        }
    };
}

flag_struct!(PhaseShiftArgs {
    mass => "mass", "Rest mass M";
    energy => "energy", "Total energy E > M (sweepable)";
    delta => "delta", "Coulomb strength delta > 0";
    lmax => "lmax", "Largest angular momentum";
});

flag_struct!(WavefunctionArgs {
    mass => "mass", "Rest mass M";
    energy => "energy", "Total energy E > M";
    delta => "delta", "Coulomb strength delta > 0";
    ell => "ell", "Angular momentum (default 0)";
    r => "r", "Radius (sweepable)";
});

flag_struct!(CrossSectionArgs {
    mass => "mass", "Rest mass M (partial-wave mode)";
    energy => "energy", "Total energy E > M (partial-wave mode, sweepable)";
    delta => "delta", "Coulomb strength (partial-wave mode)";
    lmax => "lmax", "Partial-wave cutoff L (partial-wave mode)";
    smoothing => "smoothing", "none, abel or cesaro (default abel)";
    theta => "theta", "Scattering angle in radians (sweepable)";
    phi => "phi", "Screened Rutherford amplitude Phi (screened mode)";
    gamma_screen => "gamma-screen", "Screening constant (screened mode, sweepable)";
});

flag_struct!(BoundStateArgs {
    mass => "mass", "Rest mass M";
    delta => "delta", "Coulomb strength delta > 0 (sweepable)";
    nmax => "nmax", "Largest radial quantum number";
    lmax => "lmax", "Largest angular momentum";
});

flag_struct!(ThermoArgs {
    beta => "beta", "Inverse temperature (sweepable)";
    xi => "xi", "Level cutoff xi";
    tau => "tau", "Level scale tau (or give --delta and --mass)";
    delta => "delta", "Coulomb strength, with --mass sets tau = delta/sqrt(2 mass)";
    mass => "mass", "Reduced mass used with --delta";
    kb => "kb", "Boltzmann constant (default 1)";
});

flag_struct!(AngularArgs {
    chi => "chi", "Barrier parameter chi >= 1, or 0 for the collapsed barrier";
    lam => "lam", "Barrier parameter lam >= 1";
    zeta => "zeta", "Angular scale (default 1)";
    nmax => "nmax", "Largest radial quantum number";
    q => "q", "Evaluation points for the eigenfunctions (sweepable)";
});

flag_struct!(ScreenedFitArgs {
    sigma_tot => "sigma-tot", "Target total cross section (sweepable)";
    sigma_tr => "sigma-tr", "Target transport cross section";
});

#[derive(Debug, Subcommand)]
enum Command {
    /// Coulomb-type phase shifts delta_l for l = 0..lmax
    PhaseShifts(PhaseShiftArgs),
    /// Real regular radial solution g_l(r)
    Wavefunction(WavefunctionArgs),
    /// Partial-wave or screened Rutherford differential cross sections
    CrossSection(CrossSectionArgs),
    /// Closed-form bound-state energies on an (n_r, l) grid
    BoundStates(BoundStateArgs),
    /// Partition function and derived quantities
    Thermo(ThermoArgs),
    /// Poschl-Teller eigenvalues and eigenfunctions
    Angular(AngularArgs),
    /// Screened Rutherford parameters from total and transport cross sections
    ScreenedFit(ScreenedFitArgs),
}

impl Command {
    fn parts(&self) -> (&'static str, Vec<(&'static str, Option<String>)>, &Common) {
        match self {
            Command::PhaseShifts(a) => ("phase-shifts", a.flags(), &a.common),
            Command::Wavefunction(a) => ("wavefunction", a.flags(), &a.common),
            Command::CrossSection(a) => ("cross-section", a.flags(), &a.common),
            Command::BoundStates(a) => ("bound-states", a.flags(), &a.common),
            Command::Thermo(a) => ("thermo", a.flags(), &a.common),
            Command::Angular(a) => ("angular", a.flags(), &a.common),
            Command::ScreenedFit(a) => ("screened-fit", a.flags(), &a.common),
        }
    }
}

fn one_line(text: &str) -> String {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .unwrap_or("invalid arguments")
        .to_string()
}

fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (name, flags, common) = cli.command.parts();
    let params = Params::assemble(name, flags, common.config.as_deref())?;
    let format = match common.format {
        Some(f) => f,
        None => params.output_format()?,
    };
    let out = common.out.clone().or_else(|| params.output_path());
    let table = commands::run(name, &params)?;
    let text = match format {
        OutputFormat::Csv => table.to_csv()?,
        OutputFormat::Json => table.to_json()?,
    };
    match out {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Output(format!("cannot write {}: {e}", path.display()))),
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Output(e.to_string())),
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return 0;
            }
            let _ = writeln!(stderr, "{} (try --help)", one_line(&e.render().to_string()));
            return EXIT_USAGE;
        }
    };
    match execute(cli, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", one_line(&e.to_string()));
            e.exit_code()
        }
    }
}

/// Entry point for the `ptdrsc` binary.
pub fn main() -> ExitCode {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}
