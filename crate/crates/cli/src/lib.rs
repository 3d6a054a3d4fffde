//! Command-line front end: figure-ready tables of spectra, phase shifts,
//! resonances, wavefunctions, potential reconstructions and verification
//! suites.

mod commands;
mod output;
mod systems;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{phase_shift_table, reconstruct_table, resonance_table, spectrum_table, wavefunction_table};
pub use output::{format_float, write_atomic, Cell, Format, Table};
pub use systems::{build_entry, SystemArgs};
pub use verify::{verify_table, Suite};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error(transparent)]
    Numeric(epqm::error::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<epqm::error::Error> for CliError {
    fn from(e: epqm::error::Error) -> Self {
        use epqm::error::Error as E;
        match e {
            E::InvalidParams(_) | E::InvalidEnergy(_) | E::IndexOutOfRange { .. } | E::Domain { .. } => {
                CliError::Validation(e.to_string())
            }
            other => CliError::Numeric(other),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numeric(_) | CliError::Io(_) => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Units {
    /// Atomic units (ħ = m = 1).
    #[default]
    Atomic,
    /// Energies divided by α².
    Alpha2,
}

#[derive(Debug, Parser)]
#[command(name = "epqm", version, about = "Energy-polynomial quantum systems: spectra, phase shifts, states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Destination file, written atomically; standard output when absent.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Prepend a provenance line (CSV comment or JSON wrapper).
    #[arg(long)]
    pub metadata: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Closed-form bound-state energies.
    #[command(allow_negative_numbers = true)]
    Spectrum {
        #[command(flatten)]
        system: SystemArgs,
        /// Number of levels requested.
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, value_enum, default_value = "atomic")]
        units: Units,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Phase shift sweep over k.
    #[command(name = "phase-shift", allow_negative_numbers = true)]
    PhaseShift {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long, default_value_t = 0.1)]
        k_min: f64,
        #[arg(long, default_value_t = 5.0)]
        k_max: f64,
        #[arg(long, default_value_t = 50)]
        k_count: usize,
        /// Add a column with the phase fitted from the weighted polynomial tail.
        #[arg(long)]
        tail_fit: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Bound state and resonance energies of the μ = α/√(2E) system.
    #[command(allow_negative_numbers = true)]
    Resonances {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 8)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "atomic")]
        units: Units,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// |ψ_m(x)| on a uniform grid.
    #[command(allow_negative_numbers = true)]
    Wavefunction {
        #[command(flatten)]
        system: SystemArgs,
        /// State indices: `3`, `0..3` (inclusive) or `0,2,5`.
        #[arg(long, default_value = "0")]
        m: String,
        #[arg(long, default_value_t = 0.0)]
        x_min: f64,
        #[arg(long, default_value_t = 30.0)]
        x_max: f64,
        #[arg(long, default_value_t = 301)]
        points: usize,
        #[arg(long, default_value_t = 2000)]
        max_terms: usize,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Local potential rebuilt from its matrix elements.
    #[command(allow_negative_numbers = true)]
    Reconstruct {
        #[command(flatten)]
        args: commands::ReconstructArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run invariant suites and report pass/fail.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Catalog systems with their default parameters.
    ListSystems {
        #[command(flatten)]
        out: OutputArgs,
    },
}

fn metadata_line(argv: &[OsString]) -> String {
    let args: Vec<String> = argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect();
    format!("epqm {} {}", env!("CARGO_PKG_VERSION"), args.join(" "))
}

/// Table and output settings for a parsed command.
pub fn execute(command: &Command) -> Result<(Table, bool), CliError> {
    Ok(match command {
        Command::Spectrum { system, n, units, .. } => (spectrum_table(system, *n, *units)?, true),
        Command::PhaseShift {
            system,
            k_min,
            k_max,
            k_count,
            tail_fit,
            ..
        } => (phase_shift_table(system, *k_min, *k_max, *k_count, *tail_fit)?, true),
        Command::Resonances {
            alpha,
            beta,
            n_max,
            units,
            ..
        } => (resonance_table(*alpha, *beta, *n_max, *units)?, true),
        Command::Wavefunction {
            system,
            m,
            x_min,
            x_max,
            points,
            max_terms,
            ..
        } => (
            wavefunction_table(system, &commands::parse_indices(m)?, *x_min, *x_max, *points, *max_terms)?,
            true,
        ),
        Command::Reconstruct { args, .. } => (reconstruct_table(args)?, true),
        Command::Verify { suite, .. } => {
            let t = verify_table(*suite)?;
            let ok = t.rows.iter().all(|r| r[2] == Cell::Text("pass".into()));
            (t, ok)
        }
        Command::ListSystems { .. } => (systems::list_table(), true),
    })
}

fn output_args(command: &Command) -> &OutputArgs {
    match command {
        Command::Spectrum { out, .. }
        | Command::PhaseShift { out, .. }
        | Command::Resonances { out, .. }
        | Command::Wavefunction { out, .. }
        | Command::Reconstruct { out, .. }
        | Command::Verify { out, .. }
        | Command::ListSystems { out } => out,
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the process exit code: 0 on success, 2 on invalid input, 1 on numerical
/// failure or a failed verification suite.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let out = output_args(&cli.command).clone();
    let result = execute(&cli.command).and_then(|(table, ok)| {
        let meta = out.metadata.then(|| metadata_line(&argv));
        let text = table.render(out.format, meta.as_deref());
        match &out.output {
            Some(path) => write_atomic(path, &text)?,
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(text.as_bytes())?;
                stdout.flush()?;
            }
        }
        Ok(ok)
    });
    match result {
        Ok(true) => 0,
        Ok(false) => {
            eprintln!("epqm: one or more verification checks failed");
            1
        }
        Err(e) => {
            eprintln!("epqm: {e}");
            e.exit_code()
        }
    }
}
