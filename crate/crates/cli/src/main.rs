//! `difflie`: validation, cohomology, deformations, extensions and
//! integration for problems described in a TOML file.
//!
//! Exit codes: 0 when every check passes, 1 on a mathematical failure
//! (axiom, cocycle, exactness), 2 on an input error.

mod commands;
mod render;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use difflie_core::Theory;

use commands::{CliError, CohomologyArgs, DeformArgs, ExtendArgs, IntegrateArgs, Report};

#[derive(Parser)]
#[command(
    name = "difflie",
    version,
    about = "Exact computations for relative difference Lie algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Problem file (TOML).
    file: PathBuf,
    /// Print the machine-readable report instead of the table.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoryArg {
    Lieact,
    Operator,
    Reldiff,
    Regular,
    Coeff,
}

impl From<TheoryArg> for Theory {
    fn from(t: TheoryArg) -> Self {
        match t {
            TheoryArg::Lieact => Theory::LieAct,
            TheoryArg::Operator => Theory::Operator,
            TheoryArg::Reldiff => Theory::RelDiff,
            TheoryArg::Regular => Theory::Regular,
            TheoryArg::Coeff => Theory::Coeff,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check every algebra, action, operator, representation and homomorphism.
    Validate {
        #[command(flatten)]
        common: Common,
    },
    /// Cohomology dimensions and representatives.
    Cohomology {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        theory: TheoryArg,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long)]
        operator: Option<String>,
        #[arg(long)]
        representation: Option<String>,
        /// Also check exactness of the long exact sequence.
        #[arg(long)]
        les: bool,
    },
    /// Classify infinitesimal deformations; check and compare cochains.
    Deform {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        operator: Option<String>,
        #[arg(long)]
        cochain: Option<String>,
        /// Second cochain to test for equivalence with --cochain.
        #[arg(long)]
        against: Option<String>,
        #[arg(long, default_value_t = 8)]
        max_report: usize,
    },
    /// Build an abelian extension from a cocycle, read it back, compare.
    Extend {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        representation: Option<String>,
        #[arg(long)]
        cocycle: Option<String>,
        /// Cocycle whose extension is compared with; the semidirect product by default.
        #[arg(long)]
        with: Option<String>,
    },
    /// Integrate a nilpotent operator and check the group law.
    Integrate {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        operator: Option<String>,
        #[arg(long)]
        grid: Option<String>,
        #[arg(long)]
        homomorphism: Option<String>,
    },
}

fn run(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Validate { common } => Ok(commands::validate(&commands::load(&common.file)?)),
        Command::Cohomology {
            common,
            theory,
            max_degree,
            operator,
            representation,
            les,
        } => commands::cohomology(
            &commands::load(&common.file)?,
            &CohomologyArgs {
                theory: (*theory).into(),
                max_degree: *max_degree,
                operator: operator.as_deref(),
                representation: representation.as_deref(),
                les: *les,
            },
        ),
        Command::Deform {
            common,
            operator,
            cochain,
            against,
            max_report,
        } => commands::deform(
            &commands::load(&common.file)?,
            &DeformArgs {
                operator: operator.as_deref(),
                cochain: cochain.as_deref(),
                against: against.as_deref(),
                max_report: *max_report,
            },
        ),
        Command::Extend {
            common,
            representation,
            cocycle,
            with,
        } => commands::extend(
            &commands::load(&common.file)?,
            &ExtendArgs {
                representation: representation.as_deref(),
                cocycle: cocycle.as_deref(),
                with: with.as_deref(),
            },
        ),
        Command::Integrate {
            common,
            operator,
            grid,
            homomorphism,
        } => commands::integrate(
            &commands::load(&common.file)?,
            &IntegrateArgs {
                operator: operator.as_deref(),
                grid: grid.as_deref(),
                homomorphism: homomorphism.as_deref(),
            },
        ),
    }
}

fn json_flag(cmd: &Command) -> bool {
    match cmd {
        Command::Validate { common }
        | Command::Cohomology { common, .. }
        | Command::Deform { common, .. }
        | Command::Extend { common, .. }
        | Command::Integrate { common, .. } => common.json,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = json_flag(&cli.command);
    match run(&cli.command) {
        Ok(r) => {
            let mut out = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = if json {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&r.json).expect("reports serialize")
                )
            } else {
                r.text.iter().try_for_each(|line| writeln!(out, "{line}"))
            };
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(CliError::Math(m)) => {
            eprintln!("failure: {m}");
            ExitCode::from(1)
        }
    }
}
