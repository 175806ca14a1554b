use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use levelcert::poly::DEFAULT_CHARACTERISTIC;
use levelcert_cli::run::{run_session, SessionRun};
use levelcert_cli::session::{
    flag_session, parse_flag_ideal, parse_flag_polys, parse_session, Session, SessionError, Task,
};
use levelcert_cli::suite::{MAX_SUITE_VARS, MIN_SUITE_VARS};

const USAGE_ERROR: u8 = 2;

#[derive(Parser)]
#[command(name = "levelcert", version, about = "Certified level bounds for Koszul and Hom complexes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every task in a session file.
    Run {
        file: PathBuf,
        /// Emit one JSON record per task instead of tables.
        #[arg(long)]
        machine: bool,
        /// Run tasks on separate threads; output order is unchanged.
        #[arg(long)]
        parallel: bool,
    },
    /// Run the built-in example battery for n variables.
    #[command(name = "paper-suite", alias = "example-suite")]
    ExampleSuite {
        #[arg(long)]
        n: usize,
        #[arg(long = "char", default_value_t = DEFAULT_CHARACTERISTIC)]
        characteristic: u32,
        #[arg(long)]
        machine: bool,
    },
    /// Level interval of a Koszul complex.
    Koszul {
        #[arg(long)]
        vars: usize,
        /// Defining ideal of the quotient, e.g. "meet((x1), (x2, x3))".
        #[arg(long)]
        quotient: Option<String>,
        /// Comma-separated homogeneous polynomials.
        #[arg(long)]
        seq: String,
        /// Ideal for the torsion bound; defaults to the ideal of the sequence.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long = "char", default_value_t = DEFAULT_CHARACTERISTIC)]
        characteristic: u32,
        #[arg(long)]
        machine: bool,
    },
    /// Dimension, depth and related invariants of a ring and an ideal.
    Invariants {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        quotient: Option<String>,
        /// Comma-separated generators of the ideal.
        #[arg(long, conflicts_with = "ideal")]
        seq: Option<String>,
        /// Ideal expression; defaults to the maximal ideal.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long = "char", default_value_t = DEFAULT_CHARACTERISTIC)]
        characteristic: u32,
        #[arg(long)]
        machine: bool,
    },
}

fn emit(run: &SessionRun, machine: bool) -> ExitCode {
    if machine {
        print!("{}", run.machine());
    } else {
        print!("{}", run.human());
    }
    ExitCode::from(run.exit_code() as u8)
}

fn usage(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("{e}");
    ExitCode::from(USAGE_ERROR)
}

fn build(cmd: &Command) -> Result<(Session, bool, bool), SessionError> {
    match cmd {
        Command::Run { .. } => unreachable!("session files are read separately"),
        Command::ExampleSuite { n, characteristic, machine } => {
            let session =
                flag_session(1, *characteristic, None, |_| Ok(Task::ExampleSuite { n: *n, p: *characteristic }))?;
            Ok((session, *machine, false))
        }
        Command::Koszul { vars, quotient, seq, ideal, characteristic, machine } => {
            let session = flag_session(*vars, *characteristic, quotient.as_deref(), |ring| {
                let seq = parse_flag_polys(ring, seq)?;
                let ideal = match ideal {
                    Some(text) => Some((text.clone(), parse_flag_ideal(ring, text)?)),
                    None => None,
                };
                Ok(Task::KoszulLevel { seq_name: "seq".into(), seq, ideal })
            })?;
            Ok((session, *machine, false))
        }
        Command::Invariants { vars, quotient, seq, ideal, characteristic, machine } => {
            let session = flag_session(*vars, *characteristic, quotient.as_deref(), |ring| {
                let seq = match (seq, ideal) {
                    (Some(text), _) => parse_flag_polys(ring, text)?,
                    (None, Some(text)) => parse_flag_ideal(ring, text)?.generators().to_vec(),
                    (None, None) => ring.variables(),
                };
                Ok(Task::Invariants { seq_name: "ideal".into(), seq })
            })?;
            Ok((session, *machine, false))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (session, machine, parallel) = match &cli.command {
        Command::Run { file, machine, parallel } => {
            let text = match std::fs::read_to_string(file) {
                Ok(t) => t,
                Err(e) => return usage(format!("cannot read {}: {e}", file.display())),
            };
            match parse_session(&text) {
                Ok(s) => (s, *machine, *parallel),
                Err(e) => return usage(format!("{}: {e}", file.display())),
            }
        }
        Command::ExampleSuite { n, .. } if !(MIN_SUITE_VARS..=MAX_SUITE_VARS).contains(n) => {
            return usage(format!("--n must be between {MIN_SUITE_VARS} and {MAX_SUITE_VARS}, got {n}"));
        }
        other => match build(other) {
            Ok(v) => v,
            Err(e) => return usage(e),
        },
    };
    emit(&run_session(&session, parallel), machine)
}
