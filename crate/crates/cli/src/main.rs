//! `constel`: command-line access to the constellation library.
//!
//! Exit status is 0 on success, 1 when the input structure fails the check
//! being asked for, and 2 for usage, I/O and parse errors. On a nonzero
//! exit the last line on stdout is `error: code=... message="..."`.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::commands::Failure;

#[derive(Parser, Debug)]
#[command(name = "constel", version, about = "Finite constellations, categories and their congruences")]
struct Cli {
    /// Largest n accepted by the generators (replaces the built-in caps).
    #[arg(long, global = true, env = "CONSTELLATION_SIZE_CAP")]
    size_cap: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the axioms and print the derived D (and R).
    Verify {
        file: PathBuf,
        #[arg(long = "as", value_enum, default_value_t = VerifyAs::Auto)]
        as_kind: VerifyAs,
    },
    /// Projections, the standard quasiorder, normality, composability.
    Derive { file: PathBuf },
    /// Adjoin an identity, adjoin a projection, or build the canonical extension.
    Extend {
        file: PathBuf,
        #[command(flatten)]
        which: ExtendKind,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Quotient by a partition, with its congruence report.
    Quotient {
        file: PathBuf,
        #[arg(long)]
        partition: PathBuf,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// List congruences in sorted order.
    Congruences {
        file: PathBuf,
        /// Only canonical congruences.
        #[arg(long)]
        canonical: bool,
        #[arg(long, conflicts_with = "maximal")]
        all: bool,
        /// Only the maximal members of the list.
        #[arg(long)]
        maximal: bool,
        /// Largest carrier to enumerate.
        #[arg(long, default_value_t = constellation::congruences::ENUMERATION_LIMIT)]
        limit: usize,
    },
    /// The Cayley map into partial functions on the carrier.
    Cayley { file: PathBuf },
    /// Search for an isomorphism.
    Iso {
        first: PathBuf,
        second: PathBuf,
        /// Compare delta-categories, matching the congruences too.
        #[arg(long)]
        delta: bool,
    },
    /// Generate a function constellation or category.
    Gen {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Count the elements of a function family without generating it.
    Count {
        #[arg(value_enum)]
        family: CountFamily,
        #[arg(long)]
        n: usize,
    },
    /// Rebuild a structure from its canonical extension and compare.
    Roundtrip { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VerifyAs {
    Auto,
    Constellation,
    Category,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct ExtendKind {
    /// P¹: a new identity on the right of everything.
    #[arg(long)]
    one: bool,
    /// P*: a new projection for the incomposable elements.
    #[arg(long)]
    star: bool,
    /// C(P): the category of pairs (s, e) with s · e = s.
    #[arg(long)]
    canonical: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cx,
    Codx,
    Sx,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CountFamily {
    Cx,
    Codx,
}

fn run(cli: Cli, out: &mut String) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { file, as_kind } => commands::verify(&file, as_kind, out),
        Command::Derive { file } => commands::derive(&file, out),
        Command::Extend { file, which, emit } => {
            let kind = if which.one {
                commands::Extend::One
            } else if which.star {
                commands::Extend::Star
            } else {
                commands::Extend::Canonical
            };
            commands::extend(&file, kind, emit.as_deref(), out)
        }
        Command::Quotient { file, partition, emit } => commands::quotient(&file, &partition, emit.as_deref(), out),
        Command::Congruences {
            file,
            canonical,
            all: _,
            maximal,
            limit,
        } => commands::congruences(&file, canonical, maximal, limit, out),
        Command::Cayley { file } => commands::cayley(&file, out),
        Command::Iso { first, second, delta } => commands::iso(&first, &second, delta, out),
        Command::Gen { family, n, emit } => commands::generate(family, n, cli.size_cap, emit.as_deref(), out),
        Command::Count { family, n } => commands::count(family, n, out),
        Command::Roundtrip { file } => commands::roundtrip(&file, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if !e.use_stderr() {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            let message = e.kind().to_string();
            println!("{}", Failure::usage(message).error_line());
            return ExitCode::from(2);
        }
    };
    let mut out = String::new();
    let result = run(cli, &mut out);
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = writeln!(stdout, "{}", f.error_line());
            ExitCode::from(f.exit)
        }
    }
}
