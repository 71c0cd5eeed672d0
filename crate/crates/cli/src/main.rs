//! `dumont`: enumerate, count and verify pattern-avoiding Dumont permutations.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dumont_core::{DumontKind, Error};

#[derive(Parser, Debug)]
#[command(
    name = "dumont",
    version,
    about = "Pattern avoidance in Dumont permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the members of length 2n in lexicographic order.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        /// Half-length n.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Count members for each n in a range.
    Count {
        #[command(flatten)]
        family: FamilyArgs,
        /// A single n or an inclusive range `a..b`.
        #[arg(long, value_parser = parse_range)]
        n: NRange,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Worker threads for counting.
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Check a registered claim (or `all`) against exhaustive data.
    Verify {
        /// Tag such as `d2-3142`, or `all`.
        #[arg(long)]
        theorem: String,
        /// Largest n to check; `all` uses per-claim defaults when omitted.
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = 1)]
        parallel: usize,
    },
    /// Print terms of a named sequence or generating function.
    Sequence {
        /// e.g. `catalan`, `genocchi`, `gf-F`.
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Apply one of the explicit bijections.
    Bijection {
        #[arg(value_enum)]
        name: BijectionName,
        /// Run the inverse direction.
        #[arg(long)]
        inverse: bool,
        #[arg(long)]
        perm: Option<String>,
        /// Dyck word over U/D (inverse of `d2-3142-dyck`).
        #[arg(long)]
        path: Option<String>,
        /// Composition such as `1+3` (inverse of `d2-231-composition`).
        #[arg(long)]
        composition: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Group single patterns by their avoidance counts.
    Wilf {
        #[arg(long, value_parser = parse_kind)]
        kind: DumontKind,
        /// Pattern length, 3 or 4.
        #[arg(long)]
        length: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Args, Debug)]
struct FamilyArgs {
    /// 1, 2, dl1 or dl2.
    #[arg(long, value_parser = parse_kind)]
    kind: DumontKind,
    /// Comma-separated compact patterns, e.g. `2413,3142`.
    #[arg(long)]
    avoid: Option<String>,
    /// File with one whitespace-separated pattern per line.
    #[arg(long)]
    avoid_file: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum BijectionName {
    #[value(name = "d2-231-composition")]
    D2_231Composition,
    #[value(name = "d2-3142-dyck")]
    D2_3142Dyck,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
struct NRange {
    start: usize,
    end: usize,
}

fn parse_kind(s: &str) -> Result<DumontKind, String> {
    s.parse::<DumontKind>().map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<NRange, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad n {t:?}"))
    };
    let range = match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            NRange {
                start: num(a)?,
                end: num(b)?,
            }
        }
        None => {
            let n = num(s)?;
            NRange { start: n, end: n }
        }
    };
    if range.start > range.end {
        return Err(format!("empty range {s:?}"));
    }
    Ok(range)
}

/// Exit statuses.
mod status {
    pub const OK: u8 = 0;
    pub const INTERNAL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const LIMIT: u8 = 3;
    pub const VERIFICATION: u8 = 4;
    pub const DOMAIN: u8 = 5;
}

fn exit_status(err: &Error) -> u8 {
    use Error::*;
    match err {
        LimitExceeded { .. } => status::LIMIT,
        NotABijection(_) | EmptyToken | MixedFormat(_) | InvalidToken(_) | TooLong(_)
        | EmptyPattern | UnknownSeries(_) | UnknownTheorem(_) | UnknownFamily(_)
        | UnknownShape(_) => status::USAGE,
        OddInput(_)
        | DomainError(_)
        | NotInFamily { .. }
        | MalformedStructure(_)
        | InvalidComposition(_)
        | InvalidDyckPath(_)
        | ZeroConstantTerm
        | ConstantTermNotOne
        | OrderMismatch(..) => status::DOMAIN,
        InternalInconsistency(_) | PrecisionExhausted(_) => status::INTERNAL,
    }
}

/// Failures that are not library errors.
#[derive(Debug)]
enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_status(&e))
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(status::USAGE)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..5").unwrap(), NRange { start: 0, end: 5 });
        assert_eq!(parse_range("3").unwrap(), NRange { start: 3, end: 3 });
        assert_eq!(parse_range("1..=4").unwrap(), NRange { start: 1, end: 4 });
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("x").is_err());
    }

    #[test]
    fn statuses() {
        assert_eq!(exit_status(&Error::LimitExceeded { n: 9, max: 8 }), 3);
        assert_eq!(exit_status(&Error::UnknownTheorem("x".into())), 2);
        assert_eq!(
            exit_status(&Error::NotInFamily {
                perm: "12".into(),
                family: "D2".into()
            }),
            5
        );
    }

    #[test]
    fn cli_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
