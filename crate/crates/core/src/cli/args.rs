use std::ffi::OsString;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use super::{parse_cutoff, repl, Command, DecomposeKind, ModeKind, Outcome, SessionConfig};
use crate::error::Error;

#[derive(Parser, Debug)]
#[command(name = "hahn", version, about = "Exact arithmetic, logarithms and exponentials in Q((Q^r))")]
struct Cli {
    /// Rank r of the exponent group Q^r.
    #[arg(long, global = true, default_value_t = 1)]
    rank: usize,
    /// Truncation bound: an exponent such as `5` or `(0,3)`, or `inf`.
    /// Defaults to three powers of the smallest infinitesimal.
    #[arg(long, global = true, allow_hyphen_values = true)]
    cutoff: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Mode::Symbolic)]
    mode: Mode,
    /// Certified bits for dyadic logarithms of constants.
    #[arg(long, global = true, default_value_t = 20)]
    precision: u32,
    #[command(subcommand)]
    command: Sub,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    Symbolic,
    Dyadic,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Kind {
    Additive,
    Multiplicative,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Evaluate and print in canonical form.
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Logarithm of a positive series, printed as `h-part | log(c) | series-part`.
    Log {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Exponential, where defined.
    Exp {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Whether a purely infinite series is the infinite part of some logarithm.
    InImage {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Print a purely infinite series that no logarithm reaches.
    Witness,
    /// Multiplicative inverse, truncated at the cutoff.
    Invert {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two series in the field order.
    Cmp {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// Additive or multiplicative decomposition.
    Decompose {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Regroup along the convex subgroup of the last r - LEVEL coordinates.
    Regroup {
        level: usize,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Find a gap in the image of a built-in order embedding.
    RefuteConvexity {
        /// shifted-singleton, moving-support, stutter or liar.
        oracle: String,
        #[arg(long, allow_negative_numbers = true)]
        param: Option<i64>,
        /// Length of the first chain before giving up.
        #[arg(long, default_value_t = 10)]
        steps: usize,
        /// Print every inverse query.
        #[arg(long)]
        trace: bool,
    },
    /// Calculator reading standard input; errors are reported and skipped.
    Repl,
    /// Run calculator lines from a file; exits with the worst status seen.
    Script { file: PathBuf },
}

fn config(cli: &Cli) -> Result<SessionConfig, Error> {
    let mut cfg = SessionConfig::new(cli.rank);
    cfg.mode = match cli.mode {
        Mode::Symbolic => ModeKind::Symbolic,
        Mode::Dyadic => ModeKind::Dyadic,
    };
    cfg.precision = cli.precision;
    cfg.validate()?;
    if let Some(c) = &cli.cutoff {
        cfg.default_cutoff = parse_cutoff(c, cli.rank)?;
    }
    Ok(cfg)
}

fn command(sub: Sub) -> Command {
    match sub {
        Sub::Eval { expr } => Command::Eval(expr),
        Sub::Log { expr } => Command::Log(expr),
        Sub::Exp { expr } => Command::Exp(expr),
        Sub::InImage { expr } => Command::InImage(expr),
        Sub::Witness => Command::Witness,
        Sub::Invert { expr } => Command::Invert(expr),
        Sub::Cmp { left, right } => Command::Cmp(left, right),
        Sub::Decompose { kind: Kind::Additive, expr } => Command::Decompose(expr, DecomposeKind::Additive),
        Sub::Decompose { kind: Kind::Multiplicative, expr } => Command::Decompose(expr, DecomposeKind::Multiplicative),
        Sub::Regroup { level, expr } => Command::Regroup(expr, level),
        Sub::RefuteConvexity { oracle, param, steps, trace } => {
            Command::RefuteConvexity { oracle, param, max_steps: steps, trace }
        }
        Sub::Repl | Sub::Script { .. } => unreachable!("handled by run"),
    }
}

/// Entry point of the `hahn` binary with injectable streams. Successful
/// output goes to `out`, errors to `err`; the return value is the exit status.
pub fn run<I, T, R, W, E>(args: I, input: R, out: &mut W, err: &mut E) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    R: BufRead,
    W: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = e.exit_code();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return status;
        }
    };
    let cfg = match config(&cli) {
        Ok(cfg) => cfg,
        Err(e) => return emit(&Outcome::from_error(&e), out, err),
    };
    let interactive = matches!(cli.command, Sub::Repl) && std::io::IsTerminal::is_terminal(&std::io::stdin());
    let result = match cli.command {
        Sub::Repl => repl(cfg, input, out, interactive).map(|_| 0),
        Sub::Script { file } => match std::fs::File::open(&file) {
            Ok(f) => repl(cfg, std::io::BufReader::new(f), out, false),
            Err(e) => {
                let msg = Error::Usage(format!("cannot read {}: {e}", file.display()));
                return emit(&Outcome::from_error(&msg), out, err);
            }
        },
        sub => return emit(&super::run_command(&command(sub), &cfg), out, err),
    };
    result.unwrap_or_else(|e| {
        let _ = writeln!(err, "error: {e}");
        1
    })
}

fn emit<W: Write, E: Write>(o: &Outcome, out: &mut W, err: &mut E) -> i32 {
    let target: &mut dyn Write = if o.status == 0 { out } else { err };
    let _ = writeln!(target, "{}", o.text);
    o.status
}
