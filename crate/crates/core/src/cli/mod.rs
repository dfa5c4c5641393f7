//! Front end: commands, session state and the `hahn` argument parser.
//!
//! Every command renders to text plus an exit status: `0` on success, `1`
//! when the mathematics refuses (for example [`Error::NotInLogDomain`]) and
//! `2` for malformed input. Errors print as `error[E015]: not in log domain`
//! with the stable code from [`Error::code`].

mod args;
mod parse;
mod repl;

use std::cmp::Ordering;
use std::fmt::Write as _;

pub use args::run;
pub use parse::{eval_expr, parse_cutoff, parse_exponent, parse_expr, Bindings};
pub use repl::{repl, ReplLine};

use crate::error::{Error, Result};
use crate::explog::{full_exp, full_log, in_left_log_image, witness_not_in_image, CrossSection, LogMode};
use crate::hahnseries::{decompose_additive, decompose_multiplicative, regroup, s_cmp, s_invert, Cutoff, Series};
use crate::lexprod::{builtin_oracle, refute_convexity_traced, Witness};
use crate::ordgroup::{ConvexLevel, GroupElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecomposeKind {
    Additive,
    Multiplicative,
}

/// One request. Expressions are kept as text and evaluated against the
/// session's rank and bindings when the command runs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Eval(String),
    Log(String),
    Exp(String),
    /// Is the series `h(g)` for some `g`?
    InImage(String),
    /// A purely infinite series outside the image of the logarithm.
    Witness,
    Invert(String),
    Cmp(String, String),
    Decompose(String, DecomposeKind),
    Regroup(String, usize),
    RefuteConvexity {
        oracle: String,
        param: Option<i64>,
        max_steps: usize,
        trace: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ModeKind {
    #[default]
    Symbolic,
    Dyadic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SessionConfig {
    pub rank: usize,
    /// Cutoff for inverses, quotients, logarithms and exponentials.
    pub default_cutoff: Cutoff,
    pub mode: ModeKind,
    /// Bits of certified precision in dyadic mode.
    pub precision: u32,
}

impl SessionConfig {
    /// Rank `rank` with cutoff `3·e_r`: three powers of the smallest
    /// infinitesimal, which every expansion reaches.
    pub fn new(rank: usize) -> Self {
        SessionConfig { rank, default_cutoff: Self::standard_cutoff(rank), mode: ModeKind::Symbolic, precision: 20 }
    }

    pub fn standard_cutoff(rank: usize) -> Cutoff {
        if rank == 0 {
            return Cutoff::Infinity;
        }
        Cutoff::Finite(GroupElement::unit(rank, rank).scale(&crate::rat(3, 1)))
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 {
            return Err(Error::Usage("rank must be at least 1".into()));
        }
        if self.mode == ModeKind::Dyadic && self.precision == 0 {
            return Err(Error::Usage("precision must be at least 1 in dyadic mode".into()));
        }
        if let Some(r) = self.default_cutoff.rank() {
            if r != self.rank {
                return Err(Error::RankMismatch { expected: self.rank, found: r });
            }
        }
        Ok(())
    }

    pub fn log_mode(&self) -> LogMode {
        match self.mode {
            ModeKind::Symbolic => LogMode::Symbolic,
            ModeKind::Dyadic => LogMode::Dyadic(self.precision),
        }
    }
}

impl Default for SessionConfig {
    fn default() -> Self {
        SessionConfig::new(1)
    }
}

/// Rendered result of a command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub status: i32,
}

impl Outcome {
    pub fn ok(text: impl Into<String>) -> Self {
        Outcome { text: text.into(), status: 0 }
    }

    pub fn from_error(e: &Error) -> Self {
        Outcome { text: render_error(e), status: if e.is_usage() { 2 } else { 1 } }
    }
}

pub fn render_error(e: &Error) -> String {
    format!("error[{}]: {e}", e.code())
}

/// Configuration plus named bindings.
#[derive(Clone, Debug, Default)]
pub struct Session {
    pub cfg: SessionConfig,
    pub bindings: Bindings,
}

impl Session {
    pub fn new(cfg: SessionConfig) -> Self {
        Session { cfg, bindings: Bindings::new() }
    }

    pub fn eval(&self, text: &str) -> Result<Series> {
        eval_expr(text, self.cfg.rank, &self.bindings, &self.cfg.default_cutoff)
    }

    pub fn execute(&self, cmd: &Command) -> Outcome {
        match self.cfg.validate().and_then(|_| self.dispatch(cmd)) {
            Ok(text) => Outcome::ok(text),
            Err(e) => Outcome::from_error(&e),
        }
    }

    fn dispatch(&self, cmd: &Command) -> Result<String> {
        let cfg = &self.cfg;
        let cs = CrossSection::standard(cfg.rank);
        Ok(match cmd {
            Command::Eval(e) => self.eval(e)?.to_string(),
            Command::Log(e) => full_log(&cs, &self.eval(e)?, &cfg.default_cutoff, cfg.log_mode())?.to_string(),
            Command::Exp(e) => full_exp(&cs, &self.eval(e)?, &cfg.default_cutoff)?.to_string(),
            Command::InImage(e) => in_left_log_image(&cs, &self.eval(e)?)?.to_string(),
            Command::Witness => witness_not_in_image(&cs).to_string(),
            Command::Invert(e) => s_invert(&self.eval(e)?, &cfg.default_cutoff)?.to_string(),
            Command::Cmp(a, b) => match s_cmp(&self.eval(a)?, &self.eval(b)?)? {
                Ordering::Less => "<".into(),
                Ordering::Equal => "=".into(),
                Ordering::Greater => ">".into(),
            },
            Command::Decompose(e, DecomposeKind::Additive) => {
                let d = decompose_additive(&self.eval(e)?);
                format!("infinite: {}\nbounded: {}", d.infinite_part, d.bounded_part)
            }
            Command::Decompose(e, DecomposeKind::Multiplicative) => {
                let d = decompose_multiplicative(&self.eval(e)?)?;
                format!("value: {}\nlead: {}\ntail: {}", d.value, d.lead, d.one_unit_tail)
            }
            Command::Regroup(e, level) => regroup(&self.eval(e)?, ConvexLevel(*level))?.to_string(),
            Command::RefuteConvexity { oracle, param, max_steps, trace } => {
                render_refutation(oracle, *param, *max_steps, *trace)?
            }
        })
    }
}

/// Runs one command in a fresh session.
pub fn run_command(cmd: &Command, cfg: &SessionConfig) -> Outcome {
    Session::new(cfg.clone()).execute(cmd)
}

fn plural(n: usize, one: &str, many: &str) -> String {
    format!("{n} {}", if n == 1 { one } else { many })
}

fn render_refutation(name: &str, param: Option<i64>, max_steps: usize, trace: bool) -> Result<String> {
    let mut oracle = builtin_oracle(name, param)?;
    let (witness, records) = refute_convexity_traced(oracle.as_mut(), max_steps)?;
    let mut out = String::new();
    if trace {
        for r in &records {
            let answer = match r.answer {
                Some(n) => format!("image of {n}"),
                None => "not in image".into(),
            };
            writeln!(
                out,
                "row {} stage {}: {} < {} < {}  monotone={} sandwiched={}  {answer}",
                r.row, r.stage, r.lower, r.middle, r.upper, r.monotone, r.sandwiched
            )
            .expect("write to string");
        }
    }
    match &witness {
        Witness::NotConvex { lower, middle, upper, lower_pre, upper_pre } => {
            writeln!(out, "not convex ({name}, {})", plural(records.len(), "query", "queries"))
                .expect("write to string");
            writeln!(out, "lower  {lower} = image of {lower_pre}").expect("write to string");
            writeln!(out, "middle {middle} not in image").expect("write to string");
            write!(out, "upper  {upper} = image of {upper_pre}").expect("write to string");
        }
        Witness::ChainExhausted { chain, steps } => {
            writeln!(
                out,
                "chain exhausted ({name}, {}, {})",
                plural(*steps, "query", "queries"),
                plural(chain.len(), "image", "images")
            )
            .expect("write to string");
            let joined: Vec<String> = chain.iter().map(ToString::to_string).collect();
            write!(out, "{}", joined.join(" < ")).expect("write to string");
        }
    }
    Ok(out)
}
