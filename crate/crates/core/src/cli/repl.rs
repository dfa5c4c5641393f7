//! Line-oriented calculator.
//!
//! ```text
//! let a = 1 + t        bind a name
//! a^2 - 1              evaluate
//! inv a                log a | exp x | in-image x | witness
//! cmp a, t             prints <, = or >
//! decompose additive a | decompose multiplicative a
//! regroup 1 x
//! refute-convexity stutter [--param P] [--steps N] [--trace]
//! :set cutoff 5        also rank, mode, precision
//! :show
//! :quit
//! ```

use std::io::{self, BufRead, Write};

use super::parse::split_pair;
use super::{parse_cutoff, Command, DecomposeKind, ModeKind, Outcome, Session, SessionConfig};
use crate::error::{Error, Result};

/// A parsed input line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReplLine {
    Empty,
    Quit,
    Show,
    Let(String, String),
    Set(String, String),
    Run(Command),
}

const RESERVED: [&str; 13] = [
    "t",
    "O",
    "let",
    "inv",
    "log",
    "exp",
    "in-image",
    "witness",
    "cmp",
    "decompose",
    "regroup",
    "refute-convexity",
    "help",
];

impl ReplLine {
    pub fn parse(line: &str) -> Result<ReplLine> {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            return Ok(ReplLine::Empty);
        }
        if let Some(rest) = line.strip_prefix(':') {
            let mut words = rest.split_whitespace();
            return match (words.next(), words.next(), words.next()) {
                (Some("quit" | "q"), None, _) => Ok(ReplLine::Quit),
                (Some("show"), None, _) => Ok(ReplLine::Show),
                (Some("set"), Some(key), Some(_)) => {
                    let value = rest.trim_start()["set".len()..].trim_start()[key.len()..].trim();
                    Ok(ReplLine::Set(key.to_string(), value.to_string()))
                }
                _ => Err(Error::Usage(format!("unknown directive `{line}`"))),
            };
        }
        let (head, rest) = match line.split_once(char::is_whitespace) {
            Some((h, r)) => (h, r.trim()),
            None => (line, ""),
        };
        let need = |what: &str| -> Result<String> {
            if rest.is_empty() {
                Err(Error::Usage(format!("`{head}` needs {what}")))
            } else {
                Ok(rest.to_string())
            }
        };
        let cmd = match head {
            "let" => {
                let (name, expr) =
                    rest.split_once('=').ok_or_else(|| Error::Usage("expected `let NAME = EXPR`".into()))?;
                let name = name.trim();
                let valid = name.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_')
                    && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if !valid || RESERVED.contains(&name) {
                    return Err(Error::Usage(format!("cannot bind `{name}`")));
                }
                return Ok(ReplLine::Let(name.to_string(), expr.trim().to_string()));
            }
            "inv" => Command::Invert(need("an expression")?),
            "log" => Command::Log(need("an expression")?),
            "exp" => Command::Exp(need("an expression")?),
            "in-image" => Command::InImage(need("an expression")?),
            "witness" if rest.is_empty() => Command::Witness,
            "cmp" => {
                let (a, b) = split_pair(&need("two expressions")?)?;
                Command::Cmp(a, b)
            }
            "decompose" => {
                let (kind, expr) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| Error::Usage("expected `decompose additive|multiplicative EXPR`".into()))?;
                let kind = match kind {
                    "additive" => DecomposeKind::Additive,
                    "multiplicative" => DecomposeKind::Multiplicative,
                    other => return Err(Error::Usage(format!("unknown decomposition `{other}`"))),
                };
                Command::Decompose(expr.trim().to_string(), kind)
            }
            "regroup" => {
                let (level, expr) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| Error::Usage("expected `regroup LEVEL EXPR`".into()))?;
                let level = level.parse().map_err(|_| Error::Usage(format!("bad level `{level}`")))?;
                Command::Regroup(expr.trim().to_string(), level)
            }
            "refute-convexity" => parse_refute(rest)?,
            _ => Command::Eval(line.to_string()),
        };
        Ok(ReplLine::Run(cmd))
    }
}

fn parse_refute(rest: &str) -> Result<Command> {
    let mut words = rest.split_whitespace();
    let oracle = words.next().ok_or_else(|| Error::Usage("expected an oracle name".into()))?.to_string();
    let (mut param, mut max_steps, mut trace) = (None, 10, false);
    while let Some(flag) = words.next() {
        let mut value = || words.next().ok_or_else(|| Error::Usage(format!("`{flag}` needs a value")));
        match flag {
            "--param" => param = Some(value()?.parse().map_err(|_| Error::Usage("bad --param".into()))?),
            "--steps" => max_steps = value()?.parse().map_err(|_| Error::Usage("bad --steps".into()))?,
            "--trace" => trace = true,
            other => return Err(Error::Usage(format!("unknown flag `{other}`"))),
        }
    }
    Ok(Command::RefuteConvexity { oracle, param, max_steps, trace })
}

impl Session {
    /// Handles one line. Returns `None` on `:quit`.
    pub fn handle_line(&mut self, line: &str) -> Option<Outcome> {
        let parsed = match ReplLine::parse(line) {
            Ok(p) => p,
            Err(e) => return Some(Outcome::from_error(&e)),
        };
        Some(match parsed {
            ReplLine::Empty => Outcome::ok(""),
            ReplLine::Quit => return None,
            ReplLine::Show => Outcome::ok(format!(
                "rank {}\ncutoff {}\nmode {}\nprecision {}",
                self.cfg.rank,
                self.cfg.default_cutoff,
                match self.cfg.mode {
                    ModeKind::Symbolic => "symbolic",
                    ModeKind::Dyadic => "dyadic",
                },
                self.cfg.precision
            )),
            ReplLine::Let(name, expr) => match self.eval(&expr) {
                Ok(s) => {
                    let text = format!("{name} = {s}");
                    self.bindings.insert(name, s);
                    Outcome::ok(text)
                }
                Err(e) => Outcome::from_error(&e),
            },
            ReplLine::Set(key, value) => match self.set(&key, &value) {
                Ok(()) => Outcome::ok(""),
                Err(e) => Outcome::from_error(&e),
            },
            ReplLine::Run(cmd) => self.execute(&cmd),
        })
    }

    /// Changes one configuration field. Changing the rank resets the cutoff
    /// to the standard one for the new rank.
    fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let mut cfg = self.cfg.clone();
        match key {
            "cutoff" => cfg.default_cutoff = parse_cutoff(value, cfg.rank)?,
            "rank" => {
                cfg.rank = value.parse().map_err(|_| Error::Usage(format!("bad rank `{value}`")))?;
                cfg.default_cutoff = SessionConfig::standard_cutoff(cfg.rank);
            }
            "mode" => {
                cfg.mode = match value {
                    "symbolic" => ModeKind::Symbolic,
                    "dyadic" => ModeKind::Dyadic,
                    _ => return Err(Error::Usage(format!("unknown mode `{value}`"))),
                }
            }
            "precision" => {
                cfg.precision = value.parse().map_err(|_| Error::Usage(format!("bad precision `{value}`")))?
            }
            _ => return Err(Error::Usage(format!("unknown setting `{key}`"))),
        }
        cfg.validate()?;
        self.cfg = cfg;
        Ok(())
    }
}

/// Reads lines until end of input or `:quit`. Results go to `out`, errors
/// too (prefixed with their code), and the loop always continues. Returns
/// the largest exit status seen, so scripts fail if any line failed.
pub fn repl<R: BufRead, W: Write>(cfg: SessionConfig, input: R, out: &mut W, prompt: bool) -> io::Result<i32> {
    let mut session = Session::new(cfg);
    let mut worst = 0;
    let mut lines = input.lines();
    loop {
        if prompt {
            write!(out, "> ")?;
            out.flush()?;
        }
        let Some(line) = lines.next() else { break };
        let Some(outcome) = session.handle_line(&line?) else { break };
        worst = worst.max(outcome.status);
        if !outcome.text.is_empty() {
            writeln!(out, "{}", outcome.text)?;
        }
    }
    Ok(worst)
}
