#![allow(dead_code)]

use std::path::{Path, PathBuf};

use hahnfield::{Cutoff, GroupElement, Rational, Series};
use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Numerator and denominator bounded by 10^3 in absolute value.
pub fn coeff(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let n: i64 = rng.gen_range(-1000..=1000);
        if n != 0 {
            return Rational::new(BigInt::from(n), BigInt::from(rng.gen_range(1i64..=1000)));
        }
    }
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-3i64..=3)), BigInt::from(rng.gen_range(1i64..=2)))
}

pub fn exponent(rng: &mut ChaCha8Rng, rank: usize) -> GroupElement {
    GroupElement::new((0..rank).map(|_| small_rational(rng)).collect())
}

pub fn positive_exponent(rng: &mut ChaCha8Rng, rank: usize) -> GroupElement {
    loop {
        let e = exponent(rng, rank);
        if e.is_positive() {
            return e;
        }
        if e.is_negative() {
            return -e;
        }
    }
}

/// Exact series with between `min` and `max` terms.
pub fn series(rng: &mut ChaCha8Rng, rank: usize, min: usize, max: usize) -> Series {
    let n = rng.gen_range(min..=max);
    let terms: Vec<_> = (0..n).map(|_| (exponent(rng, rank), coeff(rng))).collect();
    Series::from_terms(rank, terms, Cutoff::Infinity).unwrap()
}

pub fn nonzero_series(rng: &mut ChaCha8Rng, rank: usize, max: usize) -> Series {
    loop {
        let s = series(rng, rank, 1, max);
        if !s.is_exact_zero() {
            return s;
        }
    }
}

pub fn positive_series(rng: &mut ChaCha8Rng, rank: usize, max: usize) -> Series {
    let s = nonzero_series(rng, rank, max);
    if s.lead().unwrap().1 > &Rational::from_integer(0.into()) {
        s
    } else {
        -&s
    }
}

/// Exact nonzero series with every exponent positive.
pub fn infinitesimal(rng: &mut ChaCha8Rng, rank: usize, max: usize) -> Series {
    loop {
        let n = rng.gen_range(1..=max);
        let terms: Vec<_> = (0..n).map(|_| (positive_exponent(rng, rank), coeff(rng))).collect();
        let s = Series::from_terms(rank, terms, Cutoff::Infinity).unwrap();
        if !s.is_exact_zero() {
            return s;
        }
    }
}

/// Truncates `s` at a random exponent about half the time.
pub fn maybe_truncated(rng: &mut ChaCha8Rng, s: Series) -> Series {
    if rng.gen_bool(0.5) {
        let c = Cutoff::Finite(exponent(rng, s.rank()));
        s.truncate(&c).unwrap()
    } else {
        s
    }
}

/// One recorded invocation of the `hahn` front end.
pub struct GoldenCase {
    pub path: PathBuf,
    pub args: Vec<String>,
    pub stdin: String,
    pub expected: String,
}

/// Splits a command line on whitespace, keeping double-quoted runs together.
pub fn split_args(line: &str) -> Vec<String> {
    let mut args = Vec::new();
    let mut cur = String::new();
    let (mut quoted, mut pending) = (false, false);
    for c in line.chars() {
        match c {
            '"' => {
                quoted = !quoted;
                pending = true;
            }
            c if c.is_whitespace() && !quoted => {
                if pending {
                    args.push(std::mem::take(&mut cur));
                    pending = false;
                }
            }
            c => {
                cur.push(c);
                pending = true;
            }
        }
    }
    if pending {
        args.push(cur);
    }
    args
}

/// Golden files: a `$ hahn ARGS` line, optional `< LINE` stdin lines, then
/// the expected stdout, stderr and a final `[exit N]` line.
pub fn load_golden(dir: &Path) -> Vec<GoldenCase> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "golden"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|path| {
            let text = std::fs::read_to_string(&path).unwrap();
            let mut lines = text.lines();
            let cmd = lines.next().and_then(|l| l.strip_prefix("$ hahn")).expect("command line");
            let mut stdin = String::new();
            let mut expected = String::new();
            for line in lines {
                match line.strip_prefix("< ") {
                    Some(input) if expected.is_empty() => {
                        stdin.push_str(input);
                        stdin.push('\n');
                    }
                    _ => {
                        expected.push_str(line);
                        expected.push('\n');
                    }
                }
            }
            GoldenCase { path, args: split_args(cmd), stdin, expected }
        })
        .collect()
}

/// Runs the front end in process and renders the result like a golden file
/// body.
pub fn render(args: &[String], stdin: &str) -> String {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("hahn".to_string()).chain(args.iter().cloned());
    let status = hahnfield::cli::run(argv, stdin.as_bytes(), &mut out, &mut err);
    format!("{}{}[exit {status}]\n", String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}
