//! Logarithms of positive rationals: the constant factor of the full
//! logarithm.
//!
//! `ln c` is irrational for every rational `c ≠ 1`, so the value is either
//! kept as a tag (`SymbolicLog(c)`, which makes sums and comparisons exact via
//! `ln c + ln d = ln cd` and monotonicity) or approximated by a dyadic
//! rational with a certified error bound.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// How the constant part of a logarithm is represented.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LogMode {
    #[default]
    Symbolic,
    /// Certified approximation to within `2^-precision`.
    Dyadic(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LogValue {
    ExactZero,
    /// `ln c` for a positive rational `c ≠ 1`.
    SymbolicLog(Rational),
    /// `approx` is within `2^-precision` of the true value.
    Dyadic {
        approx: Rational,
        precision: u32,
    },
}

impl LogValue {
    fn symbolic(c: Rational) -> LogValue {
        if c.is_one() {
            LogValue::ExactZero
        } else {
            LogValue::SymbolicLog(c)
        }
    }

    /// Enclosing interval for dyadic values.
    fn interval(&self) -> Option<(Rational, Rational)> {
        match self {
            LogValue::ExactZero => Some((Rational::zero(), Rational::zero())),
            LogValue::Dyadic { approx, precision } => {
                let r = pow2(-(*precision as i64));
                Some((approx - &r, approx + &r))
            }
            LogValue::SymbolicLog(_) => None,
        }
    }

    /// Sum of two logarithms.
    pub fn add(&self, other: &LogValue) -> Result<LogValue> {
        use LogValue::*;
        Ok(match (self, other) {
            (ExactZero, x) | (x, ExactZero) => x.clone(),
            (SymbolicLog(a), SymbolicLog(b)) => LogValue::symbolic(a * b),
            (Dyadic { approx: a, precision: p }, Dyadic { approx: b, precision: q }) => {
                Dyadic { approx: a + b, precision: (*p).min(*q).saturating_sub(1) }
            }
            _ => return Err(Error::IncomparableConstants),
        })
    }

    /// Order of the represented real numbers. Symbolic values compare exactly
    /// through the monotonicity of `ln`; dyadic values compare when their
    /// enclosures are disjoint.
    pub fn cmp_value(&self, other: &LogValue) -> Result<Ordering> {
        use LogValue::*;
        let one = Rational::one();
        match (self, other) {
            (ExactZero, ExactZero) => Ok(Ordering::Equal),
            (ExactZero, SymbolicLog(c)) => Ok(one.cmp(c)),
            (SymbolicLog(c), ExactZero) => Ok(c.cmp(&one)),
            (SymbolicLog(a), SymbolicLog(b)) => Ok(a.cmp(b)),
            (SymbolicLog(_), Dyadic { .. }) | (Dyadic { .. }, SymbolicLog(_)) => Err(Error::IncomparableConstants),
            _ => {
                let (alo, ahi) = self.interval().expect("dyadic or zero");
                let (blo, bhi) = other.interval().expect("dyadic or zero");
                if ahi < blo {
                    Ok(Ordering::Less)
                } else if bhi < alo {
                    Ok(Ordering::Greater)
                } else if self == other && matches!(self, ExactZero) {
                    Ok(Ordering::Equal)
                } else {
                    Err(Error::IncomparableConstants)
                }
            }
        }
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LogValue::ExactZero => f.write_str("0"),
            LogValue::SymbolicLog(c) => write!(f, "log({c})"),
            LogValue::Dyadic { approx, precision } => {
                let digits = (*precision as usize * 30103).div_ceil(100000) + 1;
                write!(f, "{} ±2^-{precision}", decimal(approx, digits))
            }
        }
    }
}

/// `2^e` as a rational.
fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

/// Decimal expansion of `q` truncated toward zero after `digits` places.
fn decimal(q: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = (q.abs() * Rational::from_integer(scale.clone())).to_integer();
    let (int, frac) = scaled.div_rem(&scale);
    let sign = if q.is_negative() { "-" } else { "" };
    format!("{sign}{int}.{frac:0>digits$}")
}

/// `atanh(y)` for `0 <= y <= 1/3` enclosed by the first `terms` terms of its
/// Taylor series and the geometric tail bound.
fn atanh_enclosure(y: &Rational, terms: u64) -> (Rational, Rational) {
    let y2 = y * y;
    let mut power = y.clone();
    let mut sum = Rational::zero();
    for j in 0..terms {
        sum += &power / Rational::from_integer(BigInt::from(2 * j + 1));
        power *= &y2;
    }
    // tail ≤ y^(2N+1) / ((2N+1)(1 - y²))
    let tail = &power / (Rational::from_integer(BigInt::from(2 * terms + 1)) * (Rational::one() - &y2));
    (sum.clone(), sum + tail)
}

/// Rational enclosure `[lo, hi]` of `ln c` with `hi - lo <= 2^-bits`.
pub fn ln_enclosure(c: &Rational, bits: u32) -> Result<(Rational, Rational)> {
    if !c.is_positive() {
        return Err(Error::NotPositive);
    }
    // c = m · 2^k with 1 <= m < 2
    let mut k = c.numer().bits() as i64 - c.denom().bits() as i64;
    let mut m = c * pow2(-k);
    while m >= Rational::from_integer(2.into()) {
        m /= Rational::from_integer(2.into());
        k += 1;
    }
    while m < Rational::one() {
        m *= Rational::from_integer(2.into());
        k -= 1;
    }
    let y = (&m - Rational::one()) / (&m + Rational::one());
    let third = Rational::new(1.into(), 3.into());
    let width_goal = pow2(-(bits as i64));
    let mut terms = 4u64;
    loop {
        let (l2lo, l2hi) = atanh_enclosure(&third, terms);
        let (lmlo, lmhi) = atanh_enclosure(&y, terms);
        let two = Rational::from_integer(2.into());
        let kq = Rational::from_integer(k.into());
        let (klo, khi) = if k >= 0 { (&kq * &l2lo, &kq * &l2hi) } else { (&kq * &l2hi, &kq * &l2lo) };
        let lo = &two * (klo + lmlo);
        let hi = &two * (khi + lmhi);
        if &hi - &lo <= width_goal {
            return Ok((lo, hi));
        }
        terms *= 2;
    }
}

/// Dyadic rational with denominator `2^(precision+1)` within `2^-precision`
/// of `ln c`.
pub fn ln_dyadic(c: &Rational, precision: u32) -> Result<Rational> {
    let (lo, hi) = ln_enclosure(c, precision + 2)?;
    let mid = (lo + hi) / Rational::from_integer(2.into());
    let scale = pow2(precision as i64 + 1);
    let rounded = (mid * &scale).round();
    Ok(rounded / scale)
}

/// Logarithm of a positive rational in the requested representation.
pub fn base_log(c: &Rational, mode: LogMode) -> Result<LogValue> {
    if !c.is_positive() {
        return Err(Error::NotPositive);
    }
    if c.is_one() {
        return Ok(LogValue::ExactZero);
    }
    match mode {
        LogMode::Symbolic => Ok(LogValue::SymbolicLog(c.clone())),
        LogMode::Dyadic(0) => Err(Error::Usage("dyadic precision must be at least 1".into())),
        LogMode::Dyadic(p) => Ok(LogValue::Dyadic { approx: ln_dyadic(c, p)?, precision: p }),
    }
}
