//! Canonical text form.
//!
//! Terms are printed in increasing exponent order, coefficients as reduced
//! fractions, `t^0` as a bare constant and the rank-1 exponent `1` as `t`.
//! Truncated series end with `+ O(t^c)`. The output parses back to the same
//! series.

use std::fmt;

use num_traits::{One, Signed};

use super::{Cutoff, Series};
use crate::ordgroup::GroupElement;

/// [`Series`] printed with a chosen variable name.
pub struct SeriesDisplay<'a> {
    series: &'a Series,
    var: &'a str,
}

impl Series {
    pub fn display_with<'a>(&'a self, var: &'a str) -> SeriesDisplay<'a> {
        SeriesDisplay { series: self, var }
    }
}

fn write_exponent(f: &mut fmt::Formatter<'_>, e: &GroupElement) -> fmt::Result {
    if e.rank() == 1 {
        return write!(f, "{}", e.coords()[0]);
    }
    f.write_str("(")?;
    for (i, c) in e.coords().iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{c}")?;
    }
    f.write_str(")")
}

fn write_mono(f: &mut fmt::Formatter<'_>, var: &str, e: &GroupElement) -> fmt::Result {
    if e.rank() == 1 && e.coords()[0].is_one() {
        return f.write_str(var);
    }
    write!(f, "{var}^")?;
    write_exponent(f, e)
}

impl fmt::Display for SeriesDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self.series;
        let mut first = true;
        for (e, c) in s.terms() {
            let negative = c.is_negative();
            match (first, negative) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let magnitude = c.abs();
            if e.is_zero() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write_mono(f, self.var, e)?;
            } else {
                write!(f, "{magnitude}*")?;
                write_mono(f, self.var, e)?;
            }
        }
        match s.cutoff() {
            Cutoff::Finite(c) => {
                if !first {
                    f.write_str(" + ")?;
                }
                f.write_str("O(")?;
                write_mono(f, self.var, c)?;
                f.write_str(")")
            }
            Cutoff::Infinity if first => f.write_str("0"),
            Cutoff::Infinity => Ok(()),
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with("t").fmt(f)
    }
}

impl fmt::Display for Cutoff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cutoff::Finite(c) => write_exponent(f, c),
            Cutoff::Infinity => f.write_str("inf"),
        }
    }
}
