//! Series in `K = Q((G))` with finite support and an optional cutoff.
//!
//! A series with cutoff `c` is trusted strictly below `c`: every stored
//! exponent is `< c`, and nothing is claimed about exponents `>= c`. The
//! cutoff `Infinity` marks an exact element. Cutoff arithmetic follows the
//! usual big-O rules:
//!
//! * `a + b` is known below `min(c_a, c_b)`;
//! * `a * b` is known below `min(c_a + w(b), c_b + w(a))`.

mod decompose;
mod display;
mod nested;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ordgroup::GroupElement;
use crate::Rational;

pub use decompose::{decompose_additive, decompose_multiplicative, minus_w, AdditiveDecomposition, MultDecomposition};
pub use display::SeriesDisplay;
pub use nested::{flatten, nested_cmp, regroup, NestedSeries};

/// Truncation bound of a series. `Finite` sorts below `Infinity`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cutoff {
    Finite(GroupElement),
    Infinity,
}

impl Cutoff {
    pub fn is_finite(&self) -> bool {
        matches!(self, Cutoff::Finite(_))
    }

    /// True if exponent `e` lies strictly below the bound.
    pub fn admits(&self, e: &GroupElement) -> bool {
        match self {
            Cutoff::Finite(c) => e < c,
            Cutoff::Infinity => true,
        }
    }

    /// The bound translated by `g`.
    pub fn shift(&self, g: &GroupElement) -> Cutoff {
        match self {
            Cutoff::Finite(c) => Cutoff::Finite(c + g),
            Cutoff::Infinity => Cutoff::Infinity,
        }
    }

    pub fn rank(&self) -> Option<usize> {
        match self {
            Cutoff::Finite(c) => Some(c.rank()),
            Cutoff::Infinity => None,
        }
    }

    fn check_rank(&self, rank: usize) -> Result<()> {
        match self {
            Cutoff::Finite(c) => c.check_rank(rank),
            Cutoff::Infinity => Ok(()),
        }
    }
}

/// A finite-support generalized power series, exact below its cutoff.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Series {
    rank: usize,
    terms: BTreeMap<GroupElement, Rational>,
    cutoff: Cutoff,
}

impl Series {
    pub fn zero(rank: usize) -> Self {
        Series { rank, terms: BTreeMap::new(), cutoff: Cutoff::Infinity }
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, Rational::one())
    }

    pub fn constant(rank: usize, c: Rational) -> Self {
        Self::monomial(c, GroupElement::zero(rank))
    }

    /// `c * t^e`, exact.
    pub fn monomial(c: Rational, e: GroupElement) -> Self {
        let mut s = Series::zero(e.rank());
        if !c.is_zero() {
            s.terms.insert(e, c);
        }
        s
    }

    /// The zero series known only below `cutoff`: `O(t^cutoff)`.
    pub fn big_o(cutoff: GroupElement) -> Self {
        Series { rank: cutoff.rank(), terms: BTreeMap::new(), cutoff: Cutoff::Finite(cutoff) }
    }

    /// Collects terms (summing repeated exponents) and truncates at `cutoff`.
    pub fn from_terms<I>(rank: usize, terms: I, cutoff: Cutoff) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, Rational)>,
    {
        cutoff.check_rank(rank)?;
        let mut s = Series { rank, terms: BTreeMap::new(), cutoff };
        for (e, c) in terms {
            e.check_rank(rank)?;
            s.add_term(e, c);
        }
        Ok(s)
    }

    /// Adds `c t^e` in place, dropping it if `e` is at or above the cutoff.
    fn add_term(&mut self, e: GroupElement, c: Rational) {
        if c.is_zero() || !self.cutoff.admits(&e) {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> &Cutoff {
        &self.cutoff
    }

    pub fn is_exact(&self) -> bool {
        self.cutoff == Cutoff::Infinity
    }

    /// No stored terms (the series is `0` or `O(t^c)`).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_exact_zero(&self) -> bool {
        self.terms.is_empty() && self.is_exact()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&GroupElement, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &GroupElement) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Term with the least exponent.
    pub fn lead(&self) -> Option<(&GroupElement, &Rational)> {
        self.terms.iter().next()
    }

    /// Lowers the cutoff to `min(current, bound)`, dropping terms above it.
    pub fn truncate(&self, bound: &Cutoff) -> Result<Series> {
        bound.check_rank(self.rank)?;
        let cutoff = self.cutoff.clone().min(bound.clone());
        let terms = self.terms.iter().filter(|(e, _)| cutoff.admits(e)).map(|(e, c)| (e.clone(), c.clone())).collect();
        Ok(Series { rank: self.rank, terms, cutoff })
    }

    /// Multiplies by the scalar `k`.
    pub fn scale(&self, k: &Rational) -> Series {
        if k.is_zero() {
            return Series::zero(self.rank);
        }
        Series {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
            cutoff: self.cutoff.clone(),
        }
    }

    /// Multiplies by `t^g`.
    pub fn shift(&self, g: &GroupElement) -> Result<Series> {
        g.check_rank(self.rank)?;
        Ok(Series {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e + g, c.clone())).collect(),
            cutoff: self.cutoff.shift(g),
        })
    }

    fn check_same_rank(&self, other: &Series) -> Result<()> {
        if self.rank == other.rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: self.rank, found: other.rank })
        }
    }

    /// A lower bound for the value, usable in cutoff bookkeeping: the least
    /// exponent if there is one, else the cutoff. `None` for exact zero.
    fn value_floor(&self) -> Option<GroupElement> {
        match (self.lead(), &self.cutoff) {
            (Some((e, _)), _) => Some(e.clone()),
            (None, Cutoff::Finite(c)) => Some(c.clone()),
            (None, Cutoff::Infinity) => None,
        }
    }
}

pub fn s_add(a: &Series, b: &Series) -> Result<Series> {
    a.check_same_rank(b)?;
    let cutoff = a.cutoff.clone().min(b.cutoff.clone());
    let mut out = Series { rank: a.rank, terms: BTreeMap::new(), cutoff };
    for (e, c) in a.terms.iter().chain(b.terms.iter()) {
        out.add_term(e.clone(), c.clone());
    }
    Ok(out)
}

pub fn s_neg(a: &Series) -> Series {
    a.scale(&-Rational::one())
}

pub fn s_sub(a: &Series, b: &Series) -> Result<Series> {
    s_add(a, &s_neg(b))
}

/// Cauchy product over the finite supports.
pub fn s_mul(a: &Series, b: &Series) -> Result<Series> {
    a.check_same_rank(b)?;
    let (Some(wa), Some(wb)) = (a.value_floor(), b.value_floor()) else {
        return Ok(Series::zero(a.rank));
    };
    let cutoff = a.cutoff.shift(&wb).min(b.cutoff.shift(&wa));
    Ok(mul_below(a, b, cutoff))
}

/// Product of the stored terms, keeping only exponents below `bound` and
/// giving the result that cutoff.
pub(crate) fn mul_below(a: &Series, b: &Series, bound: Cutoff) -> Series {
    let mut out = Series { rank: a.rank, terms: BTreeMap::new(), cutoff: bound };
    for (ea, ca) in &a.terms {
        for (eb, cb) in &b.terms {
            let e = ea + eb;
            if out.cutoff.admits(&e) {
                out.add_term(e, ca * cb);
            } else {
                // exponents of b increase, so the rest of this row is out too
                break;
            }
        }
    }
    out
}

/// Canonical valuation `w`: the least exponent of the support.
pub fn s_val(a: &Series) -> Result<GroupElement> {
    match a.lead() {
        Some((e, _)) => Ok(e.clone()),
        None if a.is_exact() => Err(Error::ZeroHasNoValue),
        None => Err(Error::ValueAboveCutoff),
    }
}

/// Field order: the sign of the leading coefficient of `a - b`.
pub fn s_cmp(a: &Series, b: &Series) -> Result<Ordering> {
    let d = s_sub(a, b)?;
    match d.lead() {
        Some((_, c)) if c.is_positive() => Ok(Ordering::Greater),
        Some(_) => Ok(Ordering::Less),
        None if d.is_exact() => Ok(Ordering::Equal),
        None => Err(Error::AmbiguousComparison),
    }
}

/// Sign of `a` in the field order.
pub fn s_sign(a: &Series) -> Result<Ordering> {
    s_cmp(a, &Series::zero(a.rank()))
}

/// Least `n >= 0` with `n * w >= bound`, for `w > 0`. Fails when every
/// multiple of `w` stays below `bound`, which happens exactly when `bound`
/// lives in a strictly larger archimedean class than `w` and is positive.
pub(crate) fn powers_needed(w: &GroupElement, bound: &GroupElement) -> Result<u64> {
    debug_assert!(w.is_positive());
    if !bound.is_positive() {
        return Ok(0);
    }
    let i = w.coords().iter().position(|c| !c.is_zero()).expect("w > 0");
    let j = bound.coords().iter().position(|c| !c.is_zero()).expect("bound > 0");
    if j < i {
        return Err(Error::CutoffUnreachable);
    }
    if j > i {
        return Ok(1);
    }
    let ratio = &bound.coords()[j] / &w.coords()[i];
    let n0 = ratio.ceil().to_integer();
    let n = Rational::from_integer(n0.clone());
    let reached = &w.scale(&n) >= bound;
    let n0: u64 = num_traits::ToPrimitive::to_u64(&n0).ok_or(Error::CutoffUnreachable)?;
    Ok(if reached { n0 } else { n0 + 1 })
}

/// `Σ_{n >= 0} coeff(n) · eps^n` for an infinitesimal `eps`, truncated below
/// `bound`.
///
/// Powers are accumulated until `n · w(eps) >= bound`; beyond that point every
/// exponent is at or above the bound. An exact zero `eps` gives the exact
/// constant `coeff(0)`.
pub(crate) fn compose_power_series<F>(eps: &Series, bound: &Cutoff, coeff: F) -> Result<Series>
where
    F: Fn(u64) -> Rational,
{
    let rank = eps.rank();
    if eps.is_exact_zero() {
        return Ok(Series::constant(rank, coeff(0)));
    }
    bound.check_rank(rank)?;
    if eps.cutoff() < bound {
        return Err(Error::CutoffTooCoarse);
    }
    let Cutoff::Finite(limit) = bound else {
        return Err(Error::InfiniteExpansion);
    };
    let w = match eps.value_floor() {
        Some(w) if w.is_positive() => w,
        _ => return Err(Error::NotInfinitesimal),
    };
    let count = powers_needed(&w, limit)?;
    // known part of eps, already below the bound
    let eps = eps.truncate(bound)?;
    let eps = Series { cutoff: Cutoff::Infinity, ..eps };

    let mut out = Series { rank, terms: BTreeMap::new(), cutoff: bound.clone() };
    let mut power = Series::one(rank);
    for n in 0..count {
        if n > 0 {
            power = mul_below(&power, &eps, bound.clone());
        }
        let c = coeff(n);
        if !c.is_zero() {
            for (e, p) in &power.terms {
                out.add_term(e.clone(), p * &c);
            }
        }
    }
    Ok(out)
}

/// Multiplicative inverse, truncated at `target`.
///
/// Writes `a = c·t^g·(1 + ε)` and expands `c⁻¹·t^{-g}·Σ (-ε)^n`. Monomials
/// invert exactly regardless of `target`.
pub fn s_invert(a: &Series, target: &Cutoff) -> Result<Series> {
    target.check_rank(a.rank())?;
    let (g, c) = match a.lead() {
        Some((g, c)) => (g.clone(), c.clone()),
        None if a.is_exact() => return Err(Error::ZeroDivision),
        None => return Err(Error::ValueAboveCutoff),
    };
    let c_inv = c.recip();
    let neg_g = -&g;
    if a.is_exact() && a.len() == 1 {
        return Ok(Series::monomial(c_inv, neg_g));
    }
    // ε = a / (c t^g) - 1
    let eps = s_sub(&a.scale(&c_inv).shift(&neg_g)?, &Series::one(a.rank()))?;
    let geometric =
        compose_power_series(&eps, &target.shift(&g), |n| if n % 2 == 0 { Rational::one() } else { -Rational::one() })?;
    geometric.scale(&c_inv).shift(&neg_g)
}

/// Exact quotient `a / b`, with `b⁻¹` truncated at `target`.
pub fn s_div(a: &Series, b: &Series, target: &Cutoff) -> Result<Series> {
    a.check_same_rank(b)?;
    let inv_target = match (target, a.value_floor()) {
        (Cutoff::Finite(t), Some(w)) => Cutoff::Finite(t - &w),
        (Cutoff::Finite(_), None) => return Ok(Series::zero(a.rank())),
        (Cutoff::Infinity, _) => Cutoff::Infinity,
    };
    s_mul(a, &s_invert(b, &inv_target)?)
}

/// Residue map `R_w → k`: the constant coefficient.
pub fn residue(a: &Series) -> Result<Rational> {
    if let Some((e, _)) = a.lead() {
        if e.is_negative() {
            return Err(Error::NotInValuationRing);
        }
    }
    let zero = GroupElement::zero(a.rank());
    if !a.cutoff().admits(&zero) {
        return Err(Error::CutoffTooCoarse);
    }
    Ok(a.coeff(&zero))
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        s_add(self, rhs).expect("rank mismatch in Series addition")
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        s_sub(self, rhs).expect("rank mismatch in Series subtraction")
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        s_mul(self, rhs).expect("rank mismatch in Series multiplication")
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        s_neg(self)
    }
}
