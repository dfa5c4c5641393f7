//! Logarithms on `K = Q((G))`.
//!
//! A positive `a = c·t^g·(1 + ε)` has logarithm
//!
//! ```text
//! log a = h(-g) + ln c + log(1 + ε)
//! ```
//!
//! where `h` is a logarithmic cross-section (an order embedding of `G` into the
//! purely infinite series), `ln c` is handled by [`base_log`], and
//! `log(1 + ε)` is the usual power series. The map is an order embedding of
//! `(K^{>0}, ·)` into `(K, +)` but it is never onto: the purely infinite part of
//! every logarithm lies in `h(G)`, which misses most of `k^{G^{<0}}`. The
//! exponential is therefore partial, and [`full_exp`] reports
//! [`Error::NotInLogDomain`] outside the image.

mod base_log;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use base_log::{base_log, ln_dyadic, ln_enclosure, LogMode, LogValue};

use crate::error::{Error, Result};
use crate::hahnseries::{
    compose_power_series, decompose_additive, decompose_multiplicative, residue, s_add, s_cmp, s_sub, Cutoff, Series,
};
use crate::ordgroup::{nat_val, ArchClass, GroupElement};
use crate::Rational;

/// The data `(σ, τ)` of a logarithmic cross-section `h = σ̂ ∘ τ ∘ ρ`.
///
/// `reps[i-1]` is the representative `σ(i) < 0` of archimedean class `i`;
/// `scales[i-1] > 0` is the component embedding `τ_i(q) = scales[i-1] · q`
/// (every additive order embedding `Q → Q` has this form).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSection {
    rank: usize,
    reps: Vec<GroupElement>,
    scales: Vec<Rational>,
}

impl CrossSection {
    /// `σ(i) = -e_i`, `τ_i = id`.
    pub fn standard(rank: usize) -> Self {
        CrossSection {
            rank,
            reps: (1..=rank).map(|i| -GroupElement::unit(rank, i)).collect(),
            scales: vec![Rational::one(); rank],
        }
    }

    pub fn new(reps: Vec<GroupElement>, scales: Vec<Rational>) -> Result<Self> {
        let rank = reps.len();
        if rank == 0 || scales.len() != rank {
            return Err(Error::InvalidCrossSection(format!("{} representatives for {} scales", rank, scales.len())));
        }
        for (i, rep) in reps.iter().enumerate() {
            rep.check_rank(rank)?;
            if !rep.is_negative() {
                return Err(Error::InvalidCrossSection(format!("representative {rep} is not negative")));
            }
            if nat_val(rep) != ArchClass::Finite(i + 1) {
                return Err(Error::InvalidCrossSection(format!(
                    "representative {rep} does not lie in class {}",
                    i + 1
                )));
            }
        }
        if let Some(s) = scales.iter().find(|s| !s.is_positive()) {
            return Err(Error::InvalidCrossSection(format!("component scale {s} is not positive")));
        }
        if reps.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidCrossSection("representatives are not increasing".into()));
        }
        Ok(CrossSection { rank, reps, scales })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

/// `σ(γ)`, the representative of a finite archimedean class.
pub fn sigma(cs: &CrossSection, class: ArchClass) -> Result<GroupElement> {
    match class {
        ArchClass::Finite(i) if (1..=cs.rank).contains(&i) => Ok(cs.reps[i - 1].clone()),
        other => Err(Error::InvalidClass(format!("{other} at rank {}", cs.rank))),
    }
}

/// The cross-section `h(g) = Σ_i τ_i(g_i) · t^{σ(i)}`.
pub fn left_log_h(cs: &CrossSection, g: &GroupElement) -> Result<Series> {
    g.check_rank(cs.rank)?;
    let terms = g.coords().iter().zip(&cs.reps).zip(&cs.scales).map(|((gi, rep), scale)| (rep.clone(), gi * scale));
    Series::from_terms(cs.rank, terms, Cutoff::Infinity)
}

/// `h⁻¹(p)` for a purely infinite exact `p`, or `None` if `p ∉ h(G)`.
pub fn left_log_preimage(cs: &CrossSection, p: &Series) -> Option<GroupElement> {
    if p.rank() != cs.rank || !p.is_exact() {
        return None;
    }
    let mut coords = vec![Rational::zero(); cs.rank];
    for (e, c) in p.terms() {
        let i = cs.reps.iter().position(|rep| rep == e)?;
        coords[i] = c / &cs.scales[i];
    }
    Some(GroupElement::new(coords))
}

/// Whether the purely infinite part of `s` is a value of the cross-section.
pub fn in_left_log_image(cs: &CrossSection, s: &Series) -> Result<bool> {
    if !s.is_exact() {
        return Err(Error::TruncatedInput);
    }
    if s.rank() != cs.rank {
        return Err(Error::RankMismatch { expected: cs.rank, found: s.rank() });
    }
    Ok(left_log_preimage(cs, &decompose_additive(s).infinite_part).is_some())
}

/// An exact element outside the image of every logarithm built on `cs`:
/// `t^{2σ(1)}`.
pub fn witness_not_in_image(cs: &CrossSection) -> Series {
    Series::monomial(Rational::one(), cs.reps[0].scale(&Rational::from_integer(2.into())))
}

fn check_infinitesimal(x: &Series) -> Result<()> {
    match x.lead() {
        Some((e, _)) if !e.is_positive() => Err(Error::NotInfinitesimal),
        _ => Ok(()),
    }
}

/// `log(1 + ε) = Σ_{n>=1} (-1)^{n+1} ε^n / n`, truncated at `target`.
pub fn log1p(eps: &Series, target: &Cutoff) -> Result<Series> {
    check_infinitesimal(eps)?;
    if eps.is_exact_zero() {
        return Ok(Series::zero(eps.rank()));
    }
    compose_power_series(eps, target, |n| {
        if n == 0 {
            return Rational::zero();
        }
        let c = Rational::new(BigInt::one(), BigInt::from(n));
        if n % 2 == 1 {
            c
        } else {
            -c
        }
    })
}

/// `exp(x) = Σ_{n>=0} x^n / n!` for infinitesimal `x`, truncated at `target`.
pub fn exp_small(x: &Series, target: &Cutoff) -> Result<Series> {
    check_infinitesimal(x)?;
    compose_power_series(x, target, |n| {
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        Rational::new(BigInt::one(), fact)
    })
}

/// Logarithm of a positive element, split into its three parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogResult {
    /// `h(-w(a))`, supported on `G^{<0}`.
    pub infinite_part: Series,
    /// `ln` of the leading coefficient.
    pub const_part: LogValue,
    /// `log(1 + ε)`, infinitesimal and truncated.
    pub small_part: Series,
}

impl LogResult {
    /// The logarithm as one series, available when the constant part is zero.
    pub fn to_series(&self) -> Option<Series> {
        match self.const_part {
            LogValue::ExactZero => s_add(&self.infinite_part, &self.small_part).ok(),
            _ => None,
        }
    }

    /// Partwise sum, the image of a product.
    pub fn combine(&self, other: &LogResult) -> Result<LogResult> {
        Ok(LogResult {
            infinite_part: s_add(&self.infinite_part, &other.infinite_part)?,
            const_part: self.const_part.add(&other.const_part)?,
            small_part: s_add(&self.small_part, &other.small_part)?,
        })
    }

    /// Order of the represented sums: infinite parts first, then constants,
    /// then the infinitesimal parts.
    pub fn cmp_parts(&self, other: &LogResult) -> Result<Ordering> {
        match s_cmp(&self.infinite_part, &other.infinite_part)? {
            Ordering::Equal => {}
            o => return Ok(o),
        }
        match self.const_part.cmp_value(&other.const_part)? {
            Ordering::Equal => {}
            o => return Ok(o),
        }
        s_cmp(&self.small_part, &other.small_part)
    }
}

impl fmt::Display for LogResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {} | {}", self.infinite_part, self.const_part, self.small_part)
    }
}

/// `log a` for positive `a`; the infinitesimal part is truncated at `target`.
pub fn full_log(cs: &CrossSection, a: &Series, target: &Cutoff, mode: LogMode) -> Result<LogResult> {
    if a.rank() != cs.rank {
        return Err(Error::RankMismatch { expected: cs.rank, found: a.rank() });
    }
    let d = decompose_multiplicative(a)?;
    Ok(LogResult {
        infinite_part: left_log_h(cs, &-&d.value)?,
        const_part: base_log(&d.lead, mode)?,
        small_part: log1p(&d.one_unit_tail, target)?,
    })
}

/// Exponential of an exact series, truncated at `target`.
///
/// Defined only when the purely infinite part lies in `h(G)`
/// ([`Error::NotInLogDomain`] otherwise) and the constant coefficient is `0`
/// ([`Error::ConstantNotExponentiable`] otherwise, since `e^q` is irrational
/// for rational `q ≠ 0`).
pub fn full_exp(cs: &CrossSection, x: &Series, target: &Cutoff) -> Result<Series> {
    if !x.is_exact() {
        return Err(Error::TruncatedInput);
    }
    if x.rank() != cs.rank {
        return Err(Error::RankMismatch { expected: cs.rank, found: x.rank() });
    }
    let split = decompose_additive(x);
    let g = left_log_preimage(cs, &split.infinite_part).ok_or(Error::NotInLogDomain)?;
    let c0 = residue(&split.bounded_part)?;
    if !c0.is_zero() {
        return Err(Error::ConstantNotExponentiable);
    }
    exp_parts(&g, &Rational::one(), &split.bounded_part, target)
}

/// Inverse of [`full_log`] on its three-part output. Symbolic constants
/// `ln c` exponentiate exactly to `c`.
pub fn full_exp_parts(cs: &CrossSection, log: &LogResult, target: &Cutoff) -> Result<Series> {
    let g = left_log_preimage(cs, &log.infinite_part).ok_or(Error::NotInLogDomain)?;
    if !decompose_additive(&log.infinite_part).bounded_part.is_exact_zero() {
        return Err(Error::NotInLogDomain);
    }
    let c = match &log.const_part {
        LogValue::ExactZero => Rational::one(),
        LogValue::SymbolicLog(c) => c.clone(),
        LogValue::Dyadic { .. } => return Err(Error::ConstantNotExponentiable),
    };
    exp_parts(&g, &c, &log.small_part, target)
}

/// `c · t^{-g} · exp(small)`.
fn exp_parts(g: &GroupElement, c: &Rational, small: &Series, target: &Cutoff) -> Result<Series> {
    let e = exp_small(small, &target.shift(g))?;
    e.scale(c).shift(&-g)
}

/// `full_log(a) - full_log(b)` style helper for tests and examples: true if
/// two series agree below the smaller of their cutoffs.
pub fn agree_below_cutoff(a: &Series, b: &Series) -> Result<bool> {
    let d = s_sub(a, b)?;
    Ok(d.is_empty())
}
