//! Splitting `K` along the canonical valuation: the additive group as
//! (purely infinite part) ⊕ (valuation ring), and the positive cone as
//! (monomials `t^g`) × (positive units `c·(1 + ε)`).

use std::cmp::Ordering;

use super::{s_add, s_cmp, s_invert, s_mul, s_sub, s_val, Cutoff, Series};
use crate::error::{Error, Result};
use crate::ordgroup::GroupElement;
use crate::Rational;

/// `a = infinite_part + bounded_part`, with the infinite part supported on
/// `G^{<0}` (the Hahn product complement of the valuation ring) and the
/// bounded part on `G^{>=0}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdditiveDecomposition {
    pub infinite_part: Series,
    pub bounded_part: Series,
}

impl AdditiveDecomposition {
    pub fn reconstruct(&self) -> Series {
        s_add(&self.infinite_part, &self.bounded_part).expect("parts share a rank")
    }
}

/// `a = lead · t^value · (1 + one_unit_tail)` with `lead > 0` and
/// `w(one_unit_tail) > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultDecomposition {
    pub value: GroupElement,
    pub lead: Rational,
    pub one_unit_tail: Series,
}

impl MultDecomposition {
    pub fn reconstruct(&self) -> Series {
        let rank = self.value.rank();
        let unit = s_add(&Series::one(rank), &self.one_unit_tail).expect("same rank");
        let mono = Series::monomial(self.lead.clone(), self.value.clone());
        s_mul(&mono, &unit).expect("same rank")
    }
}

pub fn decompose_additive(a: &Series) -> AdditiveDecomposition {
    let rank = a.rank();
    let zero = GroupElement::zero(rank);
    // the infinite part is complete unless the cutoff itself sits at or below 0
    let inf_cutoff = match a.cutoff() {
        Cutoff::Finite(c) if *c <= zero => Cutoff::Finite(c.clone()),
        _ => Cutoff::Infinity,
    };
    let (neg, rest): (Vec<_>, Vec<_>) =
        a.terms().map(|(e, c)| (e.clone(), c.clone())).partition(|(e, _)| e.is_negative());
    AdditiveDecomposition {
        infinite_part: Series::from_terms(rank, neg, inf_cutoff).expect("same rank"),
        bounded_part: Series::from_terms(rank, rest, a.cutoff().clone()).expect("same rank"),
    }
}

/// Decomposes a positive element. The tail is obtained by dividing `a` by its
/// leading monomial.
pub fn decompose_multiplicative(a: &Series) -> Result<MultDecomposition> {
    if s_cmp(a, &Series::zero(a.rank()))? != Ordering::Greater {
        return Err(Error::NotPositive);
    }
    let value = s_val(a)?;
    let lead = a.coeff(&value);
    let mono_inv = s_invert(&Series::monomial(lead.clone(), value.clone()), &Cutoff::Infinity)?;
    let one_unit_tail = s_sub(&s_mul(a, &mono_inv)?, &Series::one(a.rank()))?;
    Ok(MultDecomposition { value, lead, one_unit_tail })
}

/// `-w(a) = w(a⁻¹)` on positive elements.
pub fn minus_w(a: &Series) -> Result<GroupElement> {
    if s_cmp(a, &Series::zero(a.rank()))? != Ordering::Greater {
        return Err(Error::NotPositive);
    }
    Ok(-s_val(a)?)
}
