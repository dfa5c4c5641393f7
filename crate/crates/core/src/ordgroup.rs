//! The exponent group `G = Q^r` under the lexicographic order.
//!
//! The first coordinate is the most significant. Archimedean classes are the
//! coordinate indices `1..=r` (class `i` holds the elements whose first nonzero
//! coordinate sits at index `i`), so the natural valuation of an element is the
//! position of its first nonzero coordinate. Smaller class means archimedean
//! larger element. The convex subgroups are exactly
//! `H_j = { g : g_1 = ... = g_j = 0 }` for `0 <= j <= r`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

/// An element of `Q^r`.
///
/// Rank `0` is permitted only as the image of the full quotient `G / H_0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    coords: Vec<Rational>,
}

/// Archimedean class `[a]`, the value of the natural valuation.
///
/// `Finite(i)` is the (1-based) index of the first nonzero coordinate;
/// `Infinity` is reserved for the zero element. The derived order puts every
/// finite class below `Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArchClass {
    Finite(usize),
    Infinity,
}

/// The convex subgroup `H_j` of elements whose first `j` coordinates vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConvexLevel(pub usize);

impl GroupElement {
    pub fn new(coords: Vec<Rational>) -> Self {
        GroupElement { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        GroupElement { coords: coords.iter().map(|&c| Rational::from_integer(c.into())).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        GroupElement { coords: vec![Rational::zero(); rank] }
    }

    /// The `i`-th unit vector, 1-based.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut g = Self::zero(rank);
        g.coords[i - 1] = Rational::from_integer(1.into());
        g
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// Sign in the group order.
    pub fn signum(&self) -> Ordering {
        match self.coords.iter().find(|c| !c.is_zero()) {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() == rank {
            Ok(())
        } else {
            Err(Error::RankMismatch { expected: rank, found: self.rank() })
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        GroupElement { coords: self.coords.iter().map(|c| c * k).collect() }
    }

    /// Concatenation: `(a_1..a_j) ++ (b_1..b_k)`.
    pub fn concat(&self, tail: &GroupElement) -> Self {
        let mut coords = self.coords.clone();
        coords.extend(tail.coords.iter().cloned());
        GroupElement { coords }
    }

    /// Split into the first `j` coordinates and the rest.
    pub fn split_at(&self, j: usize) -> (GroupElement, GroupElement) {
        let (head, tail) = self.coords.split_at(j);
        (GroupElement::new(head.to_vec()), GroupElement::new(tail.to_vec()))
    }
}

/// Componentwise sum.
pub fn group_add(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    b.check_rank(a.rank())?;
    Ok(GroupElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect() })
}

pub fn group_sub(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    b.check_rank(a.rank())?;
    Ok(GroupElement { coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect() })
}

/// Lexicographic comparison, deciding at the least index where the
/// coordinates differ.
pub fn group_cmp(a: &GroupElement, b: &GroupElement) -> Result<Ordering> {
    b.check_rank(a.rank())?;
    Ok(a.coords.cmp(&b.coords))
}

/// Natural valuation `v_G`.
pub fn nat_val(a: &GroupElement) -> ArchClass {
    match a.coords.iter().position(|c| !c.is_zero()) {
        Some(i) => ArchClass::Finite(i + 1),
        None => ArchClass::Infinity,
    }
}

/// Image of `a` in `G / H_j`, represented by its first `j` coordinates.
///
/// Levels above the rank are clamped to the rank (the trivial subgroup).
pub fn quotient_by_convex(a: &GroupElement, level: ConvexLevel) -> GroupElement {
    let j = level.0.min(a.rank());
    GroupElement::new(a.coords[..j].to_vec())
}

/// Components of `a` in the Hahn product of its archimedean components
/// `B_i = Q`: one `(class, coefficient)` pair per nonzero coordinate, in
/// increasing class order.
pub fn rho_embed(a: &GroupElement) -> Vec<(ArchClass, Rational)> {
    a.coords
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (ArchClass::Finite(i + 1), c.clone()))
        .collect()
}

/// Inverse of [`rho_embed`] for a known rank.
pub fn rho_unembed(rank: usize, components: &[(ArchClass, Rational)]) -> Result<GroupElement> {
    let mut g = GroupElement::zero(rank);
    for (class, value) in components {
        match *class {
            ArchClass::Finite(i) if (1..=rank).contains(&i) => g.coords[i - 1] += value,
            other => return Err(Error::InvalidClass(format!("{other:?} at rank {rank}"))),
        }
    }
    Ok(g)
}

// Operator impls panic on rank mismatch; use the checked functions above when
// ranks come from untrusted input.

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        group_add(self, rhs).expect("rank mismatch in GroupElement addition")
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        group_sub(self, rhs).expect("rank mismatch in GroupElement subtraction")
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        GroupElement { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Neg for GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        -&self
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() == 1 {
            return write!(f, "{}", self.coords[0]);
        }
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for ArchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ArchClass::Finite(i) => write!(f, "class {i}"),
            ArchClass::Infinity => f.write_str("class inf"),
        }
    }
}
