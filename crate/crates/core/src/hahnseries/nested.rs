//! Regrouping `k((G))` as `(k((H_j)))((G/H_j))`: the outer exponents are the
//! first `j` coordinates, the inner series carry the remaining `r - j`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{s_cmp, Cutoff, Series};
use crate::error::{Error, Result};
use crate::ordgroup::{ConvexLevel, GroupElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NestedSeries {
    split: ConvexLevel,
    rank: usize,
    /// Outer exponent (rank `j`) to nonzero inner series (rank `r - j`).
    outer: BTreeMap<GroupElement, Series>,
    /// Cutoff of the flat series.
    cutoff: Cutoff,
}

impl NestedSeries {
    pub fn split(&self) -> ConvexLevel {
        self.split
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cutoff(&self) -> &Cutoff {
        &self.cutoff
    }

    pub fn outer(&self) -> impl Iterator<Item = (&GroupElement, &Series)> {
        self.outer.iter()
    }

    pub fn inner(&self, key: &GroupElement) -> Option<&Series> {
        self.outer.get(key)
    }

    /// Inner series at `key`, including the implicit `0` or `O(u^c)` for
    /// keys without terms.
    fn inner_or_default(&self, key: &GroupElement) -> Series {
        if let Some(s) = self.outer.get(key) {
            return s.clone();
        }
        match &self.cutoff {
            Cutoff::Finite(c) => {
                let (head, tail) = c.split_at(self.split.0);
                if &head == key {
                    Series::big_o(tail)
                } else {
                    Series::zero(self.rank - self.split.0)
                }
            }
            Cutoff::Infinity => Series::zero(self.rank - self.split.0),
        }
    }
}

pub fn regroup(a: &Series, level: ConvexLevel) -> Result<NestedSeries> {
    let (r, j) = (a.rank(), level.0);
    if j == 0 || j >= r {
        return Err(Error::InvalidLevel { level: j, rank: r });
    }
    let boundary = match a.cutoff() {
        Cutoff::Finite(c) => Some(c.split_at(j)),
        Cutoff::Infinity => None,
    };
    let mut groups: BTreeMap<GroupElement, Vec<_>> = BTreeMap::new();
    for (e, c) in a.terms() {
        let (head, tail) = e.split_at(j);
        groups.entry(head).or_default().push((tail, c.clone()));
    }
    let mut outer = BTreeMap::new();
    for (head, terms) in groups {
        let inner_cutoff = match &boundary {
            Some((bh, bt)) if *bh == head => Cutoff::Finite(bt.clone()),
            _ => Cutoff::Infinity,
        };
        outer.insert(head, Series::from_terms(r - j, terms, inner_cutoff)?);
    }
    Ok(NestedSeries { split: level, rank: r, outer, cutoff: a.cutoff().clone() })
}

pub fn flatten(n: &NestedSeries) -> Series {
    let terms =
        n.outer.iter().flat_map(|(head, inner)| inner.terms().map(move |(tail, c)| (head.concat(tail), c.clone())));
    Series::from_terms(n.rank, terms, n.cutoff.clone()).expect("nested ranks are consistent")
}

/// Order on nested series: the first outer exponent whose inner series
/// differ decides, via the order of the inner field.
pub fn nested_cmp(a: &NestedSeries, b: &NestedSeries) -> Result<Ordering> {
    if a.rank != b.rank {
        return Err(Error::RankMismatch { expected: a.rank, found: b.rank });
    }
    if a.split != b.split {
        return Err(Error::InvalidLevel { level: b.split.0, rank: b.rank });
    }
    let bound = a.cutoff.clone().min(b.cutoff.clone());
    let bound_head = match &bound {
        Cutoff::Finite(c) => Some(c.split_at(a.split.0).0),
        Cutoff::Infinity => None,
    };
    let mut keys: BTreeSet<&GroupElement> = a.outer.keys().chain(b.outer.keys()).collect();
    if let Some(h) = &bound_head {
        keys.insert(h);
    }
    for key in keys {
        if bound_head.as_ref().is_some_and(|h| key > h) {
            break;
        }
        match s_cmp(&a.inner_or_default(key), &b.inner_or_default(key))? {
            Ordering::Equal => continue,
            o => return Ok(o),
        }
    }
    if bound.is_finite() {
        Err(Error::AmbiguousComparison)
    } else {
        Ok(Ordering::Equal)
    }
}

impl fmt::Display for NestedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (head, inner)) in self.outer.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{head}: {}", inner.display_with("u"))?;
        }
        f.write_str("}")
    }
}
