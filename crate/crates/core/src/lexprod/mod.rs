//! Lexicographic powers `Δ^Γ` with `Γ = N` and `Δ = Z` (distinguished
//! element `0`), restricted to finite supports.
//!
//! Ordering and the `⊕` operation live here; [`oracle`] describes order
//! embeddings `ι: Γ' → Δ^Γ` and [`refute`] runs the construction that finds an
//! element strictly between two points of `ι Γ'` but outside the image.

pub mod oracle;
pub mod refute;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

pub use oracle::{builtin_oracle, EmbeddingOracle, FnOracle, Liar, MovingSupport, ShiftedSingleton, Stutter};
pub use refute::{refute_convexity, refute_convexity_traced, IterationRecord, Witness};

/// An element of `Γ = N`.
pub type Index = u64;

/// An element of `Δ^Γ`. Absent indices carry the distinguished value `0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SupportMap {
    entries: BTreeMap<Index, i64>,
}

/// A finite (hence well ordered) subset of `Γ`.
pub type IndexSet = BTreeSet<Index>;

impl SupportMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a map from `(index, value)` pairs; zero values are dropped and
    /// repeated indices keep the last value.
    pub fn from_pairs<I: IntoIterator<Item = (Index, i64)>>(pairs: I) -> Self {
        let mut m = Self::new();
        for (i, v) in pairs {
            m.set(i, v);
        }
        m
    }

    pub fn get(&self, i: Index) -> i64 {
        self.entries.get(&i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: Index, v: i64) {
        if v == 0 {
            self.entries.remove(&i);
        } else {
            self.entries.insert(i, v);
        }
    }

    pub fn support(&self) -> IndexSet {
        self.entries.keys().copied().collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Index, i64)> + '_ {
        self.entries.iter().map(|(&i, &v)| (i, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// The least index of `supp(a) ∪ supp(b)` at which `a` and `b` differ.
pub fn first_difference(a: &SupportMap, b: &SupportMap) -> Option<Index> {
    a.entries
        .keys()
        .chain(b.entries.keys())
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .find(|&i| a.get(i) != b.get(i))
}

/// Lexicographic order: decided by the values at the least differing index.
pub fn lex_cmp(a: &SupportMap, b: &SupportMap) -> Ordering {
    match first_difference(a, b) {
        Some(i) => a.get(i).cmp(&b.get(i)),
        None => Ordering::Equal,
    }
}

impl Ord for SupportMap {
    fn cmp(&self, other: &Self) -> Ordering {
        lex_cmp(self, other)
    }
}

impl PartialOrd for SupportMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The map `τ: Δ → Δ` with `τδ > δ`, here the successor on `Z`.
pub fn tau(delta: i64) -> i64 {
    delta + 1
}

/// `d ⊕ S`: apply `τ` at every index of `S`, leave the rest unchanged.
pub fn oplus(d: &SupportMap, s: &IndexSet) -> SupportMap {
    let mut out = d.clone();
    for &i in s {
        out.set(i, tau(d.get(i)));
    }
    out
}

impl fmt::Display for SupportMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (i, v)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}:{v}")?;
        }
        f.write_str("}")
    }
}
