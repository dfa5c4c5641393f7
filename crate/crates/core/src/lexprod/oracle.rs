//! Order embeddings `ι: Γ' → Δ^Γ` presented as callbacks.

use std::collections::HashMap;

use super::{Index, SupportMap};
use crate::error::{Error, Result};

/// An order preserving embedding of a cofinal `Γ' ⊆ N` into `Δ^Γ`, together
/// with a (possibly partial) inverse.
///
/// Methods take `&mut self` so that stateful oracles can memoise answers.
pub trait EmbeddingOracle {
    /// `ι(n)` for `n ∈ Γ'`.
    fn forward(&mut self, n: Index) -> SupportMap;

    /// `ι⁻¹(m)`, or `None` when `m` is not in the image.
    fn inverse(&mut self, m: &SupportMap) -> Option<Index>;

    /// Least element of `Γ'` strictly above `after` (the least element of
    /// `Γ'` for `None`). Returns `None` once the enumeration runs out.
    fn next_in_domain(&mut self, after: Option<Index>) -> Option<Index>;
}

/// `n ↦ {0 ↦ n + offset}` on all of `N`.
#[derive(Clone, Debug)]
pub struct ShiftedSingleton {
    pub offset: i64,
}

impl Default for ShiftedSingleton {
    fn default() -> Self {
        ShiftedSingleton { offset: 1 }
    }
}

impl EmbeddingOracle for ShiftedSingleton {
    fn forward(&mut self, n: Index) -> SupportMap {
        SupportMap::from_pairs([(0, n as i64 + self.offset)])
    }

    fn inverse(&mut self, m: &SupportMap) -> Option<Index> {
        if m.support().iter().any(|&i| i != 0) {
            return None;
        }
        let n = m.get(0) - self.offset;
        (n >= 0).then_some(n as Index)
    }

    fn next_in_domain(&mut self, after: Option<Index>) -> Option<Index> {
        Some(after.map_or(0, |a| a + 1))
    }
}

/// `n ↦ {n ↦ value}` on all of `N`: the support walks to the right.
///
/// The embedding is order preserving only for negative `value`; a positive
/// value reverses the order and the refuter reports it as inconsistent.
#[derive(Clone, Debug)]
pub struct MovingSupport {
    pub value: i64,
}

impl Default for MovingSupport {
    fn default() -> Self {
        MovingSupport { value: -1 }
    }
}

impl EmbeddingOracle for MovingSupport {
    fn forward(&mut self, n: Index) -> SupportMap {
        SupportMap::from_pairs([(n, self.value)])
    }

    fn inverse(&mut self, m: &SupportMap) -> Option<Index> {
        let mut it = m.iter();
        match (it.next(), it.next()) {
            (Some((i, v)), None) if v == self.value => Some(i),
            _ => None,
        }
    }

    fn next_in_domain(&mut self, after: Option<Index>) -> Option<Index> {
        Some(after.map_or(0, |a| a + 1))
    }
}

/// `n ↦ {0 ↦ ⌈n / period⌉ + 1}` restricted to the multiples of `period`, the
/// largest subset on which it is injective. Exercises a proper cofinal `Γ'`.
#[derive(Clone, Debug)]
pub struct Stutter {
    pub period: u64,
}

impl Default for Stutter {
    fn default() -> Self {
        Stutter { period: 2 }
    }
}

impl EmbeddingOracle for Stutter {
    fn forward(&mut self, n: Index) -> SupportMap {
        let v = n.div_ceil(self.period) as i64 + 1;
        SupportMap::from_pairs([(0, v)])
    }

    fn inverse(&mut self, m: &SupportMap) -> Option<Index> {
        if m.support().iter().any(|&i| i != 0) {
            return None;
        }
        let v = m.get(0);
        (v >= 1).then(|| (v as u64 - 1) * self.period)
    }

    fn next_in_domain(&mut self, after: Option<Index>) -> Option<Index> {
        let p = self.period;
        Some(after.map_or(0, |a| (a / p + 1) * p))
    }
}

/// A dishonest oracle: `n ↦ {0 ↦ n + 1}` on `N`, but whenever it is asked
/// about an element outside that image it invents a fresh preimage label
/// (beyond [`Liar::FIRST_LABEL`]) and remembers the answer, so `forward` and
/// `inverse` stay mutually consistent on every queried point.
#[derive(Clone, Debug, Default)]
pub struct Liar {
    invented: HashMap<Index, SupportMap>,
    labels: HashMap<SupportMap, Index>,
}

impl Liar {
    pub const FIRST_LABEL: Index = 1 << 40;
}

impl EmbeddingOracle for Liar {
    fn forward(&mut self, n: Index) -> SupportMap {
        match self.invented.get(&n) {
            Some(m) => m.clone(),
            None => SupportMap::from_pairs([(0, n as i64 + 1)]),
        }
    }

    fn inverse(&mut self, m: &SupportMap) -> Option<Index> {
        if m.support().iter().all(|&i| i == 0) && m.get(0) >= 1 {
            return Some(m.get(0) as Index - 1);
        }
        if let Some(&label) = self.labels.get(m) {
            return Some(label);
        }
        let label = Self::FIRST_LABEL + self.invented.len() as Index;
        self.invented.insert(label, m.clone());
        self.labels.insert(m.clone(), label);
        Some(label)
    }

    fn next_in_domain(&mut self, after: Option<Index>) -> Option<Index> {
        match after {
            None => Some(0),
            Some(a) if a + 1 < Self::FIRST_LABEL => Some(a + 1),
            Some(_) => None,
        }
    }
}

/// An oracle assembled from closures, for programmatic use.
pub struct FnOracle<F, I, D>
where
    F: FnMut(Index) -> SupportMap,
    I: FnMut(&SupportMap) -> Option<Index>,
    D: FnMut(Option<Index>) -> Option<Index>,
{
    pub forward: F,
    pub inverse: I,
    pub domain: D,
}

impl<F, I, D> EmbeddingOracle for FnOracle<F, I, D>
where
    F: FnMut(Index) -> SupportMap,
    I: FnMut(&SupportMap) -> Option<Index>,
    D: FnMut(Option<Index>) -> Option<Index>,
{
    fn forward(&mut self, n: Index) -> SupportMap {
        (self.forward)(n)
    }

    fn inverse(&mut self, m: &SupportMap) -> Option<Index> {
        (self.inverse)(m)
    }

    fn next_in_domain(&mut self, after: Option<Index>) -> Option<Index> {
        (self.domain)(after)
    }
}

/// Names accepted by [`builtin_oracle`].
pub const BUILTIN_NAMES: [&str; 4] = ["shifted-singleton", "moving-support", "stutter", "liar"];

/// Looks up a built-in oracle by name. `param` overrides the default integer
/// parameter (offset, value or period respectively; ignored by `liar`).
pub fn builtin_oracle(name: &str, param: Option<i64>) -> Result<Box<dyn EmbeddingOracle>> {
    Ok(match name {
        "shifted-singleton" => Box::new(ShiftedSingleton { offset: param.unwrap_or(1) }),
        "moving-support" => {
            let value = param.unwrap_or(-1);
            if value == 0 {
                return Err(Error::Usage("moving-support value must be nonzero".into()));
            }
            Box::new(MovingSupport { value })
        }
        "stutter" => {
            let period = param.unwrap_or(2);
            if period < 1 {
                return Err(Error::Usage("stutter period must be at least 1".into()));
            }
            Box::new(Stutter { period: period as u64 })
        }
        "liar" => Box::new(Liar::default()),
        other => {
            return Err(Error::Usage(format!(
                "unknown oracle `{other}` (expected one of {})",
                BUILTIN_NAMES.join(", ")
            )))
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round_trips(o: &mut dyn EmbeddingOracle, count: usize) {
        let mut n = o.next_in_domain(None).unwrap();
        let mut prev: Option<SupportMap> = None;
        for _ in 0..count {
            let img = o.forward(n);
            assert_eq!(o.inverse(&img), Some(n));
            if let Some(p) = prev {
                assert!(p < img, "forward must increase");
            }
            prev = Some(img);
            n = o.next_in_domain(Some(n)).unwrap();
        }
    }

    #[test]
    fn honest_builtins_are_order_embeddings() {
        round_trips(&mut ShiftedSingleton::default(), 20);
        round_trips(&mut MovingSupport::default(), 20);
        round_trips(&mut Stutter::default(), 20);
        round_trips(&mut Stutter { period: 3 }, 20);
    }

    #[test]
    fn stutter_domain_is_multiples() {
        let mut s = Stutter::default();
        assert_eq!(s.next_in_domain(None), Some(0));
        assert_eq!(s.next_in_domain(Some(0)), Some(2));
        assert_eq!(s.next_in_domain(Some(3)), Some(4));
        assert_eq!(s.forward(4), SupportMap::from_pairs([(0, 3)]));
        assert_eq!(s.inverse(&SupportMap::from_pairs([(0, 3), (1, 1)])), None);
    }

    #[test]
    fn liar_is_self_consistent() {
        let mut l = Liar::default();
        let m = SupportMap::from_pairs([(0, 1), (1, 1)]);
        let label = l.inverse(&m).unwrap();
        assert!(label >= Liar::FIRST_LABEL);
        assert_eq!(l.forward(label), m);
        assert_eq!(l.inverse(&m), Some(label));
    }

    #[test]
    fn unknown_builtin() {
        assert!(matches!(builtin_oracle("nope", None), Err(Error::Usage(_))));
        assert!(builtin_oracle("moving-support", Some(0)).is_err());
    }
}
