//! Finding a gap in the image of an order embedding `ι: Γ' → Δ^Γ`.
//!
//! Row `n` of the construction starts at `γ₀⁽ⁿ⁾ ∈ Γ'`. Its successor
//! `α⁽ⁿ⁾` in `Γ'` gives `ιγ₀⁽ⁿ⁾ < ια⁽ⁿ⁾`, first differing at `β⁽ⁿ⁾`, and the
//! next row starts at the least `γ₀⁽ⁿ⁺¹⁾ > β⁽ⁿ⁾`. For every finite `S ⊂ Γ`
//! with least element `γ₀⁽ⁿ⁺¹⁾`,
//!
//! ```text
//! ιγ₀⁽ⁿ⁾  <  ιγ₀⁽ⁿ⁾ ⊕ S  <  ια⁽ⁿ⁾
//! ```
//!
//! so a convex image would have to contain the middle element. Stage `μ` of
//! row `n` takes `S = { γ_ν⁽ⁿ⁺¹⁾ : ν < μ }` and asks the oracle for the
//! preimage `γ_μ⁽ⁿ⁾`; each answer lengthens a strictly increasing chain. An
//! honest oracle eventually answers "not in the image", which is the witness.
//! Only finite stages are executed.

use std::cmp::Ordering;

use super::oracle::EmbeddingOracle;
use super::{first_difference, lex_cmp, oplus, Index, IndexSet, SupportMap};
use crate::error::{Error, Result};

/// Outcome of [`refute_convexity`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `lower < middle < upper`, with `lower` and `upper` in the image and
    /// `middle` outside it.
    NotConvex { lower: SupportMap, middle: SupportMap, upper: SupportMap, lower_pre: Index, upper_pre: Index },
    /// The oracle claimed every queried element was in the image. `chain`
    /// holds the images `ιγ_μ⁽¹⁾` for `μ = 1..=max_steps`; `steps` counts the
    /// inverse queries made.
    ChainExhausted { chain: Vec<SupportMap>, steps: usize },
}

impl Witness {
    /// Re-checks the witness against `lex_cmp` and the oracle.
    pub fn verify(&self, oracle: &mut dyn EmbeddingOracle) -> bool {
        match self {
            Witness::NotConvex { lower, middle, upper, lower_pre, upper_pre } => {
                lex_cmp(lower, middle) == Ordering::Less
                    && lex_cmp(middle, upper) == Ordering::Less
                    && oracle.forward(*lower_pre) == *lower
                    && oracle.forward(*upper_pre) == *upper
                    && oracle.inverse(lower) == Some(*lower_pre)
                    && oracle.inverse(upper) == Some(*upper_pre)
                    && oracle.inverse(middle).is_none()
            }
            Witness::ChainExhausted { chain, .. } => chain.windows(2).all(|w| lex_cmp(&w[0], &w[1]) == Ordering::Less),
        }
    }
}

/// One inverse query of the construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationRecord {
    /// Row `n` (1-based).
    pub row: usize,
    /// Stage `μ ≥ 1`.
    pub stage: usize,
    pub lower: SupportMap,
    pub middle: SupportMap,
    pub upper: SupportMap,
    /// `ιγ₀⁽ⁿ⁾ ⊕ S'` for the previous stage's set `S' ⊊ S`.
    pub previous: SupportMap,
    pub set: IndexSet,
    pub beta: Index,
    /// `S' ⊊ S ⇒ d ⊕ S' < d ⊕ S` held.
    pub monotone: bool,
    /// `lower < middle < upper` held.
    pub sandwiched: bool,
    pub answer: Option<Index>,
}

struct Row {
    alpha: Index,
    beta: Index,
    lower: SupportMap,
    upper: SupportMap,
    /// `(γ_ν, ιγ_ν)` for `ν = 0, 1, ...`
    chain: Vec<(Index, SupportMap)>,
}

struct Refuter<'a> {
    oracle: &'a mut dyn EmbeddingOracle,
    rows: Vec<Row>,
    trace: Vec<IterationRecord>,
}

enum Halt {
    Gap(Witness),
    Fail(Error),
}

impl From<Error> for Halt {
    fn from(e: Error) -> Self {
        Halt::Fail(e)
    }
}

impl Refuter<'_> {
    /// Makes sure row `n` (1-based) exists.
    fn ensure_row(&mut self, n: usize) -> Result<()> {
        while self.rows.len() < n {
            let after = self.rows.last().map(|r| r.beta);
            let start = self.oracle.next_in_domain(after).ok_or(Error::DomainExhausted)?;
            if after.is_some_and(|b| start <= b) {
                return Err(Error::OracleInconsistent(format!(
                    "domain enumerator returned {start}, not above {}",
                    after.unwrap()
                )));
            }
            let alpha = self.oracle.next_in_domain(Some(start)).ok_or(Error::DomainExhausted)?;
            if alpha <= start {
                return Err(Error::OracleInconsistent(format!("domain enumerator is not increasing at {start}")));
            }
            let lower = self.oracle.forward(start);
            let upper = self.oracle.forward(alpha);
            if lex_cmp(&lower, &upper) != Ordering::Less {
                return Err(Error::OracleInconsistent(format!(
                    "forward is not increasing: ι({start}) = {lower} is not below ι({alpha}) = {upper}"
                )));
            }
            let beta = first_difference(&lower, &upper).expect("distinct maps differ somewhere");
            self.rows.push(Row { alpha, beta, lower: lower.clone(), upper, chain: vec![(start, lower)] });
        }
        Ok(())
    }

    /// Extends row `n` until its chain holds `len` elements.
    fn extend(&mut self, n: usize, len: usize) -> std::result::Result<(), Halt> {
        self.ensure_row(n)?;
        while self.rows[n - 1].chain.len() < len {
            let stage = self.rows[n - 1].chain.len();
            self.extend(n + 1, stage)?;
            let set: IndexSet = self.rows[n].chain[..stage].iter().map(|(g, _)| *g).collect();
            let prev_set: IndexSet = self.rows[n].chain[..stage - 1].iter().map(|(g, _)| *g).collect();

            let row = &self.rows[n - 1];
            let middle = oplus(&row.lower, &set);
            let previous = oplus(&row.lower, &prev_set);
            let monotone = lex_cmp(&previous, &middle) == Ordering::Less;
            let sandwiched =
                lex_cmp(&row.lower, &middle) == Ordering::Less && lex_cmp(&middle, &row.upper) == Ordering::Less;
            let answer = self.oracle.inverse(&middle);

            let row = &self.rows[n - 1];
            self.trace.push(IterationRecord {
                row: n,
                stage,
                lower: row.lower.clone(),
                middle: middle.clone(),
                upper: row.upper.clone(),
                previous,
                set: set.clone(),
                beta: row.beta,
                monotone,
                sandwiched,
                answer,
            });
            if !(monotone && sandwiched) {
                return Err(Halt::Fail(Error::OracleInconsistent(format!(
                    "ordering of ι({}) ⊕ {set:?} violated; oracle is not a deterministic order embedding",
                    row.chain[0].0
                ))));
            }

            let Some(pre) = answer else {
                return Err(Halt::Gap(Witness::NotConvex {
                    lower: row.lower.clone(),
                    middle,
                    upper: row.upper.clone(),
                    lower_pre: row.chain[0].0,
                    upper_pre: row.alpha,
                }));
            };
            let image = self.oracle.forward(pre);
            if image != middle {
                return Err(Halt::Fail(Error::OracleInconsistent(format!(
                    "inverse({middle}) = {pre} but forward({pre}) = {image}"
                ))));
            }
            let last = self.rows[n - 1].chain.last().expect("chain starts non-empty").0;
            if pre <= last {
                return Err(Halt::Fail(Error::OracleInconsistent(format!(
                    "preimage {pre} of a larger element is not above {last}"
                ))));
            }
            self.rows[n - 1].chain.push((pre, middle));
        }
        Ok(())
    }
}

/// Runs the construction for at most `max_steps` stages of the first row.
pub fn refute_convexity(oracle: &mut dyn EmbeddingOracle, max_steps: usize) -> Result<Witness> {
    refute_convexity_traced(oracle, max_steps).map(|(w, _)| w)
}

/// Like [`refute_convexity`], also returning one record per inverse query.
pub fn refute_convexity_traced(
    oracle: &mut dyn EmbeddingOracle,
    max_steps: usize,
) -> Result<(Witness, Vec<IterationRecord>)> {
    if max_steps == 0 {
        return Err(Error::Usage("max_steps must be at least 1".into()));
    }
    let mut r = Refuter { oracle, rows: Vec::new(), trace: Vec::new() };
    match r.extend(1, max_steps + 1) {
        Ok(()) => {
            let chain = r.rows[0].chain[1..].iter().map(|(_, m)| m.clone()).collect();
            let steps = r.trace.len();
            Ok((Witness::ChainExhausted { chain, steps }, r.trace))
        }
        Err(Halt::Gap(w)) => Ok((w, r.trace)),
        Err(Halt::Fail(e)) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexprod::oracle::{FnOracle, Liar, MovingSupport, ShiftedSingleton, Stutter};

    fn sm(p: &[(Index, i64)]) -> SupportMap {
        SupportMap::from_pairs(p.iter().copied())
    }

    #[test]
    fn shifted_singleton_gap_at_first_query() {
        let mut o = ShiftedSingleton::default();
        let (w, trace) = refute_convexity_traced(&mut o, 10).unwrap();
        assert_eq!(
            w,
            Witness::NotConvex {
                lower: sm(&[(0, 1)]),
                middle: sm(&[(0, 1), (1, 1)]),
                upper: sm(&[(0, 2)]),
                lower_pre: 0,
                upper_pre: 1,
            }
        );
        assert_eq!(trace.len(), 1);
        assert!(w.verify(&mut o));
    }

    #[test]
    fn moving_support_gap() {
        // ι0 = {0:-1} < ι1 = {1:-1}, β = 0, next row starts at 1.
        let mut o = MovingSupport::default();
        let w = refute_convexity(&mut o, 5).unwrap();
        assert_eq!(
            w,
            Witness::NotConvex {
                lower: sm(&[(0, -1)]),
                middle: sm(&[(0, -1), (1, 1)]),
                upper: sm(&[(1, -1)]),
                lower_pre: 0,
                upper_pre: 1,
            }
        );
        assert!(w.verify(&mut o));
    }

    #[test]
    fn moving_support_with_positive_value_is_rejected() {
        let mut o = MovingSupport { value: 1 };
        assert!(matches!(refute_convexity(&mut o, 5), Err(Error::OracleInconsistent(_))));
    }

    #[test]
    fn stutter_gap_uses_domain_element() {
        // Γ' = 2N, ι0 = {0:1}, ι2 = {0:2}, β = 0, next row starts at 2.
        let mut o = Stutter::default();
        let w = refute_convexity(&mut o, 5).unwrap();
        assert_eq!(
            w,
            Witness::NotConvex {
                lower: sm(&[(0, 1)]),
                middle: sm(&[(0, 1), (2, 1)]),
                upper: sm(&[(0, 2)]),
                lower_pre: 0,
                upper_pre: 2,
            }
        );
    }

    #[test]
    fn liar_yields_chain_of_requested_length() {
        for max_steps in 1..=6 {
            let mut o = Liar::default();
            let (w, trace) = refute_convexity_traced(&mut o, max_steps).unwrap();
            let Witness::ChainExhausted { chain, steps } = &w else {
                panic!("expected exhausted chain, got {w:?}");
            };
            assert_eq!(chain.len(), max_steps);
            assert_eq!(*steps, max_steps * (max_steps + 1) / 2);
            assert_eq!(trace.len(), *steps);
            assert!(trace.iter().all(|t| t.monotone && t.sandwiched));
            assert!(w.verify(&mut o));
        }
    }

    #[test]
    fn inconsistent_inverse_is_reported() {
        let mut o = FnOracle {
            forward: |n: Index| SupportMap::from_pairs([(0, n as i64 + 1)]),
            inverse: |_: &SupportMap| Some(7),
            domain: |a: Option<Index>| Some(a.map_or(0, |a| a + 1)),
        };
        assert!(matches!(refute_convexity(&mut o, 3), Err(Error::OracleInconsistent(_))));
    }

    #[test]
    fn finite_domain_exhausts() {
        let mut o = FnOracle {
            forward: |n: Index| SupportMap::from_pairs([(0, n as i64 + 1)]),
            inverse: |_: &SupportMap| None,
            domain: |a: Option<Index>| match a {
                None => Some(0),
                Some(_) => None,
            },
        };
        assert_eq!(refute_convexity(&mut o, 3), Err(Error::DomainExhausted));
    }

    #[test]
    fn zero_steps_rejected() {
        assert!(refute_convexity(&mut ShiftedSingleton::default(), 0).is_err());
    }
}
