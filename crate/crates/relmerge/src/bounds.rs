//! Percentage-bound assessments over multisets of formulas.
//!
//! Instead of asking whether *all* or *some* formulas of a source survive a
//! maxset, a source is graded by the fraction of its formulas (counted with
//! multiplicity) consistent with the maxset: at or above the reliability
//! bound it is reliable, below the unreliability bound it is unreliable,
//! and partly reliable in between. Unlike the qualitative assessments, a
//! maxset need not be a maxset of the partition it induces here; weakly
//! stable partitions still exist, found by ascending a strict order on
//! maxsets that compares what they keep of their own induced classes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::logic;
use crate::maxsets::{Maxset, OccurrenceId};
use crate::partitions::{maxset_index, maxsets_of_with, SourceSet, Stability, Tripartition};
use crate::{Error, Result};

/// The reliability and unreliability thresholds, exact rationals in [0, 1]
/// with the unreliability bound not above the reliability bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundPair {
    reliability: BigRational,
    unreliability: BigRational,
}

impl BoundPair {
    pub fn new(reliability: BigRational, unreliability: BigRational) -> Result<Self> {
        let zero = BigRational::zero();
        let one = BigRational::one();
        if reliability < zero || reliability > one || unreliability < zero || unreliability > one
        {
            return Err(Error::Invalid("bounds must lie in [0, 1]".into()));
        }
        if unreliability > reliability {
            return Err(Error::Invalid(
                "the unreliability bound must not exceed the reliability bound".into(),
            ));
        }
        Ok(BoundPair { reliability, unreliability })
    }

    /// Parses `"9/10,1/2"`-style text: two fractions or exact decimals,
    /// reliability bound first.
    pub fn parse(text: &str) -> Result<Self> {
        let (r, p) = text.split_once(',').ok_or_else(|| {
            Error::Invalid(format!(
                "bounds `{text}` must be two comma-separated fractions"
            ))
        })?;
        BoundPair::new(parse_fraction(r.trim())?, parse_fraction(p.trim())?)
    }

    pub fn reliability(&self) -> &BigRational {
        &self.reliability
    }

    pub fn unreliability(&self) -> &BigRational {
        &self.unreliability
    }
}

/// Parses an exact non-negative rational: `9/10`, `0.9`, or `1`.
pub fn parse_fraction(text: &str) -> Result<BigRational> {
    let bad = || Error::Invalid(format!("bad fraction `{text}`"));
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse().map_err(|_| bad())
    };
    if let Some((n, d)) = text.split_once('/') {
        let den = digits(d)?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(digits(n)?, den))
    } else if let Some((int, frac)) = text.split_once('.') {
        let whole = if int.is_empty() { BigInt::zero() } else { digits(int)? };
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        Ok(BigRational::new(whole * &scale + digits(frac)?, scale))
    } else {
        Ok(BigRational::from_integer(digits(text)?))
    }
}

/// The fraction of the source's formulas, weighted by multiplicity, that
/// are individually consistent with the maxset.
pub fn consistency_fraction(ss: &SourceSet, source: usize, m: &Maxset) -> BigRational {
    let chosen = ss.maxset_formulas(m);
    let src = ss.source(source);
    let mut consistent = BigInt::zero();
    for i in 0..src.len() {
        if logic::consistent_with(chosen.iter().copied(), src.formula(i)) {
            consistent += BigInt::from(src.multiplicity(i));
        }
    }
    BigRational::new(consistent, BigInt::from(src.total_multiplicity()))
}

/// Classifies every source by its consistency fraction: reliable at or
/// above the reliability bound, unreliable strictly below the
/// unreliability bound, partly reliable in between.
pub fn induced_bound_tripartition(ss: &SourceSet, m: &Maxset, b: &BoundPair) -> Tripartition {
    let mut reliable = BTreeSet::new();
    let mut partial = BTreeSet::new();
    for s in 0..ss.len() {
        let c = consistency_fraction(ss, s, m);
        if c >= *b.reliability() {
            reliable.insert(s);
        } else if c >= *b.unreliability() {
            partial.insert(s);
        }
    }
    Tripartition::new(reliable, partial, ss.len())
}

/// What a maxset keeps of the top two classes of its own induced bound
/// partition; the ascent compares these pairs by containment.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationPair {
    pub in_reliable: BTreeSet<OccurrenceId>,
    pub in_partial: BTreeSet<OccurrenceId>,
}

/// Evaluates a maxset against its own induced bound partition.
pub fn evaluation_pair(ss: &SourceSet, m: &Maxset, b: &BoundPair) -> EvaluationPair {
    let t = induced_bound_tripartition(ss, m, b);
    let in_class = |class: &BTreeSet<usize>| {
        m.iter()
            .filter(|id| class.contains(&(id.source as usize)))
            .collect()
    };
    EvaluationPair {
        in_reliable: in_class(&t.reliable),
        in_partial: in_class(&t.partial),
    }
}

impl EvaluationPair {
    /// Lexicographic strict containment: strictly less in the reliable
    /// part, or equal there and strictly less in the partial part.
    pub fn precedes(&self, other: &EvaluationPair) -> bool {
        if self.in_reliable != other.in_reliable {
            return self.in_reliable.is_subset(&other.in_reliable);
        }
        self.in_partial != other.in_partial && self.in_partial.is_subset(&other.in_partial)
    }
}

/// Stability of a bound partition: some (weak) or every (strong) maxset of
/// the three flattened classes induces the partition back through the
/// consistency fractions.
pub fn is_bound_stable(
    ss: &SourceSet,
    t: &Tripartition,
    b: &BoundPair,
    mode: Stability,
) -> bool {
    let index = maxset_index(ss);
    let ms = maxsets_of_with(&index, ss, &t.to_source_partition());
    match mode {
        Stability::Weak => ms
            .iter()
            .any(|m| induced_bound_tripartition(ss, m, b) == *t),
        Stability::Strong => {
            !ms.is_empty()
                && ms
                    .iter()
                    .all(|m| induced_bound_tripartition(ss, m, b) == *t)
        }
    }
}

/// The existence ascent from the first plain maxset; see
/// [`find_weakly_stable_bounds_from`].
pub fn find_weakly_stable_bounds(ss: &SourceSet, b: &BoundPair) -> (Tripartition, Maxset) {
    let index = maxset_index(ss);
    let start = index
        .plain()
        .into_iter()
        .next()
        .expect("satisfiable sources have a plain maxset");
    ascend(ss, b, start)
}

/// The existence ascent from a chosen plain maxset: while the current
/// maxset is not a maxset of the bound partition it induces, move to a
/// maxset of that partition that strictly extends what the current one
/// keeps of its own top classes. The evaluation order is strict and the
/// maxsets finite, so this terminates on a weakly stable bound partition.
pub fn find_weakly_stable_bounds_from(
    ss: &SourceSet,
    b: &BoundPair,
    start: &Maxset,
) -> Result<(Tripartition, Maxset)> {
    let index = maxset_index(ss);
    if !index.plain().contains(start) {
        return Err(Error::Invalid(
            "the ascent must start from a plain maxset".into(),
        ));
    }
    Ok(ascend(ss, b, start.clone()))
}

fn ascend(ss: &SourceSet, b: &BoundPair, start: Maxset) -> (Tripartition, Maxset) {
    let index = maxset_index(ss);
    let bound = index.plain().len() + 1;
    let mut m = start;
    for _ in 0..bound {
        let t = induced_bound_tripartition(ss, &m, b);
        let ms = maxsets_of_with(&index, ss, &t.to_source_partition());
        if ms.contains(&m) {
            return (t, m);
        }
        let e = evaluation_pair(ss, &m, b);
        m = ms
            .into_iter()
            .find(|m2| e.precedes(&evaluation_pair(ss, m2, b)))
            .expect("a maxset outside its induced partition is below one of its maxsets");
    }
    unreachable!("the evaluation order is strict, so the ascent visits each maxset at most once")
}
