//! Weighted distance-based merging and the coherence of weights.
//!
//! Each source carries a positive weight. An interpretation's badness is
//! the weighted sum, over all supplied formulas, of its Hamming distance
//! to the formula (the fewest variables to flip to reach a model). The
//! merge keeps the interpretations of minimal badness among those
//! satisfying an optional constraint. A weight vector is coherent with a
//! result when heavier sources really do sit closer to it; it is weakly
//! stable when some minimal-badness model agrees, strongly stable when
//! they all do.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::logic::{Formula, Interpretation, Universe};
use crate::partitions::{SourceSet, Stability};
use crate::{Error, Result};

/// A positive rational weight per source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    weights: Vec<BigRational>,
}

impl WeightVector {
    /// One weight per source, in source order; all must be positive.
    pub fn new(weights: Vec<BigRational>, ss: &SourceSet) -> Result<Self> {
        if weights.len() != ss.len() {
            return Err(Error::Invalid(format!(
                "weight vector has {} weights for {} sources",
                weights.len(),
                ss.len()
            )));
        }
        if weights.iter().any(|w| *w <= BigRational::zero()) {
            return Err(Error::Invalid("weights must be positive".into()));
        }
        Ok(WeightVector { weights })
    }

    /// Every source at weight 1.
    pub fn uniform(ss: &SourceSet) -> Self {
        WeightVector {
            weights: vec![BigRational::from_integer(BigInt::from(1)); ss.len()],
        }
    }

    pub fn weight(&self, source: usize) -> &BigRational {
        &self.weights[source]
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.weights
    }
}

/// The fewest variable flips taking `i` to a model of `f`.
pub fn hamming_distance(i: Interpretation, f: &Formula, universe: &Universe) -> Result<u32> {
    universe
        .interpretations()
        .filter(|j| f.eval(*j))
        .map(|j| i.hamming(j))
        .min()
        .ok_or_else(|| Error::UnsatisfiableFormula(f.display(universe).to_string()))
}

fn distance(ss: &SourceSet, i: Interpretation, source: usize, index: usize) -> u32 {
    hamming_distance(i, ss.source(source).formula(index), ss.universe())
        .expect("formulas of a satisfiable source have models")
}

/// The weighted sum of the interpretation's distances to every formula.
pub fn badness(ss: &SourceSet, i: Interpretation, w: &WeightVector) -> BigRational {
    let mut total = BigRational::zero();
    for s in 0..ss.len() {
        for idx in 0..ss.source(s).len() {
            let d = BigRational::from_integer(BigInt::from(distance(ss, i, s, idx)));
            total += w.weight(s) * d;
        }
    }
    total
}

/// The minimal-badness interpretations and the badness they attain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MergeResult {
    pub minima: Vec<Interpretation>,
    pub badness: BigRational,
}

/// Scores every interpretation satisfying the constraint (every
/// interpretation if none) and keeps the ties at minimal badness.
pub fn weighted_merge(
    ss: &SourceSet,
    w: &WeightVector,
    constraint: Option<&Formula>,
) -> Result<MergeResult> {
    let mut minima: Vec<Interpretation> = Vec::new();
    let mut best: Option<BigRational> = None;
    for i in ss.universe().interpretations() {
        if let Some(c) = constraint {
            if !c.eval(i) {
                continue;
            }
        }
        let score = badness(ss, i, w);
        match &best {
            Some(b) if score > *b => {}
            Some(b) if score == *b => minima.push(i),
            _ => {
                best = Some(score);
                minima = vec![i];
            }
        }
    }
    match best {
        Some(badness) => Ok(MergeResult { minima, badness }),
        None => Err(Error::UnsatisfiableConstraint),
    }
}

/// How a source's per-formula distances combine into one number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Aggregation {
    /// The worst formula decides; this is the reading stability uses.
    Max,
    /// The mean distance, reported for comparison only.
    Average,
}

/// The distance between an interpretation and a whole source.
pub fn source_distance(
    ss: &SourceSet,
    source: usize,
    i: Interpretation,
    agg: Aggregation,
) -> BigRational {
    let distances =
        (0..ss.source(source).len()).map(|idx| BigInt::from(distance(ss, i, source, idx)));
    match agg {
        Aggregation::Max => {
            BigRational::from_integer(distances.max().expect("sources are nonempty"))
        }
        Aggregation::Average => {
            let total: BigInt = distances.sum();
            BigRational::new(total, BigInt::from(ss.source(source).len()))
        }
    }
}

fn coherent(ss: &SourceSet, w: &WeightVector, i: Interpretation) -> bool {
    let dist: Vec<BigRational> = (0..ss.len())
        .map(|s| source_distance(ss, s, i, Aggregation::Max))
        .collect();
    for a in 0..ss.len() {
        for b in 0..ss.len() {
            if w.weight(a) > w.weight(b) && dist[a] >= dist[b] {
                return false;
            }
            if w.weight(a) == w.weight(b) && dist[a] != dist[b] {
                return false;
            }
        }
    }
    true
}

/// Whether the merge re-endorses the weights: heavier sources must end up
/// strictly closer to the result, equal weights equally close. Weak asks
/// this of some minimal-badness model, strong of all of them.
pub fn weight_stability(
    ss: &SourceSet,
    w: &WeightVector,
    constraint: Option<&Formula>,
    mode: Stability,
) -> Result<bool> {
    let merge = weighted_merge(ss, w, constraint)?;
    Ok(match mode {
        Stability::Weak => merge.minima.iter().any(|&i| coherent(ss, w, i)),
        Stability::Strong => merge.minima.iter().all(|&i| coherent(ss, w, i)),
    })
}
