//! Reliability as an ordering, re-derived through model plausibility.
//!
//! A total reliability order on sources (level 0 = most reliable) induces a
//! plausibility order on interpretations: an interpretation is as plausible
//! as the most reliable source with a formula it satisfies. A plausibility
//! order in turn re-assesses the sources: a formula is as plausible as its
//! best model, and a source as bad as its worst formula. An ordering is
//! stable when this round trip gives back the same ordered partition of the
//! sources; levels are compared after removing empty ones, since only the
//! order matters, not the numbers.

use std::collections::BTreeSet;

use crate::logic::Interpretation;
use crate::partitions::SourceSet;
use crate::{Error, Result};

/// Remaps levels onto 0..k, preserving order and closing gaps.
pub fn normalize_levels(levels: &[u32]) -> Vec<u32> {
    let used: BTreeSet<u32> = levels.iter().copied().collect();
    levels
        .iter()
        .map(|v| used.range(..v).count() as u32)
        .collect()
}

/// A reliability level per source; 0 is most reliable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReliabilityMap {
    levels: Vec<u32>,
}

impl ReliabilityMap {
    /// One level per source, in source order.
    pub fn new(levels: Vec<u32>, ss: &SourceSet) -> Result<Self> {
        if levels.len() != ss.len() {
            return Err(Error::Invalid(format!(
                "reliability map has {} levels for {} sources",
                levels.len(),
                ss.len()
            )));
        }
        Ok(ReliabilityMap { levels })
    }

    /// Every source at level 0.
    pub fn uniform(ss: &SourceSet) -> Self {
        ReliabilityMap { levels: vec![0; ss.len()] }
    }

    pub fn level(&self, source: usize) -> u32 {
        self.levels[source]
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn normalized(&self) -> Self {
        ReliabilityMap { levels: normalize_levels(&self.levels) }
    }

    /// The sources grouped by level, most reliable class first.
    pub fn ordered_classes(&self) -> Vec<BTreeSet<usize>> {
        let normalized = normalize_levels(&self.levels);
        let count = normalized.iter().map(|&v| v as usize + 1).max().unwrap_or(0);
        let mut classes = vec![BTreeSet::new(); count];
        for (s, &v) in normalized.iter().enumerate() {
            classes[v as usize].insert(s);
        }
        classes
    }
}

/// A plausibility level per interpretation of the universe; 0 is most
/// plausible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PriorityMap {
    levels: Vec<u32>,
}

impl PriorityMap {
    /// One level per interpretation, indexed by the interpretation's bits.
    pub fn from_levels(levels: Vec<u32>) -> Self {
        PriorityMap { levels }
    }

    pub fn level(&self, i: Interpretation) -> u32 {
        self.levels[i.0 as usize]
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    pub fn normalized(&self) -> Self {
        PriorityMap { levels: normalize_levels(&self.levels) }
    }
}

/// An interpretation is as plausible as the most reliable source holding a
/// formula it satisfies; interpretations satisfying no formula at all sit
/// one level below everything.
pub fn priority_from_reliability(rel: &ReliabilityMap, ss: &SourceSet) -> PriorityMap {
    let unsupported = rel.levels().iter().copied().max().unwrap_or(0) + 1;
    let levels = ss
        .universe()
        .interpretations()
        .map(|i| {
            ss.sources()
                .enumerate()
                .filter(|(_, src)| src.formulas().any(|f| f.eval(i)))
                .map(|(s, _)| rel.level(s))
                .min()
                .unwrap_or(unsupported)
        })
        .collect();
    PriorityMap::from_levels(levels)
}

/// A formula is as plausible as its best model; a source is as unreliable
/// as its worst formula.
pub fn reliability_from_priority(pri: &PriorityMap, ss: &SourceSet) -> Result<ReliabilityMap> {
    let interpretations: Vec<Interpretation> = ss.universe().interpretations().collect();
    let mut levels = Vec::with_capacity(ss.len());
    for src in ss.sources() {
        let mut worst = 0;
        for f in src.formulas() {
            let best = interpretations
                .iter()
                .filter(|i| f.eval(**i))
                .map(|i| pri.level(*i))
                .min()
                .ok_or_else(|| {
                    Error::UnsatisfiableFormula(f.display(ss.universe()).to_string())
                })?;
            worst = worst.max(best);
        }
        levels.push(worst);
    }
    ReliabilityMap::new(levels, ss)
}

/// Stability of a reliability ordering: the round trip through model
/// plausibility yields the same ordered partition of the sources.
pub fn is_stable_ordering(rel: &ReliabilityMap, ss: &SourceSet) -> bool {
    let pri = priority_from_reliability(rel, ss);
    let back = reliability_from_priority(&pri, ss)
        .expect("formulas of a satisfiable source have models");
    back.ordered_classes() == rel.ordered_classes()
}
