//! Maxsets: maximal jointly-satisfiable subsets of formula occurrences.
//!
//! A *plain* maxset of a pool is a consistent subset no other consistent
//! subset strictly contains. A maxset of an *ordered partition* of the pool
//! additionally restricts to a plain maxset of every prefix of classes, so
//! earlier classes are preferred as much as consistency allows.
//!
//! Formulas are tracked by occurrence, not by syntactic identity: the same
//! formula supplied by two sources counts twice and can fall on different
//! sides of a maxset boundary.

use std::collections::BTreeSet;
use std::collections::HashSet;
use std::fmt;

use crate::logic::{self, Formula, Universe};

/// One formula occurrence: which source supplied it and at which position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OccurrenceId {
    pub source: u32,
    pub index: u32,
}

impl OccurrenceId {
    pub fn new(source: u32, index: u32) -> Self {
        OccurrenceId { source, index }
    }
}

impl fmt::Display for OccurrenceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.source, self.index)
    }
}

/// A set of occurrences; ordering is lexicographic over the sorted elements,
/// which makes lists of maxsets deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Maxset(pub BTreeSet<OccurrenceId>);

impl Maxset {
    pub fn from_iter(ids: impl IntoIterator<Item = OccurrenceId>) -> Self {
        Maxset(ids.into_iter().collect())
    }

    pub fn contains(&self, id: OccurrenceId) -> bool {
        self.0.contains(&id)
    }

    pub fn iter(&self) -> impl Iterator<Item = OccurrenceId> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &Maxset) -> bool {
        self.0.is_subset(&other.0)
    }
}

/// An ordered list of disjoint occurrence classes, most reliable first.
/// Classes may be empty; empty classes still count for prefix boundaries.
pub struct OrderedFormulaPartition<'a> {
    pub classes: Vec<Vec<(OccurrenceId, &'a Formula)>>,
}

impl<'a> OrderedFormulaPartition<'a> {
    pub fn new(classes: Vec<Vec<(OccurrenceId, &'a Formula)>>) -> Self {
        OrderedFormulaPartition { classes }
    }

    /// All occurrences, class by class.
    pub fn pool(&self) -> Vec<(OccurrenceId, &'a Formula)> {
        self.classes.iter().flatten().copied().collect()
    }
}

/// Satisfied-occurrence bitmask of `pool` under each interpretation, deduped.
fn consistent_masks(pool: &[(OccurrenceId, &Formula)], universe: &Universe) -> HashSet<u64> {
    assert!(pool.len() <= 64, "occurrence pools are capped at 64 formulas");
    universe
        .interpretations()
        .map(|m| {
            pool.iter()
                .enumerate()
                .filter(|(_, (_, f))| f.eval(m))
                .fold(0u64, |mask, (i, _)| mask | 1 << i)
        })
        .collect()
}

/// Masks of `masks` not strictly contained in another member.
fn maximal_masks(masks: &HashSet<u64>) -> Vec<u64> {
    let mut maximal: Vec<u64> = masks
        .iter()
        .copied()
        .filter(|&m| !masks.iter().any(|&m2| m2 != m && m | m2 == m2))
        .collect();
    maximal.sort_unstable();
    maximal
}

/// Precomputed maximal consistent masks over a fixed pool, reusable across
/// many partition layouts of the same occurrences.
///
/// Because ordered partitions cover their pool, every partition maxset is
/// also a plain maxset of the whole pool; a query for a given class layout
/// is then pure mask arithmetic over the cached maximal masks, with no
/// further scan of the interpretations.
pub struct MaxsetIndex {
    ids: Vec<OccurrenceId>,
    maximal: Vec<u64>,
}

impl MaxsetIndex {
    /// Scans all interpretations once. Panics if the pool exceeds 64
    /// occurrences; callers validate pool sizes up front.
    pub fn new(pool: &[(OccurrenceId, &Formula)], universe: &Universe) -> Self {
        let masks = consistent_masks(pool, universe);
        MaxsetIndex {
            ids: pool.iter().map(|(id, _)| *id).collect(),
            maximal: maximal_masks(&masks),
        }
    }

    fn bit(&self, id: OccurrenceId) -> u64 {
        let pos = self
            .ids
            .iter()
            .position(|&x| x == id)
            .expect("occurrence not in the indexed pool");
        1u64 << pos
    }

    fn to_maxset(&self, mask: u64) -> Maxset {
        Maxset::from_iter(
            self.ids
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, id)| *id),
        )
    }

    /// Plain maxsets of the indexed pool, sorted.
    pub fn plain(&self) -> Vec<Maxset> {
        let mut out: Vec<Maxset> =
            self.maximal.iter().map(|&m| self.to_maxset(m)).collect();
        out.sort();
        out
    }

    /// Maxsets of the ordered partition given as classes of occurrence ids,
    /// which must cover the indexed pool. Sorted.
    pub fn partition(&self, classes: &[Vec<OccurrenceId>]) -> Vec<Maxset> {
        let mut prefixes = Vec::with_capacity(classes.len());
        let mut prefix = 0u64;
        for class in classes {
            for &id in class {
                prefix |= self.bit(id);
            }
            prefixes.push(prefix);
        }
        debug_assert_eq!(
            prefix.count_ones() as usize,
            self.ids.len(),
            "partition classes must cover the indexed pool"
        );
        let mut out: Vec<Maxset> = self
            .maximal
            .iter()
            .filter(|&&m| {
                prefixes.iter().all(|&p| {
                    !self.maximal.iter().any(|&m2| {
                        let a = m & p;
                        let b = m2 & p;
                        a != b && a | b == b
                    })
                })
            })
            .map(|&m| self.to_maxset(m))
            .collect();
        out.sort();
        out
    }
}

/// Plain maxsets of `pool`, sorted. The empty pool has the empty maxset.
///
/// Every consistent subset extends to a model of all its members, so the
/// maxsets are exactly the maximal satisfied-occurrence sets over all
/// interpretations of the universe. Panics if the pool exceeds 64
/// occurrences.
pub fn plain_maxsets(pool: &[(OccurrenceId, &Formula)], universe: &Universe) -> Vec<Maxset> {
    MaxsetIndex::new(pool, universe).plain()
}

/// Maxsets of an ordered partition, sorted: the plain maxsets of the whole
/// pool whose intersection with every class prefix is a plain maxset of
/// that prefix. Panics if the pool exceeds 64 occurrences.
pub fn partition_maxsets(
    partition: &OrderedFormulaPartition<'_>,
    universe: &Universe,
) -> Vec<Maxset> {
    let pool = partition.pool();
    let index = MaxsetIndex::new(&pool, universe);
    let classes: Vec<Vec<OccurrenceId>> = partition
        .classes
        .iter()
        .map(|class| class.iter().map(|(id, _)| *id).collect())
        .collect();
    index.partition(&classes)
}

/// Checks membership in `partition_maxsets` prefix-wise, without enumerating
/// the maxsets: the candidate's restriction to every class prefix must be
/// consistent and unextendable within that prefix.
pub fn is_partition_maxset(
    candidate: &Maxset,
    partition: &OrderedFormulaPartition<'_>,
    _universe: &Universe,
) -> bool {
    let pool = partition.pool();
    if !candidate.iter().all(|id| pool.iter().any(|(pid, _)| *pid == id)) {
        return false;
    }
    let chosen: Vec<&Formula> = pool
        .iter()
        .filter(|(id, _)| candidate.contains(*id))
        .map(|(_, f)| *f)
        .collect();
    if !logic::satisfiable(chosen.iter().copied()) {
        return false;
    }
    let mut prefix: Vec<(OccurrenceId, &Formula)> = Vec::new();
    for class in &partition.classes {
        prefix.extend(class.iter().copied());
        let inside: Vec<&Formula> = prefix
            .iter()
            .filter(|(id, _)| candidate.contains(*id))
            .map(|(_, f)| *f)
            .collect();
        let unextendable = prefix
            .iter()
            .filter(|(id, _)| !candidate.contains(*id))
            .all(|(_, f)| !logic::consistent_with(inside.iter().copied(), f));
        if !unextendable {
            return false;
        }
    }
    true
}
