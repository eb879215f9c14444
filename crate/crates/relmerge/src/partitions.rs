//! Sources, reliability partitions, induced assessments, and stability.
//!
//! A [`SourceSet`] is an ordered list of named sources, each a consistent
//! set of formulas. A two-class partition splits the sources into reliable
//! and unreliable; a three-class partition additionally keeps a middle class
//! of partly reliable sources. Merging under an assumed partition takes the
//! maxsets of its flattened classes; the result *induces* a new assessment:
//! reliable sources are those whose formulas are all consistent with the
//! maxset, the middle class (in the three-way reading) those with some but
//! not all. A partition is weakly stable when some of its maxsets induces it
//! back, strongly stable when all of them do.

use std::collections::BTreeSet;

use crate::logic::{self, Formula, Universe};
use crate::maxsets::{self, Maxset, MaxsetIndex, OccurrenceId, OrderedFormulaPartition};
use crate::{Caps, Error, Result};

/// Whether a stability check asks for one witness or for all maxsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stability {
    Weak,
    Strong,
}

/// A named source: formulas with multiplicities, jointly satisfiable.
///
/// Multiplicity matters only to the percentage-bound assessments; maxsets
/// and induced partitions see one occurrence per distinct formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Source {
    name: String,
    entries: Vec<(Formula, u32)>,
}

impl Source {
    pub fn new(name: impl Into<String>, entries: Vec<(Formula, u32)>) -> Self {
        Source { name: name.into(), entries }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of distinct formulas.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn formula(&self, index: usize) -> &Formula {
        &self.entries[index].0
    }

    pub fn multiplicity(&self, index: usize) -> u32 {
        self.entries[index].1
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.entries.iter().map(|(f, _)| f)
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.iter().map(|(_, m)| *m as u64).sum()
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty()
        && name.chars().next().unwrap().is_ascii_alphabetic()
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An ordered list of sources over a shared universe, frozen at load time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceSet {
    sources: Vec<Source>,
    universe: Universe,
}

impl SourceSet {
    /// Validates and builds a source set: at least one source, unique
    /// identifier-like names, and each source nonempty, with positive
    /// multiplicities and individually satisfiable formulas.
    ///
    /// A source's formulas need not be jointly satisfiable — the weighted
    /// analysis deliberately admits sources whose formulas contradict each
    /// other, and maxsets resolve such conflicts rather than forbidding
    /// them. Operations whose guarantees assume internally consistent
    /// sources check that themselves.
    pub fn new(sources: Vec<Source>, universe: Universe) -> Result<Self> {
        if sources.is_empty() {
            return Err(Error::Invalid("a problem needs at least one source".into()));
        }
        let mut seen = BTreeSet::new();
        for s in &sources {
            if !valid_name(&s.name) {
                return Err(Error::Invalid(format!(
                    "source name `{}` is not an identifier",
                    s.name
                )));
            }
            if !seen.insert(s.name.clone()) {
                return Err(Error::Invalid(format!("duplicate source name `{}`", s.name)));
            }
            if s.entries.is_empty() {
                return Err(Error::Invalid(format!("source `{}` has no formulas", s.name)));
            }
            if s.entries.iter().any(|(_, m)| *m == 0) {
                return Err(Error::Invalid(format!(
                    "source `{}` has a formula with multiplicity 0",
                    s.name
                )));
            }
            for (i, f) in s.formulas().enumerate() {
                if !logic::satisfiable([f]) {
                    return Err(Error::UnsatisfiableFormula(format!(
                        "{}:{i}: {}",
                        s.name,
                        f.display(&universe)
                    )));
                }
            }
        }
        Ok(SourceSet { sources, universe })
    }

    /// Test convenience: sources from `(name, formula texts)` pairs, all
    /// multiplicities 1, universe inferred in order of appearance.
    pub fn parse(specs: &[(&str, &[&str])]) -> Result<Self> {
        let mut universe = Universe::new();
        let mut sources = Vec::new();
        for (name, texts) in specs {
            let mut entries = Vec::new();
            for t in *texts {
                entries.push((logic::parse_formula(t, &mut universe)?, 1));
            }
            sources.push(Source::new(*name, entries));
        }
        SourceSet::new(sources, universe)
    }

    pub fn len(&self) -> usize {
        self.sources.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sources.is_empty()
    }

    pub fn source(&self, index: usize) -> &Source {
        &self.sources[index]
    }

    pub fn sources(&self) -> impl Iterator<Item = &Source> {
        self.sources.iter()
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.sources.iter().position(|s| s.name == name)
    }

    /// All occurrences in file order.
    pub fn occurrences(&self) -> Vec<(OccurrenceId, &Formula)> {
        self.sources
            .iter()
            .enumerate()
            .flat_map(|(s, src)| {
                src.formulas().enumerate().map(move |(i, f)| {
                    (OccurrenceId::new(s as u32, i as u32), f)
                })
            })
            .collect()
    }

    pub fn formula_of(&self, id: OccurrenceId) -> &Formula {
        self.sources[id.source as usize].formula(id.index as usize)
    }

    /// Renders an occurrence as `name:index`.
    pub fn occurrence_label(&self, id: OccurrenceId) -> String {
        format!("{}:{}", self.sources[id.source as usize].name, id.index)
    }

    /// Renders a maxset as `{S1:0, S2:1}`.
    pub fn maxset_label(&self, m: &Maxset) -> String {
        let parts: Vec<String> = m.iter().map(|id| self.occurrence_label(id)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// The formulas a maxset selects, in occurrence order.
    pub fn maxset_formulas(&self, m: &Maxset) -> Vec<&Formula> {
        m.iter().map(|id| self.formula_of(id)).collect()
    }
}

fn class_label(class: &BTreeSet<usize>, ss: &SourceSet) -> String {
    class
        .iter()
        .map(|&s| ss.source(s).name())
        .collect::<Vec<_>>()
        .join(",")
}

/// An ordered partition of the sources into any number of classes, most
/// reliable first. Classes may be empty.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourcePartition {
    pub classes: Vec<BTreeSet<usize>>,
}

impl SourcePartition {
    /// Validates that the classes are disjoint and cover `0..n`.
    pub fn new(classes: Vec<BTreeSet<usize>>, n: usize) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for class in &classes {
            for &s in class {
                if s >= n {
                    return Err(Error::Invalid(format!("source index {s} out of range")));
                }
                if !seen.insert(s) {
                    return Err(Error::Invalid(format!(
                        "source index {s} appears in two classes"
                    )));
                }
            }
        }
        if seen.len() != n {
            return Err(Error::Invalid(
                "partition does not cover every source".into(),
            ));
        }
        Ok(SourcePartition { classes })
    }

    /// Single class holding every source.
    pub fn trivial(n: usize) -> Self {
        SourcePartition { classes: vec![(0..n).collect()] }
    }

    pub fn label(&self, ss: &SourceSet) -> String {
        let parts: Vec<String> =
            self.classes.iter().map(|c| class_label(c, ss)).collect();
        format!("({})", parts.join("|"))
    }
}

/// Reliable sources versus the rest.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Bipartition {
    pub reliable: BTreeSet<usize>,
    pub rest: BTreeSet<usize>,
}

impl Bipartition {
    pub fn new(reliable: BTreeSet<usize>, n: usize) -> Self {
        let rest = (0..n).filter(|s| !reliable.contains(s)).collect();
        Bipartition { reliable, rest }
    }

    /// Shorthand over slices of source indices.
    pub fn of(reliable: &[usize], n: usize) -> Self {
        Self::new(reliable.iter().copied().collect(), n)
    }

    pub fn to_source_partition(&self) -> SourcePartition {
        SourcePartition { classes: vec![self.reliable.clone(), self.rest.clone()] }
    }

    pub fn label(&self, ss: &SourceSet) -> String {
        format!(
            "({}|{})",
            class_label(&self.reliable, ss),
            class_label(&self.rest, ss)
        )
    }
}

/// Fully reliable, partly reliable, and unreliable sources.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tripartition {
    pub reliable: BTreeSet<usize>,
    pub partial: BTreeSet<usize>,
    pub unreliable: BTreeSet<usize>,
}

impl Tripartition {
    pub fn new(reliable: BTreeSet<usize>, partial: BTreeSet<usize>, n: usize) -> Self {
        let unreliable = (0..n)
            .filter(|s| !reliable.contains(s) && !partial.contains(s))
            .collect();
        Tripartition { reliable, partial, unreliable }
    }

    /// Shorthand over slices of source indices.
    pub fn of(reliable: &[usize], partial: &[usize], n: usize) -> Self {
        Self::new(
            reliable.iter().copied().collect(),
            partial.iter().copied().collect(),
            n,
        )
    }

    pub fn to_source_partition(&self) -> SourcePartition {
        SourcePartition {
            classes: vec![
                self.reliable.clone(),
                self.partial.clone(),
                self.unreliable.clone(),
            ],
        }
    }

    pub fn label(&self, ss: &SourceSet) -> String {
        format!(
            "({}|{}|{})",
            class_label(&self.reliable, ss),
            class_label(&self.partial, ss),
            class_label(&self.unreliable, ss)
        )
    }
}

/// Expands a source partition to its occurrences, class by class; empty
/// classes are retained so prefix boundaries line up.
pub fn flatten<'a>(ss: &'a SourceSet, p: &SourcePartition) -> OrderedFormulaPartition<'a> {
    let classes = p
        .classes
        .iter()
        .map(|class| {
            class
                .iter()
                .flat_map(|&s| {
                    ss.source(s).formulas().enumerate().map(move |(i, f)| {
                        (OccurrenceId::new(s as u32, i as u32), f)
                    })
                })
                .collect()
        })
        .collect();
    OrderedFormulaPartition::new(classes)
}

/// Maxsets of the partitioned sources.
pub fn maxsets_of(ss: &SourceSet, p: &SourcePartition) -> Vec<Maxset> {
    maxsets::partition_maxsets(&flatten(ss, p), ss.universe())
}

/// Plain maxsets of all occurrences, ignoring any partition.
pub fn plain_maxsets(ss: &SourceSet) -> Vec<Maxset> {
    maxsets::plain_maxsets(&ss.occurrences(), ss.universe())
}

/// One-time index over all occurrences, for callers that query maxsets of
/// many partitions of the same sources (stability enumeration, the
/// assessment relation).
pub fn maxset_index(ss: &SourceSet) -> MaxsetIndex {
    MaxsetIndex::new(&ss.occurrences(), ss.universe())
}

/// The classes of a source partition expanded to occurrence ids.
pub fn occurrence_classes(ss: &SourceSet, p: &SourcePartition) -> Vec<Vec<OccurrenceId>> {
    p.classes
        .iter()
        .map(|class| {
            class
                .iter()
                .flat_map(|&s| {
                    (0..ss.source(s).len()).map(move |i| OccurrenceId::new(s as u32, i as u32))
                })
                .collect()
        })
        .collect()
}

/// Maxsets of a partition through a prebuilt index; same result as
/// [`maxsets_of`] without rescanning the interpretations.
pub fn maxsets_of_with(index: &MaxsetIndex, ss: &SourceSet, p: &SourcePartition) -> Vec<Maxset> {
    index.partition(&occurrence_classes(ss, p))
}

fn source_consistency(ss: &SourceSet, m: &Maxset, s: usize) -> (bool, bool) {
    let chosen = ss.maxset_formulas(m);
    let mut all = true;
    let mut some = false;
    for f in ss.source(s).formulas() {
        if logic::consistent_with(chosen.iter().copied(), f) {
            some = true;
        } else {
            all = false;
        }
    }
    (all, some)
}

/// The two-class assessment a maxset suggests: a source is reliable when
/// every one of its formulas is consistent with the maxset.
pub fn induced_bipartition(ss: &SourceSet, m: &Maxset) -> Bipartition {
    let reliable = (0..ss.len())
        .filter(|&s| source_consistency(ss, m, s).0)
        .collect();
    Bipartition::new(reliable, ss.len())
}

/// The three-class assessment: all consistent, some but not all, none.
pub fn induced_tripartition(ss: &SourceSet, m: &Maxset) -> Tripartition {
    let mut reliable = BTreeSet::new();
    let mut partial = BTreeSet::new();
    for s in 0..ss.len() {
        match source_consistency(ss, m, s) {
            (true, _) => {
                reliable.insert(s);
            }
            (false, true) => {
                partial.insert(s);
            }
            (false, false) => {}
        }
    }
    Tripartition::new(reliable, partial, ss.len())
}

/// Weak stability with the witnessing maxsets: the maxsets of `p` that
/// induce `p` back.
pub fn is_weakly_stable_bi(ss: &SourceSet, p: &Bipartition) -> (bool, Vec<Maxset>) {
    let witnesses: Vec<Maxset> = maxsets_of(ss, &p.to_source_partition())
        .into_iter()
        .filter(|m| induced_bipartition(ss, m) == *p)
        .collect();
    (!witnesses.is_empty(), witnesses)
}

/// Strong stability: every maxset of `p` induces `p` back.
pub fn is_strongly_stable_bi(ss: &SourceSet, p: &Bipartition) -> bool {
    let ms = maxsets_of(ss, &p.to_source_partition());
    !ms.is_empty() && ms.iter().all(|m| induced_bipartition(ss, m) == *p)
}

pub fn is_weakly_stable_tri(ss: &SourceSet, p: &Tripartition) -> (bool, Vec<Maxset>) {
    let witnesses: Vec<Maxset> = maxsets_of(ss, &p.to_source_partition())
        .into_iter()
        .filter(|m| induced_tripartition(ss, m) == *p)
        .collect();
    (!witnesses.is_empty(), witnesses)
}

pub fn is_strongly_stable_tri(ss: &SourceSet, p: &Tripartition) -> bool {
    let ms = maxsets_of(ss, &p.to_source_partition());
    !ms.is_empty() && ms.iter().all(|m| induced_tripartition(ss, m) == *p)
}

fn check_bi_cap(ss: &SourceSet, caps: &Caps) -> Result<()> {
    if ss.len() > caps.max_bi_sources {
        return Err(Error::SourceCapExceeded {
            actual: ss.len(),
            cap: caps.max_bi_sources,
        });
    }
    Ok(())
}

fn check_tri_cap(ss: &SourceSet, caps: &Caps) -> Result<()> {
    if ss.len() > caps.max_tri_sources {
        return Err(Error::SourceCapExceeded {
            actual: ss.len(),
            cap: caps.max_tri_sources,
        });
    }
    Ok(())
}

fn eval_bi(
    index: &MaxsetIndex,
    ss: &SourceSet,
    p: Bipartition,
    mode: Stability,
) -> Option<(Bipartition, Vec<Maxset>)> {
    let ms = maxsets_of_with(index, ss, &p.to_source_partition());
    match mode {
        Stability::Weak => {
            let witnesses: Vec<Maxset> = ms
                .into_iter()
                .filter(|m| induced_bipartition(ss, m) == p)
                .collect();
            (!witnesses.is_empty()).then_some((p, witnesses))
        }
        Stability::Strong => {
            let strong =
                !ms.is_empty() && ms.iter().all(|m| induced_bipartition(ss, m) == p);
            strong.then_some((p, ms))
        }
    }
}

fn eval_tri(
    index: &MaxsetIndex,
    ss: &SourceSet,
    p: Tripartition,
    mode: Stability,
) -> Option<(Tripartition, Vec<Maxset>)> {
    let ms = maxsets_of_with(index, ss, &p.to_source_partition());
    match mode {
        Stability::Weak => {
            let witnesses: Vec<Maxset> = ms
                .into_iter()
                .filter(|m| induced_tripartition(ss, m) == p)
                .collect();
            (!witnesses.is_empty()).then_some((p, witnesses))
        }
        Stability::Strong => {
            let strong =
                !ms.is_empty() && ms.iter().all(|m| induced_tripartition(ss, m) == p);
            strong.then_some((p, ms))
        }
    }
}

/// Stable bipartitions with their witness maxsets, sorted.
///
/// Only partitions induced by some plain maxset can be stable, so the
/// search starts from those instead of scanning all 2^n splits.
pub fn enumerate_stable_bi(
    ss: &SourceSet,
    mode: Stability,
    caps: &Caps,
) -> Result<Vec<(Bipartition, Vec<Maxset>)>> {
    check_bi_cap(ss, caps)?;
    let index = maxset_index(ss);
    let candidates: BTreeSet<Bipartition> = index
        .plain()
        .iter()
        .map(|m| induced_bipartition(ss, m))
        .collect();
    Ok(candidates
        .into_iter()
        .filter_map(|p| eval_bi(&index, ss, p, mode))
        .collect())
}

/// Oracle variant: scans every one of the 2^n bipartitions.
pub fn enumerate_stable_bi_exhaustive(
    ss: &SourceSet,
    mode: Stability,
    caps: &Caps,
) -> Result<Vec<(Bipartition, Vec<Maxset>)>> {
    check_bi_cap(ss, caps)?;
    let index = maxset_index(ss);
    let n = ss.len();
    let mut out = Vec::new();
    for bits in 0..1u64 << n {
        let reliable = (0..n).filter(|s| bits >> s & 1 == 1).collect();
        if let Some(hit) = eval_bi(&index, ss, Bipartition::new(reliable, n), mode) {
            out.push(hit);
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Stable tripartitions with their witness maxsets, sorted.
pub fn enumerate_stable_tri(
    ss: &SourceSet,
    mode: Stability,
    caps: &Caps,
) -> Result<Vec<(Tripartition, Vec<Maxset>)>> {
    check_tri_cap(ss, caps)?;
    let index = maxset_index(ss);
    let candidates: BTreeSet<Tripartition> = index
        .plain()
        .iter()
        .map(|m| induced_tripartition(ss, m))
        .collect();
    Ok(candidates
        .into_iter()
        .filter_map(|p| eval_tri(&index, ss, p, mode))
        .collect())
}

/// Oracle variant: scans every one of the 3^n ordered class assignments,
/// empty classes included.
pub fn enumerate_stable_tri_exhaustive(
    ss: &SourceSet,
    mode: Stability,
    caps: &Caps,
) -> Result<Vec<(Tripartition, Vec<Maxset>)>> {
    check_tri_cap(ss, caps)?;
    let index = maxset_index(ss);
    let n = ss.len();
    let mut out = Vec::new();
    let total = 3u64.pow(n as u32);
    for mut code in 0..total {
        let mut reliable = BTreeSet::new();
        let mut partial = BTreeSet::new();
        for s in 0..n {
            match code % 3 {
                0 => {
                    reliable.insert(s);
                }
                1 => {
                    partial.insert(s);
                }
                _ => {}
            }
            code /= 3;
        }
        if let Some(hit) = eval_tri(&index, ss, Tripartition::new(reliable, partial, n), mode) {
            out.push(hit);
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// One pass of the greedy merge: accumulate whole sources while they stay
/// consistent, then sweep the remaining formulas one by one. Returns the
/// weakly stable bipartition of the wholly-accepted sources together with
/// the plain maxset built along the way.
///
/// `order` is a permutation of the source indices; different orders can
/// find different maxsets, and some plain maxsets are found by no order.
pub fn greedy_maxset(ss: &SourceSet, order: &[usize]) -> Result<(Bipartition, Maxset)> {
    let n = ss.len();
    let mut seen = vec![false; n];
    for &s in order {
        if s >= n || seen[s] {
            return Err(Error::Invalid(
                "order must be a permutation of the source indices".into(),
            ));
        }
        seen[s] = true;
    }
    if order.len() != n {
        return Err(Error::Invalid(
            "order must be a permutation of the source indices".into(),
        ));
    }

    let mut chosen: Vec<OccurrenceId> = Vec::new();
    let mut reliable = BTreeSet::new();
    for &s in order {
        let mut extended: Vec<&Formula> =
            chosen.iter().map(|&id| ss.formula_of(id)).collect();
        extended.extend(ss.source(s).formulas());
        if logic::satisfiable(extended) {
            reliable.insert(s);
            chosen.extend(
                (0..ss.source(s).len()).map(|i| OccurrenceId::new(s as u32, i as u32)),
            );
        }
    }
    for &s in order {
        if reliable.contains(&s) {
            continue;
        }
        for i in 0..ss.source(s).len() {
            let id = OccurrenceId::new(s as u32, i as u32);
            // If every other formula of this source is already in, adding
            // this one would put the whole source in — inconsistent either
            // with itself or with what the first pass already ruled out;
            // skip the consistency check.
            let rest_in = (0..ss.source(s).len())
                .filter(|&j| j != i)
                .all(|j| chosen.contains(&OccurrenceId::new(s as u32, j as u32)));
            if rest_in {
                continue;
            }
            let current: Vec<&Formula> = chosen.iter().map(|&id| ss.formula_of(id)).collect();
            if logic::consistent_with(current, ss.source(s).formula(i)) {
                chosen.push(id);
            }
        }
    }
    Ok((Bipartition::new(reliable, n), Maxset::from_iter(chosen)))
}

/// Outcome of the stable-assessment search: the first weakly stable
/// bipartition reached and the strongly stable one the iteration ends on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutcome {
    pub weak_first: Bipartition,
    pub strong: Bipartition,
}

/// Iterates "take a maxset, adopt the assessment it induces" to a fixpoint.
///
/// From `start`, the first maxset's induced bipartition is weakly stable;
/// after that, whenever some maxset of the current bipartition induces a
/// different one, the search moves there. The reliable class can only grow
/// along the way, so the iteration terminates, and it ends on a bipartition
/// all of whose maxsets induce it back: a strongly stable one.
pub fn strongly_stable_search(ss: &SourceSet, start: &SourcePartition) -> SearchOutcome {
    let index = maxset_index(ss);
    let first = maxsets_of_with(&index, ss, start)
        .into_iter()
        .next()
        .expect("a partition of satisfiable sources has a maxset");
    let mut current = induced_bipartition(ss, &first);
    let weak_first = current.clone();
    loop {
        let next = maxsets_of_with(&index, ss, &current.to_source_partition())
            .iter()
            .map(|m| induced_bipartition(ss, m))
            .find(|p| *p != current);
        match next {
            Some(p) => current = p,
            None => break,
        }
    }
    SearchOutcome { weak_first, strong: current }
}

const SYNTHETIC_SOURCE: u32 = u32::MAX;

/// Maxsets of the two-class partition that ranks each source's conjunction
/// above all the individual formulas, with the synthetic conjunction
/// occurrences stripped from the result. These are exactly the maxsets of
/// the strongly stable bipartitions.
pub fn conjunction_partition_maxsets(ss: &SourceSet) -> Vec<Maxset> {
    let conjunctions: Vec<Formula> = ss
        .sources()
        .map(|s| Formula::conjunction(s.formulas().cloned()))
        .collect();
    let first: Vec<(OccurrenceId, &Formula)> = conjunctions
        .iter()
        .enumerate()
        .map(|(i, f)| (OccurrenceId::new(SYNTHETIC_SOURCE, i as u32), f))
        .collect();
    let second = ss.occurrences();
    let partition = OrderedFormulaPartition::new(vec![first, second]);
    let stripped: BTreeSet<Maxset> = maxsets::partition_maxsets(&partition, ss.universe())
        .into_iter()
        .map(|m| {
            Maxset::from_iter(m.iter().filter(|id| id.source != SYNTHETIC_SOURCE))
        })
        .collect();
    stripped.into_iter().collect()
}
