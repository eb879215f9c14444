//! Building formula families with prescribed structure.
//!
//! Two factories. The first takes a family of letter sets, none contained
//! in another, and produces one formula per letter such that a group of
//! letters is jointly satisfiable exactly when it fits inside a family
//! member — so the plain maxsets, read back as letter sets, are the family.
//! The second takes a graph of n disconnected subgraphs of n nodes each
//! and produces sources whose weakly stable three-class assessments and
//! merge steps mirror the graph (plus one isolated strongly stable
//! assessment that completes the last source; see [`realize_graph`]).

use std::collections::{BTreeMap, BTreeSet};

use crate::logic::{Formula, Universe};
use crate::maxsets::{self, OccurrenceId};
use crate::partitions::{valid_name, Source, SourceSet, Tripartition};
use crate::{Error, Result};

/// A prescribed maxset family: named letters and the letter sets that are
/// to be exactly the plain maxsets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxsetSpec {
    pub letters: Vec<String>,
    pub maxsets: Vec<BTreeSet<String>>,
}

fn join(set: &BTreeSet<String>) -> String {
    set.iter().cloned().collect::<Vec<_>>().join(", ")
}

impl MaxsetSpec {
    /// Letters must be unique identifiers, each maxset a set of known
    /// letters, the family an antichain covering every letter.
    pub fn validate(&self) -> Result<()> {
        if self.letters.is_empty() {
            return Err(Error::Invalid("a maxset spec needs at least one letter".into()));
        }
        let mut known = BTreeSet::new();
        for l in &self.letters {
            if !valid_name(l) {
                return Err(Error::Invalid(format!("letter `{l}` is not an identifier")));
            }
            if !known.insert(l.clone()) {
                return Err(Error::Invalid(format!("duplicate letter `{l}`")));
            }
        }
        for m in &self.maxsets {
            for l in m {
                if !known.contains(l) {
                    return Err(Error::Invalid(format!(
                        "maxset mentions unknown letter `{l}`"
                    )));
                }
            }
        }
        for (i, a) in self.maxsets.iter().enumerate() {
            for (j, b) in self.maxsets.iter().enumerate() {
                if i != j && a.is_subset(b) {
                    return Err(Error::NotAntichain {
                        smaller: join(a),
                        larger: join(b),
                    });
                }
            }
        }
        for l in &self.letters {
            if !self.maxsets.iter().any(|m| m.contains(l)) {
                return Err(Error::UncoveredLetter(l.clone()));
            }
        }
        Ok(())
    }
}

/// The output of [`synthesize`]: a fresh universe and one formula per
/// letter, in the spec's letter order.
#[derive(Clone, Debug)]
pub struct Synthesis {
    pub universe: Universe,
    pub formulas: Vec<(String, Formula)>,
}

impl Synthesis {
    pub fn formula(&self, letter: &str) -> Option<&Formula> {
        self.formulas
            .iter()
            .find(|(l, _)| l == letter)
            .map(|(_, f)| f)
    }

    /// The plain maxsets of the produced formulas, one occurrence per
    /// letter, read back as letter sets.
    pub fn letter_maxsets(&self) -> Vec<BTreeSet<String>> {
        let pool: Vec<(OccurrenceId, &Formula)> = self
            .formulas
            .iter()
            .enumerate()
            .map(|(i, (_, f))| (OccurrenceId::new(i as u32, 0), f))
            .collect();
        maxsets::plain_maxsets(&pool, &self.universe)
            .into_iter()
            .map(|m| {
                m.iter()
                    .map(|id| self.formulas[id.source as usize].0.clone())
                    .collect()
            })
            .collect()
    }
}

/// Produces formulas whose plain maxsets are exactly the spec's family.
///
/// One fresh variable per family member; the formula of a letter says
/// "exactly the variable of one member I belong to is true". A letter
/// group is then jointly satisfiable precisely when some member contains
/// it, and the antichain condition makes the maximal groups the family
/// itself. The construction is checked by tests through the read-back,
/// not trusted.
pub fn synthesize(spec: &MaxsetSpec) -> Result<Synthesis> {
    spec.validate()?;
    let mut universe = Universe::new();
    let vars: Vec<u32> = (1..=spec.maxsets.len())
        .map(|k| universe.intern(&format!("v{k}")))
        .collect();
    let exactly = |k: usize| {
        Formula::conjunction(vars.iter().enumerate().map(|(j, &v)| {
            if j == k {
                Formula::var(v)
            } else {
                Formula::not(Formula::var(v))
            }
        }))
    };
    let formulas = spec
        .letters
        .iter()
        .map(|l| {
            let f = Formula::disjunction(
                spec.maxsets
                    .iter()
                    .enumerate()
                    .filter(|(_, m)| m.contains(l))
                    .map(|(k, _)| exactly(k)),
            );
            (l.clone(), f)
        })
        .collect();
    Ok(Synthesis { universe, formulas })
}

/// A directed graph given as n subgraphs of n nodes each; edges stay
/// inside their subgraph by construction. Self-loops may be listed but are
/// implied: every realized assessment is weakly stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphSpec {
    pub n: usize,
    pub subgraphs: Vec<Vec<(usize, usize)>>,
}

impl GraphSpec {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::MalformedSpec("the graph needs at least one node".into()));
        }
        if self.subgraphs.len() != self.n {
            return Err(Error::MalformedSpec(format!(
                "{} nodes per subgraph requires exactly {} subgraphs, got {}",
                self.n,
                self.n,
                self.subgraphs.len()
            )));
        }
        for (i, edges) in self.subgraphs.iter().enumerate() {
            for &(a, b) in edges {
                if a >= self.n || b >= self.n {
                    return Err(Error::MalformedSpec(format!(
                        "edge ({a}, {b}) of subgraph {i} is out of range"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The realized sources together with the map from graph nodes to
/// three-class assessments.
#[derive(Clone, Debug)]
pub struct Realization {
    pub sources: SourceSet,
    /// `nodes[i][a]` is the assessment realizing node `a` of subgraph `i`.
    pub nodes: Vec<Vec<Tripartition>>,
    /// The isolated strongly stable assessment that completes the last
    /// source; it corresponds to no graph node.
    pub completion: Tripartition,
    /// The maxset family the sources were synthesized from.
    pub maxset_spec: MaxsetSpec,
}

/// Realizes the graph as sources S0..Sn of three formulas each.
///
/// Subgraph i centers on source i: node a maps to the maxset holding all
/// of source i, the first two formulas of a companion source, and the
/// first formula of each edge target's source; companions are numbered
/// around i, skipping it. The companion assessments — center source fully
/// reliable, companion and targets partly — mirror the subgraph's edges.
/// The third formula of the last source appears in no such maxset, so the
/// family is completed with that source's own triple; this adds one
/// strongly stable assessment with no incoming or outgoing steps, listed
/// as `completion`.
///
/// Two nodes of a subgraph with the same companion-plus-targets footprint
/// would collapse to one assessment; such specs are rejected.
pub fn realize_graph(spec: &GraphSpec) -> Result<Realization> {
    spec.validate()?;
    let n = spec.n;
    let letter = |s: usize, primes: usize| format!("F{}{}", s, "p".repeat(primes));
    // Companion source of node a in subgraph i: count past the center.
    let companion = |i: usize, a: usize| if a >= i { a + 1 } else { a };

    let mut maxsets = Vec::new();
    let mut nodes = Vec::new();
    for i in 0..n {
        let mut seen: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut subgraph_nodes = Vec::new();
        for a in 0..n {
            let mut partial: BTreeSet<usize> = BTreeSet::new();
            partial.insert(companion(i, a));
            let mut m: BTreeSet<String> = (0..3).map(|p| letter(i, p)).collect();
            m.insert(letter(companion(i, a), 0));
            m.insert(letter(companion(i, a), 1));
            for &(x, b) in &spec.subgraphs[i] {
                if x == a {
                    partial.insert(companion(i, b));
                    m.insert(letter(companion(i, b), 0));
                }
            }
            if let Some(other) = seen.insert(partial.clone(), a) {
                return Err(Error::MalformedSpec(format!(
                    "nodes {other} and {a} of subgraph {i} would collapse to the same assessment"
                )));
            }
            maxsets.push(m);
            subgraph_nodes.push(Tripartition::new(
                BTreeSet::from([i]),
                partial,
                n + 1,
            ));
        }
        nodes.push(subgraph_nodes);
    }
    maxsets.push((0..3).map(|p| letter(n, p)).collect());

    let letters = (0..=n)
        .flat_map(|s| (0..3).map(move |p| letter(s, p)))
        .collect();
    let maxset_spec = MaxsetSpec { letters, maxsets };
    let synthesis = synthesize(&maxset_spec)?;
    let formulas: BTreeMap<String, Formula> = synthesis.formulas.into_iter().collect();
    let sources = (0..=n)
        .map(|s| {
            Source::new(
                format!("S{s}"),
                (0..3).map(|p| (formulas[&letter(s, p)].clone(), 1)).collect(),
            )
        })
        .collect();
    let sources = SourceSet::new(sources, synthesis.universe)?;
    let completion = Tripartition::new(BTreeSet::from([n]), BTreeSet::new(), n + 1);
    Ok(Realization { sources, nodes, completion, maxset_spec })
}
