//! File formats: JSON problem files, inline partition expressions, and the
//! JSON spec files consumed by the two synthesis commands.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::bounds::{parse_fraction, BoundPair};
use crate::logic::{parse_formula, Formula, Universe};
use crate::ordering::ReliabilityMap;
use crate::partitions::{Bipartition, Source, SourceSet, Tripartition};
use crate::synthesis::{GraphSpec, MaxsetSpec};
use crate::weighted::WeightVector;
use crate::{Caps, Error, Result};

/// Most occurrences a problem may declare; maxset enumeration tracks
/// occurrence sets in a machine word.
pub const MAX_OCCURRENCES: usize = 64;

/// A formula entry in a problem file: either a bare formula string or a
/// formula with a multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FormulaEntry {
    Plain(String),
    Repeated { formula: String, multiplicity: u32 },
}

impl FormulaEntry {
    fn parts(&self) -> (&str, u32) {
        match self {
            FormulaEntry::Plain(f) => (f, 1),
            FormulaEntry::Repeated { formula, multiplicity } => (formula, *multiplicity),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceEntry {
    pub name: String,
    pub formulas: Vec<FormulaEntry>,
}

/// The on-disk problem format: named sources plus optional analysis
/// parameters that commands may override from the command line.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub sources: Vec<SourceEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraint: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reliability: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bounds: Option<String>,
}

/// A loaded problem: the source set plus whatever optional parameters the
/// file carried, parsed and validated.
#[derive(Clone, Debug)]
pub struct Problem {
    pub sources: SourceSet,
    pub constraint: Option<Formula>,
    pub weights: Option<WeightVector>,
    pub reliability: Option<ReliabilityMap>,
    pub bounds: Option<BoundPair>,
}

impl ProblemFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json)
            .map_err(|e| Error::Invalid(format!("problem file: {e}")))
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("the schema serializes");
        out.push('\n');
        out
    }

    /// Renders a source set back into the file format.
    pub fn from_sources(ss: &SourceSet) -> Self {
        let sources = ss
            .sources()
            .map(|s| SourceEntry {
                name: s.name().to_string(),
                formulas: (0..s.len())
                    .map(|i| {
                        let text = s.formula(i).display(ss.universe()).to_string();
                        match s.multiplicity(i) {
                            1 => FormulaEntry::Plain(text),
                            m => FormulaEntry::Repeated { formula: text, multiplicity: m },
                        }
                    })
                    .collect(),
            })
            .collect();
        ProblemFile { sources, ..ProblemFile::default() }
    }

    /// Parses every formula, builds the source set, and validates the
    /// optional parameter blocks against it.
    pub fn load(&self, caps: &Caps) -> Result<Problem> {
        let mut universe = Universe::new();
        let mut sources = Vec::new();
        let mut occurrences = 0usize;
        for entry in &self.sources {
            let mut parsed = Vec::new();
            for f in &entry.formulas {
                let (text, multiplicity) = f.parts();
                parsed.push((parse_formula(text, &mut universe)?, multiplicity));
            }
            occurrences += parsed.len();
            sources.push(Source::new(entry.name.clone(), parsed));
        }
        if occurrences > MAX_OCCURRENCES {
            return Err(Error::Invalid(format!(
                "{occurrences} formula occurrences exceed the supported maximum of {MAX_OCCURRENCES}"
            )));
        }
        let constraint = match &self.constraint {
            Some(text) => Some(parse_formula(text, &mut universe)?),
            None => None,
        };
        if universe.len() > caps.max_vars {
            return Err(Error::UniverseTooLarge {
                actual: universe.len(),
                cap: caps.max_vars,
            });
        }
        let sources = SourceSet::new(sources, universe)?;
        let weights = match &self.weights {
            Some(map) => Some(weight_vector(
                map.iter().map(|(k, v)| (k.as_str(), v.as_str())),
                &sources,
            )?),
            None => None,
        };
        let reliability = match &self.reliability {
            Some(map) => {
                let levels = complete_assignment(
                    map.iter().map(|(k, v)| (k.as_str(), *v)),
                    &sources,
                )?;
                Some(ReliabilityMap::new(levels, &sources)?)
            }
            None => None,
        };
        let bounds = match &self.bounds {
            Some(text) => Some(BoundPair::parse(text)?),
            None => None,
        };
        Ok(Problem { sources, constraint, weights, reliability, bounds })
    }
}

/// Resolves `name → value` pairs into a per-source vector; every source
/// must be assigned exactly once.
fn complete_assignment<T>(
    pairs: impl Iterator<Item = (impl AsRef<str>, T)>,
    ss: &SourceSet,
) -> Result<Vec<T>> {
    let mut values: Vec<Option<T>> = (0..ss.len()).map(|_| None).collect();
    for (name, value) in pairs {
        let name = name.as_ref();
        let i = ss
            .index_of(name)
            .ok_or_else(|| Error::UnknownSource(name.to_string()))?;
        if values[i].is_some() {
            return Err(Error::Invalid(format!("source `{name}` assigned twice")));
        }
        values[i] = Some(value);
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::Invalid(format!("source `{}` has no assignment", ss.source(i).name()))
            })
        })
        .collect()
}

fn weight_vector<'a>(
    pairs: impl Iterator<Item = (&'a str, &'a str)>,
    ss: &SourceSet,
) -> Result<WeightVector> {
    let fractions: Vec<(&str, BigRational)> = pairs
        .map(|(name, text)| Ok((name, parse_fraction(text)?)))
        .collect::<Result<_>>()?;
    WeightVector::new(complete_assignment(fractions.into_iter(), ss)?, ss)
}

/// Parses `"S1=1,S2=2"` into a weight vector over the given sources.
pub fn parse_weight_list(text: &str, ss: &SourceSet) -> Result<WeightVector> {
    let pairs = split_pairs(text)?;
    weight_vector(pairs.iter().map(|(n, v)| (*n, *v)), ss)
}

/// Parses `"S1=0,S2=1"` into a reliability map over the given sources.
pub fn parse_reliability_list(text: &str, ss: &SourceSet) -> Result<ReliabilityMap> {
    let pairs = split_pairs(text)?;
    let levels = complete_assignment(
        pairs
            .into_iter()
            .map(|(name, value)| {
                let level: u32 = value.parse().map_err(|_| {
                    Error::Invalid(format!("reliability level `{value}` is not an integer"))
                })?;
                Ok((name, level))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter(),
        ss,
    )?;
    ReliabilityMap::new(levels, ss)
}

fn split_pairs(text: &str) -> Result<Vec<(&str, &str)>> {
    text.split(',')
        .filter(|part| !part.trim().is_empty())
        .map(|part| {
            part.split_once('=')
                .map(|(n, v)| (n.trim(), v.trim()))
                .ok_or_else(|| Error::Invalid(format!("expected `name=value`, got `{part}`")))
        })
        .collect()
}

/// A parsed inline partition expression: `(S1|S2,S3)` with two classes or
/// `(S1|S2|S3)` with three.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionExpr {
    Bi(Bipartition),
    Tri(Tripartition),
}

/// Parses a partition expression against the given sources. Classes are
/// `|`-separated, sources within a class comma-separated; empty classes
/// are allowed, but every source must appear exactly once.
pub fn parse_partition_expr(text: &str, ss: &SourceSet) -> Result<PartitionExpr> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| {
            Error::Invalid(format!("partition expression `{trimmed}` is not parenthesized"))
        })?;
    let classes: Vec<BTreeSet<usize>> = inner
        .split('|')
        .map(|class| {
            class
                .split(',')
                .map(str::trim)
                .filter(|name| !name.is_empty())
                .map(|name| {
                    ss.index_of(name)
                        .ok_or_else(|| Error::UnknownSource(name.to_string()))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    let named = inner
        .split(['|', ','])
        .map(str::trim)
        .filter(|name| !name.is_empty())
        .count();
    let distinct: BTreeSet<usize> = classes.iter().flatten().copied().collect();
    if distinct.len() < named {
        return Err(Error::Invalid(format!(
            "a source appears twice in `{trimmed}`"
        )));
    }
    if distinct.len() < ss.len() {
        let missing = (0..ss.len())
            .find(|i| !distinct.contains(i))
            .expect("some source is unnamed");
        return Err(Error::Invalid(format!(
            "source `{}` is missing from `{trimmed}`",
            ss.source(missing).name()
        )));
    }
    match classes.as_slice() {
        [reliable, _] => Ok(PartitionExpr::Bi(Bipartition::new(reliable.clone(), ss.len()))),
        [reliable, partial, _] => Ok(PartitionExpr::Tri(Tripartition::new(
            reliable.clone(),
            partial.clone(),
            ss.len(),
        ))),
        _ => Err(Error::Invalid(format!(
            "`{trimmed}` must have two or three `|`-separated classes"
        ))),
    }
}

/// The JSON form of a maxset spec, with an optional grouping of letters
/// into named sources; ungrouped specs get one source per letter, named
/// after it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SynthesisFile {
    pub letters: Vec<String>,
    pub maxsets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sources: Option<Vec<LetterGroup>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterGroup {
    pub name: String,
    pub letters: Vec<String>,
}

impl SynthesisFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json)
            .map_err(|e| Error::Invalid(format!("synthesis spec: {e}")))
    }

    pub fn to_spec(&self) -> MaxsetSpec {
        MaxsetSpec {
            letters: self.letters.clone(),
            maxsets: self
                .maxsets
                .iter()
                .map(|m| m.iter().cloned().collect())
                .collect(),
        }
    }

    /// Synthesizes the formulas and groups them into sources.
    pub fn build(&self) -> Result<SourceSet> {
        let synthesis = crate::synthesis::synthesize(&self.to_spec())?;
        let formula_of = |letter: &str| {
            synthesis
                .formula(letter)
                .cloned()
                .ok_or_else(|| Error::Invalid(format!("unknown letter `{letter}` in grouping")))
        };
        let sources = match &self.sources {
            None => self
                .letters
                .iter()
                .map(|l| Ok(Source::new(l.clone(), vec![(formula_of(l)?, 1)])))
                .collect::<Result<Vec<_>>>()?,
            Some(groups) => {
                let mut grouped: BTreeSet<&str> = BTreeSet::new();
                for g in groups {
                    for l in &g.letters {
                        if !grouped.insert(l) {
                            return Err(Error::Invalid(format!(
                                "letter `{l}` grouped twice"
                            )));
                        }
                    }
                }
                for l in &self.letters {
                    if !grouped.contains(l.as_str()) {
                        return Err(Error::Invalid(format!("letter `{l}` is in no source")));
                    }
                }
                groups
                    .iter()
                    .map(|g| {
                        let fs = g
                            .letters
                            .iter()
                            .map(|l| Ok((formula_of(l)?, 1)))
                            .collect::<Result<Vec<_>>>()?;
                        Ok(Source::new(g.name.clone(), fs))
                    })
                    .collect::<Result<Vec<_>>>()?
            }
        };
        SourceSet::new(sources, synthesis.universe)
    }
}

/// The JSON form of a graph spec for realization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphFile {
    pub nodes: usize,
    pub subgraphs: Vec<Vec<(usize, usize)>>,
}

impl GraphFile {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("graph spec: {e}")))
    }

    pub fn to_spec(&self) -> GraphSpec {
        GraphSpec { n: self.nodes, subgraphs: self.subgraphs.clone() }
    }
}
