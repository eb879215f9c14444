//! Helpers shared by the integration test targets: fixture loading and
//! name-based constructors for maxsets and assessments.

#![allow(dead_code)]

use std::path::{Path, PathBuf};

use relmerge::maxsets::{Maxset, OccurrenceId};
use relmerge::partitions::{Bipartition, SourceSet, Tripartition};
use relmerge::problem::{GraphFile, Problem, ProblemFile, SynthesisFile};
use relmerge::Caps;

pub fn fixture_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("..")
        .join("..")
        .join("fixtures")
}

pub fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

/// Loads and validates a problem fixture from `fixtures/problems/`.
pub fn problem(name: &str) -> Problem {
    let path = fixture_dir().join("problems").join(name);
    ProblemFile::parse(&read(&path))
        .and_then(|file| file.load(&Caps::default()))
        .unwrap_or_else(|e| panic!("loading {}: {e}", path.display()))
}

/// Shorthand for the source set of a problem fixture.
pub fn sources(name: &str) -> SourceSet {
    problem(name).sources
}

/// Parses a maxset-family spec from `fixtures/specs/`.
pub fn family_spec(name: &str) -> SynthesisFile {
    let path = fixture_dir().join("specs").join(name);
    SynthesisFile::parse(&read(&path)).unwrap_or_else(|e| panic!("parsing {}: {e}", path.display()))
}

/// Parses a relation-graph spec from `fixtures/specs/`.
pub fn graph_spec(name: &str) -> GraphFile {
    let path = fixture_dir().join("specs").join(name);
    GraphFile::parse(&read(&path)).unwrap_or_else(|e| panic!("parsing {}: {e}", path.display()))
}

/// Every problem fixture, sorted by file name.
pub fn corpus() -> Vec<(String, Problem)> {
    let dir = fixture_dir().join("problems");
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("listing {}: {e}", dir.display()))
        .map(|entry| entry.unwrap().file_name().into_string().unwrap())
        .filter(|name| name.ends_with(".json"))
        .collect();
    names.sort();
    names.into_iter().map(|name| { let p = problem(&name); (name, p) }).collect()
}

pub fn occ(ss: &SourceSet, source: &str, index: u32) -> OccurrenceId {
    let s = ss
        .index_of(source)
        .unwrap_or_else(|| panic!("no source named {source}"));
    OccurrenceId::new(s as u32, index)
}

pub fn mx(ss: &SourceSet, items: &[(&str, u32)]) -> Maxset {
    Maxset::from_iter(items.iter().map(|&(name, index)| occ(ss, name, index)))
}

pub fn bi(ss: &SourceSet, reliable: &[&str]) -> Bipartition {
    Bipartition::new(
        reliable.iter().map(|name| ss.index_of(name).unwrap()).collect(),
        ss.len(),
    )
}

pub fn tri(ss: &SourceSet, reliable: &[&str], partial: &[&str]) -> Tripartition {
    Tripartition::new(
        reliable.iter().map(|name| ss.index_of(name).unwrap()).collect(),
        partial.iter().map(|name| ss.index_of(name).unwrap()).collect(),
        ss.len(),
    )
}
