//! Merging inconsistent propositional sources with reliability assessment.
//!
//! Each source supplies a set of propositional formulas. A *maxset* is a
//! maximal jointly-satisfiable subset of the supplied formulas; when sources
//! are ranked by assumed reliability, maxsets are taken level by level, most
//! reliable sources first. The key twist is that a merge result can itself be
//! used to re-assess the sources: a source whose formulas all survived looks
//! reliable, one that was wiped out does not. An assumed assessment is
//! *stable* when some (weakly) or every (strongly) merge result re-induces it.
//!
//! The crate provides:
//!
//! - [`logic`]: formulas, parsing, satisfiability, model enumeration;
//! - [`maxsets`]: maxsets of flat pools and of ordered partitions;
//! - [`partitions`]: sources, two- and three-class reliability partitions,
//!   induced assessments, weak/strong stability, and the greedy and
//!   fixpoint-search algorithms;
//! - [`relation`]: the "some maxset of X induces Y" relation between
//!   three-class assessments, its closure, and the mild stability notions;
//! - [`bounds`]: percentage-threshold assessments over multisets of formulas;
//! - [`ordering`]: numeric reliability orderings re-derived through model
//!   plausibility;
//! - [`weighted`]: weighted distance-based merging and weight coherence;
//! - [`synthesis`]: building formulas that realize a prescribed maxset
//!   family, and source sets whose stability relation matches a given graph;
//! - [`problem`]: the JSON problem-file format shared by the CLI and tests.

pub mod bounds;
mod error;
pub mod logic;
pub mod maxsets;
pub mod ordering;
pub mod partitions;
pub mod problem;
pub mod relation;
pub mod synthesis;
pub mod weighted;

pub use error::{Error, Result};

/// Size caps for the enumeration entry points.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest universe accepted by model enumeration.
    pub max_vars: usize,
    /// Largest source count for bipartition enumeration.
    pub max_bi_sources: usize,
    /// Largest source count for tripartition enumeration.
    pub max_tri_sources: usize,
    /// Largest source count for the full 3^n relation graph.
    pub max_relation_sources: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_vars: logic::DEFAULT_VAR_CAP,
            max_bi_sources: 10,
            max_tri_sources: 8,
            max_relation_sources: 8,
        }
    }
}

impl Caps {
    /// Caps with every source limit replaced by `n`.
    pub fn with_max_sources(self, n: usize) -> Self {
        Caps {
            max_bi_sources: n,
            max_tri_sources: n,
            max_relation_sources: n,
            ..self
        }
    }
}
