//! Command implementations and report types for the `relmerge` binary.
//!
//! Every verdict is computed by the library; this crate only loads files,
//! dispatches, and renders. Reports serialize to JSON with `--json` and
//! deserialize back to the same values, so scripted callers can treat the
//! output as a stable interface.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use relmerge::bounds::{self, BoundPair};
use relmerge::logic::{parse_formula_in, Formula};
use relmerge::maxsets::Maxset;
use relmerge::ordering;
use relmerge::partitions::{self, SourcePartition, SourceSet, Stability};
use relmerge::problem::{
    parse_partition_expr, parse_reliability_list, parse_weight_list, GraphFile,
    PartitionExpr, Problem, ProblemFile, SynthesisFile,
};
use relmerge::relation::{self, MildDef, Scope};
use relmerge::weighted::{self, Aggregation, WeightVector};
use relmerge::{Caps, Error};

/// Analyze reliability assessments of propositional sources.
#[derive(Debug, Parser)]
#[command(name = "relmerge", version, max_term_width = 100)]
pub struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Cap on the number of propositional variables.
    #[arg(long, global = true, value_name = "N")]
    pub max_vars: Option<usize>,
    /// Cap on the number of sources for enumerations.
    #[arg(long, global = true, value_name = "N")]
    pub max_sources: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List maxsets, plain or of an assumed reliability partition.
    Maxsets {
        /// Problem file (JSON).
        file: PathBuf,
        /// Partition expression like "(S1|S2,S3)" or "(S1|S2|S3)"; plain
        /// maxsets when omitted.
        #[arg(long, value_name = "EXPR")]
        partition: Option<String>,
    },
    /// Enumerate stable reliability assessments.
    Stable {
        file: PathBuf,
        /// Two classes (reliable | rest) or three (reliable | partly | unreliable).
        #[arg(long, value_enum)]
        arity: Arity,
        #[arg(long, value_enum, default_value_t = ModeArg::Weak)]
        mode: ModeArg,
        /// Scan every partition instead of only candidates induced by
        /// plain maxsets.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Build the assessment graph: X steps to Y when some maxset of X
    /// induces Y.
    Relation {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ScopeArg::Reachable)]
        scope: ScopeArg,
        /// Start the reachable scope from this assessment instead of the
        /// ones induced by plain maxsets; implies --scope reachable.
        #[arg(long, value_name = "EXPR")]
        seed: Option<String>,
        /// Also write the graph in DOT format to this path.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Find a percentage-threshold assessment that re-induces itself.
    Bounds {
        file: PathBuf,
        /// Reliability and unreliability thresholds, e.g. "9/10,1/2";
        /// falls back to the problem file's `bounds`.
        #[arg(long, value_name = "R,P")]
        bounds: Option<String>,
    },
    /// Check a numeric reliability ordering for stability.
    Ordering {
        file: PathBuf,
        /// Levels like "S1=0,S2=1" (0 = most reliable); falls back to the
        /// problem file's `reliability`.
        #[arg(long, value_name = "PAIRS")]
        reliability: Option<String>,
    },
    /// Merge by weighted Hamming distance and check weight coherence.
    Weighted {
        file: PathBuf,
        /// Weights like "S1=1,S2=2"; falls back to the problem file's
        /// `weights`, then to uniform weights.
        #[arg(long, value_name = "PAIRS")]
        weights: Option<String>,
        /// Constraint formula; overrides the problem file's `constraint`.
        #[arg(long, value_name = "FORMULA")]
        constraint: Option<String>,
        /// Report source distances aggregated by average as well;
        /// stability always uses the maximum.
        #[arg(long)]
        average: bool,
    },
    /// Build formulas whose plain maxsets match a prescribed family.
    Synthesize {
        /// Spec file (JSON with `letters`, `maxsets`, optional `sources`).
        spec: PathBuf,
        /// Write the generated problem file here instead of stdout.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Build sources whose assessment graph matches a prescribed graph.
    Realize {
        /// Spec file (JSON with `nodes` and `subgraphs`).
        spec: PathBuf,
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Arity {
    Bi,
    Tri,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Weak,
    Strong,
    /// Mildly stable, first reading: every successor steps straight back.
    Mild1,
    /// Second reading: every successor eventually steps back.
    Mild2,
    /// Third reading: mutually reachable with everything it reaches.
    Mild3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScopeArg {
    All,
    Reachable,
}

/// An error tagged with the process exit code it maps to.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.message)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Syntax { .. } => 1,
            Error::UniverseTooLarge { .. } | Error::SourceCapExceeded { .. } => 3,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError { code: 4, message: format!("{}: {e}", path.display()) }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

// ---------------------------------------------------------------------------
// Reports

/// One maxset: occurrence ids and the formulas they select, aligned.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaxsetEntry {
    pub occurrences: Vec<String>,
    pub formulas: Vec<String>,
}

impl MaxsetEntry {
    fn new(ss: &SourceSet, m: &Maxset) -> Self {
        MaxsetEntry {
            occurrences: m.iter().map(|id| ss.occurrence_label(id)).collect(),
            formulas: m
                .iter()
                .map(|id| ss.formula_of(id).display(ss.universe()).to_string())
                .collect(),
        }
    }

    fn brief(&self) -> String {
        format!("{{{}}}", self.occurrences.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MaxsetsReport {
    /// The partition analyzed, or "plain".
    pub partition: String,
    pub maxsets: Vec<MaxsetEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StableEntry {
    pub partition: String,
    /// Maxsets certifying the verdict: the inducing ones for weak
    /// stability and mild readings, all of them for strong.
    pub witnesses: Vec<MaxsetEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StableReport {
    pub arity: String,
    pub mode: String,
    pub stable: Vec<StableEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationNode {
    pub partition: String,
    /// A node is weakly stable exactly when it has a self-loop.
    pub weakly_stable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationEdge {
    pub from: String,
    pub to: String,
    pub witnesses: Vec<MaxsetEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RelationReport {
    pub nodes: Vec<RelationNode>,
    pub edges: Vec<RelationEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dot: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SourceFraction {
    pub source: String,
    /// Fraction of the source's formula occurrences (weighted by
    /// multiplicity) consistent with the witness maxset.
    pub fraction: String,
    /// "reliable", "partly" or "unreliable" under the thresholds.
    pub class: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub bounds: String,
    pub witness: MaxsetEntry,
    pub fractions: Vec<SourceFraction>,
    pub partition: String,
    pub weakly_stable: bool,
    pub strongly_stable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModelPriority {
    pub model: String,
    pub priority: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderingReport {
    /// name=level pairs as given.
    pub reliability: Vec<String>,
    pub priorities: Vec<ModelPriority>,
    /// name=level pairs recomputed from the priorities.
    pub recomputed: Vec<String>,
    pub stable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MergedModel {
    pub model: String,
    /// Per-source distances at this model, aggregated as reported in
    /// `aggregation`.
    pub distances: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightedReport {
    /// name=weight pairs in source order.
    pub weights: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constraint: Option<String>,
    pub badness: String,
    pub minima: Vec<MergedModel>,
    pub aggregation: String,
    pub weakly_stable: bool,
    pub strongly_stable: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SynthesizeReport {
    pub problem: ProblemFile,
    /// The plain maxsets of the generated formulas, read back as letter
    /// sets; equals the spec's family.
    pub maxsets: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealizeReport {
    pub problem: ProblemFile,
    /// `nodes[i][a]` is the assessment realizing node `a` of subgraph `i`.
    pub nodes: Vec<Vec<String>>,
    /// The extra strongly stable assessment completing the last source.
    pub completion: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Report {
    Maxsets(MaxsetsReport),
    Stable(StableReport),
    Relation(RelationReport),
    Bounds(BoundsReport),
    Ordering(OrderingReport),
    Weighted(WeightedReport),
    Synthesize(SynthesizeReport),
    Realize(RealizeReport),
}

// ---------------------------------------------------------------------------
// Command implementations

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn load_problem(path: &Path, caps: &Caps) -> CliResult<Problem> {
    Ok(ProblemFile::parse(&read(path)?)?.load(caps)?)
}

fn source_partition(
    ss: &SourceSet,
    expr: &str,
) -> CliResult<(SourcePartition, String)> {
    let parsed = parse_partition_expr(expr, ss)?;
    Ok(match parsed {
        PartitionExpr::Bi(p) => (p.to_source_partition(), p.label(ss)),
        PartitionExpr::Tri(p) => (p.to_source_partition(), p.label(ss)),
    })
}

pub fn cmd_maxsets(problem: &Problem, partition: Option<&str>) -> CliResult<MaxsetsReport> {
    let ss = &problem.sources;
    let (maxsets, label) = match partition {
        None => (partitions::plain_maxsets(ss), "plain".to_string()),
        Some(expr) => {
            let (p, label) = source_partition(ss, expr)?;
            (partitions::maxsets_of(ss, &p), label)
        }
    };
    Ok(MaxsetsReport {
        partition: label,
        maxsets: maxsets.iter().map(|m| MaxsetEntry::new(ss, m)).collect(),
    })
}

pub fn cmd_stable(
    problem: &Problem,
    arity: Arity,
    mode: ModeArg,
    exhaustive: bool,
    caps: &Caps,
) -> CliResult<StableReport> {
    let ss = &problem.sources;
    let stability = match mode {
        ModeArg::Weak => Some(Stability::Weak),
        ModeArg::Strong => Some(Stability::Strong),
        _ => None,
    };
    let stable = match (arity, stability) {
        (Arity::Bi, Some(st)) => {
            let hits = if exhaustive {
                partitions::enumerate_stable_bi_exhaustive(ss, st, caps)?
            } else {
                partitions::enumerate_stable_bi(ss, st, caps)?
            };
            hits.into_iter()
                .map(|(p, ws)| StableEntry {
                    partition: p.label(ss),
                    witnesses: ws.iter().map(|m| MaxsetEntry::new(ss, m)).collect(),
                })
                .collect()
        }
        (Arity::Tri, Some(st)) => {
            let hits = if exhaustive {
                partitions::enumerate_stable_tri_exhaustive(ss, st, caps)?
            } else {
                partitions::enumerate_stable_tri(ss, st, caps)?
            };
            hits.into_iter()
                .map(|(p, ws)| StableEntry {
                    partition: p.label(ss),
                    witnesses: ws.iter().map(|m| MaxsetEntry::new(ss, m)).collect(),
                })
                .collect()
        }
        (Arity::Bi, None) => {
            return Err(Error::Invalid(
                "mild stability is defined for three-class assessments; use --arity tri".into(),
            )
            .into());
        }
        (Arity::Tri, None) => {
            let def = match mode {
                ModeArg::Mild1 => MildDef::One,
                ModeArg::Mild2 => MildDef::Two,
                _ => MildDef::Three,
            };
            let scope = if exhaustive { Scope::All } else { Scope::Reachable };
            let graph = relation::build_relation_graph(ss, &scope, caps)?;
            relation::mildly_stable_in(&graph, def)
                .into_iter()
                .map(|i| StableEntry {
                    partition: graph.nodes()[i].label(ss),
                    witnesses: graph
                        .edge_witnesses(i, i)
                        .unwrap_or_default()
                        .iter()
                        .map(|m| MaxsetEntry::new(ss, m))
                        .collect(),
                })
                .collect()
        }
    };
    Ok(StableReport {
        arity: format!("{arity:?}").to_lowercase(),
        mode: format!("{mode:?}").to_lowercase(),
        stable,
    })
}

pub fn cmd_relation(
    problem: &Problem,
    scope: ScopeArg,
    seed: Option<&str>,
    dot_path: Option<&Path>,
    caps: &Caps,
) -> CliResult<RelationReport> {
    let ss = &problem.sources;
    let scope = match (seed, scope) {
        (Some(expr), _) => match parse_partition_expr(expr, ss)? {
            PartitionExpr::Tri(t) => Scope::Seeded(vec![t]),
            PartitionExpr::Bi(_) => {
                return Err(Error::Invalid(
                    "a seed assessment needs three classes, like (S1||S2)".into(),
                )
                .into());
            }
        },
        (None, ScopeArg::All) => Scope::All,
        (None, ScopeArg::Reachable) => Scope::Reachable,
    };
    let graph = relation::build_relation_graph(ss, &scope, caps)?;
    let dot = match dot_path {
        Some(path) => {
            let text = graph.to_dot(ss);
            std::fs::write(path, text).map_err(|e| io_error(path, e))?;
            Some(path.display().to_string())
        }
        None => None,
    };
    Ok(RelationReport {
        nodes: graph
            .nodes()
            .iter()
            .enumerate()
            .map(|(i, t)| RelationNode {
                partition: t.label(ss),
                weakly_stable: graph.is_self_loop(i),
            })
            .collect(),
        edges: graph
            .edges()
            .map(|(from, to, ws)| RelationEdge {
                from: graph.nodes()[from].label(ss),
                to: graph.nodes()[to].label(ss),
                witnesses: ws.iter().map(|m| MaxsetEntry::new(ss, m)).collect(),
            })
            .collect(),
        dot,
    })
}

pub fn cmd_bounds(problem: &Problem, bounds: Option<&str>) -> CliResult<BoundsReport> {
    let ss = &problem.sources;
    let pair = match bounds {
        Some(text) => BoundPair::parse(text)?,
        None => problem.bounds.clone().ok_or_else(|| {
            Error::Invalid("no bounds given: pass --bounds or add `bounds` to the file".into())
        })?,
    };
    let (partition, witness) = bounds::find_weakly_stable_bounds(ss, &pair);
    let fractions = (0..ss.len())
        .map(|s| {
            let f = bounds::consistency_fraction(ss, s, &witness);
            let class = if partition.reliable.contains(&s) {
                "reliable"
            } else if partition.partial.contains(&s) {
                "partly"
            } else {
                "unreliable"
            };
            SourceFraction {
                source: ss.source(s).name().to_string(),
                fraction: f.to_string(),
                class: class.to_string(),
            }
        })
        .collect();
    Ok(BoundsReport {
        bounds: format!("{},{}", pair.reliability(), pair.unreliability()),
        witness: MaxsetEntry::new(ss, &witness),
        fractions,
        partition: partition.label(ss),
        weakly_stable: bounds::is_bound_stable(ss, &partition, &pair, Stability::Weak),
        strongly_stable: bounds::is_bound_stable(ss, &partition, &pair, Stability::Strong),
    })
}

pub fn cmd_ordering(problem: &Problem, reliability: Option<&str>) -> CliResult<OrderingReport> {
    let ss = &problem.sources;
    let rel = match reliability {
        Some(text) => parse_reliability_list(text, ss)?,
        None => problem.reliability.clone().ok_or_else(|| {
            Error::Invalid(
                "no ordering given: pass --reliability or add `reliability` to the file".into(),
            )
        })?,
    };
    let priorities = ordering::priority_from_reliability(&rel, ss);
    let recomputed = ordering::reliability_from_priority(&priorities, ss)?;
    let pairs = |levels: &[u32]| {
        levels
            .iter()
            .enumerate()
            .map(|(s, l)| format!("{}={l}", ss.source(s).name()))
            .collect::<Vec<_>>()
    };
    Ok(OrderingReport {
        reliability: pairs(rel.levels()),
        priorities: ss
            .universe()
            .interpretations()
            .map(|m| ModelPriority {
                model: m.label(ss.universe()),
                priority: priorities.level(m),
            })
            .collect(),
        recomputed: pairs(recomputed.levels()),
        stable: ordering::is_stable_ordering(&rel, ss),
    })
}

pub fn cmd_weighted(
    problem: &Problem,
    weights: Option<&str>,
    constraint: Option<&str>,
    average: bool,
) -> CliResult<WeightedReport> {
    let ss = &problem.sources;
    let w = match weights {
        Some(text) => parse_weight_list(text, ss)?,
        None => match &problem.weights {
            Some(w) => w.clone(),
            None => WeightVector::uniform(ss),
        },
    };
    let constraint: Option<Formula> = match constraint {
        Some(text) => Some(parse_formula_in(text, ss.universe())?),
        None => problem.constraint.clone(),
    };
    let merged = weighted::weighted_merge(ss, &w, constraint.as_ref())?;
    let aggregation = if average { Aggregation::Average } else { Aggregation::Max };
    let minima = merged
        .minima
        .iter()
        .map(|&m| MergedModel {
            model: m.label(ss.universe()),
            distances: (0..ss.len())
                .map(|s| weighted::source_distance(ss, s, m, aggregation).to_string())
                .collect(),
        })
        .collect();
    Ok(WeightedReport {
        weights: w
            .weights()
            .iter()
            .enumerate()
            .map(|(s, v)| format!("{}={v}", ss.source(s).name()))
            .collect(),
        constraint: constraint
            .as_ref()
            .map(|f| f.display(ss.universe()).to_string()),
        badness: merged.badness.to_string(),
        minima,
        aggregation: match aggregation {
            Aggregation::Max => "max".to_string(),
            Aggregation::Average => "average".to_string(),
        },
        weakly_stable: weighted::weight_stability(ss, &w, constraint.as_ref(), Stability::Weak)?,
        strongly_stable: weighted::weight_stability(
            ss,
            &w,
            constraint.as_ref(),
            Stability::Strong,
        )?,
    })
}

fn write_or_keep(out: Option<&Path>, problem: &ProblemFile) -> CliResult<()> {
    if let Some(path) = out {
        std::fs::write(path, problem.to_json()).map_err(|e| io_error(path, e))?;
    }
    Ok(())
}

pub fn cmd_synthesize(spec_text: &str, out: Option<&Path>) -> CliResult<SynthesizeReport> {
    let file = SynthesisFile::parse(spec_text)?;
    let ss = file.build()?;
    let synthesis = relmerge::synthesis::synthesize(&file.to_spec())?;
    let problem = ProblemFile::from_sources(&ss);
    write_or_keep(out, &problem)?;
    Ok(SynthesizeReport {
        problem,
        maxsets: synthesis
            .letter_maxsets()
            .into_iter()
            .map(|m| m.into_iter().collect())
            .collect(),
    })
}

pub fn cmd_realize(spec_text: &str, out: Option<&Path>) -> CliResult<RealizeReport> {
    let spec = GraphFile::parse(spec_text)?.to_spec();
    let realization = relmerge::synthesis::realize_graph(&spec)?;
    let ss = &realization.sources;
    let problem = ProblemFile::from_sources(ss);
    write_or_keep(out, &problem)?;
    Ok(RealizeReport {
        problem,
        nodes: realization
            .nodes
            .iter()
            .map(|row| row.iter().map(|t| t.label(ss)).collect())
            .collect(),
        completion: realization.completion.label(ss),
    })
}

// ---------------------------------------------------------------------------
// Dispatch and rendering

pub fn caps_of(cli: &Cli) -> Caps {
    let mut caps = Caps::default();
    if let Some(v) = cli.max_vars {
        caps.max_vars = v;
    }
    if let Some(s) = cli.max_sources {
        caps = caps.with_max_sources(s);
    }
    caps
}

pub fn run(cli: &Cli) -> CliResult<Report> {
    let caps = caps_of(cli);
    match &cli.command {
        Command::Maxsets { file, partition } => {
            let problem = load_problem(file, &caps)?;
            Ok(Report::Maxsets(cmd_maxsets(&problem, partition.as_deref())?))
        }
        Command::Stable { file, arity, mode, exhaustive } => {
            let problem = load_problem(file, &caps)?;
            Ok(Report::Stable(cmd_stable(&problem, *arity, *mode, *exhaustive, &caps)?))
        }
        Command::Relation { file, scope, seed, dot } => {
            let problem = load_problem(file, &caps)?;
            Ok(Report::Relation(cmd_relation(
                &problem,
                *scope,
                seed.as_deref(),
                dot.as_deref(),
                &caps,
            )?))
        }
        Command::Bounds { file, bounds } => {
            let problem = load_problem(file, &caps)?;
            Ok(Report::Bounds(cmd_bounds(&problem, bounds.as_deref())?))
        }
        Command::Ordering { file, reliability } => {
            let problem = load_problem(file, &caps)?;
            Ok(Report::Ordering(cmd_ordering(&problem, reliability.as_deref())?))
        }
        Command::Weighted { file, weights, constraint, average } => {
            let problem = load_problem(file, &caps)?;
            Ok(Report::Weighted(cmd_weighted(
                &problem,
                weights.as_deref(),
                constraint.as_deref(),
                *average,
            )?))
        }
        Command::Synthesize { spec, out } => {
            let text = read(spec)?;
            Ok(Report::Synthesize(cmd_synthesize(&text, out.as_deref())?))
        }
        Command::Realize { spec, out } => {
            let text = read(spec)?;
            Ok(Report::Realize(cmd_realize(&text, out.as_deref())?))
        }
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Human-readable rendering; every datum also appears in the JSON form.
    pub fn human(&self) -> String {
        let mut s = String::new();
        match self {
            Report::Maxsets(r) => {
                let _ = writeln!(s, "partition: {}", r.partition);
                let _ = writeln!(s, "maxsets: {}", r.maxsets.len());
                for m in &r.maxsets {
                    let _ = writeln!(s, "  {}  =  {}", m.brief(), m.formulas.join(", "));
                }
            }
            Report::Stable(r) => {
                let _ = writeln!(s, "{} {} assessments: {}", r.arity, r.mode, r.stable.len());
                for e in &r.stable {
                    let ws: Vec<String> = e.witnesses.iter().map(MaxsetEntry::brief).collect();
                    let _ = writeln!(s, "  {}  via {}", e.partition, ws.join(", "));
                }
            }
            Report::Relation(r) => {
                let _ = writeln!(s, "{} nodes, {} edges", r.nodes.len(), r.edges.len());
                for n in &r.nodes {
                    let mark = if n.weakly_stable { "  [weakly stable]" } else { "" };
                    let _ = writeln!(s, "  {}{}", n.partition, mark);
                }
                for e in &r.edges {
                    let ws: Vec<String> = e.witnesses.iter().map(MaxsetEntry::brief).collect();
                    let _ = writeln!(s, "  {} => {}  via {}", e.from, e.to, ws.join(", "));
                }
                if let Some(path) = &r.dot {
                    let _ = writeln!(s, "dot written to {path}");
                }
            }
            Report::Bounds(r) => {
                let _ = writeln!(s, "bounds: {}", r.bounds);
                let _ = writeln!(s, "witness maxset: {}", r.witness.brief());
                for f in &r.fractions {
                    let _ = writeln!(s, "  {}: {} ({})", f.source, f.fraction, f.class);
                }
                let _ = writeln!(s, "assessment: {}", r.partition);
                let _ = writeln!(s, "stability: {}", verdict(r.weakly_stable, r.strongly_stable));
            }
            Report::Ordering(r) => {
                let _ = writeln!(s, "reliability: {}", r.reliability.join(", "));
                for p in &r.priorities {
                    let _ = writeln!(s, "  {}  priority {}", p.model, p.priority);
                }
                let _ = writeln!(s, "recomputed: {}", r.recomputed.join(", "));
                let _ = writeln!(s, "stable: {}", if r.stable { "yes" } else { "no" });
            }
            Report::Weighted(r) => {
                let _ = writeln!(s, "weights: {}", r.weights.join(", "));
                if let Some(c) = &r.constraint {
                    let _ = writeln!(s, "constraint: {c}");
                }
                let _ = writeln!(s, "badness: {}", r.badness);
                for m in &r.minima {
                    let _ = writeln!(
                        s,
                        "  {}  distances ({}): {}",
                        m.model,
                        r.aggregation,
                        m.distances.join(", ")
                    );
                }
                let _ = writeln!(s, "stability: {}", verdict(r.weakly_stable, r.strongly_stable));
            }
            Report::Synthesize(r) => {
                let _ = writeln!(s, "maxsets realized: {}", r.maxsets.len());
                for m in &r.maxsets {
                    let _ = writeln!(s, "  {{{}}}", m.join(", "));
                }
                s.push_str(&r.problem.to_json());
            }
            Report::Realize(r) => {
                for (i, row) in r.nodes.iter().enumerate() {
                    for (a, label) in row.iter().enumerate() {
                        let _ = writeln!(s, "subgraph {i} node {a}: {label}");
                    }
                }
                let _ = writeln!(s, "completion: {}", r.completion);
                s.push_str(&r.problem.to_json());
            }
        }
        s
    }
}

fn verdict(weak: bool, strong: bool) -> &'static str {
    match (weak, strong) {
        (_, true) => "strong",
        (true, false) => "weak",
        (false, false) => "no",
    }
}
