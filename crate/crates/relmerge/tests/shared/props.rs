//! Randomized invariant suites shared by the `properties` and `acceptance`
//! test targets.  Each public function runs one property over at least 256
//! generated cases and panics with the minimal failing input on violation.
//!
//! Generated instances stay small on purpose: at most 8 variables and at most
//! 10 formula occurrences, so every suite can fall back on exhaustive
//! truth-table or subset enumeration as its oracle.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use relmerge::bounds::{self, BoundPair};
use relmerge::logic::{self, Formula, Interpretation, Universe};
use relmerge::maxsets::{Maxset, OccurrenceId};
use relmerge::partitions::{self, Bipartition, Source, SourceSet, Stability, Tripartition};
use relmerge::relation::{self, Scope};
use relmerge::synthesis::{self, MaxsetSpec};
use relmerge::weighted::{self, WeightVector};
use relmerge::Caps;

const CASES: u32 = 256;

/// Runs `test` against `cases` inputs drawn from `strategy`.
fn check<S>(name: &str, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>)
where
    S: Strategy,
{
    let mut runner = TestRunner::new(Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    });
    if let Err(e) = runner.run(&strategy, test) {
        panic!("property `{name}` failed: {e}");
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Arbitrary formula trees over eight variables, satisfiable or not.
fn formula_tree() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        (0u32..8).prop_map(Formula::var),
        Just(Formula::Const(true)),
        Just(Formula::Const(false)),
    ];
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

/// A conjunction of literals over distinct variables; always satisfiable.
fn cube(nvars: u32) -> impl Strategy<Value = Formula> {
    proptest::collection::vec(proptest::option::of(any::<bool>()), nvars as usize).prop_map(
        |literals| {
            Formula::conjunction(literals.into_iter().enumerate().filter_map(|(v, lit)| {
                lit.map(|positive| {
                    let var = Formula::var(v as u32);
                    if positive { var } else { Formula::not(var) }
                })
            }))
        },
    )
}

/// A disjunction of one or two cubes; satisfiable by construction, which is
/// what source formulas must be.
fn clause_formula(nvars: u32) -> impl Strategy<Value = Formula> {
    proptest::collection::vec(cube(nvars), 1..=2).prop_map(Formula::disjunction)
}

fn build_sources(groups: Vec<Vec<Formula>>, nvars: u32) -> SourceSet {
    let universe = Universe::from_names((0..nvars).map(|v| format!("x{v}")));
    let sources = groups
        .into_iter()
        .enumerate()
        .map(|(i, formulas)| {
            Source::new(
                format!("S{i}"),
                formulas.into_iter().map(|f| (f, 1)).collect(),
            )
        })
        .collect();
    SourceSet::new(sources, universe).expect("generated source formulas are satisfiable")
}

/// Random source sets: up to `max_sources` sources of up to `max_formulas`
/// formulas each, over `nvars` variables.
fn source_set(
    max_sources: usize,
    max_formulas: usize,
    nvars: u32,
) -> impl Strategy<Value = SourceSet> {
    proptest::collection::vec(
        proptest::collection::vec(clause_formula(nvars), 1..=max_formulas),
        1..=max_sources,
    )
    .prop_map(move |groups| build_sources(groups, nvars))
}

/// A source set together with a random class assignment for each source
/// (0 = reliable, 1 = partial, 2 = unreliable).
fn set_with_classes(
    max_sources: usize,
    max_formulas: usize,
    nvars: u32,
) -> impl Strategy<Value = (SourceSet, Vec<u8>)> {
    source_set(max_sources, max_formulas, nvars).prop_flat_map(|ss| {
        let n = ss.len();
        (Just(ss), proptest::collection::vec(0u8..3, n))
    })
}

fn tri_from(classes: &[u8]) -> Tripartition {
    let reliable = classes.iter().enumerate().filter(|&(_, &c)| c == 0).map(|(s, _)| s).collect();
    let partial = classes.iter().enumerate().filter(|&(_, &c)| c == 1).map(|(s, _)| s).collect();
    Tripartition::new(reliable, partial, classes.len())
}

fn bi_from(classes: &[u8]) -> Bipartition {
    let reliable = classes.iter().enumerate().filter(|&(_, &c)| c == 0).map(|(s, _)| s).collect();
    Bipartition::new(reliable, classes.len())
}

fn occurrences_of_sources(ss: &SourceSet, picked: &BTreeSet<usize>) -> Vec<OccurrenceId> {
    picked
        .iter()
        .flat_map(|&s| (0..ss.source(s).len()).map(move |i| OccurrenceId::new(s as u32, i as u32)))
        .collect()
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Every maxset computed for an ordered partition is also a plain maxset of
/// the whole pool.
pub fn partition_maxsets_are_plain() {
    check(
        "partition maxsets are plain maxsets",
        set_with_classes(3, 3, 4),
        |(ss, classes)| {
            let plain: BTreeSet<Maxset> = partitions::plain_maxsets(&ss).into_iter().collect();
            let parts = [
                tri_from(&classes).to_source_partition(),
                bi_from(&classes).to_source_partition(),
            ];
            for p in parts {
                for m in partitions::maxsets_of(&ss, &p) {
                    prop_assert!(
                        plain.contains(&m),
                        "{} is not a plain maxset",
                        ss.maxset_label(&m)
                    );
                }
            }
            Ok(())
        },
    );
}

/// A pooled formula that is consistent with a plain maxset already belongs to
/// it: maxsets absorb everything they do not contradict.
pub fn consistent_formulas_are_members() {
    check(
        "formulas consistent with a plain maxset are members",
        source_set(3, 3, 4),
        |ss| {
            let pool = ss.occurrences();
            for m in partitions::plain_maxsets(&ss) {
                let chosen = ss.maxset_formulas(&m);
                for &(id, f) in &pool {
                    if logic::consistent_with(chosen.iter().copied(), f) {
                        prop_assert!(
                            m.contains(id),
                            "{} is consistent with {} but missing from it",
                            ss.occurrence_label(id),
                            ss.maxset_label(&m)
                        );
                    }
                }
            }
            Ok(())
        },
    );
}

/// When the union of the first classes of an ordered partition is jointly
/// satisfiable, every maxset of that partition keeps the union whole.
pub fn satisfiable_prefixes_are_kept_whole() {
    check(
        "jointly satisfiable class prefixes survive intact",
        set_with_classes(3, 3, 4),
        |(ss, classes)| {
            let p = tri_from(&classes).to_source_partition();
            let maxsets = partitions::maxsets_of(&ss, &p);
            let mut prefix: Vec<OccurrenceId> = Vec::new();
            for class in partitions::occurrence_classes(&ss, &p) {
                prefix.extend(class);
                let formulas = prefix.iter().map(|&id| ss.formula_of(id));
                if logic::satisfiable(formulas) {
                    for m in &maxsets {
                        for &id in &prefix {
                            prop_assert!(
                                m.contains(id),
                                "{} drops {} from a satisfiable prefix",
                                ss.maxset_label(m),
                                ss.occurrence_label(id)
                            );
                        }
                    }
                }
            }
            Ok(())
        },
    );
}

/// For a weakly stable bipartition, every maxset of it contains the whole
/// first class and induces a bipartition whose reliable set only grows.
pub fn weakly_stable_first_classes_only_grow() {
    check(
        "weakly stable first classes are kept and only grow",
        source_set(3, 3, 4),
        |ss| {
            let caps = Caps::default();
            let weak = partitions::enumerate_stable_bi_exhaustive(&ss, Stability::Weak, &caps)
                .expect("within caps");
            for (p, _) in &weak {
                let first_class = occurrences_of_sources(&ss, &p.reliable);
                for m in partitions::maxsets_of(&ss, &p.to_source_partition()) {
                    for &id in &first_class {
                        prop_assert!(m.contains(id));
                    }
                    let induced = partitions::induced_bipartition(&ss, &m);
                    prop_assert!(
                        p.reliable.is_subset(&induced.reliable),
                        "{} induces {}, dropping part of {}",
                        ss.maxset_label(&m),
                        induced.label(&ss),
                        p.label(&ss)
                    );
                }
            }
            Ok(())
        },
    );
}

/// Every plain maxset is among the maxsets of the bipartition and the
/// tripartition it induces.
pub fn plain_maxsets_survive_their_induction() {
    check(
        "plain maxsets survive their own induction",
        source_set(3, 3, 4),
        |ss| {
            for m in partitions::plain_maxsets(&ss) {
                let b = partitions::induced_bipartition(&ss, &m);
                prop_assert!(
                    partitions::maxsets_of(&ss, &b.to_source_partition()).contains(&m),
                    "{} is not a maxset of {}",
                    ss.maxset_label(&m),
                    b.label(&ss)
                );
                let t = partitions::induced_tripartition(&ss, &m);
                prop_assert!(
                    partitions::maxsets_of(&ss, &t.to_source_partition()).contains(&m),
                    "{} is not a maxset of {}",
                    ss.maxset_label(&m),
                    t.label(&ss)
                );
            }
            Ok(())
        },
    );
}

/// The strongly stable bipartitions are exactly the weakly stable ones whose
/// reliable set is maximal among weakly stable bipartitions; and the fast
/// enumeration agrees with the exhaustive one.
pub fn maximal_weakly_stable_equals_strongly_stable() {
    check(
        "maximal weakly stable bipartitions are the strongly stable ones",
        source_set(3, 3, 4),
        |ss| {
            let caps = Caps::default();
            let weak_oracle =
                partitions::enumerate_stable_bi_exhaustive(&ss, Stability::Weak, &caps).unwrap();
            let strong_oracle =
                partitions::enumerate_stable_bi_exhaustive(&ss, Stability::Strong, &caps).unwrap();
            let weak_fast = partitions::enumerate_stable_bi(&ss, Stability::Weak, &caps).unwrap();
            let strong_fast =
                partitions::enumerate_stable_bi(&ss, Stability::Strong, &caps).unwrap();
            prop_assert_eq!(&weak_fast, &weak_oracle);
            prop_assert_eq!(&strong_fast, &strong_oracle);

            let weak: Vec<&Bipartition> = weak_oracle.iter().map(|(p, _)| p).collect();
            let maximal: BTreeSet<&Bipartition> = weak
                .iter()
                .filter(|p| {
                    !weak.iter().any(|q| {
                        p.reliable != q.reliable && p.reliable.is_subset(&q.reliable)
                    })
                })
                .copied()
                .collect();
            let strong: BTreeSet<&Bipartition> = strong_oracle.iter().map(|(p, _)| p).collect();
            prop_assert_eq!(maximal, strong);
            Ok(())
        },
    );
}

/// With one formula per source, a set of sources is a plain maxset exactly
/// when treating it as the reliable class is weakly stable.
pub fn singleton_sources_tie_maxsets_to_stability() {
    check(
        "for singleton sources, plain maxsets and weak stability coincide",
        source_set(5, 1, 4),
        |ss| {
            let n = ss.len();
            let plain: BTreeSet<Maxset> = partitions::plain_maxsets(&ss).into_iter().collect();
            for bits in 0u32..1 << n {
                let picked: BTreeSet<usize> = (0..n).filter(|s| bits >> s & 1 == 1).collect();
                let candidate =
                    Maxset::from_iter(picked.iter().map(|&s| OccurrenceId::new(s as u32, 0)));
                let p = Bipartition::new(picked, n);
                let weakly = partitions::is_weakly_stable_bi(&ss, &p).0;
                prop_assert_eq!(
                    plain.contains(&candidate),
                    weakly,
                    "mismatch at {}",
                    p.label(&ss)
                );
            }
            Ok(())
        },
    );
}

/// The reassessment relation over all tripartitions is serial; a tripartition
/// has a self-loop exactly when it is weakly stable and only a self-loop
/// exactly when it is strongly stable.
pub fn relation_is_serial_with_stability_loops() {
    check(
        "reassessment relation is serial and loops encode stability",
        source_set(3, 3, 4),
        |ss| {
            let g = relation::build_relation_graph(&ss, &Scope::All, &Caps::default()).unwrap();
            for (i, t) in g.nodes().iter().enumerate() {
                let successors = g.successors(i);
                prop_assert!(!successors.is_empty(), "{} has no successor", t.label(&ss));
                prop_assert_eq!(
                    g.is_self_loop(i),
                    partitions::is_weakly_stable_tri(&ss, t).0,
                    "self-loop mismatch at {}",
                    t.label(&ss)
                );
                prop_assert_eq!(
                    successors == vec![i],
                    partitions::is_strongly_stable_tri(&ss, t),
                    "only-self-loop mismatch at {}",
                    t.label(&ss)
                );
            }
            Ok(())
        },
    );
}

/// Synthesizing a formula family from a maxset family and reading the plain
/// maxsets back yields exactly the requested family.
pub fn synthesized_families_read_back_exactly() {
    let member = proptest::collection::btree_set(0u32..8, 1..=4);
    let raw_family = proptest::collection::vec(member, 1..=6);
    check(
        "synthesized families read back exactly",
        raw_family,
        |raw| {
            // Prune to an antichain: drop duplicates and members contained in
            // another member.
            let mut family: Vec<BTreeSet<u32>> = Vec::new();
            for (i, a) in raw.iter().enumerate() {
                let dominated = raw
                    .iter()
                    .enumerate()
                    .any(|(j, b)| i != j && a.is_subset(b) && (a != b || j < i));
                if !dominated {
                    family.push(a.clone());
                }
            }
            let letters: BTreeSet<u32> = family.iter().flatten().copied().collect();
            let name = |v: &u32| format!("L{v}");
            let spec = MaxsetSpec {
                letters: letters.iter().map(name).collect(),
                maxsets: family.iter().map(|m| m.iter().map(name).collect()).collect(),
            };
            let built = synthesis::synthesize(&spec).expect("antichain families synthesize");
            let mut expected: Vec<BTreeSet<String>> = spec.maxsets.clone();
            expected.sort();
            prop_assert_eq!(built.letter_maxsets(), expected);
            prop_assert!(built.universe.len() <= spec.maxsets.len());
            Ok(())
        },
    );
}

fn weighted_input() -> impl Strategy<Value = (SourceSet, Vec<u32>, Option<Formula>)> {
    source_set(3, 3, 4).prop_flat_map(|ss| {
        let n = ss.len();
        (
            Just(ss),
            proptest::collection::vec(1u32..=4, n),
            proptest::option::of(cube(4)),
        )
    })
}

/// Weighted merging agrees with brute-force scoring of every interpretation,
/// and the minima are invariant under scaling all weights.
pub fn weighted_merge_matches_exhaustive_scoring() {
    check(
        "weighted merge matches exhaustive scoring",
        weighted_input(),
        |(ss, raw_weights, constraint)| {
            let big = |v: u32| BigRational::from_integer(BigInt::from(v));
            let weights =
                WeightVector::new(raw_weights.iter().map(|&v| big(v)).collect(), &ss).unwrap();
            let universe = ss.universe();

            // Independent scoring: for each admissible interpretation, sum
            // weighted distances to every occurrence, where the distance to a
            // formula is the fewest variable flips needed to satisfy it.
            let distance = |i: Interpretation, f: &Formula| -> u32 {
                universe
                    .interpretations()
                    .filter(|j| f.eval(*j))
                    .map(|j| i.hamming(j))
                    .min()
                    .expect("source formulas are satisfiable")
            };
            let mut best: Option<(BigRational, Vec<Interpretation>)> = None;
            for i in universe.interpretations() {
                if constraint.as_ref().is_some_and(|k| !k.eval(i)) {
                    continue;
                }
                let mut score = BigRational::from_integer(BigInt::from(0));
                for (s, source) in ss.sources().enumerate() {
                    for idx in 0..source.len() {
                        let d = distance(i, source.formula(idx));
                        score += big(raw_weights[s] * d);
                    }
                }
                match &mut best {
                    Some((b, minima)) => {
                        if score < *b {
                            *b = score;
                            *minima = vec![i];
                        } else if score == *b {
                            minima.push(i);
                        }
                    }
                    None => best = Some((score, vec![i])),
                }
            }
            let (expected_badness, expected_minima) = best.expect("cubes are satisfiable");

            let merged = weighted::weighted_merge(&ss, &weights, constraint.as_ref()).unwrap();
            prop_assert_eq!(&merged.badness, &expected_badness);
            prop_assert_eq!(&merged.minima, &expected_minima);

            // Scaling every weight by the same factor changes the badness but
            // not the minima.
            let scaled =
                WeightVector::new(raw_weights.iter().map(|&v| big(3 * v)).collect(), &ss).unwrap();
            let rescored = weighted::weighted_merge(&ss, &scaled, constraint.as_ref()).unwrap();
            prop_assert_eq!(&rescored.minima, &expected_minima);
            prop_assert_eq!(&rescored.badness, &(big(3) * &expected_badness));
            Ok(())
        },
    );
}

/// The satisfiability solver agrees with a full truth-table scan.
pub fn solver_agrees_with_truth_tables() {
    check(
        "satisfiability agrees with truth tables",
        proptest::collection::vec(formula_tree(), 1..=4),
        |formulas| {
            let universe = Universe::from_names((0..8).map(|v| format!("x{v}")));
            let refs: Vec<&Formula> = formulas.iter().collect();
            let table_says = !logic::enumerate_models(&refs, &universe).is_empty();
            prop_assert_eq!(logic::satisfiable(refs.iter().copied()), table_says);
            Ok(())
        },
    );
}

/// Reassessment under graded bounds always reaches a weakly bound-stable
/// tripartition, for the degenerate and the graded bound pairs alike.
pub fn bound_ascents_reach_weak_stability() {
    check(
        "bound ascents terminate in weakly stable assessments",
        source_set(3, 2, 4),
        |ss| {
            for text in ["0,0", "1,0", "1,1", "9/10,1/2"] {
                let b = BoundPair::parse(text).unwrap();
                let (t, witness) = bounds::find_weakly_stable_bounds(&ss, &b);
                prop_assert!(
                    bounds::is_bound_stable(&ss, &t, &b, Stability::Weak),
                    "bounds {text} reached unstable {}",
                    t.label(&ss)
                );
                prop_assert!(
                    partitions::maxsets_of(&ss, &t.to_source_partition()).contains(&witness)
                );
                prop_assert_eq!(bounds::induced_bound_tripartition(&ss, &witness, &b), t);
            }
            Ok(())
        },
    );
}

/// Runs every suite once; used by the acceptance gate.
pub fn run_all() {
    partition_maxsets_are_plain();
    consistent_formulas_are_members();
    satisfiable_prefixes_are_kept_whole();
    weakly_stable_first_classes_only_grow();
    plain_maxsets_survive_their_induction();
    maximal_weakly_stable_equals_strongly_stable();
    singleton_sources_tie_maxsets_to_stability();
    relation_is_serial_with_stability_loops();
    synthesized_families_read_back_exactly();
    weighted_merge_matches_exhaustive_scoring();
    solver_agrees_with_truth_tables();
    bound_ascents_reach_weak_stability();
}
