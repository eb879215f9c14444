//! Checks that the shipped fixture corpus is exactly what it claims to be:
//! every synthesized problem file realizes its stated maxset family, the
//! committed files match a fresh synthesis byte for byte, and each family
//! exhibits the structural behaviour it was built to demonstrate.

use std::collections::BTreeSet;

use relmerge::maxsets::Maxset;
use relmerge::partitions::{self, SourceSet, Stability};
use relmerge::problem::{ProblemFile, SynthesisFile};
use relmerge::relation::{self, MildDef, Scope};
use relmerge::synthesis;
use relmerge::Caps;

#[path = "shared/corpus.rs"]
mod corpus;

use corpus::{bi, mx, occ, tri};

const FAMILY_SPECS: [&str; 10] = [
    "not_strong.maxsets.json",
    "five_formula.maxsets.json",
    "split_resistant.maxsets.json",
    "class_shrink.maxsets.json",
    "class_growth.maxsets.json",
    "second_class_shrink.maxsets.json",
    "two_two.maxsets.json",
    "serial_chain.maxsets.json",
    "no_strong.maxsets.json",
    "no_mild.maxsets.json",
];

/// Maps a maxset of a built family back to the letters it contains.
fn letters_of(file: &SynthesisFile, m: &Maxset) -> BTreeSet<String> {
    let groups = file.sources.as_ref().expect("family specs group letters");
    m.iter()
        .map(|id| groups[id.source as usize].letters[id.index as usize].clone())
        .collect()
}

#[test]
fn family_specs_realize_their_stated_maxsets() {
    for name in FAMILY_SPECS {
        let file = corpus::family_spec(name);
        let ss = file.build().unwrap_or_else(|e| panic!("{name}: {e}"));
        let stated: BTreeSet<BTreeSet<String>> = file
            .maxsets
            .iter()
            .map(|m| m.iter().cloned().collect())
            .collect();
        let realized: BTreeSet<BTreeSet<String>> = partitions::plain_maxsets(&ss)
            .iter()
            .map(|m| letters_of(&file, m))
            .collect();
        assert_eq!(realized, stated, "{name}");
    }
}

#[test]
fn committed_problem_files_match_a_fresh_synthesis() {
    for name in FAMILY_SPECS {
        let file = corpus::family_spec(name);
        let ss = file.build().unwrap();
        let expected = ProblemFile::from_sources(&ss).to_json();
        let committed = corpus::read(
            &corpus::fixture_dir()
                .join("problems")
                .join(name.replace(".maxsets", "")),
        );
        assert_eq!(committed, expected, "{name} drifted from its spec");
    }
}

#[test]
fn corpus_is_complete() {
    let names: Vec<String> = corpus::corpus().into_iter().map(|(name, _)| name).collect();
    let expected = [
        "bounds_graded.json",
        "class_growth.json",
        "class_shrink.json",
        "five_formula.json",
        "no_mild.json",
        "no_strong.json",
        "non_trivial.json",
        "not_strong.json",
        "ordering_two_levels.json",
        "promotion.json",
        "second_class_shrink.json",
        "serial_chain.json",
        "single_source.json",
        "split_resistant.json",
        "third_class.json",
        "two_two.json",
        "weighted_seven.json",
    ];
    assert_eq!(names, expected);
}

#[test]
fn handwritten_problems_have_the_expected_shape() {
    for (name, vars, sources) in [
        ("non_trivial.json", 2, 3),
        ("promotion.json", 2, 3),
        ("third_class.json", 3, 3),
        ("bounds_graded.json", 2, 2),
        ("ordering_two_levels.json", 2, 2),
        ("weighted_seven.json", 7, 2),
        ("single_source.json", 1, 1),
    ] {
        let ss = corpus::sources(name);
        assert_eq!(ss.universe().len(), vars, "{name}");
        assert_eq!(ss.len(), sources, "{name}");
    }
}

/// The three-source family {A,B},{B,C},{A,D}: trusting A alone is weakly but
/// not strongly stable, and refining the rest into two classes pins it down.
#[test]
fn not_strong_family_demands_a_third_class() {
    let ss = corpus::sources("not_strong.json");
    let p = bi(&ss, &["A"]);
    let (weak, witnesses) = partitions::is_weakly_stable_bi(&ss, &p);
    assert!(weak);
    assert_eq!(witnesses, vec![mx(&ss, &[("A", 0), ("BC", 0)])]);
    assert!(!partitions::is_strongly_stable_bi(&ss, &p));

    let t = tri(&ss, &["A"], &["BC"]);
    assert!(partitions::is_strongly_stable_tri(&ss, &t));
    assert_eq!(
        partitions::maxsets_of(&ss, &t.to_source_partition()),
        vec![mx(&ss, &[("A", 0), ("BC", 0)])]
    );
}

/// The four-maxset family {A,B},{A,D},{B,C},{D,E}: a strongly stable
/// bipartition may keep several maxsets alive at once.
#[test]
fn five_formula_family_keeps_two_maxsets() {
    let ss = corpus::sources("five_formula.json");
    let p = bi(&ss, &["A"]);
    assert!(partitions::is_strongly_stable_bi(&ss, &p));
    assert_eq!(
        partitions::maxsets_of(&ss, &p.to_source_partition()),
        vec![
            mx(&ss, &[("A", 0), ("BC", 0)]),
            mx(&ss, &[("A", 0), ("DE", 0)]),
        ]
    );
}

/// The family {A,B,E},{B,C},{A,D,E}: trusting A survives reassessment whether
/// or not the remaining sources are split apart, yet never strongly.
#[test]
fn split_resistant_family_is_weakly_stable_under_both_splits() {
    let ss = corpus::sources("split_resistant.json");
    let p = bi(&ss, &["A"]);
    assert!(partitions::is_weakly_stable_bi(&ss, &p).0);
    assert!(!partitions::is_strongly_stable_bi(&ss, &p));

    let t = tri(&ss, &["A"], &["BC", "DE"]);
    let (weak, witnesses) = partitions::is_weakly_stable_tri(&ss, &t);
    assert!(weak);
    assert_eq!(
        witnesses,
        vec![mx(&ss, &[("A", 0), ("BC", 0), ("DE", 1)])]
    );
    assert!(!partitions::is_strongly_stable_tri(&ss, &t));
    assert_eq!(
        partitions::induced_tripartition(&ss, &mx(&ss, &[("A", 0), ("DE", 0), ("DE", 1)])),
        tri(&ss, &["A", "DE"], &[])
    );
}

/// The family {A,B,C},{B,C,D},{D,E,F}: an assessment whose reliable class is
/// empty can still be weakly stable, while a different reading of the same
/// sources is strongly stable.
#[test]
fn class_shrink_family_tolerates_an_empty_first_class() {
    let ss = corpus::sources("class_shrink.json");
    let empty_first = tri(&ss, &[], &["ABC", "DE"]);
    let (weak, witnesses) = partitions::is_weakly_stable_tri(&ss, &empty_first);
    assert!(weak);
    assert!(witnesses.contains(&mx(&ss, &[("ABC", 1), ("ABC", 2), ("DE", 0)])));
    assert!(!partitions::is_strongly_stable_tri(&ss, &empty_first));

    let all_of_abc = tri(&ss, &["ABC"], &[]);
    assert!(partitions::is_strongly_stable_tri(&ss, &all_of_abc));
    assert_eq!(
        partitions::maxsets_of(&ss, &all_of_abc.to_source_partition()),
        vec![mx(&ss, &[("ABC", 0), ("ABC", 1), ("ABC", 2)])]
    );
}

/// The family {A,B,C},{B,C,D},{D,E,F},{F,G}: reassessing can move a source
/// *into* the partially reliable class that it was not part of before.
#[test]
fn class_growth_family_grows_the_middle_class() {
    let ss = corpus::sources("class_growth.json");
    let start = tri(&ss, &[], &["ABC", "DE"]);
    assert!(partitions::is_weakly_stable_tri(&ss, &start).0);

    let wanderer = mx(&ss, &[("DE", 0), ("DE", 1), ("FG", 0)]);
    assert!(partitions::maxsets_of(&ss, &start.to_source_partition()).contains(&wanderer));
    assert_eq!(
        partitions::induced_tripartition(&ss, &wanderer),
        tri(&ss, &["DE"], &["FG"])
    );
}

/// The family {A,B,C},{A,B,E},{B,C,D},{E,F}: reassessing can also *shrink*
/// the partially reliable class while the reliable class stands still.
#[test]
fn second_class_shrink_family_shrinks_the_middle_class() {
    let ss = corpus::sources("second_class_shrink.json");
    let start = tri(&ss, &["A"], &["BCD", "EF"]);
    let ms = partitions::maxsets_of(&ss, &start.to_source_partition());
    assert_eq!(
        ms,
        vec![
            mx(&ss, &[("A", 0), ("BCD", 0), ("BCD", 1)]),
            mx(&ss, &[("A", 0), ("BCD", 0), ("EF", 0)]),
        ]
    );
    assert_eq!(
        partitions::induced_tripartition(&ss, &ms[1]),
        start,
        "one maxset confirms the assessment"
    );
    assert_eq!(
        partitions::induced_tripartition(&ss, &ms[0]),
        tri(&ss, &["A"], &["BCD"]),
        "the other expels EF from the middle class"
    );
}

/// The family {B,C},{A,B,D},{D,E},{A,E,F},{F,G}: two tripartitions that share
/// their two maxsets and therefore reassess into each other forever.
#[test]
fn two_two_family_forms_a_two_cycle() {
    let ss = corpus::sources("two_two.json");
    let t1 = tri(&ss, &["A"], &["BC", "DE"]);
    let t2 = tri(&ss, &["A"], &["DE", "FG"]);
    let shared = vec![
        mx(&ss, &[("A", 0), ("BC", 0), ("DE", 0)]),
        mx(&ss, &[("A", 0), ("DE", 1), ("FG", 0)]),
    ];
    assert_eq!(partitions::maxsets_of(&ss, &t1.to_source_partition()), shared);
    assert_eq!(partitions::maxsets_of(&ss, &t2.to_source_partition()), shared);
    assert_eq!(partitions::induced_tripartition(&ss, &shared[0]), t1);
    assert_eq!(partitions::induced_tripartition(&ss, &shared[1]), t2);

    // Lumping the two middle classes together is strongly stable even though
    // the two surviving maxsets disagree on the finer reading.
    let lumped = bi(&ss, &["A"]);
    assert!(partitions::is_strongly_stable_bi(&ss, &lumped));
    assert_eq!(
        partitions::maxsets_of(&ss, &lumped.to_source_partition()),
        shared
    );

    // Elsewhere in the same family a lone source is strongly stable.
    assert!(partitions::is_strongly_stable_tri(&ss, &tri(&ss, &["BC"], &[])));
}

/// The family {A,C,D},{A,E,F},{A,F,G},{B,C},{D,E}: a three-node reassessment
/// walk showing the relation is neither symmetric nor transitive.
#[test]
fn serial_chain_family_walks_three_nodes() {
    let ss = corpus::sources("serial_chain.json");
    let n1 = tri(&ss, &["A"], &["BC", "DE"]);
    let n2 = tri(&ss, &["A"], &["DE", "FG"]);
    let n3 = tri(&ss, &["A", "FG"], &[]);

    let g = relation::build_relation_graph(&ss, &Scope::Seeded(vec![n1.clone()]), &Caps::default())
        .unwrap();
    assert_eq!(g.nodes().len(), 3);
    let i1 = g.node_index(&n1).unwrap();
    let i2 = g.node_index(&n2).unwrap();
    let i3 = g.node_index(&n3).unwrap();

    let present = [(i1, i1), (i1, i2), (i2, i1), (i2, i2), (i2, i3), (i3, i3)];
    for a in [i1, i2, i3] {
        for b in [i1, i2, i3] {
            assert_eq!(g.has_edge(a, b), present.contains(&(a, b)), "{a} => {b}");
        }
    }
    assert_eq!(g.edges().count(), 6);

    // One step is not invertible, and two steps do not compose into one.
    assert!(g.has_edge(i2, i3) && !g.has_edge(i3, i2));
    assert!(g.has_edge(i1, i2) && g.has_edge(i2, i3) && !g.has_edge(i1, i3));

    assert_eq!(
        g.edge_witnesses(i2, i3),
        Some(&[mx(&ss, &[("A", 0), ("FG", 0), ("FG", 1)])][..])
    );
    assert!(partitions::is_strongly_stable_tri(&ss, &n3));
}

/// The eight-maxset family in which every weakly stable tripartition pairs up
/// with a twin it keeps reassessing into: nothing is strongly stable, yet
/// every node is mildly stable under all three readings.
#[test]
fn no_strong_family_pairs_every_node_with_a_twin() {
    let ss = corpus::sources("no_strong.json");
    let g = relation::build_relation_graph(&ss, &Scope::Reachable, &Caps::default()).unwrap();
    assert_eq!(g.nodes().len(), 8);

    for (x, y, z, w) in [
        ("A", "B", "C", "D"),
        ("B", "C", "D", "A"),
        ("C", "D", "A", "B"),
        ("D", "A", "B", "C"),
    ] {
        let t1 = g.node_index(&tri(&ss, &[x], &[y, z])).unwrap();
        let t2 = g.node_index(&tri(&ss, &[x], &[z, w])).unwrap();
        let pair: Vec<usize> = { let mut v = vec![t1, t2]; v.sort(); v };
        assert_eq!(g.successors(t1), pair, "center {x}");
        assert_eq!(g.successors(t2), pair, "center {x}");
    }

    assert!(partitions::enumerate_stable_tri(&ss, Stability::Strong, &Caps::default())
        .unwrap()
        .is_empty());
    let all: Vec<usize> = (0..8).collect();
    for def in [MildDef::One, MildDef::Two, MildDef::Three] {
        assert_eq!(relation::mildly_stable_in(&g, def), all);
    }
}

/// The twelve-maxset family of per-center three-cycles: every weakly stable
/// tripartition sits on a one-way cycle, so the first mild reading rejects
/// all of them while the other two accept all of them.
#[test]
fn no_mild_family_rides_one_way_cycles() {
    let ss = corpus::sources("no_mild.json");
    let g = relation::build_relation_graph(&ss, &Scope::Reachable, &Caps::default()).unwrap();
    assert_eq!(g.nodes().len(), 12);

    for (x, y, z, w) in [
        ("A", "B", "C", "D"),
        ("B", "C", "D", "A"),
        ("C", "D", "A", "B"),
        ("D", "A", "B", "C"),
    ] {
        let u1 = g.node_index(&tri(&ss, &[x], &[y, z])).unwrap();
        let u2 = g.node_index(&tri(&ss, &[x], &[z, w])).unwrap();
        let u3 = g.node_index(&tri(&ss, &[x], &[y, w])).unwrap();
        for (from, to) in [(u1, u2), (u2, u3), (u3, u1)] {
            assert!(g.has_edge(from, from), "center {x}: missing self-loop");
            assert!(g.has_edge(from, to), "center {x}: missing cycle edge");
            assert!(!g.has_edge(to, from), "center {x}: cycle must be one-way");
        }
    }

    assert!(relation::mildly_stable_in(&g, MildDef::One).is_empty());
    let all: Vec<usize> = (0..12).collect();
    assert_eq!(relation::mildly_stable_in(&g, MildDef::Two), all);
    assert_eq!(relation::mildly_stable_in(&g, MildDef::Three), all);
}

/// Realizing three disjoint one-way three-cycles: no realized node is mildly
/// stable under the first reading; only the isolated completion node is.
#[test]
fn three_cycle_realization_leaves_only_the_completion_mild() {
    let spec = corpus::graph_spec("three_cycles.graph.json").to_spec();
    let realized = synthesis::realize_graph(&spec).unwrap();
    let g = relation::build_relation_graph(&realized.sources, &Scope::Reachable, &Caps::default())
        .unwrap();
    assert_eq!(g.nodes().len(), 10);

    for nodes in &realized.nodes {
        for (a, t) in nodes.iter().enumerate() {
            let from = g.node_index(t).unwrap();
            let to = g.node_index(&nodes[(a + 1) % 3]).unwrap();
            assert!(g.has_edge(from, from));
            assert!(g.has_edge(from, to));
            assert!(!g.has_edge(to, from));
        }
    }

    let completion = g.node_index(&realized.completion).unwrap();
    assert_eq!(relation::mildly_stable_in(&g, MildDef::One), vec![completion]);
    let all: Vec<usize> = (0..10).collect();
    assert_eq!(relation::mildly_stable_in(&g, MildDef::Two), all);
    assert_eq!(relation::mildly_stable_in(&g, MildDef::Three), all);
}

/// Realizing four copies of the four-node module whose edges separate the
/// three mild readings; the realized graph must mirror the module exactly.
#[test]
fn mild_split_realization_mirrors_its_module() {
    let spec = corpus::graph_spec("mild_split.graph.json").to_spec();
    let realized = synthesis::realize_graph(&spec).unwrap();
    let g = relation::build_relation_graph(&realized.sources, &Scope::Reachable, &Caps::default())
        .unwrap();
    assert_eq!(g.nodes().len(), 17);

    let module: BTreeSet<(usize, usize)> = [(0, 1), (1, 0), (1, 2), (2, 0), (2, 3)]
        .into_iter()
        .chain((0..4).map(|a| (a, a)))
        .collect();
    for nodes in &realized.nodes {
        let idx: Vec<usize> = nodes.iter().map(|t| g.node_index(t).unwrap()).collect();
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(
                    g.has_edge(idx[a], idx[b]),
                    module.contains(&(a, b)),
                    "module edge {a} => {b}"
                );
            }
        }
    }

    let completion = g.node_index(&realized.completion).unwrap();
    assert_eq!(g.successors(completion), vec![completion]);
    assert!(partitions::is_strongly_stable_tri(&realized.sources, &realized.completion));
}

/// The conjunction-augmented partition recovers exactly the maxsets that
/// witness strongly stable bipartitions, across the whole corpus.
#[test]
fn conjunction_maxsets_match_strong_witnesses_everywhere() {
    for (name, problem) in corpus::corpus() {
        let ss: &SourceSet = &problem.sources;
        let got = partitions::conjunction_partition_maxsets(ss);
        let mut expected: BTreeSet<Maxset> = BTreeSet::new();
        for (_, ms) in partitions::enumerate_stable_bi(ss, Stability::Strong, &Caps::default())
            .unwrap()
        {
            expected.extend(ms);
        }
        let expected: Vec<Maxset> = expected.into_iter().collect();
        assert_eq!(got, expected, "{name}");
    }
}

/// Sanity for the third-class example: the finer assessment keeps a maxset
/// containing the otherwise-rejected formula.
#[test]
fn third_class_keeps_the_rejected_formula_alive() {
    let ss = corpus::sources("third_class.json");
    let t = tri(&ss, &["S1"], &["S2"]);
    assert!(partitions::is_weakly_stable_tri(&ss, &t).0);
    let ms = partitions::maxsets_of(&ss, &t.to_source_partition());
    assert_eq!(ms.len(), 2);
    assert!(ms.iter().any(|m| m.contains(occ(&ss, "S3", 0))));
}
