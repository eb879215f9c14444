//! The assessment relation among tripartitions and mild stability.
//!
//! Writing X ⇒ Y when some maxset of the tripartition X induces Y, merging
//! becomes a walk over assessments: X ⇒ X is weak stability, "X ⇒ Y only
//! for Y = X" is strong stability. When no strongly stable assessment
//! exists, three milder notions ask that any step away from a weakly
//! stable X can be undone — in one step, along some path, or whenever X
//! remains reachable backwards from everything it reaches.
//!
//! Since partition classes cover the sources, every witnessing maxset is a
//! plain maxset, so every successor of any tripartition is induced by a
//! plain maxset and (inducing its own inducer's assessment) weakly stable.
//! The reachable scope therefore closes at exactly the weakly stable
//! tripartitions.

use std::collections::{BTreeMap, BTreeSet};

use crate::maxsets::Maxset;
use crate::partitions::{
    self, induced_tripartition, SourceSet, Tripartition,
};
use crate::{Caps, Error, Result};

/// Which tripartitions become nodes of the relation graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Every ordered assignment of sources to three classes (3^n nodes,
    /// empty classes included). Capped by [`Caps::max_relation_sources`].
    All,
    /// The tripartitions induced by the plain maxsets, closed under the
    /// relation; these are exactly the weakly stable ones.
    Reachable,
    /// The given tripartitions, closed under the relation.
    Seeded(Vec<Tripartition>),
}

/// The three mild-stability readings, all on weakly stable tripartitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MildDef {
    /// Every step away can be undone in one step: X ⇒ Y implies Y ⇒ X.
    One,
    /// Every step away can be undone along a path: X ⇒ Y implies Y ⇒* X.
    Two,
    /// Everything reachable reaches back: X ⇒* Y implies Y ⇒* X.
    Three,
}

/// The relation restricted to a node set, with witness maxsets per edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationGraph {
    nodes: Vec<Tripartition>,
    edges: BTreeMap<(usize, usize), Vec<Maxset>>,
}

impl RelationGraph {
    pub fn nodes(&self) -> &[Tripartition] {
        &self.nodes
    }

    pub fn node_index(&self, t: &Tripartition) -> Option<usize> {
        self.nodes.binary_search(t).ok()
    }

    pub fn has_edge(&self, from: usize, to: usize) -> bool {
        self.edges.contains_key(&(from, to))
    }

    /// The maxsets of `from` inducing `to`; empty slice for edges that only
    /// exist in a closure.
    pub fn edge_witnesses(&self, from: usize, to: usize) -> Option<&[Maxset]> {
        self.edges.get(&(from, to)).map(|v| v.as_slice())
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, &[Maxset])> {
        self.edges.iter().map(|(&(a, b), w)| (a, b, w.as_slice()))
    }

    pub fn successors(&self, from: usize) -> Vec<usize> {
        self.edges
            .range((from, 0)..=(from, usize::MAX))
            .map(|(&(_, b), _)| b)
            .collect()
    }

    /// Weak stability read off the graph: the node loops to itself.
    pub fn is_self_loop(&self, node: usize) -> bool {
        self.has_edge(node, node)
    }

    /// Reachability including zero-length paths, as an adjacency matrix.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.nodes.len();
        let mut reach = vec![vec![false; n]; n];
        for (i, row) in reach.iter_mut().enumerate() {
            row[i] = true;
        }
        for (&(a, b), _) in &self.edges {
            reach[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if reach[i][k] {
                    for j in 0..n {
                        if reach[k][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        reach
    }

    /// GraphViz rendering: nodes labeled `(R|P|U)`, weakly stable nodes
    /// drawn bold, edges labeled with their witness maxsets.
    pub fn to_dot(&self, ss: &SourceSet) -> String {
        let mut out = String::from("digraph assessments {\n");
        for (i, t) in self.nodes.iter().enumerate() {
            let style = if self.is_self_loop(i) { " style=bold" } else { "" };
            out.push_str(&format!(
                "  n{} [label=\"{}\"{}]\n",
                i,
                t.label(ss),
                style
            ));
        }
        for (&(a, b), witnesses) in &self.edges {
            let label = witnesses
                .iter()
                .map(|m| ss.maxset_label(m))
                .collect::<Vec<_>>()
                .join(" ");
            out.push_str(&format!("  n{a} -> n{b} [label=\"{label}\"]\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// All assessments one merge step reaches from `t`, with the witnessing
/// maxsets, grouped by target.
pub fn successors_of(ss: &SourceSet, t: &Tripartition) -> Vec<(Tripartition, Vec<Maxset>)> {
    let index = partitions::maxset_index(ss);
    successors_with(&index, ss, t).into_iter().collect()
}

fn successors_with(
    index: &crate::maxsets::MaxsetIndex,
    ss: &SourceSet,
    t: &Tripartition,
) -> BTreeMap<Tripartition, Vec<Maxset>> {
    let mut out: BTreeMap<Tripartition, Vec<Maxset>> = BTreeMap::new();
    for m in partitions::maxsets_of_with(index, ss, &t.to_source_partition()) {
        let target = induced_tripartition(ss, &m);
        out.entry(target).or_default().push(m);
    }
    out
}

fn all_tripartitions(n: usize) -> Vec<Tripartition> {
    let mut out = Vec::new();
    for mut code in 0..3u64.pow(n as u32) {
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
        out.push(Tripartition::new(reliable, partial, n));
    }
    out.sort();
    out
}

/// Builds the relation over the requested scope. Closure scopes start from
/// their seeds and add every successor until nothing new appears; the full
/// scope enumerates all 3^n ordered class assignments.
pub fn build_relation_graph(ss: &SourceSet, scope: &Scope, caps: &Caps) -> Result<RelationGraph> {
    let index = partitions::maxset_index(ss);
    let nodes: Vec<Tripartition> = match scope {
        Scope::All => {
            if ss.len() > caps.max_relation_sources {
                return Err(Error::SourceCapExceeded {
                    actual: ss.len(),
                    cap: caps.max_relation_sources,
                });
            }
            all_tripartitions(ss.len())
        }
        Scope::Reachable => {
            let seeds: BTreeSet<Tripartition> = index
                .plain()
                .iter()
                .map(|m| induced_tripartition(ss, m))
                .collect();
            close_under_successors(&index, ss, seeds)
        }
        Scope::Seeded(seeds) => {
            close_under_successors(&index, ss, seeds.iter().cloned().collect())
        }
    };
    let mut edges = BTreeMap::new();
    for (i, t) in nodes.iter().enumerate() {
        for (target, witnesses) in successors_with(&index, ss, t) {
            let j = nodes
                .binary_search(&target)
                .expect("closure scopes contain every successor");
            edges.insert((i, j), witnesses);
        }
    }
    Ok(RelationGraph { nodes, edges })
}

fn close_under_successors(
    index: &crate::maxsets::MaxsetIndex,
    ss: &SourceSet,
    seeds: BTreeSet<Tripartition>,
) -> Vec<Tripartition> {
    let mut known = seeds;
    let mut frontier: Vec<Tripartition> = known.iter().cloned().collect();
    while let Some(t) = frontier.pop() {
        for target in successors_with(index, ss, &t).into_keys() {
            if known.insert(target.clone()) {
                frontier.push(target);
            }
        }
    }
    known.into_iter().collect()
}

/// The reflexive-transitive closure as a graph: an edge wherever a path
/// (possibly of length zero) exists. Direct edges keep their witnesses;
/// closure-only edges carry none.
pub fn transitive_closure(g: &RelationGraph) -> RelationGraph {
    let reach = g.reachability();
    let mut edges = BTreeMap::new();
    for (a, row) in reach.iter().enumerate() {
        for (b, &r) in row.iter().enumerate() {
            if r {
                let witnesses = g
                    .edge_witnesses(a, b)
                    .map(|w| w.to_vec())
                    .unwrap_or_default();
                edges.insert((a, b), witnesses);
            }
        }
    }
    RelationGraph { nodes: g.nodes.clone(), edges }
}

/// Mild stability evaluated on a prebuilt graph whose node set is closed
/// under the relation, such as a [`Scope::Reachable`] or [`Scope::All`]
/// graph. Returns the qualifying node indices.
pub fn mildly_stable_in(g: &RelationGraph, def: MildDef) -> Vec<usize> {
    let reach = g.reachability();
    (0..g.nodes.len())
        .filter(|&x| {
            if !g.is_self_loop(x) {
                return false;
            }
            match def {
                MildDef::One => g.successors(x).iter().all(|&y| g.has_edge(y, x)),
                MildDef::Two => g.successors(x).iter().all(|&y| reach[y][x]),
                MildDef::Three => (0..g.nodes.len())
                    .filter(|&y| reach[x][y])
                    .all(|y| reach[y][x]),
            }
        })
        .collect()
}

/// The mildly stable tripartitions under the chosen reading, sorted.
///
/// Only weakly stable tripartitions qualify and every condition looks
/// forward along the relation, so the reachable scope — which contains all
/// weakly stable tripartitions and everything they reach — decides the
/// answer for the full 3^n space.
pub fn mildly_stable(ss: &SourceSet, def: MildDef, caps: &Caps) -> Result<Vec<Tripartition>> {
    let g = build_relation_graph(ss, &Scope::Reachable, caps)?;
    Ok(mildly_stable_in(&g, def)
        .into_iter()
        .map(|i| g.nodes[i].clone())
        .collect())
}

/// Tripartitions maximal for the reachability preorder: nothing is
/// reachable from them without reaching back. Computed from the closure
/// matrix without consulting stability; a non-weakly-stable tripartition
/// is never maximal because its successors, all weakly stable, cannot
/// reach back to it.
pub fn maximal_tripartitions(ss: &SourceSet, caps: &Caps) -> Result<Vec<Tripartition>> {
    let g = build_relation_graph(ss, &Scope::Reachable, caps)?;
    let reach = g.reachability();
    Ok((0..g.nodes.len())
        .filter(|&x| (0..g.nodes.len()).all(|y| !reach[x][y] || reach[y][x]))
        .map(|i| g.nodes[i].clone())
        .collect())
}
