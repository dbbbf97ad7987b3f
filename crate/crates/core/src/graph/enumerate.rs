//! Exhaustive enumeration of small graphs, deduplicated up to isomorphism.

use std::collections::BTreeMap;

use super::canon::{canonical_form, canonical_key};
use super::{MixedGraph, Relation};

fn assignments(n: usize, choices: &[Relation]) -> impl Iterator<Item = MixedGraph> + '_ {
    let pairs = n * n.saturating_sub(1) / 2;
    let base = choices.len() as u64;
    let total = base.pow(pairs as u32);
    (0..total).map(move |mut code| {
        let mut rel = Vec::with_capacity(pairs);
        for _ in 0..pairs {
            rel.push(choices[(code % base) as usize]);
            code /= base;
        }
        MixedGraph::from_raw(n, rel)
    })
}

fn dedup(graphs: impl Iterator<Item = MixedGraph>) -> Vec<MixedGraph> {
    let mut seen = BTreeMap::new();
    for g in graphs {
        seen.entry(canonical_key(&g))
            .or_insert_with(|| canonical_form(&g));
    }
    seen.into_values().collect()
}

/// One representative per isomorphism class of oriented graphs on `n`
/// vertices, in canonical-key order.
pub fn oriented_graphs(n: usize) -> Vec<MixedGraph> {
    dedup(assignments(
        n,
        &[Relation::None, Relation::Out, Relation::In],
    ))
}

/// One representative per isomorphism class of simple graphs on `n` vertices.
pub fn simple_graphs(n: usize) -> Vec<MixedGraph> {
    dedup(assignments(n, &[Relation::None, Relation::Edge]))
}

/// Simple graphs on `n` vertices with exactly `m` edges, up to isomorphism.
pub fn simple_graphs_with_edges(n: usize, m: usize) -> Vec<MixedGraph> {
    let pairs: Vec<(usize, usize)> = MixedGraph::empty(n).pairs().collect();
    let mut chosen = Vec::with_capacity(m);
    let mut out = Vec::new();
    fn rec(
        pairs: &[(usize, usize)],
        start: usize,
        m: usize,
        n: usize,
        chosen: &mut Vec<(usize, usize)>,
        out: &mut Vec<MixedGraph>,
    ) {
        if chosen.len() == m {
            out.push(MixedGraph::simple(n, chosen).expect("distinct pairs"));
            return;
        }
        for i in start..pairs.len() {
            if pairs.len() - i < m - chosen.len() {
                break;
            }
            chosen.push(pairs[i]);
            rec(pairs, i + 1, m, n, chosen, out);
            chosen.pop();
        }
    }
    rec(&pairs, 0, m, n, &mut chosen, &mut out);
    dedup(out.into_iter())
}

/// Every orientation of the simple graph `g` (labelled, `2^|E|` of them).
pub fn orientations(g: &MixedGraph) -> impl Iterator<Item = MixedGraph> + '_ {
    let edges = g.edges();
    let total = 1u64 << edges.len();
    (0..total).map(move |mask| {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask >> i & 1 == 1 { (v, u) } else { (u, v) })
            .collect();
        MixedGraph::oriented(g.n(), &arcs).expect("edges are distinct")
    })
}
