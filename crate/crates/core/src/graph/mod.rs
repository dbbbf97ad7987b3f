//! Mixed graphs: a vertex set `0..n` where each unordered pair carries at
//! most one relation (nothing, an undirected edge, or an arc in one
//! direction). Oriented graphs and simple graphs are the two pure cases.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod canon;
pub mod enumerate;
pub mod format;
pub mod generate;

pub use canon::{canonical_form, canonical_key, CanonKey};
pub use format::{parse, serialize, Format};
pub use generate::{
    gen_complete_mixed, gen_dn, gen_random_mixed, gen_star, gen_tk2, gen_tournament, SeededRng,
};

/// Relation on a vertex pair, read from the first vertex of the pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Relation {
    #[default]
    None,
    Edge,
    /// Arc from the first vertex to the second.
    Out,
    /// Arc from the second vertex to the first.
    In,
}

impl Relation {
    pub fn reversed(self) -> Relation {
        match self {
            Relation::Out => Relation::In,
            Relation::In => Relation::Out,
            r => r,
        }
    }

    pub fn is_adjacent(self) -> bool {
        self != Relation::None
    }

    pub fn is_arc(self) -> bool {
        matches!(self, Relation::Out | Relation::In)
    }

    pub(crate) fn code(self) -> u8 {
        match self {
            Relation::None => 0,
            Relation::Edge => 1,
            Relation::Out => 2,
            Relation::In => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphKind {
    /// No edges (arcs only, possibly none).
    Oriented,
    /// No arcs.
    Simple,
    Mixed,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::Oriented => "oriented",
            GraphKind::Simple => "simple",
            GraphKind::Mixed => "mixed",
        })
    }
}

/// Index of the pair `{u, v}` (u < v) in the packed upper triangle.
#[inline]
pub(crate) fn pair_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    n: usize,
    // Relation of (u, v) for u < v, read from u, stored at pair_index(u, v).
    rel: Vec<Relation>,
}

impl MixedGraph {
    pub fn empty(n: usize) -> Self {
        MixedGraph {
            n,
            rel: vec![Relation::None; n * n.saturating_sub(1) / 2],
        }
    }

    /// Builds a graph from arc and edge lists, rejecting loops and pairs
    /// listed twice.
    pub fn from_parts(n: usize, arcs: &[(usize, usize)], edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = MixedGraph::empty(n);
        for &(u, v) in arcs {
            g.insert(u, v, Relation::Out)?;
        }
        for &(u, v) in edges {
            g.insert(u, v, Relation::Edge)?;
        }
        Ok(g)
    }

    pub fn oriented(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        Self::from_parts(n, arcs, &[])
    }

    pub fn simple(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_parts(n, &[], edges)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Sets the relation of a currently unrelated pair.
    pub(crate) fn insert(&mut self, u: usize, v: usize, r: Relation) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if self.relation(u, v).is_adjacent() {
            return Err(Error::AlreadyRelated(u.min(v), u.max(v)));
        }
        self.set(u, v, r);
        Ok(())
    }

    #[inline]
    pub(crate) fn set(&mut self, u: usize, v: usize, r: Relation) {
        if u < v {
            self.rel[pair_index(u, v)] = r;
        } else {
            self.rel[pair_index(v, u)] = r.reversed();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Relation of the pair read from `u`: `Out` means the arc `u -> v`.
    #[inline]
    pub fn relation(&self, u: usize, v: usize) -> Relation {
        use std::cmp::Ordering::*;
        match u.cmp(&v) {
            Less => self.rel[pair_index(u, v)],
            Greater => self.rel[pair_index(v, u)].reversed(),
            Equal => Relation::None,
        }
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.relation(u, v) == Relation::Out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.relation(u, v) == Relation::Edge
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.relation(u, v).is_adjacent()
    }

    /// All vertex pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
    }

    /// Arcs as `(tail, head)`, ordered by tail then head.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in 0..self.n {
                if self.has_arc(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.pairs().filter(|&(u, v)| self.has_edge(u, v)).collect()
    }

    pub fn arc_count(&self) -> usize {
        self.rel.iter().filter(|r| r.is_arc()).count()
    }

    pub fn edge_count(&self) -> usize {
        self.rel.iter().filter(|&&r| r == Relation::Edge).count()
    }

    pub fn kind(&self) -> GraphKind {
        if self.edge_count() == 0 {
            GraphKind::Oriented
        } else if self.arc_count() == 0 {
            GraphKind::Simple
        } else {
            GraphKind::Mixed
        }
    }

    pub fn is_oriented(&self) -> bool {
        self.edge_count() == 0
    }

    pub fn is_simple(&self) -> bool {
        self.arc_count() == 0
    }

    pub(crate) fn require_simple(&self) -> Result<()> {
        if self.is_simple() {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected: GraphKind::Simple,
                found: self.kind(),
            })
        }
    }

    pub(crate) fn require_oriented(&self) -> Result<()> {
        if self.is_oriented() {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                expected: GraphKind::Oriented,
                found: self.kind(),
            })
        }
    }

    pub fn out_neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.has_arc(u, w))
    }

    pub fn in_neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.has_arc(w, u))
    }

    /// Neighbours in the underlying simple graph.
    pub fn neighbours(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.is_adjacent(u, w))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.neighbours(u).count()
    }

    pub fn is_isolated(&self, u: usize) -> bool {
        self.neighbours(u).next().is_none()
    }

    /// True when some `w` gives `u -> w -> v` or `v -> w -> u`. Adjacency of
    /// `u` and `v` is not considered.
    pub fn dipath_linked(&self, u: usize, v: usize) -> bool {
        u != v
            && (0..self.n).any(|w| {
                (self.has_arc(u, w) && self.has_arc(w, v))
                    || (self.has_arc(v, w) && self.has_arc(w, u))
            })
    }

    /// A centre `w` of a 2-dipath between `u` and `v`, oriented as
    /// `(tail, centre, head)`.
    pub fn dipath_through(&self, u: usize, v: usize) -> Option<(usize, usize, usize)> {
        (0..self.n).find_map(|w| {
            if self.has_arc(u, w) && self.has_arc(w, v) {
                Some((u, w, v))
            } else if self.has_arc(v, w) && self.has_arc(w, u) {
                Some((v, w, u))
            } else {
                None
            }
        })
    }

    /// The pair may be split by the deletion-identification step: distinct,
    /// non-adjacent and not the ends of any 2-dipath.
    pub fn is_reducible_pair(&self, u: usize, v: usize) -> bool {
        u != v && !self.is_adjacent(u, v) && !self.dipath_linked(u, v)
    }

    /// Copy of the graph with a new edge `u - v`.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<MixedGraph> {
        let mut g = self.clone();
        g.insert(u, v, Relation::Edge)?;
        Ok(g)
    }

    /// Merges `u` and `v` into one vertex labelled `min(u, v)`; labels above
    /// `max(u, v)` shift down by one. Parallel relations collapse to one, an
    /// edge parallel with an arc is dropped in favour of the arc.
    pub fn identify(&self, u: usize, v: usize) -> Result<MixedGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Ineligible {
                u,
                v,
                reason: "identical vertices",
            });
        }
        if self.is_adjacent(u, v) {
            return Err(Error::Ineligible {
                u,
                v,
                reason: "adjacent",
            });
        }
        if self.dipath_linked(u, v) {
            return Err(Error::Ineligible {
                u,
                v,
                reason: "ends of a 2-dipath",
            });
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let relabel = |x: usize| if x > drop { x - 1 } else { x };
        let mut g = MixedGraph::empty(self.n - 1);
        for (a, b) in self.pairs() {
            if a == drop || b == drop {
                continue;
            }
            let r = self.rel[pair_index(a, b)];
            if r.is_adjacent() {
                g.set(relabel(a), relabel(b), r);
            }
        }
        for w in 0..self.n {
            if w == keep || w == drop {
                continue;
            }
            let from_drop = self.relation(drop, w);
            if !from_drop.is_adjacent() {
                continue;
            }
            let from_keep = self.relation(keep, w);
            let merged = match (from_keep, from_drop) {
                (Relation::None, r) => r,
                (Relation::Edge, r) => r,
                (r, _) => r,
            };
            debug_assert!(
                !(from_keep.is_arc() && from_drop.is_arc() && from_keep != from_drop),
                "opposing arcs at an eligible pair"
            );
            g.set(keep, relabel(w), merged);
        }
        Ok(g)
    }

    /// The underlying simple graph: every arc becomes an edge.
    pub fn underlying(&self) -> MixedGraph {
        MixedGraph {
            n: self.n,
            rel: self
                .rel
                .iter()
                .map(|&r| {
                    if r.is_adjacent() {
                        Relation::Edge
                    } else {
                        Relation::None
                    }
                })
                .collect(),
        }
    }

    /// Complement of the underlying simple graph.
    pub fn complement(&self) -> MixedGraph {
        MixedGraph {
            n: self.n,
            rel: self
                .rel
                .iter()
                .map(|&r| {
                    if r.is_adjacent() {
                        Relation::None
                    } else {
                        Relation::Edge
                    }
                })
                .collect(),
        }
    }

    /// Deletes vertex `x`; higher labels shift down.
    pub fn remove_vertex(&self, x: usize) -> Result<MixedGraph> {
        self.check_vertex(x)?;
        let keep: Vec<usize> = (0..self.n).filter(|&v| v != x).collect();
        Ok(self.induced(&keep))
    }

    /// Subgraph induced on `vertices`, relabelled by position in the slice.
    pub fn induced(&self, vertices: &[usize]) -> MixedGraph {
        let mut g = MixedGraph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                g.set(i, j, self.relation(a, b));
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> MixedGraph {
        assert_eq!(perm.len(), self.n);
        let mut g = MixedGraph::empty(self.n);
        for (u, v) in self.pairs() {
            g.set(perm[u], perm[v], self.rel[pair_index(u, v)]);
        }
        g
    }

    /// Disjoint union; `other`'s vertices follow this graph's.
    pub fn disjoint_union(&self, other: &MixedGraph) -> MixedGraph {
        let mut g = MixedGraph::empty(self.n + other.n);
        for (u, v) in self.pairs() {
            g.set(u, v, self.relation(u, v));
        }
        for (u, v) in other.pairs() {
            g.set(self.n + u, self.n + v, other.relation(u, v));
        }
        g
    }

    /// Adds a vertex adjacent by an edge to every existing vertex.
    pub fn with_universal_vertex(&self) -> MixedGraph {
        let mut g = self.disjoint_union(&MixedGraph::empty(1));
        for v in 0..self.n {
            g.set(v, self.n, Relation::Edge);
        }
        g
    }

    pub(crate) fn from_raw(n: usize, rel: Vec<Relation>) -> MixedGraph {
        debug_assert_eq!(rel.len(), n * n.saturating_sub(1) / 2);
        MixedGraph { n, rel }
    }
}

/// Serialized as mixed-text.
impl Serialize for MixedGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format::to_mixed(self))
    }
}

impl<'de> Deserialize<'de> for MixedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        format::parse(&text, Format::MixedText).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MixedGraph({})", format::to_inline(self))
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format::to_inline(self))
    }
}
