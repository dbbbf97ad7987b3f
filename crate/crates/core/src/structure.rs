//! Structural sets of a mixed graph and the coefficient formulas built on
//! them.
//!
//! * `D_G`: non-adjacent pairs at the ends of a 2-dipath.
//! * `O_G`: unordered pairs of non-incident arcs `uv`, `xy` where neither
//!   `{u, y}` nor `{v, x}` is adjacent (by arc or edge) or 2-dipath-linked.
//!   Such a pair is exactly where a proper colouring of `U(G)` may give
//!   `c(u) = c(y)` and `c(v) = c(x)`.
//! * `T_G`: triangles of `U(G)`.
//!
//! With `m = |A| + |E| + |D|` the oriented chromatic polynomial has
//! `c1 = -m`. The second prediction is reported in two forms:
//!
//! * `C(m, 2) - |T| - |D| - |O|`, which charges one triangle per 2-dipath
//!   pair. It is exact when `D_G` is empty but overcounts when the closure
//!   edges of `G*` close more than one triangle each (two 2-dipaths through
//!   a shared centre, for instance).
//! * `C(m, 2) - |T(U(G*))| - |O|`, counting triangles after closure.

use num_bigint::BigInt;
use serde::Serialize;

use crate::graph::MixedGraph;
use crate::poly::{choose2, IntPolynomial};

pub type VertexPair = (usize, usize);
pub type Arc = (usize, usize);

pub fn dipath_pairs(g: &MixedGraph) -> Vec<VertexPair> {
    g.pairs()
        .filter(|&(u, v)| !g.is_adjacent(u, v) && g.dipath_linked(u, v))
        .collect()
}

fn unconstrained(g: &MixedGraph, a: usize, b: usize) -> bool {
    !g.is_adjacent(a, b) && !g.dipath_linked(a, b)
}

/// Whether the arcs `u -> v` and `x -> y` obstruct each other.
pub fn is_obstructing(g: &MixedGraph, (u, v): Arc, (x, y): Arc) -> bool {
    let distinct = u != x && u != y && v != x && v != y;
    distinct
        && g.has_arc(u, v)
        && g.has_arc(x, y)
        && unconstrained(g, u, y)
        && unconstrained(g, v, x)
}

/// Obstructing arc pairs, each listed once with the smaller arc first.
pub fn obstructing_pairs(g: &MixedGraph) -> Vec<(Arc, Arc)> {
    let arcs = g.arcs();
    let mut out = Vec::new();
    for (i, &a) in arcs.iter().enumerate() {
        for &b in &arcs[i + 1..] {
            if is_obstructing(g, a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Triples pairwise adjacent in the underlying graph.
pub fn triangle_count(g: &MixedGraph) -> usize {
    let n = g.n();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            if !g.is_adjacent(a, b) {
                continue;
            }
            count += (b + 1..n)
                .filter(|&c| g.is_adjacent(a, c) && g.is_adjacent(b, c))
                .count();
        }
    }
    count
}

/// `G*`: `G` plus an edge for every pair in `D_G`. Arcs are untouched, so no
/// new 2-dipaths appear and one pass suffices.
pub fn star_closure(g: &MixedGraph) -> MixedGraph {
    let mut h = g.clone();
    for (u, v) in dipath_pairs(g) {
        h = h.add_edge(u, v).expect("dipath pairs are non-adjacent");
    }
    h
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    pub vertex_count: usize,
    pub arc_count: usize,
    pub edge_count: usize,
    pub dipath_pairs: Vec<VertexPair>,
    pub obstructing_pairs: Vec<(Arc, Arc)>,
    pub triangle_count: usize,
    /// Triangles of `U(G*)`.
    pub closure_triangle_count: usize,
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub predicted_c1: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub predicted_c2: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub closure_c2: BigInt,
}

impl StructureReport {
    pub fn dipath_count(&self) -> usize {
        self.dipath_pairs.len()
    }

    pub fn obstruction_count(&self) -> usize {
        self.obstructing_pairs.len()
    }
}

pub fn predict_coefficients(g: &MixedGraph) -> StructureReport {
    let dipath_pairs = dipath_pairs(g);
    let obstructing_pairs = obstructing_pairs(g);
    let triangles = triangle_count(g);
    let (arcs, edges) = (g.arc_count(), g.edge_count());
    let m = arcs + edges + dipath_pairs.len();
    let predicted_c1 = -BigInt::from(m);
    let predicted_c2 = choose2(m)
        - BigInt::from(triangles)
        - BigInt::from(dipath_pairs.len())
        - BigInt::from(obstructing_pairs.len());
    let closure_triangles = triangle_count(&star_closure(g));
    let closure_c2 =
        choose2(m) - BigInt::from(closure_triangles) - BigInt::from(obstructing_pairs.len());
    StructureReport {
        vertex_count: g.n(),
        arc_count: arcs,
        edge_count: edges,
        dipath_pairs,
        obstructing_pairs,
        triangle_count: triangles,
        closure_triangle_count: closure_triangles,
        predicted_c1,
        predicted_c2,
        closure_c2,
    }
}

/// Coefficient `c_i`, i.e. that of `λ^(n-i)`; zero when `i > n`.
pub fn c_coefficient(p: &IntPolynomial, n: usize, i: usize) -> BigInt {
    n.checked_sub(i).map(|d| p.coeff(d)).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientCheck {
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub predicted_c1: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub actual_c1: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub predicted_c2: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub closure_c2: BigInt,
    #[serde(serialize_with = "crate::poly::serialize_decimal")]
    pub actual_c2: BigInt,
}

impl CoefficientCheck {
    pub fn agrees(&self) -> bool {
        self.predicted_c1 == self.actual_c1 && self.predicted_c2 == self.actual_c2
    }

    pub fn closure_agrees(&self) -> bool {
        self.predicted_c1 == self.actual_c1 && self.closure_c2 == self.actual_c2
    }
}

/// Compares the report's predictions with a computed polynomial of `g`.
pub fn check_coefficients(report: &StructureReport, p: &IntPolynomial) -> CoefficientCheck {
    let n = report.vertex_count;
    CoefficientCheck {
        predicted_c1: report.predicted_c1.clone(),
        actual_c1: c_coefficient(p, n, 1),
        predicted_c2: report.predicted_c2.clone(),
        closure_c2: report.closure_c2.clone(),
        actual_c2: c_coefficient(p, n, 2),
    }
}
