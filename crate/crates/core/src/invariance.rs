//! Chromatic invariance and equivalence.
//!
//! An oriented graph has the same polynomial as its underlying graph exactly
//! when it has no induced 2-dipath and its underlying graph has no induced
//! `2K2`; a simple graph admits such an orientation exactly when it is
//! co-interval (a `2K2`-free comparability graph).

use std::collections::VecDeque;

use serde::Serialize;

use crate::colouring::{chromatic_poly, oriented_chromatic_poly};
use crate::error::{Error, Result};
use crate::graph::enumerate::simple_graphs_with_edges;
use crate::graph::MixedGraph;
use crate::structure::{obstructing_pairs, star_closure};

/// Default vertex limit for the exhaustive equivalence search.
pub const DEFAULT_EQUIV_SEARCH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// A quasi-transitive orientation of the input.
    Orientation { graph: MixedGraph },
    /// `tail -> centre -> head` with `tail`, `head` non-adjacent.
    ViolatingDipath {
        tail: usize,
        centre: usize,
        head: usize,
    },
    /// Two edges inducing `2K2`.
    Violating2k2 {
        first: (usize, usize),
        second: (usize, usize),
    },
    /// A simple graph with the same chromatic polynomial.
    EquivalentSimpleGraph { graph: MixedGraph },
    /// Edges whose forcing constraints cannot be satisfied together.
    ForcingCycle { edges: Vec<(usize, usize)> },
    /// Every simple graph that could match was checked.
    ExhaustedSearch {
        vertices: usize,
        edges: usize,
        candidates: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvarianceVerdict {
    pub verdict: Answer,
    pub certificate: Option<Certificate>,
}

impl InvarianceVerdict {
    fn new(verdict: Answer, certificate: Certificate) -> Self {
        InvarianceVerdict {
            verdict,
            certificate: Some(certificate),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.verdict == Answer::Yes
    }
}

/// An induced 2-dipath `(tail, centre, head)`, if any, smallest ends first.
pub fn find_induced_dipath(g: &MixedGraph) -> Option<(usize, usize, usize)> {
    g.pairs()
        .filter(|&(u, v)| !g.is_adjacent(u, v))
        .find_map(|(u, v)| g.dipath_through(u, v))
}

pub fn is_quasi_transitive(g: &MixedGraph) -> Result<bool> {
    g.require_oriented()?;
    Ok(find_induced_dipath(g).is_none())
}

/// Two edges of the underlying graph with no adjacency between them.
pub fn find_induced_2k2(g: &MixedGraph) -> Option<((usize, usize), (usize, usize))> {
    let edges: Vec<_> = g.pairs().filter(|&(u, v)| g.is_adjacent(u, v)).collect();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if [a, b].contains(&c) || [a, b].contains(&d) {
                continue;
            }
            let crossed = [(a, c), (a, d), (b, c), (b, d)];
            if crossed.iter().all(|&(x, y)| !g.is_adjacent(x, y)) {
                return Some(((a, b), (c, d)));
            }
        }
    }
    None
}

pub fn is_2k2_free(g: &MixedGraph) -> Result<bool> {
    g.require_simple()?;
    Ok(find_induced_2k2(g).is_none())
}

/// Decides whether `f_o(G) = f(U(G))`.
pub fn ochrom_invar(g: &MixedGraph) -> Result<InvarianceVerdict> {
    g.require_oriented()?;
    if let Some((tail, centre, head)) = find_induced_dipath(g) {
        return Ok(InvarianceVerdict::new(
            Answer::No,
            Certificate::ViolatingDipath { tail, centre, head },
        ));
    }
    if let Some((first, second)) = find_induced_2k2(g) {
        return Ok(InvarianceVerdict::new(
            Answer::No,
            Certificate::Violating2k2 { first, second },
        ));
    }
    Ok(InvarianceVerdict::new(
        Answer::Yes,
        Certificate::EquivalentSimpleGraph {
            graph: g.underlying(),
        },
    ))
}

/// Decides whether the simple graph has an orientation with the same
/// polynomial, and produces one.
pub fn chrom_invar(g: &MixedGraph) -> Result<InvarianceVerdict> {
    g.require_simple()?;
    if let Some((first, second)) = find_induced_2k2(g) {
        return Ok(InvarianceVerdict::new(
            Answer::No,
            Certificate::Violating2k2 { first, second },
        ));
    }
    match produce_quasi_transitive_orientation(g) {
        Ok(o) => Ok(InvarianceVerdict::new(
            Answer::Yes,
            Certificate::Orientation { graph: o },
        )),
        Err(Error::NotComparability { cycle }) => Ok(InvarianceVerdict::new(
            Answer::No,
            Certificate::ForcingCycle { edges: cycle },
        )),
        Err(e) => Err(e),
    }
}

/// Orientation without induced 2-dipaths.
///
/// Edges `ab` and `ac` with `b`, `c` non-adjacent must both point into `a`
/// or both out of it. Each edge `(p, q)`, `p < q`, gets a bit: 0 for
/// `p -> q`. The constraints are parities between bits; the classes they
/// connect are explored breadth-first from their lexicographically least
/// edge, which is oriented low to high. A parity clash yields the cycle of
/// forcings that produced it.
pub fn produce_quasi_transitive_orientation(g: &MixedGraph) -> Result<MixedGraph> {
    g.require_simple()?;
    let edges = g.edges();
    let index = |u: usize, v: usize| -> usize {
        let key = (u.min(v), u.max(v));
        edges.binary_search(&key).expect("edge present")
    };
    let mut bit: Vec<Option<bool>> = vec![None; edges.len()];
    let mut parent: Vec<Option<usize>> = vec![None; edges.len()];

    for root in 0..edges.len() {
        if bit[root].is_some() {
            continue;
        }
        bit[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(e) = queue.pop_front() {
            let (p, q) = edges[e];
            for (a, b) in [(p, q), (q, p)] {
                for c in g.neighbours(a) {
                    if c == b || g.is_adjacent(b, c) {
                        continue;
                    }
                    let f = index(a, c);
                    // out_a(edge) = (bit == 0) xor (a is the larger end)
                    let a_is_high_e = a == q;
                    let a_is_high_f = a > c;
                    let want = bit[e].expect("assigned") ^ a_is_high_e ^ a_is_high_f;
                    match bit[f] {
                        None => {
                            bit[f] = Some(want);
                            parent[f] = Some(e);
                            queue.push_back(f);
                        }
                        Some(have) if have != want => {
                            return Err(Error::NotComparability {
                                cycle: forcing_cycle(&edges, &parent, e, f),
                            });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
    }

    let arcs: Vec<(usize, usize)> = edges
        .iter()
        .zip(&bit)
        .map(|(&(p, q), b)| {
            if b.expect("all assigned") {
                (q, p)
            } else {
                (p, q)
            }
        })
        .collect();
    let o = MixedGraph::oriented(g.n(), &arcs).expect("one arc per edge");
    assert!(
        find_induced_dipath(&o).is_none(),
        "consistent forcing must be quasi-transitive"
    );
    Ok(o)
}

fn forcing_cycle(
    edges: &[(usize, usize)],
    parent: &[Option<usize>],
    a: usize,
    b: usize,
) -> Vec<(usize, usize)> {
    let chain = |mut e: usize| {
        let mut out = vec![e];
        while let Some(p) = parent[e] {
            out.push(p);
            e = p;
        }
        out
    };
    let (pa, pb) = (chain(a), chain(b));
    // trim the shared tail up to the lowest common ancestor
    let mut i = pa.len();
    let mut j = pb.len();
    while i > 1 && j > 1 && pa[i - 2] == pb[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pa[..i].to_vec();
    cycle.extend(pb[..j - 1].iter().rev());
    cycle.into_iter().map(|e| edges[e]).collect()
}

/// Co-interval test by the forcing route: a comparability graph without `2K2`.
pub fn is_cointerval(g: &MixedGraph) -> Result<bool> {
    g.require_simple()?;
    Ok(find_induced_2k2(g).is_none() && produce_quasi_transitive_orientation(g).is_ok())
}

/// Co-interval test by the complement route: the complement is chordal and
/// has no asteroidal triple.
pub fn is_cointerval_via_complement(g: &MixedGraph) -> Result<bool> {
    g.require_simple()?;
    let h = g.complement();
    Ok(is_chordal(&h) && find_asteroidal_triple(&h).is_none())
}

/// Maximum cardinality search order; reversed, it is a perfect elimination
/// ordering whenever the graph is chordal.
pub fn maximum_cardinality_search(g: &MixedGraph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex remains");
        visited[v] = true;
        order.push(v);
        for w in g.neighbours(v) {
            if !visited[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Every vertex's neighbours later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &MixedGraph, order: &[usize]) -> bool {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order.iter().all(|&v| {
        let later: Vec<usize> = g.neighbours(v).filter(|&w| pos[w] > pos[v]).collect();
        later
            .iter()
            .enumerate()
            .all(|(i, &a)| later[i + 1..].iter().all(|&b| g.is_adjacent(a, b)))
    })
}

pub fn is_chordal(g: &MixedGraph) -> bool {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order)
}

fn component_labels(g: &MixedGraph, removed: &[bool]) -> Vec<Option<usize>> {
    let n = g.n();
    let mut label = vec![None; n];
    let mut next = 0;
    for s in 0..n {
        if removed[s] || label[s].is_some() {
            continue;
        }
        label[s] = Some(next);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v) {
                if !removed[w] && label[w].is_none() {
                    label[w] = Some(next);
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    label
}

/// Three pairwise non-adjacent vertices, each pair joined by a path avoiding
/// the closed neighbourhood of the third.
pub fn find_asteroidal_triple(g: &MixedGraph) -> Option<(usize, usize, usize)> {
    let n = g.n();
    // labels[x][v]: component of v in G - N[x]
    let labels: Vec<Vec<Option<usize>>> = (0..n)
        .map(|x| {
            let mut removed = vec![false; n];
            removed[x] = true;
            for w in g.neighbours(x) {
                removed[w] = true;
            }
            component_labels(g, &removed)
        })
        .collect();
    let same =
        |x: usize, a: usize, b: usize| labels[x][a].is_some() && labels[x][a] == labels[x][b];
    for a in 0..n {
        for b in a + 1..n {
            if g.is_adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.is_adjacent(a, c) || g.is_adjacent(b, c) {
                    continue;
                }
                if same(c, a, b) && same(b, a, c) && same(a, b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// A simple graph with the same polynomial when `O_G` is empty:
/// `U(G*)`. `None` otherwise (no claim either way).
pub fn equivalence_witness(g: &MixedGraph) -> Result<Option<MixedGraph>> {
    g.require_oriented()?;
    if obstructing_pairs(g).is_empty() {
        Ok(Some(star_closure(g).underlying()))
    } else {
        Ok(None)
    }
}

/// Answers "is there a simple graph with the same polynomial?".
///
/// Without obstructions the witness `U(G*)` settles it. Otherwise, for at
/// most `search_limit` vertices, every simple graph on `n` vertices with
/// `-c1` edges is compared; these are the only candidates because the
/// polynomial fixes both. Larger inputs get `Unknown`.
pub fn ochrom_equiv(g: &MixedGraph, search_limit: usize) -> Result<InvarianceVerdict> {
    if let Some(w) = equivalence_witness(g)? {
        return Ok(InvarianceVerdict::new(
            Answer::Yes,
            Certificate::EquivalentSimpleGraph { graph: w },
        ));
    }
    if g.n() > search_limit {
        return Ok(InvarianceVerdict {
            verdict: Answer::Unknown,
            certificate: None,
        });
    }
    let target = oriented_chromatic_poly(g)?;
    let n = g.n();
    let m = crate::structure::predict_coefficients(g).predicted_c1;
    let m: usize = (-m).try_into().expect("edge count fits");
    let candidates = simple_graphs_with_edges(n, m);
    for h in &candidates {
        if chromatic_poly(h)? == target {
            return Ok(InvarianceVerdict::new(
                Answer::Yes,
                Certificate::EquivalentSimpleGraph { graph: h.clone() },
            ));
        }
    }
    Ok(InvarianceVerdict::new(
        Answer::No,
        Certificate::ExhaustedSearch {
            vertices: n,
            edges: m,
            candidates: candidates.len(),
        },
    ))
}
