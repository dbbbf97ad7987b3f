//! The two routes to the oriented chromatic polynomial.
//!
//! [`count_colourings`] enumerates assignments directly from the colouring
//! conditions; [`poly_bruteforce`] interpolates those counts. The recursion
//! in [`poly_reduction`] splits a non-adjacent, non-2-dipath-linked pair into
//! "different colours" (add an edge) and "same colour" (identify) and
//! bottoms out at graphs where every pair is forced apart, whose polynomial
//! is the falling factorial.

use std::collections::HashMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{canonical_key, CanonKey, MixedGraph, Relation};
use crate::poly::{falling_factorial, interpolate, IntPolynomial};

/// Default vertex limit for exhaustive enumeration.
pub const DEFAULT_MAX_BRUTE: usize = 8;
/// Default vertex limit for the reduction.
pub const DEFAULT_MAX_REDUCE: usize = 14;

/// A total assignment of colours `1..=k` to vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    assignment: Vec<usize>,
}

impl Colouring {
    pub fn new(assignment: Vec<usize>, k: usize) -> Result<Self> {
        if let Some(&c) = assignment.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::ColourOutOfRange { colour: c, k });
        }
        Ok(Colouring { assignment })
    }

    pub fn colour(&self, v: usize) -> usize {
        self.assignment[v]
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }
}

/// Checks the definition literally: distinct colours across every arc and
/// edge, and no two arcs `uv`, `xy` with `c(u) = c(y)` and `c(v) = c(x)`.
pub fn is_oriented_colouring(g: &MixedGraph, c: &Colouring) -> Result<bool> {
    if c.len() != g.n() {
        return Err(Error::PartialColouring {
            assigned: c.len(),
            n: g.n(),
        });
    }
    for (u, v) in g.pairs() {
        if g.is_adjacent(u, v) && c.colour(u) == c.colour(v) {
            return Ok(false);
        }
    }
    let arcs = g.arcs();
    for &(u, v) in &arcs {
        for &(x, y) in &arcs {
            if c.colour(u) == c.colour(y) && c.colour(v) == c.colour(x) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Number of oriented `k`-colourings, by depth-first enumeration of every
/// assignment with constraints checked as soon as both ends are coloured.
pub fn count_colourings(g: &MixedGraph, k: usize) -> BigInt {
    let n = g.n();
    if n == 0 {
        return BigInt::from(1);
    }
    if k == 0 {
        return BigInt::from(0);
    }
    // earlier[v] = relations from v to already-coloured vertices w < v
    let earlier: Vec<Vec<(usize, Relation)>> = (0..n)
        .map(|v| {
            (0..v)
                .filter_map(|w| {
                    let r = g.relation(v, w);
                    r.is_adjacent().then_some((w, r))
                })
                .collect()
        })
        .collect();
    let mut state = Enumeration {
        k,
        earlier: &earlier,
        colour: vec![0; n],
        // arc colour-pair multiplicities, row = tail colour
        pairs: vec![0u32; k * k],
        count: 0,
    };
    state.assign(0);
    BigInt::from(state.count)
}

struct Enumeration<'a> {
    k: usize,
    earlier: &'a [Vec<(usize, Relation)>],
    colour: Vec<usize>,
    pairs: Vec<u32>,
    count: u128,
}

impl Enumeration<'_> {
    fn assign(&mut self, v: usize) {
        if v == self.colour.len() {
            self.count += 1;
            return;
        }
        let k = self.k;
        let earlier = self.earlier;
        'colours: for c in 0..k {
            let mut added: Vec<usize> = Vec::new();
            for &(w, r) in &earlier[v] {
                let cw = self.colour[w];
                if cw == c {
                    self.undo(&added);
                    continue 'colours;
                }
                let (tail, head) = match r {
                    Relation::Out => (c, cw),
                    Relation::In => (cw, c),
                    _ => continue,
                };
                if self.pairs[head * k + tail] > 0 {
                    self.undo(&added);
                    continue 'colours;
                }
                self.pairs[tail * k + head] += 1;
                added.push(tail * k + head);
            }
            self.colour[v] = c;
            self.assign(v + 1);
            self.undo(&added);
        }
    }

    fn undo(&mut self, added: &[usize]) {
        for &i in added {
            self.pairs[i] -= 1;
        }
    }
}

fn guard(g: &MixedGraph, limit: usize) -> Result<()> {
    if g.n() > limit {
        Err(Error::SizeGuard { n: g.n(), limit })
    } else {
        Ok(())
    }
}

/// Interpolates the counts at `k = 0..=n`.
pub fn poly_bruteforce(g: &MixedGraph, max_vertices: usize) -> Result<IntPolynomial> {
    guard(g, max_vertices)?;
    let points: Vec<(BigInt, BigInt)> = (0..=g.n())
        .map(|k| (BigInt::from(k), count_colourings(g, k)))
        .collect();
    interpolate(&points)
}

/// Smallest `k` admitting an oriented `k`-colouring.
pub fn oriented_chromatic_number(g: &MixedGraph, max_vertices: usize) -> Result<usize> {
    guard(g, max_vertices)?;
    Ok((0..=g.n())
        .find(|&k| count_colourings(g, k) > BigInt::from(0))
        .expect("n colours always suffice"))
}

/// Which eligible pair the recursion splits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairSelection {
    /// Lexicographically least `(u, v)`.
    #[default]
    Lowest,
    /// Lexicographically greatest `(u, v)`.
    Highest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionOptions {
    pub memo: bool,
    pub selection: PairSelection,
    pub max_vertices: usize,
}

impl Default for ReductionOptions {
    fn default() -> Self {
        ReductionOptions {
            memo: true,
            selection: PairSelection::Lowest,
            max_vertices: DEFAULT_MAX_REDUCE,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct ReductionStats {
    pub node_count: u64,
    pub cache_hits: u64,
    pub max_depth: usize,
}

/// First reducible pair in the requested order, if any.
pub fn eligible_pair(g: &MixedGraph, selection: PairSelection) -> Option<(usize, usize)> {
    match selection {
        PairSelection::Lowest => g.pairs().find(|&(u, v)| g.is_reducible_pair(u, v)),
        PairSelection::Highest => {
            let pairs: Vec<_> = g.pairs().collect();
            pairs
                .into_iter()
                .rev()
                .find(|&(u, v)| g.is_reducible_pair(u, v))
        }
    }
}

pub fn poly_reduction(
    g: &MixedGraph,
    opts: ReductionOptions,
) -> Result<(IntPolynomial, ReductionStats)> {
    guard(g, opts.max_vertices)?;
    let mut r = Reducer {
        opts,
        memo: HashMap::new(),
        falling: Vec::new(),
        stats: ReductionStats::default(),
    };
    let p = r.reduce(g.clone(), 0);
    Ok((p, r.stats))
}

/// Polynomial only, default options.
pub fn oriented_chromatic_poly(g: &MixedGraph) -> Result<IntPolynomial> {
    poly_reduction(g, ReductionOptions::default()).map(|(p, _)| p)
}

/// Chromatic polynomial of an arc-free graph, via the same recursion (which
/// is then the classical addition-identification formula).
pub fn chromatic_poly(g: &MixedGraph) -> Result<IntPolynomial> {
    g.require_simple()?;
    oriented_chromatic_poly(g)
}

struct Reducer {
    opts: ReductionOptions,
    memo: HashMap<CanonKey, IntPolynomial>,
    falling: Vec<IntPolynomial>,
    stats: ReductionStats,
}

impl Reducer {
    fn reduce(&mut self, g: MixedGraph, depth: usize) -> IntPolynomial {
        self.stats.node_count += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let key = if self.opts.memo {
            let key = canonical_key(&g);
            if let Some(p) = self.memo.get(&key) {
                self.stats.cache_hits += 1;
                return p.clone();
            }
            Some(key)
        } else {
            None
        };
        let p = match eligible_pair(&g, self.opts.selection) {
            None => self.falling_factorial(g.n()),
            Some((u, v)) => {
                let joined = g.add_edge(u, v).expect("eligible pair is unrelated");
                let merged = g.identify(u, v).expect("eligible pair can be identified");
                drop(g);
                let a = self.reduce(joined, depth + 1);
                let b = self.reduce(merged, depth + 1);
                &a + &b
            }
        };
        if let Some(key) = key {
            self.memo.insert(key, p.clone());
        }
        p
    }

    fn falling_factorial(&mut self, n: usize) -> IntPolynomial {
        while self.falling.len() <= n {
            self.falling.push(falling_factorial(self.falling.len()));
        }
        self.falling[n].clone()
    }
}
