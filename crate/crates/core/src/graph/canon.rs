//! Canonical labelling for small mixed graphs.
//!
//! Vertices are first partitioned by colour refinement over the relation
//! types (out-arc, in-arc, edge). The canonical form is then the minimum
//! relation string over every labelling that respects the ordered
//! partition, found by depth-first search with prefix pruning. The partition
//! is an isomorphism invariant, so the result is exact. When the number of
//! admissible labellings exceeds [`EXHAUSTIVE_LIMIT`] the refined order
//! itself is used; that key is still a relabelling of the input, so it is
//! sound as a memo key but may miss some isomorphic hits.

use super::{pair_index, MixedGraph, Relation};

/// Admissible labellings tried before falling back (9!).
pub const EXHAUSTIVE_LIMIT: u64 = 362_880;

/// Byte string identifying a graph up to isomorphism (when exact).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonKey(Vec<u8>);

impl CanonKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

pub fn canonical_key(g: &MixedGraph) -> CanonKey {
    let (perm, _) = canonical_labelling(g);
    key_of(g, &perm)
}

pub fn canonical_form(g: &MixedGraph) -> MixedGraph {
    let (perm, _) = canonical_labelling(g);
    g.permute(&perm)
}

/// True when the last canonical labelling of `g` was exhaustive.
pub fn is_exact(g: &MixedGraph) -> bool {
    canonical_labelling(g).1
}

fn key_of(g: &MixedGraph, perm: &[usize]) -> CanonKey {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut bytes = Vec::with_capacity(1 + n * n.saturating_sub(1) / 2);
    bytes.push(n as u8);
    for j in 1..n {
        for i in 0..j {
            bytes.push(g.relation(inv[i], inv[j]).code());
        }
    }
    CanonKey(bytes)
}

fn refine(g: &MixedGraph) -> Vec<usize> {
    let n = g.n();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let sigs: Vec<(usize, Vec<(u8, usize)>)> = (0..n)
            .map(|v| {
                let mut s: Vec<(u8, usize)> = (0..n)
                    .filter(|&w| w != v)
                    .map(|w| (g.relation(v, w).code(), colour[w]))
                    .filter(|&(c, _)| c != Relation::None.code())
                    .collect();
                s.sort_unstable();
                (colour[v], s)
            })
            .collect();
        let mut distinct: Vec<&(usize, Vec<(u8, usize)>)> = sigs.iter().collect();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("present"))
            .collect();
        let count = distinct.len();
        colour = next;
        if count == classes {
            return colour;
        }
        classes = count;
    }
}

/// Returns `perm` (old label -> new label) and whether the search was exhaustive.
fn canonical_labelling(g: &MixedGraph) -> (Vec<usize>, bool) {
    let n = g.n();
    let colour = refine(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colour[v], v));
    // cell_of[position] = colour of the vertex placed there
    let cells: Vec<usize> = order.iter().map(|&v| colour[v]).collect();

    let mut space: u64 = 1;
    let mut run = 0u64;
    for i in 0..n {
        run = if i > 0 && cells[i] == cells[i - 1] {
            run + 1
        } else {
            1
        };
        space = space.saturating_mul(run);
    }
    if space > EXHAUSTIVE_LIMIT {
        let mut perm = vec![0; n];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        return (perm, false);
    }

    let mut search = Search {
        g,
        colour: &colour,
        cells: &cells,
        placed: Vec::with_capacity(n),
        used: vec![false; n],
        prefix: Vec::new(),
        best: None,
    };
    search.run();
    let (best_order, _) = search.best.expect("at least one labelling");
    let mut perm = vec![0; n];
    for (pos, &v) in best_order.iter().enumerate() {
        perm[v] = pos;
    }
    (perm, true)
}

struct Search<'a> {
    g: &'a MixedGraph,
    colour: &'a [usize],
    cells: &'a [usize],
    placed: Vec<usize>,
    used: Vec<bool>,
    // relation codes column by column for the placed prefix
    prefix: Vec<u8>,
    best: Option<(Vec<usize>, Vec<u8>)>,
}

impl Search<'_> {
    fn run(&mut self) {
        let n = self.g.n();
        let pos = self.placed.len();
        if pos == n {
            let better = match &self.best {
                None => true,
                Some((_, b)) => self.prefix < *b,
            };
            if better {
                self.best = Some((self.placed.clone(), self.prefix.clone()));
            }
            return;
        }
        for v in 0..n {
            if self.used[v] || self.colour[v] != self.cells[pos] {
                continue;
            }
            let mark = self.prefix.len();
            for &u in &self.placed {
                self.prefix.push(self.g.relation(u, v).code());
            }
            // Column `pos` occupies prefix[pair_index(0,pos)..]; compare with best.
            let prune = match &self.best {
                Some((_, b)) if pos > 0 => {
                    let end = pair_index(pos - 1, pos) + 1;
                    self.prefix[..end] > b[..end]
                }
                _ => false,
            };
            if !prune {
                self.used[v] = true;
                self.placed.push(v);
                self.run();
                self.placed.pop();
                self.used[v] = false;
            }
            self.prefix.truncate(mark);
        }
    }
}
