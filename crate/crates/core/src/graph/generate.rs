//! Generators for the graph families used throughout the crate.
//!
//! Random generators draw from SplitMix64 (Steele, Lea and Flood 2014) seeded
//! with the user seed. Each draw `x` becomes a uniform real `(x >> 11) / 2^53`.
//! Pairs `(i, j)`, `i < j`, are visited in lexicographic order with exactly
//! one draw per pair, so a corpus can be reproduced in any language from the
//! seed alone.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::{MixedGraph, Relation};
use crate::error::{Error, Result};

/// Seeded SplitMix64 stream with the documented unit-interval conversion.
pub struct SeededRng(SplitMix64);

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform integer in `lo..=hi` by rejection-free multiply-shift.
    pub fn next_range(&mut self, lo: usize, hi: usize) -> usize {
        let span = (hi - lo + 1) as u128;
        lo + ((self.next_u64() as u128 * span) >> 64) as usize
    }
}

/// Oriented star with centre 0, in-neighbours `1..=i` and out-neighbours
/// `i+1..=i+o`.
pub fn gen_star(i: usize, o: usize) -> Result<MixedGraph> {
    if i + o == 0 {
        return Err(Error::InvalidParameter(
            "star needs at least one leaf".into(),
        ));
    }
    let arcs: Vec<_> = (1..=i)
        .map(|x| (x, 0))
        .chain((i + 1..=i + o).map(|y| (0, y)))
        .collect();
    MixedGraph::oriented(i + o + 1, &arcs)
}

/// `D_n`: the directed path `0 -> 1 -> 2 -> 3` plus leaves `4..n`, each with
/// an arc into vertex 3.
pub fn gen_dn(n: usize) -> Result<MixedGraph> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "D_n needs n >= 4, got {n}"
        )));
    }
    let arcs: Vec<_> = [(0, 1), (1, 2), (2, 3)]
        .into_iter()
        .chain((4..n).map(|x| (x, 3)))
        .collect();
    MixedGraph::oriented(n, &arcs)
}

/// `t` disjoint arcs `2k -> 2k+1`.
pub fn gen_tk2(t: usize) -> Result<MixedGraph> {
    if t == 0 {
        return Err(Error::InvalidParameter("tK2 needs t >= 1".into()));
    }
    let arcs: Vec<_> = (0..t).map(|k| (2 * k, 2 * k + 1)).collect();
    MixedGraph::oriented(2 * t, &arcs)
}

/// Random tournament: pair `(i, j)` gets `i -> j` when its draw is below 1/2.
pub fn gen_tournament(n: usize, seed: u64) -> Result<MixedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("tournament needs n >= 1".into()));
    }
    let mut rng = SeededRng::new(seed);
    let mut g = MixedGraph::empty(n);
    for (i, j) in g.pairs().collect::<Vec<_>>() {
        let r = if rng.next_unit() < 0.5 {
            Relation::Out
        } else {
            Relation::In
        };
        g.set(i, j, r);
    }
    Ok(g)
}

/// Each pair independently: with draw `u`, `u < p_a/2` gives `i -> j`,
/// `u < p_a` gives `j -> i`, `u < p_a + p_e` gives an edge, otherwise nothing.
pub fn gen_random_mixed(n: usize, arc_prob: f64, edge_prob: f64, seed: u64) -> Result<MixedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("random graph needs n >= 1".into()));
    }
    let valid = |p: f64| (0.0..=1.0).contains(&p);
    if !valid(arc_prob) || !valid(edge_prob) || arc_prob + edge_prob > 1.0 {
        return Err(Error::InvalidParameter(format!(
            "probabilities must lie in [0,1] with sum <= 1, got {arc_prob} and {edge_prob}"
        )));
    }
    let mut rng = SeededRng::new(seed);
    let mut g = MixedGraph::empty(n);
    for (i, j) in g.pairs().collect::<Vec<_>>() {
        let u = rng.next_unit();
        let r = if u < arc_prob / 2.0 {
            Relation::Out
        } else if u < arc_prob {
            Relation::In
        } else if u < arc_prob + edge_prob {
            Relation::Edge
        } else {
            Relation::None
        };
        g.set(i, j, r);
    }
    Ok(g)
}

/// Every pair adjacent: thirds of the unit interval pick `i -> j`, `j -> i`
/// or an edge.
pub fn gen_complete_mixed(n: usize, seed: u64) -> Result<MixedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "complete mixed graph needs n >= 1".into(),
        ));
    }
    let mut rng = SeededRng::new(seed);
    let mut g = MixedGraph::empty(n);
    for (i, j) in g.pairs().collect::<Vec<_>>() {
        let u = rng.next_unit() * 3.0;
        let r = if u < 1.0 {
            Relation::Out
        } else if u < 2.0 {
            Relation::In
        } else {
            Relation::Edge
        };
        g.set(i, j, r);
    }
    Ok(g)
}

/// Transitive tournament `i -> j` for all `i < j`.
pub fn gen_transitive_tournament(n: usize) -> MixedGraph {
    let arcs: Vec<_> = MixedGraph::empty(n).pairs().collect();
    MixedGraph::oriented(n, &arcs).expect("pairs are distinct")
}

pub fn gen_complete(n: usize) -> MixedGraph {
    gen_transitive_tournament(n).underlying()
}

pub fn gen_cycle(n: usize) -> Result<MixedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    MixedGraph::simple(n, &edges)
}

pub fn gen_path(n: usize) -> Result<MixedGraph> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    MixedGraph::simple(n, &edges)
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn gen_complete_bipartite(a: usize, b: usize) -> MixedGraph {
    let edges: Vec<_> = (0..a)
        .flat_map(|x| (a..a + b).map(move |y| (x, y)))
        .collect();
    MixedGraph::simple(a + b, &edges).expect("bipartite pairs are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stars() {
        assert_eq!(
            gen_star(1, 1).unwrap(),
            MixedGraph::oriented(3, &[(1, 0), (0, 2)]).unwrap()
        );
        assert_eq!(gen_star(2, 0).unwrap().in_neighbours(0).count(), 2);
        let s = gen_star(2, 3).unwrap();
        assert_eq!((s.n(), s.arc_count()), (6, 5));
        assert_eq!(s.in_neighbours(0).count(), 2);
        assert_eq!(s.out_neighbours(0).count(), 3);
        assert!(gen_star(0, 0).is_err());
    }

    #[test]
    fn dn_family() {
        let d4 = gen_dn(4).unwrap();
        assert_eq!(d4.arcs(), vec![(0, 1), (1, 2), (2, 3)]);
        let d5 = gen_dn(5).unwrap();
        assert_eq!(d5.arc_count(), 4);
        assert!(d5.has_arc(4, 3));
        let d7 = gen_dn(7).unwrap();
        assert_eq!(
            (d7.n(), d7.arc_count(), d7.in_neighbours(3).count()),
            (7, 6, 4)
        );
        assert!(gen_dn(3).is_err());
    }

    #[test]
    fn dn5_underlying_is_path_with_pendant() {
        let u = gen_dn(5).unwrap().underlying();
        let expected = MixedGraph::simple(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(u, expected);
    }

    #[test]
    fn tk2() {
        assert_eq!(
            gen_tk2(1).unwrap(),
            MixedGraph::oriented(2, &[(0, 1)]).unwrap()
        );
        assert_eq!(gen_tk2(3).unwrap().arcs(), vec![(0, 1), (2, 3), (4, 5)]);
        assert!(gen_tk2(0).is_err());
    }

    #[test]
    fn tournaments_are_deterministic_orientations() {
        for seed in 0..20 {
            let t = gen_tournament(3, seed).unwrap();
            assert_eq!(t, gen_tournament(3, seed).unwrap());
            assert_eq!(t.arc_count(), 3);
        }
        let t = gen_tournament(6, 9).unwrap();
        assert_eq!(t.underlying(), gen_complete(6));
    }

    #[test]
    fn random_mixed_respects_probabilities() {
        let g = gen_random_mixed(8, 0.0, 1.0, 1).unwrap();
        assert_eq!(g, gen_complete(8));
        let g = gen_random_mixed(8, 1.0, 0.0, 1).unwrap();
        assert_eq!(g.arc_count(), 28);
        assert!(gen_random_mixed(4, 0.7, 0.7, 0).is_err());
        assert!(gen_random_mixed(4, -0.1, 0.2, 0).is_err());
        assert_eq!(
            gen_random_mixed(7, 0.4, 0.2, 3).unwrap(),
            gen_random_mixed(7, 0.4, 0.2, 3).unwrap()
        );
    }

    #[test]
    fn complete_mixed_is_complete() {
        let g = gen_complete_mixed(7, 11).unwrap();
        assert_eq!(g.underlying(), gen_complete(7));
    }

    #[test]
    fn splitmix_reference_stream() {
        // First outputs of SplitMix64 seeded with 0.
        let mut r = SeededRng::new(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }
}
