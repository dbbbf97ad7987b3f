//! Fixed test corpora and the named identity suites run by `ochrom verify`.
//!
//! Corpora are reproducible from a single seed (default 0):
//!
//! * **main corpus**: every oriented graph on 1 to 4 vertices up to
//!   isomorphism (52 graphs), then 500 random mixed graphs. Graph `i` of the
//!   random part takes its order `5 + i mod 3` and its generator seed from
//!   the `i`-th output of a SplitMix64 stream seeded with `seed`, and is drawn
//!   with arc probability 0.4 and edge probability 0.25.
//! * **obstruction-free sample**: random oriented graphs (arc probability
//!   0.7, order 2 to 7) with no obstructing pair, first 200 found.
//! * **constrained sample**: random oriented graphs (arc probability 0.4,
//!   order 3 to 7) with a 2-dipath pair or an obstructing pair, first 200
//!   found.
//!
//! The two samples draw from separate streams, seeded with `seed ^ 0x5a` and
//! `seed ^ 0xa5`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::colouring::{
    chromatic_poly, poly_bruteforce, poly_reduction, PairSelection, ReductionOptions,
    DEFAULT_MAX_BRUTE, DEFAULT_MAX_REDUCE,
};
use crate::error::{Error, Result};
use crate::graph::enumerate::{orientations, oriented_graphs, simple_graphs};
use crate::graph::generate::{
    gen_complete_bipartite, gen_dn, gen_random_mixed, gen_star, gen_tk2, SeededRng,
};
use crate::graph::{canonical_key, MixedGraph};
use crate::invariance::{
    chrom_invar, ochrom_equiv, ochrom_invar, Answer, Certificate, DEFAULT_EQUIV_SEARCH,
};
use crate::poly::{choose2, IntPolynomial, Rational};
use crate::roots::{
    dn_closed_form, isolate_real_roots, ln_floor_milli, verify_negative_root, SturmCounter,
};
use crate::structure::{c_coefficient, predict_coefficients, star_closure, triangle_count};

pub const RANDOM_CORPUS_SIZE: usize = 500;
pub const SAMPLE_SIZE: usize = 200;

pub const SUITE_NAMES: &[&str] = &[
    "oracle",
    "leading",
    "second",
    "closure-c2",
    "closure",
    "equivalence",
    "classify",
    "star",
    "dn",
    "negroots",
    "tk2",
    "contrast",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    pub max_brute: usize,
    pub max_reduce: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 0,
            max_brute: DEFAULT_MAX_BRUTE,
            max_reduce: DEFAULT_MAX_REDUCE,
        }
    }
}

impl SuiteConfig {
    fn reduce(&self, g: &MixedGraph) -> Result<IntPolynomial> {
        self.reduce_with(g, PairSelection::Lowest)
    }

    fn reduce_with(&self, g: &MixedGraph, selection: PairSelection) -> Result<IntPolynomial> {
        let opts = ReductionOptions {
            selection,
            max_vertices: self.max_reduce,
            ..ReductionOptions::default()
        };
        poly_reduction(g, opts).map(|(p, _)| p)
    }

    fn chromatic(&self, g: &MixedGraph) -> Result<IntPolynomial> {
        self.reduce(g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusEntry {
    pub index: usize,
    pub label: String,
    pub graph: MixedGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub total: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport {
            name: name.to_string(),
            passed: 0,
            total: 0,
            failures: Vec::new(),
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty() && self.passed == self.total
    }

    fn record(&mut self, what: impl FnOnce() -> String, outcome: Result<bool>) {
        self.total += 1;
        match outcome {
            Ok(true) => self.passed += 1,
            Ok(false) => self.failures.push(what()),
            Err(e) => self.failures.push(format!("{}: {e}", what())),
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}/{} pass", self.name, self.passed, self.total)
    }
}

fn dedup(graphs: impl IntoIterator<Item = MixedGraph>) -> Vec<MixedGraph> {
    let mut seen = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert(canonical_key(g)))
        .collect()
}

/// All oriented graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn small_oriented(max_n: usize) -> Vec<MixedGraph> {
    (1..=max_n)
        .flat_map(|n| dedup(oriented_graphs(n)))
        .collect()
}

/// All simple graphs on `1..=max_n` vertices, one per isomorphism class.
pub fn small_simple(max_n: usize) -> Vec<MixedGraph> {
    (1..=max_n).flat_map(|n| dedup(simple_graphs(n))).collect()
}

pub fn main_corpus(seed: u64) -> Vec<CorpusEntry> {
    let mut out: Vec<CorpusEntry> = small_oriented(4)
        .into_iter()
        .map(|g| (format!("oriented n={}", g.n()), g))
        .enumerate()
        .map(|(index, (label, graph))| CorpusEntry {
            index,
            label,
            graph,
        })
        .collect();
    let mut rng = SeededRng::new(seed);
    for i in 0..RANDOM_CORPUS_SIZE {
        let n = 5 + i % 3;
        let s = rng.next_u64();
        let graph = gen_random_mixed(n, 0.4, 0.25, s).expect("valid parameters");
        out.push(CorpusEntry {
            index: out.len(),
            label: format!("random n={n} seed={s:#x}"),
            graph,
        });
    }
    out
}

fn sample(
    stream: u64,
    arc_prob: f64,
    min_n: usize,
    count: usize,
    keep: impl Fn(&MixedGraph) -> bool,
) -> Vec<CorpusEntry> {
    let mut rng = SeededRng::new(stream);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.next_range(min_n, 7);
        let s = rng.next_u64();
        let g = gen_random_mixed(n, arc_prob, 0.0, s).expect("valid parameters");
        if keep(&g) {
            out.push(CorpusEntry {
                index: out.len(),
                label: format!("oriented n={n} seed={s:#x}"),
                graph: g,
            });
        }
    }
    out
}

pub fn obstruction_free_sample(seed: u64, count: usize) -> Vec<CorpusEntry> {
    sample(seed ^ 0x5a, 0.7, 2, count, |g| {
        crate::structure::obstructing_pairs(g).is_empty()
    })
}

pub fn constrained_sample(seed: u64, count: usize) -> Vec<CorpusEntry> {
    sample(seed ^ 0xa5, 0.4, 3, count, |g| {
        let r = predict_coefficients(g);
        r.dipath_count() + r.obstruction_count() > 0
    })
}

/// Runs `check` over the entries in parallel and records results in index
/// order.
fn over<T: Sync>(
    report: &mut SuiteReport,
    items: &[T],
    label: impl Fn(&T) -> String + Sync,
    check: impl Fn(&T) -> Result<bool> + Sync,
) {
    let results: Vec<Result<bool>> = items.par_iter().map(&check).collect();
    for (item, r) in items.iter().zip(results) {
        report.record(|| label(item), r);
    }
}

fn entry_label(e: &CorpusEntry) -> String {
    format!("#{} {} [{}]", e.index, e.label, e.graph)
}

pub fn suite_oracle(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("oracle");
    let corpus = main_corpus(cfg.seed);
    over(&mut r, &corpus, entry_label, |e| {
        let low = cfg.reduce_with(&e.graph, PairSelection::Lowest)?;
        let high = cfg.reduce_with(&e.graph, PairSelection::Highest)?;
        Ok(low == high && low == poly_bruteforce(&e.graph, cfg.max_brute)?)
    });
    r
}

pub fn suite_leading(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("leading");
    let corpus = main_corpus(cfg.seed);
    over(&mut r, &corpus, entry_label, |e| {
        let g = &e.graph;
        let n = g.n();
        let p = cfg.reduce(g)?;
        let shape = p.is_monic() && p.degree() == Some(n) && p.coeff(0).is_zero();
        let c1 = c_coefficient(&p, n, 1) == predict_coefficients(g).predicted_c1;
        let mut isolated_ok = true;
        for x in (0..n).filter(|&x| g.is_isolated(x)) {
            let rest = cfg.reduce(&g.remove_vertex(x)?)?;
            isolated_ok &= p == &IntPolynomial::x() * &rest;
        }
        Ok(shape && c1 && isolated_ok)
    });
    r
}

pub fn suite_second(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("second");
    let corpus = main_corpus(cfg.seed);
    over(&mut r, &corpus, entry_label, |e| {
        let p = cfg.reduce(&e.graph)?;
        Ok(c_coefficient(&p, e.graph.n(), 2) == predict_coefficients(&e.graph).predicted_c2)
    });
    r
}

/// The second coefficient against the closure-triangle form.
pub fn suite_closure_c2(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("closure-c2");
    let corpus = main_corpus(cfg.seed);
    over(&mut r, &corpus, entry_label, |e| {
        let p = cfg.reduce(&e.graph)?;
        Ok(c_coefficient(&p, e.graph.n(), 2) == predict_coefficients(&e.graph).closure_c2)
    });
    r
}

pub fn suite_closure(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("closure");
    let corpus = main_corpus(cfg.seed);
    over(&mut r, &corpus, entry_label, |e| {
        Ok(cfg.reduce(&e.graph)? == cfg.reduce(&star_closure(&e.graph))?)
    });
    r
}

pub fn suite_equivalence(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("equivalence");
    let free = obstruction_free_sample(cfg.seed, SAMPLE_SIZE);
    over(&mut r, &free, entry_label, |e| {
        let star = star_closure(&e.graph);
        let f = cfg.reduce(&e.graph)?;
        Ok(f == cfg.reduce(&star)? && f == cfg.chromatic(&star.underlying())?)
    });
    let constrained = constrained_sample(cfg.seed, SAMPLE_SIZE);
    over(&mut r, &constrained, entry_label, |e| {
        Ok(cfg.reduce(&e.graph)? != cfg.chromatic(&e.graph.underlying())?)
    });
    r
}

/// Whether some orientation of `g` has `f_o = f(g)`, by trying them all.
pub fn has_invariant_orientation(g: &MixedGraph, cfg: &SuiteConfig) -> Result<bool> {
    let f = cfg.chromatic(g)?;
    let mut seen = HashSet::new();
    for o in orientations(g) {
        if seen.insert(canonical_key(&o)) && cfg.reduce(&o)? == f {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn suite_classify(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("classify");
    let oriented = small_oriented(5);
    over(
        &mut r,
        &oriented,
        |g| format!("oriented [{g}]"),
        |g| {
            let verdict = ochrom_invar(g)?.is_yes();
            Ok(verdict == (cfg.reduce(g)? == cfg.chromatic(&g.underlying())?))
        },
    );
    let simple = small_simple(5);
    over(
        &mut r,
        &simple,
        |g| format!("simple [{g}]"),
        |g| {
            let v = chrom_invar(g)?;
            let exhaustive = has_invariant_orientation(g, cfg)?;
            let certified = match &v.certificate {
                Some(Certificate::Orientation { graph }) => {
                    graph.is_oriented()
                        && graph.underlying() == *g
                        && cfg.reduce(graph)? == cfg.chromatic(g)?
                }
                _ => !v.is_yes(),
            };
            Ok(v.is_yes() == exhaustive && certified)
        },
    );
    r
}

pub fn suite_star(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("star");
    let pairs: Vec<(usize, usize)> = (1..=4).flat_map(|i| (1..=4).map(move |o| (i, o))).collect();
    over(
        &mut r,
        &pairs,
        |(i, o)| format!("star {i},{o}"),
        |&(i, o)| {
            let f = cfg.reduce(&gen_star(i, o)?)?;
            let k = cfg.chromatic(&gen_complete_bipartite(i, o))?;
            Ok(f == &IntPolynomial::x() * &k.shift(&-BigInt::one()))
        },
    );
    r
}

pub fn suite_dn(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("dn");
    let ns: Vec<usize> = (4..=9).collect();
    over(
        &mut r,
        &ns,
        |n| format!("D_{n} closed form"),
        |&n| Ok(dn_closed_form(n)? == cfg.reduce(&gen_dn(n)?)?),
    );
    let golden = IntPolynomial::from_i64(&[1, -3, 1]);
    r.record(
        || "golden factor divides D_5".into(),
        dn_closed_form(5).map(|f| f.divides_by(&golden).is_some()),
    );
    let lo = Rational::new(BigInt::from(3819), BigInt::from(10000));
    let hi = Rational::new(BigInt::from(3820), BigInt::from(10000));
    r.record(
        || "D_5 root inside (0.3819, 0.3820)".into(),
        dn_closed_form(5).map(|f| {
            isolate_real_roots(&f, 30)
                .iter()
                .any(|iv| iv.lo > lo && iv.hi < hi)
        }),
    );
    r
}

/// `(n, threshold)` pairs for the negative-root checks: the rational
/// logarithm bound `-floor(ln n, 10^-3)` for each order, plus the fixed
/// thresholds -2 at 10 and -3 at 50.
pub fn negative_root_targets() -> Vec<(usize, Rational)> {
    let mut t: Vec<(usize, Rational)> = [10u64, 20, 50]
        .iter()
        .map(|&n| (n as usize, -ln_floor_milli(n)))
        .collect();
    t.push((10, Rational::from(BigInt::from(-2))));
    t.push((50, Rational::from(BigInt::from(-3))));
    t
}

pub fn suite_negroots(_cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("negroots");
    let targets = negative_root_targets();
    over(
        &mut r,
        &targets,
        |(n, t)| format!("D_{n} root in (-{n}, {})", crate::roots::format_rational(t)),
        |(n, t)| {
            let v = verify_negative_root(*n, t)?;
            let minus_n = Rational::from(-BigInt::from(*n));
            Ok(v.positive_at_minus_n && v.witness.is_some_and(|w| w.lo > minus_n && w.hi < *t))
        },
    );
    let evens: Vec<usize> = (6..=50).step_by(2).collect();
    over(
        &mut r,
        &evens,
        |n| format!("f_o(D_{n}, -{n}) > 0"),
        |&n| {
            let f = dn_closed_form(n)?;
            Ok(f.sign_at(&Rational::from(-BigInt::from(n))) > 0)
        },
    );
    r
}

pub fn suite_tk2(_cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("tk2");
    for t in [2usize, 3] {
        r.record(
            || {
                format!(
                    "no simple graph on {} vertices with {t} edges has {} triangles",
                    2 * t,
                    choose2(t)
                )
            },
            Ok(crate::graph::enumerate::simple_graphs_with_edges(2 * t, t)
                .iter()
                .all(|h| BigInt::from(triangle_count(h)) != choose2(t))),
        );
        r.record(
            || format!("equivalence search on {t}K2 finds nothing"),
            gen_tk2(t)
                .and_then(|g| ochrom_equiv(&g, DEFAULT_EQUIV_SEARCH))
                .map(|v| v.verdict == Answer::No),
        );
    }
    r
}

/// Underlying graphs of the main corpus that are connected, one per
/// isomorphism class.
pub fn connected_simple_corpus(seed: u64) -> Vec<MixedGraph> {
    dedup(
        main_corpus(seed)
            .into_iter()
            .map(|e| e.graph.underlying())
            .filter(is_connected),
    )
}

pub fn is_connected(g: &MixedGraph) -> bool {
    let n = g.n();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in g.neighbours(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

pub fn suite_contrast(cfg: &SuiteConfig) -> SuiteReport {
    let mut r = SuiteReport::new("contrast");
    let zero = Rational::zero();
    let one = Rational::one();
    let far = Rational::from(BigInt::from(-1_000_000));
    let graphs = connected_simple_corpus(cfg.seed);
    over(
        &mut r,
        &graphs,
        |g| format!("chromatic roots of [{g}]"),
        |g| {
            let c = SturmCounter::new(&chromatic_poly(g)?);
            Ok(c.count_open(&far, &zero) == 0 && c.count_open(&zero, &one) == 0)
        },
    );
    r.record(
        || "D_5 has a root in (0, 1)".into(),
        dn_closed_form(5).map(|f| SturmCounter::new(&f).count_open(&zero, &one) == 1),
    );
    r
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Vec<SuiteReport>> {
    let one = |f: fn(&SuiteConfig) -> SuiteReport| Ok(vec![f(cfg)]);
    match name {
        "oracle" => one(suite_oracle),
        "leading" => one(suite_leading),
        "second" | "thm2" => one(suite_second),
        "closure-c2" => one(suite_closure_c2),
        "closure" => one(suite_closure),
        "equivalence" => one(suite_equivalence),
        "classify" => one(suite_classify),
        "star" => one(suite_star),
        "dn" => one(suite_dn),
        "negroots" => one(suite_negroots),
        "tk2" => one(suite_tk2),
        "contrast" => one(suite_contrast),
        "all" => SUITE_NAMES
            .iter()
            .map(|s| run_suite(s, cfg).map(|mut v| v.remove(0)))
            .collect(),
        _ => Err(Error::Unknown {
            what: "suite",
            name: name.to_string(),
        }),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanHit {
    pub index: usize,
    pub graph: MixedGraph,
    pub polynomial: IntPolynomial,
    pub roots_in_window: usize,
    pub roots_total: usize,
}

/// Oriented graphs on up to `max_n` vertices whose polynomial has a real
/// root in the open window `(lo, hi)`. With `only_window`, a hit needs every
/// real root other than 0 and 1 to lie in the window.
pub fn scan_roots(
    max_n: usize,
    lo: &Rational,
    hi: &Rational,
    only_window: bool,
    cfg: &SuiteConfig,
) -> Result<Vec<ScanHit>> {
    let graphs = small_oriented(max_n);
    let rows: Vec<Result<Option<ScanHit>>> = graphs
        .par_iter()
        .enumerate()
        .map(|(index, g)| {
            let p = cfg.reduce(g)?;
            let c = SturmCounter::new(&p);
            let inside = c.count_open(lo, hi);
            if inside == 0 {
                return Ok(None);
            }
            let b = crate::roots::root_bound(&p);
            let total = c.count_open(&-&b, &b);
            let trivial = [Rational::zero(), Rational::one()]
                .iter()
                .filter(|x| c.is_root(x))
                .count();
            if only_window && inside + trivial != total {
                return Ok(None);
            }
            Ok(Some(ScanHit {
                index,
                graph: g.clone(),
                polynomial: p,
                roots_in_window: inside,
                roots_total: total,
            }))
        })
        .collect();
    rows.into_iter().filter_map(|r| r.transpose()).collect()
}
