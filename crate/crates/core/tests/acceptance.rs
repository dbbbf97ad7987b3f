//! Acceptance criteria, one line per criterion.
//!
//! Values the library computes are checked against oracles written here:
//! a backtracking colouring counter with Newton interpolation, direct counts
//! of arcs, 2-dipath pairs, obstructing pairs and triangles, and a direct
//! evaluation of the `D_n` product formula.

use std::process::{Command, ExitCode};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use ochrom::colouring::{chromatic_poly, oriented_chromatic_poly};
use ochrom::graph::enumerate::orientations;
use ochrom::graph::format::parse_inline;
use ochrom::graph::generate::{gen_complete_bipartite, gen_dn, gen_star, gen_tk2};
use ochrom::invariance::{chrom_invar, ochrom_invar, Answer, Certificate};
use ochrom::roots::{
    dn_closed_form, format_rational, isolate_real_roots, ln_floor_milli,
    rational_to_f64 as rational_f64, verify_negative_root, SturmCounter,
};
use ochrom::suites::{
    connected_simple_corpus, constrained_sample, main_corpus, obstruction_free_sample,
    small_oriented, small_simple, RANDOM_CORPUS_SIZE, SAMPLE_SIZE,
};
use ochrom::{IntPolynomial, MixedGraph, Rational};

const SEED: u64 = 0;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn int(x: i64) -> BigInt {
    BigInt::from(x)
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::new(int(p), int(q))
}

fn ratio(ok: usize, total: usize) -> String {
    format!("{ok}/{total}")
}

// ---------------------------------------------------------------- oracles

/// Oriented `k`-colourings by backtracking. `dir[a * k + b]` counts arcs
/// from colour class `a` to class `b`.
fn count_oriented(g: &MixedGraph, k: usize) -> u64 {
    fn go(g: &MixedGraph, k: usize, i: usize, col: &mut [usize], dir: &mut [u32]) -> u64 {
        if i == g.n() {
            return 1;
        }
        let mut total = 0;
        'colour: for c in 0..k {
            let mut placed = Vec::new();
            for (j, &d) in col.iter().enumerate().take(i) {
                if !g.is_adjacent(i, j) {
                    continue;
                }
                let ok = d != c
                    && if g.has_arc(i, j) {
                        dir[d * k + c] == 0
                    } else if g.has_arc(j, i) {
                        dir[c * k + d] == 0
                    } else {
                        true
                    };
                if !ok {
                    for slot in placed {
                        dir[slot] -= 1;
                    }
                    continue 'colour;
                }
                if g.has_arc(i, j) {
                    dir[c * k + d] += 1;
                    placed.push(c * k + d);
                } else if g.has_arc(j, i) {
                    dir[d * k + c] += 1;
                    placed.push(d * k + c);
                }
            }
            col[i] = c;
            total += go(g, k, i + 1, col, dir);
            for slot in placed {
                dir[slot] -= 1;
            }
        }
        total
    }
    let mut col = vec![0; g.n()];
    let mut dir = vec![0; k * k];
    go(g, k, 0, &mut col, &mut dir)
}

/// Coefficients (low degree first, trailing zeros trimmed) of the polynomial
/// taking `values[k]` at `k = 0, 1, ...`, by forward differences.
fn newton(values: &[BigInt]) -> Vec<BigInt> {
    let mut diffs = values.to_vec();
    let mut leading = Vec::new();
    for _ in 0..values.len() {
        leading.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut acc = vec![Rational::zero(); values.len()];
    let mut falling = vec![Rational::one()];
    let mut fact = BigInt::one();
    for (j, d) in leading.iter().enumerate() {
        if j > 0 {
            fact *= j;
        }
        for (i, c) in falling.iter().enumerate() {
            acc[i] += c * Rational::new(d.clone(), fact.clone());
        }
        let mut next = vec![Rational::zero(); falling.len() + 1];
        for (i, c) in falling.iter().enumerate() {
            next[i + 1] += c;
            next[i] -= c * Rational::from(int(j as i64));
        }
        falling = next;
    }
    let mut out: Vec<BigInt> = acc
        .into_iter()
        .map(|c| {
            assert!(
                c.is_integer(),
                "interpolated coefficient {c} is not an integer"
            );
            c.to_integer()
        })
        .collect();
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

fn oracle_poly(g: &MixedGraph) -> Vec<BigInt> {
    let values: Vec<BigInt> = (0..=g.n())
        .map(|k| BigInt::from(count_oriented(g, k)))
        .collect();
    newton(&values)
}

fn eval(p: &IntPolynomial, x: &BigInt) -> BigInt {
    p.coeffs()
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn linked(g: &MixedGraph, u: usize, v: usize) -> bool {
    (0..g.n()).any(|w| (g.has_arc(u, w) && g.has_arc(w, v)) || (g.has_arc(v, w) && g.has_arc(w, u)))
}

struct Counts {
    arcs: usize,
    edges: usize,
    dipaths: Vec<(usize, usize)>,
    obstructing: usize,
    triangles: usize,
    closure_triangles: usize,
}

impl Counts {
    fn of(g: &MixedGraph) -> Counts {
        let n = g.n();
        let mut arcs = Vec::new();
        let mut edges = 0;
        let mut dipaths = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if g.has_arc(u, v) {
                    arcs.push((u, v));
                }
                if u < v && g.has_edge(u, v) {
                    edges += 1;
                }
                if u < v && !g.is_adjacent(u, v) && linked(g, u, v) {
                    dipaths.push((u, v));
                }
            }
        }
        let free = |a: usize, b: usize| !g.is_adjacent(a, b) && !linked(g, a, b);
        let mut obstructing = 0;
        for (i, &(u, v)) in arcs.iter().enumerate() {
            for &(x, y) in &arcs[i + 1..] {
                if [x, y].contains(&u) || [x, y].contains(&v) {
                    continue;
                }
                if free(u, y) && free(v, x) {
                    obstructing += 1;
                }
            }
        }
        let closed =
            |a: usize, b: usize| g.is_adjacent(a, b) || dipaths.contains(&(a.min(b), a.max(b)));
        let mut triangles = 0;
        let mut closure_triangles = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.is_adjacent(a, b) && g.is_adjacent(a, c) && g.is_adjacent(b, c) {
                        triangles += 1;
                    }
                    if closed(a, b) && closed(a, c) && closed(b, c) {
                        closure_triangles += 1;
                    }
                }
            }
        }
        Counts {
            arcs: arcs.len(),
            edges,
            dipaths,
            obstructing,
            triangles,
            closure_triangles,
        }
    }

    fn m(&self) -> i64 {
        (self.arcs + self.edges + self.dipaths.len()) as i64
    }
}

fn choose2(m: i64) -> i64 {
    m * (m - 1) / 2
}

/// `G` plus an edge on every 2-dipath pair.
fn closure(g: &MixedGraph) -> MixedGraph {
    let edges: Vec<(usize, usize)> = Counts::of(g).dipaths;
    let mut all = g.edges();
    all.extend(edges);
    MixedGraph::from_parts(g.n(), &g.arcs(), &all).unwrap()
}

/// The `D_n` product formula evaluated directly.
fn dn_value(n: usize, x: &Rational) -> Rational {
    let one = Rational::one();
    let two = rat(2, 1);
    let three = rat(3, 1);
    let e = (n - 4) as i32;
    let pow = |b: Rational| num_traits::pow::Pow::pow(&b, e);
    x * (x - &one) * (x - &two) * (pow(x - &two) + (x - &three) * pow(x - &one))
}

fn dn_sign_change(n: usize, lo: &Rational, hi: &Rational) -> bool {
    if lo == hi {
        return dn_value(n, lo).is_zero();
    }
    let a = dn_value(n, lo);
    let b = dn_value(n, hi);
    a.is_zero() || b.is_zero() || a.signum() != b.signum()
}

// ------------------------------------------------------------- criteria

fn criterion_1() -> Outcome {
    let corpus = main_corpus(SEED);
    let small = corpus
        .iter()
        .filter(|e| e.label.starts_with("oriented"))
        .count();
    // oriented graphs on 1..=4 vertices: 1 + 2 + 7 + 42
    let shape = small == 52
        && corpus.len() == 52 + RANDOM_CORPUS_SIZE
        && corpus[52..].iter().all(|e| (5..=7).contains(&e.graph.n()));
    let failures: Vec<usize> = corpus
        .par_iter()
        .filter(|e| {
            oriented_chromatic_poly(&e.graph).unwrap().coeffs() != oracle_poly(&e.graph).as_slice()
        })
        .map(|e| e.index)
        .collect();
    let ok = corpus.len() - failures.len();
    outcome(
        shape && failures.is_empty(),
        format!(
            "{} graphs agree with interpolated counts, first mismatches {:?}",
            ratio(ok, corpus.len()),
            &failures[..failures.len().min(5)]
        ),
    )
}

fn criterion_2() -> Outcome {
    let h = parse_inline("n=4;e 0 1;e 2 3;a 0 2;a 1 3").unwrap();
    let expected = IntPolynomial::from_i64(&[0, -2, 5, -4, 1]);
    let f_h = oriented_chromatic_poly(&h).unwrap();
    // transitive triangle 0 -> 1 -> 2, 0 -> 2 with a pendant arc 3 -> 2
    let companion = MixedGraph::oriented(4, &[(0, 1), (0, 2), (1, 2), (3, 2)]).unwrap();
    let c = Counts::of(&companion);
    let star = closure(&companion);
    let f_star = chromatic_poly(&star.underlying()).unwrap();
    // U(G*) is the paw: λ(λ - 1)^2(λ - 2)
    let paw: Vec<BigInt> = (0..=4)
        .map(|k| int(k * (k - 1) * (k - 1) * (k - 2)))
        .collect();
    let paw_ok = newton(&paw) == expected.coeffs();
    // adding universal vertices to both sides keeps them equal
    let grown = (1..=2).all(|extra| {
        let mut a = h.clone();
        let mut b = star.underlying();
        for _ in 0..extra {
            a = a.with_universal_vertex();
            b = b.with_universal_vertex();
        }
        oriented_chromatic_poly(&a).unwrap() == chromatic_poly(&b).unwrap()
    });
    let pass = f_h == expected
        && oracle_poly(&h) == expected.coeffs()
        && c.dipaths.is_empty()
        && c.obstructing == 0
        && Counts::of(&h).obstructing == 1
        && f_star == expected
        && oriented_chromatic_poly(&companion).unwrap() == expected
        && paw_ok
        && grown;
    outcome(
        pass,
        format!(
            "f_o(H) = {}, f(U(G*)) = {}",
            f_h.to_text("λ"),
            f_star.to_text("λ")
        ),
    )
}

fn criterion_3() -> Outcome {
    let corpus = main_corpus(SEED);
    let bad: Vec<usize> = corpus
        .par_iter()
        .filter(|e| {
            let g = &e.graph;
            let n = g.n();
            let p = oriented_chromatic_poly(g).unwrap();
            let c = Counts::of(g);
            let shape = p.degree() == Some(n) && p.coeff(n).is_one() && p.coeff(0).is_zero();
            let c1 = p.coeff(n - 1) == int(-c.m());
            let isolated = (0..n).filter(|&x| g.degree(x) == 0).all(|x| {
                let rest = oriented_chromatic_poly(&g.remove_vertex(x).unwrap()).unwrap();
                p == rest.shift_up(1)
            });
            !(shape && c1 && isolated)
        })
        .map(|e| e.index)
        .collect();
    outcome(
        bad.is_empty(),
        format!("{} graphs monic of degree n, no constant term, c1 = -(|A|+|E|+|D|), isolated vertices factor", ratio(corpus.len() - bad.len(), corpus.len())),
    )
}

fn criterion_4() -> Outcome {
    let corpus = main_corpus(SEED);
    let rows: Vec<(bool, bool, bool)> = corpus
        .par_iter()
        .map(|e| {
            let g = &e.graph;
            let c = Counts::of(g);
            let c2 = oriented_chromatic_poly(g)
                .unwrap()
                .coeff(g.n().saturating_sub(2));
            let c2 = if g.n() < 2 { BigInt::zero() } else { c2 };
            let base = choose2(c.m()) - c.obstructing as i64;
            let literal = base - c.triangles as i64 - c.dipaths.len() as i64;
            let closed = base - c.closure_triangles as i64;
            (c2 == int(literal), c2 == int(closed), c.dipaths.is_empty())
        })
        .collect();
    let literal_ok = rows.iter().filter(|r| r.0).count();
    let closure_ok = rows.iter().filter(|r| r.1).count();
    let misses_without_dipaths = rows.iter().filter(|r| !r.0 && r.2).count();
    let total = rows.len();
    outcome(
        literal_ok == total,
        format!(
            "{} graphs satisfy c2 = C(m,2) - |T| - |D| - |O|; mismatches with no 2-dipath pair: {}; \
             c2 = C(m,2) - |T(U(G*))| - |O| holds on {}",
            ratio(literal_ok, total),
            misses_without_dipaths,
            ratio(closure_ok, total)
        ),
    )
}

fn criterion_5() -> Outcome {
    let free = obstruction_free_sample(SEED, SAMPLE_SIZE);
    let free_ok = free
        .par_iter()
        .filter(|e| {
            let g = &e.graph;
            let star = closure(g);
            let f = oriented_chromatic_poly(g).unwrap();
            g.is_oriented()
                && g.n() <= 7
                && Counts::of(g).obstructing == 0
                && f == oriented_chromatic_poly(&star).unwrap()
                && f == chromatic_poly(&star.underlying()).unwrap()
        })
        .count();
    let constrained = constrained_sample(SEED, SAMPLE_SIZE);
    let constrained_ok = constrained
        .par_iter()
        .filter(|e| {
            let g = &e.graph;
            let c = Counts::of(g);
            g.is_oriented()
                && c.obstructing + c.dipaths.len() > 0
                && oriented_chromatic_poly(g).unwrap() != chromatic_poly(&g.underlying()).unwrap()
        })
        .count();
    outcome(
        free_ok == free.len() && constrained_ok == constrained.len() && free.len() == SAMPLE_SIZE && constrained.len() == SAMPLE_SIZE,
        format!(
            "obstruction-free: {} with f_o(G) = f_o(G*) = f(U(G*)); with D or O: {} with f_o(G) != f(U(G))",
            ratio(free_ok, free.len()),
            ratio(constrained_ok, constrained.len())
        ),
    )
}

fn invariant_orientation_exists(g: &MixedGraph) -> bool {
    let f = chromatic_poly(g).unwrap();
    let edges = g.edges();
    (0u32..1 << edges.len()).any(|mask| {
        let arcs: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
            .collect();
        oriented_chromatic_poly(&MixedGraph::oriented(g.n(), &arcs).unwrap()).unwrap() == f
    })
}

fn criterion_6() -> Outcome {
    let oriented = small_oriented(5);
    let simple = small_simple(5);
    // oriented graphs on 1..=5 vertices: 1 + 2 + 7 + 42 + 582; simple: 1 + 2 + 4 + 11 + 34
    let sizes = oriented.len() == 634 && simple.len() == 52;
    let oriented_ok = oriented
        .par_iter()
        .filter(|g| {
            let v = ochrom_invar(g).unwrap();
            let equal =
                oriented_chromatic_poly(g).unwrap() == chromatic_poly(&g.underlying()).unwrap();
            v.verdict != Answer::Unknown && v.is_yes() == equal
        })
        .count();
    let simple_ok = simple
        .par_iter()
        .filter(|g| {
            let v = chrom_invar(g).unwrap();
            let certified = match &v.certificate {
                Some(Certificate::Orientation { graph }) => {
                    graph.is_oriented()
                        && graph.underlying() == **g
                        && oriented_chromatic_poly(graph).unwrap() == chromatic_poly(g).unwrap()
                }
                _ => !v.is_yes(),
            };
            v.verdict != Answer::Unknown
                && v.is_yes() == invariant_orientation_exists(g)
                && certified
        })
        .count();
    // the library's own orientation enumerator covers the same space
    let enumerated = simple
        .iter()
        .all(|g| orientations(g).count() == 1 << g.edges().len());
    outcome(
        sizes && enumerated && oriented_ok == oriented.len() && simple_ok == simple.len(),
        format!(
            "oriented: {} verdicts match f_o(G) = f(U(G)); simple: {} verdicts match orientation search",
            ratio(oriented_ok, oriented.len()),
            ratio(simple_ok, simple.len())
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut ok = 0;
    for i in 1..=4 {
        for o in 1..=4 {
            let star = oriented_chromatic_poly(&gen_star(i, o).unwrap()).unwrap();
            let k = chromatic_poly(&gen_complete_bipartite(i, o)).unwrap();
            let expected = k.shift(&int(-1)).shift_up(1);
            let n = i + o + 1;
            let by_count =
                (0..=n as i64 + 1).all(|x| eval(&star, &int(x)) == int(x) * eval(&k, &int(x - 1)));
            let counted = n > 6 || oracle_poly(&gen_star(i, o).unwrap()) == star.coeffs();
            if star == expected && by_count && counted {
                ok += 1;
            }
        }
    }
    outcome(
        ok == 16,
        format!(
            "{} pairs 1 <= i, o <= 4 with f_o(S) = λ·f(K, λ-1)",
            ratio(ok, 16)
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut notes = Vec::new();
    let forms_ok = (4..=9).all(|n| {
        let closed = dn_closed_form(n).unwrap();
        let reduced = oriented_chromatic_poly(&gen_dn(n).unwrap()).unwrap();
        let direct = (0..=n as i64 + 1)
            .all(|x| Rational::from(eval(&closed, &int(x))) == dn_value(n, &rat(x, 1)));
        closed == reduced && direct
    });
    notes.push(format!(
        "closed form matches reduction for n = 4..9: {forms_ok}"
    ));
    let f5 = dn_closed_form(5).unwrap();
    // long division by λ² - 3λ + 1, low degree first
    let mut rem: Vec<BigInt> = f5.coeffs().to_vec();
    let divisor = [int(1), int(-3)];
    for top in (2..rem.len()).rev() {
        let q = rem[top].clone();
        rem[top] = BigInt::zero();
        rem[top - 1] -= &q * &divisor[1];
        rem[top - 2] -= &q * &divisor[0];
    }
    let divides = rem.iter().all(Zero::is_zero);
    notes.push(format!("λ²-3λ+1 divides f_o(D_5): {divides}"));
    let (lo, hi) = (rat(3819, 10000), rat(3820, 10000));
    let hit = isolate_real_roots(&f5, 30)
        .into_iter()
        .find(|iv| iv.lo > lo && iv.hi < hi && dn_sign_change(5, &iv.lo, &iv.hi));
    notes.push(match &hit {
        Some(iv) => format!(
            "root in [{:.10}, {:.10}]",
            rational_f64(&iv.lo),
            rational_f64(&iv.hi)
        ),
        None => "no root interval inside (0.3819, 0.3820)".into(),
    });
    outcome(forms_ok && divides && hit.is_some(), notes.join("; "))
}

fn criterion_9() -> Outcome {
    let mut failures = Vec::new();
    let mut checks = 0;
    let mut targets = Vec::new();
    for n in [10usize, 20, 50] {
        let scaled = (n as f64).ln() * 1000.0;
        assert!(
            (scaled - scaled.round()).abs() > 1e-6,
            "ln {n} too close to a grid point for the f64 check"
        );
        let r = rat(scaled.floor() as i64, 1000);
        checks += 1;
        if ln_floor_milli(n as u64) != r {
            failures.push(format!(
                "ln bound for {n} is {}, expected {}",
                ln_floor_milli(n as u64),
                r
            ));
        }
        targets.push((n, -r));
    }
    targets.push((10, rat(-2, 1)));
    targets.push((50, rat(-3, 1)));
    for (n, t) in targets {
        checks += 1;
        let minus_n = rat(-(n as i64), 1);
        let report = verify_negative_root(n, &t).unwrap();
        let certified = report
            .witness
            .as_ref()
            .is_some_and(|w| w.lo > minus_n && w.hi < t && dn_sign_change(n, &w.lo, &w.hi));
        if !(certified && report.positive_at_minus_n) {
            let negatives: Vec<String> = isolate_real_roots(&dn_closed_form(n).unwrap(), 20)
                .into_iter()
                .filter(|iv| iv.hi < Rational::zero())
                .map(|iv| format!("{:.5}", iv.approx()))
                .collect();
            failures.push(format!(
                "D_{n}: no root in (-{n}, {}); negative roots {}",
                format_rational(&t),
                negatives.join(", ")
            ));
        }
    }
    for n in (4..=50).step_by(2) {
        checks += 1;
        let at = rat(-(n as i64), 1);
        let positive = dn_value(n, &at).is_positive();
        let library = n < 6
            || verify_negative_root(n, &rat(0, 1))
                .unwrap()
                .positive_at_minus_n;
        if !(positive && library && dn_closed_form(n).unwrap().sign_at(&at) > 0) {
            failures.push(format!("f_o(D_{n}, -{n}) is not positive"));
        }
    }
    let detail = if failures.is_empty() {
        format!("{checks}/{checks} checks")
    } else {
        format!(
            "{}/{checks} checks; {}",
            checks - failures.len(),
            failures.join("; ")
        )
    };
    outcome(failures.is_empty(), detail)
}

fn criterion_10() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for t in [2usize, 3] {
        let n = 2 * t;
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let target = choose2(t as i64) as usize;
        let mut graphs = 0;
        let mut matching = 0;
        for mask in 0u32..1 << pairs.len() {
            if mask.count_ones() as usize != t {
                continue;
            }
            graphs += 1;
            let edges: Vec<(usize, usize)> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            if Counts::of(&MixedGraph::simple(n, &edges).unwrap()).triangles == target {
                matching += 1;
            }
        }
        let out = Command::new(env!("CARGO_BIN_EXE_ochrom"))
            .args(["equiv", "--family", &format!("tk2:{t}"), "--out", "json"])
            .output()
            .unwrap();
        let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let none = out.status.code() == Some(0) && v["verdict"] == "no";
        // the smaller shape check the counting argument relies on
        let c = Counts::of(&gen_tk2(t).unwrap());
        let shape = c.triangles == 0 && c.dipaths.is_empty() && c.obstructing == target;
        pass &= matching == 0 && none && shape;
        notes.push(format!("t={t}: graphs with {t} edges and {target} triangles: {matching} of {graphs}, equiv says {}", v["verdict"]));
    }
    outcome(pass, notes.join("; "))
}

fn criterion_11() -> Outcome {
    let graphs = connected_simple_corpus(SEED);
    let zero = Rational::zero();
    let one = Rational::one();
    let far = rat(-1_000_000, 1);
    let connected = |g: &MixedGraph| {
        let mut seen = vec![false; g.n()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for w in g.neighbours(v) {
                if !std::mem::replace(&mut seen[w], true) {
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    };
    let ok = graphs
        .par_iter()
        .filter(|g| {
            let s = SturmCounter::new(&chromatic_poly(g).unwrap());
            g.is_simple()
                && connected(g)
                && s.count_open(&far, &zero) == 0
                && s.count_open(&zero, &one) == 0
        })
        .count();
    let d5 = SturmCounter::new(&dn_closed_form(5).unwrap()).count_open(&zero, &one);
    // (3 - √5)/2 lies between 0.38 and 0.39
    let d5_sign = dn_sign_change(5, &rat(38, 100), &rat(39, 100));
    outcome(
        ok == graphs.len() && !graphs.is_empty() && d5 == 1 && d5_sign,
        format!(
            "{} connected simple graphs root-free on (-10^6, 0) and (0, 1); f_o(D_5) has {d5} root in (0, 1)",
            ratio(ok, graphs.len())
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("oracle equivalence", criterion_1),
        ("mixed example H", criterion_2),
        ("leading coefficients", criterion_3),
        ("second coefficient formula", criterion_4),
        ("closure and obstruction-free equivalence", criterion_5),
        ("invariance classification", criterion_6),
        ("star graphs", criterion_7),
        ("D_n family", criterion_8),
        ("negative roots", criterion_9),
        ("tK2 non-equivalence", criterion_10),
        ("chromatic root contrast", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = check();
        let status = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {}: {name}: {} [{:.1}s]",
            i + 1,
            o.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!o.pass);
    }
    println!(
        "acceptance: {}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
