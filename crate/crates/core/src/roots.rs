//! Exact real-root isolation with Sturm chains.
//!
//! All counting runs on the squarefree part `p / gcd(p, p')`, whose Sturm
//! chain counts distinct real roots: with `V(x)` the number of sign changes
//! along the chain at `x` (zeros skipped), `V(a) - V(b)` is the number of
//! roots in the half-open interval `(a, b]`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::poly::{falling_factorial, IntPolynomial, Rational};

/// Default isolation precision in bits.
pub const DEFAULT_PRECISION: u32 = 30;

/// `p, p', -rem(p, p'), ...` with each remainder divided by its (positive)
/// content. Stops at the last nonzero term.
pub fn sturm_sequence(p: &IntPolynomial) -> Vec<IntPolynomial> {
    assert!(!p.is_zero(), "Sturm chain of the zero polynomial");
    let mut chain = vec![p.clone()];
    let d = p.derivative();
    if d.is_zero() {
        return chain;
    }
    chain.push(d);
    loop {
        let k = chain.len();
        let r = chain[k - 2].pseudo_rem(&chain[k - 1]);
        if r.is_zero() {
            return chain;
        }
        let c = r.content();
        let r = IntPolynomial::new((-&r).coeffs().iter().map(|a| a / &c).collect());
        chain.push(r);
    }
}

fn variations(chain: &[IntPolynomial], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for q in chain {
        let s = q.sign_at(x);
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Squarefree part and its Sturm chain, reused across queries.
pub struct SturmCounter {
    squarefree: IntPolynomial,
    chain: Vec<IntPolynomial>,
}

impl SturmCounter {
    pub fn new(p: &IntPolynomial) -> Self {
        let squarefree = p.squarefree_part();
        let chain = sturm_sequence(&squarefree);
        SturmCounter { squarefree, chain }
    }

    pub fn squarefree(&self) -> &IntPolynomial {
        &self.squarefree
    }

    /// Distinct roots in `(a, b]`.
    pub fn count(&self, a: &Rational, b: &Rational) -> usize {
        assert!(a <= b, "empty interval");
        variations(&self.chain, a) - variations(&self.chain, b)
    }

    /// Distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &Rational, b: &Rational) -> usize {
        let c = self.count(a, b);
        if self.is_root(b) {
            c - 1
        } else {
            c
        }
    }

    pub fn is_root(&self, x: &Rational) -> bool {
        self.squarefree.sign_at(x) == 0
    }
}

/// Distinct real roots of `p` in `(a, b]`.
pub fn count_real_roots(p: &IntPolynomial, a: &Rational, b: &Rational) -> usize {
    SturmCounter::new(p).count(a, b)
}

/// Distinct real roots of `p` in `(a, b)`.
pub fn count_real_roots_open(p: &IntPolynomial, a: &Rational, b: &Rational) -> usize {
    SturmCounter::new(p).count_open(a, b)
}

/// An interval holding exactly one real root; `lo == hi` marks a root hit
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn exact(x: Rational) -> Self {
        RootInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / Rational::from(BigInt::from(2))
    }

    /// Display value only.
    pub fn approx(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

pub fn rational_to_f64(x: &Rational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Exact rendering: a terminating decimal when the denominator has no prime
/// factor besides 2 and 5, else `p/q`.
pub fn format_rational(x: &Rational) -> String {
    if x.is_integer() {
        return x.numer().to_string();
    }
    let mut d = x.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let (mut twos, mut fives) = (0usize, 0usize);
    while (&d % &two).is_zero() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", x.numer(), x.denom());
    }
    let digits = twos.max(fives);
    let scaled = x.numer().abs() * num_traits::pow(BigInt::from(10), digits) / x.denom();
    let s = format!("{:0>width$}", scaled.to_string(), width = digits + 1);
    let (int, frac) = s.split_at(s.len() - digits);
    let sign = if x.is_negative() { "-" } else { "" };
    format!("{sign}{int}.{frac}")
}

impl Serialize for RootInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RootInterval", 4)?;
        st.serialize_field("lo", &format_rational(&self.lo))?;
        st.serialize_field("hi", &format_rational(&self.hi))?;
        st.serialize_field("exact", &self.is_exact())?;
        st.serialize_field("approx", &self.approx())?;
        st.end()
    }
}

fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

fn pow2(bits: u32) -> Rational {
    Rational::from(BigInt::one() << bits as usize)
}

/// Smallest power of two strictly above `1 + max|c_i| / |lead|`; every real
/// root lies strictly inside `(-B, B)`.
pub fn root_bound(p: &IntPolynomial) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    let bound = Rational::one() + Rational::new(max, lead);
    let mut b = Rational::one();
    while b <= bound {
        b *= Rational::from(BigInt::from(2));
    }
    b
}

struct Isolator<'a> {
    counter: &'a SturmCounter,
    eps: Rational,
    nudge: Rational,
    out: Vec<RootInterval>,
}

impl Isolator<'_> {
    /// Moves `x` off a root by `±δ`, shrinking `δ` until the root is the
    /// only one in `[x-δ, x+δ]` and both ends are non-roots.
    fn gap(&self, x: &Rational) -> Rational {
        let mut delta = self.nudge.clone();
        loop {
            let lo = x - &delta;
            let hi = x + &delta;
            if !self.counter.is_root(&lo)
                && !self.counter.is_root(&hi)
                && self.counter.count(&lo, &hi) == 1
            {
                return delta;
            }
            delta *= half();
        }
    }

    // Endpoints are never roots here.
    fn run(&mut self, a: Rational, b: Rational) {
        let c = self.counter.count(&a, &b);
        if c == 0 {
            return;
        }
        if c == 1 && &b - &a <= self.eps {
            self.out.push(RootInterval { lo: a, hi: b });
            return;
        }
        let m = (&a + &b) * half();
        if self.counter.is_root(&m) {
            let delta = self.gap(&m);
            let (left, right) = (&m - &delta, &m + &delta);
            self.out.push(RootInterval::exact(m));
            self.run(a, left);
            self.run(right, b);
        } else {
            self.run(a, m.clone());
            self.run(m, b);
        }
    }
}

/// Disjoint intervals of width at most `2^-precision`, one per distinct
/// real root in `(a, b)`, ordered by lower end.
pub fn isolate_in(
    p: &IntPolynomial,
    a: &Rational,
    b: &Rational,
    precision: u32,
) -> Vec<RootInterval> {
    assert!(a < b, "empty interval");
    let counter = SturmCounter::new(p);
    isolate_with(&counter, a, b, precision)
}

fn isolate_with(
    counter: &SturmCounter,
    a: &Rational,
    b: &Rational,
    precision: u32,
) -> Vec<RootInterval> {
    let mut iso = Isolator {
        counter,
        eps: Rational::one() / pow2(precision),
        nudge: Rational::one() / pow2(precision + 2),
        out: Vec::new(),
    };
    // Open interval: step endpoints that are roots inward past them.
    let mut lo = a.clone();
    let mut hi = b.clone();
    if counter.is_root(&lo) {
        lo = &lo + iso.gap(&lo);
    }
    if counter.is_root(&hi) {
        hi = &hi - iso.gap(&hi);
    }
    if lo < hi {
        iso.run(lo, hi);
    }
    let mut out: Vec<RootInterval> = iso
        .out
        .into_iter()
        .map(|iv| snap_integer(counter, iv))
        .collect();
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Collapses an interval onto the integer root it contains, if any.
fn snap_integer(counter: &SturmCounter, iv: RootInterval) -> RootInterval {
    if iv.is_exact() {
        return iv;
    }
    let k = Rational::from(iv.lo.ceil());
    if k <= iv.hi && counter.is_root(&k) {
        RootInterval::exact(k)
    } else {
        iv
    }
}

/// Every distinct real root of `p`.
pub fn isolate_real_roots(p: &IntPolynomial, precision: u32) -> Vec<RootInterval> {
    assert!(precision >= 1, "precision must be positive");
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let b = root_bound(p);
    isolate_in(p, &-&b, &b, precision)
}

/// Halves the interval around its root until its width is at most `width`.
pub fn refine(p: &IntPolynomial, iv: &RootInterval, width: &Rational) -> RootInterval {
    if iv.is_exact() {
        return iv.clone();
    }
    let sf = p.squarefree_part();
    let (mut lo, mut hi) = (iv.lo.clone(), iv.hi.clone());
    let s_lo = sf.sign_at(&lo);
    while &(&hi - &lo) > width {
        let m = (&lo + &hi) * half();
        match sf.sign_at(&m) {
            0 => return RootInterval::exact(m),
            s if s == s_lo => lo = m,
            _ => hi = m,
        }
    }
    RootInterval { lo, hi }
}

/// `λ(λ-1)(λ-2)((λ-2)^(n-4) + (λ-3)(λ-1)^(n-4))`, expanded.
pub fn dn_closed_form(n: usize) -> Result<IntPolynomial> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "D_n needs n >= 4, got {n}"
        )));
    }
    let e = (n - 4) as u32;
    let l = IntPolynomial::linear;
    let inner = &l(2).pow(e) + &(&l(3) * &l(1).pow(e));
    Ok(&falling_factorial(3) * &inner)
}

/// Lower and upper rational bounds on `ln x` for rational `x >= 1`, with
/// `terms` terms of each `atanh` series.
///
/// `x = 2^m · y` with `y` in `[1, 2)`, `ln x = 2m·atanh(1/3) + 2·atanh(z)`,
/// `z = (y-1)/(y+1) < 1/3`. The tail of `atanh(z)` after `K` terms is below
/// `z^(2K+1) / ((2K+1)(1 - z²))`.
pub fn ln_bounds(x: &Rational, terms: usize) -> (Rational, Rational) {
    assert!(*x >= Rational::one(), "ln bounds need x >= 1");
    let two = Rational::from(BigInt::from(2));
    let mut y = x.clone();
    let mut m = 0u64;
    while y >= two {
        y /= &two;
        m += 1;
    }
    let atanh = |z: &Rational| -> (Rational, Rational) {
        let z2 = z * z;
        let mut sum = Rational::zero();
        let mut power = z.clone();
        for k in 0..terms {
            sum += &power / Rational::from(BigInt::from(2 * k + 1));
            power *= &z2;
        }
        let tail = &power / (Rational::from(BigInt::from(2 * terms + 1)) * (Rational::one() - &z2));
        (sum.clone(), sum + tail)
    };
    let (l2_lo, l2_hi) = atanh(&Rational::new(BigInt::one(), BigInt::from(3)));
    let z = (&y - Rational::one()) / (&y + Rational::one());
    let (ly_lo, ly_hi) = atanh(&z);
    let mm = Rational::from(BigInt::from(m));
    let lo = &two * (&mm * &l2_lo + ly_lo);
    let hi = &two * (&mm * &l2_hi + ly_hi);
    (lo, hi)
}

/// `floor(1000 · ln n) / 1000`, certified by [`ln_bounds`].
pub fn ln_floor_milli(n: u64) -> Rational {
    assert!(n >= 1);
    if n == 1 {
        return Rational::zero();
    }
    let x = Rational::from(BigInt::from(n));
    let thousand = Rational::from(BigInt::from(1000));
    let mut terms = 8;
    loop {
        let (lo, hi) = ln_bounds(&x, terms);
        let a = (&lo * &thousand).floor();
        let b = (&hi * &thousand).floor();
        if a == b {
            return a / thousand;
        }
        terms *= 2;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeRootReport {
    pub n: usize,
    #[serde(serialize_with = "ser_rational")]
    pub threshold: Rational,
    /// `f_o(D_n, -n) > 0`
    pub positive_at_minus_n: bool,
    /// A certified root below the threshold, searched first in
    /// `(-n, threshold)` and then over the rest of the negative axis.
    pub witness: Option<RootInterval>,
}

impl NegativeRootReport {
    pub fn found(&self) -> bool {
        self.witness.is_some()
    }
}

fn ser_rational<S: Serializer>(x: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(x))
}

/// Looks for a root of `f_o(D_n)` below `threshold` and certifies it with an
/// interval whose ends have opposite signs and whose upper end is below the
/// threshold.
pub fn verify_negative_root(n: usize, threshold: &Rational) -> Result<NegativeRootReport> {
    if n < 6 || n % 2 == 1 {
        return Err(Error::InvalidParameter(format!(
            "need an even n >= 6, got {n}"
        )));
    }
    verify_root_below(n, threshold, DEFAULT_PRECISION)
}

fn verify_root_below(n: usize, threshold: &Rational, precision: u32) -> Result<NegativeRootReport> {
    let p = dn_closed_form(n)?;
    let counter = SturmCounter::new(&p);
    let minus_n = Rational::from(-BigInt::from(n));
    let positive_at_minus_n = p.sign_at(&minus_n) > 0;
    let bound = -root_bound(&p);
    let ranges = [
        (minus_n.clone(), threshold.clone()),
        (bound, minus_n.clone().min(threshold.clone())),
    ];
    let mut witness = None;
    for (a, b) in ranges {
        if a >= b {
            continue;
        }
        if counter.count_open(&a, &b) == 0 {
            continue;
        }
        let found = isolate_with(&counter, &a, &b, precision);
        if let Some(iv) = found.into_iter().next_back() {
            // Shrink until strictly below the threshold.
            let mut iv = iv;
            while !iv.is_exact() && iv.hi >= *threshold {
                iv = refine(&p, &iv, &(iv.width() * half()));
            }
            witness = Some(iv);
            break;
        }
    }
    Ok(NegativeRootReport {
        n,
        threshold: threshold.clone(),
        positive_at_minus_n,
        witness,
    })
}

/// Parses `p/q`, an integer, or a decimal like `-2.5`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || crate::error::parse_err("rational", format!("bad rational {s:?}"));
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num.trim().parse().map_err(|_| err())?;
        let den: BigInt = den.trim().parse().map_err(|_| err())?;
        if den.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(num, den));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches(['-', '+']), frac);
        let num: BigInt = digits.parse().map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let r = Rational::new(num, den);
        return Ok(if neg { -r } else { r });
    }
    s.parse::<BigInt>().map(Rational::from).map_err(|_| err())
}
