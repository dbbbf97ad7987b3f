//! Dense univariate polynomials over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{parse_err, Error, Result};

pub type Rational = BigRational;

/// Coefficient `i` multiplies `λ^i`. The zero polynomial has no
/// coefficients; otherwise the last coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `λ`
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `λ - a`
    pub fn linear(a: impl Into<BigInt>) -> Self {
        Self::new(vec![-a.into(), BigInt::one()])
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Coefficients listed constant term first.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `λ^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval_int(&self, k: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * k + c)
    }

    pub fn eval_rat(&self, x: &Rational) -> Rational {
        // Horner over a common denominator: sum c_i p^i q^(d-i), then / q^d.
        let Some(d) = self.degree() else {
            return Rational::zero();
        };
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        Rational::new(acc, q.pow(d as u32))
    }

    /// Sign of `p(x)` without building the reduced rational.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let Some(_) = self.degree() else { return 0 };
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * p + c * &qpow;
            qpow *= q;
        }
        // q > 0, so the denominator never flips the sign
        sign(&acc)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `p(λ + c)`
    pub fn shift(&self, c: &BigInt) -> Self {
        let step = Self::new(vec![c.clone(), BigInt::one()]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, a| {
            &(&acc * &step) + &Self::constant(a.clone())
        })
    }

    /// `λ^k · p`
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact quotient when `self = d · q` with integer `q`.
    pub fn divides_by(&self, d: &IntPolynomial) -> Option<IntPolynomial> {
        let dd = d.degree().expect("divisor must be nonzero");
        let lead = d.leading().expect("nonzero");
        let Some(pd) = self.degree() else {
            return Some(Self::zero());
        };
        if pd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); pd - dd + 1];
        for i in (0..=pd - dd).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (quot, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &quot * c;
            }
            q[i] = quot;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// gcd of the coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divides out the content and makes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return Self::zero();
        }
        let c = if self.leading().is_some_and(|l| l.is_negative()) {
            -c
        } else {
            c
        };
        Self::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Remainder of `|lc(d)|^(deg p - deg d + 1) · p` by `d`. The positive
    /// multiplier keeps the remainder's sign pattern usable for Sturm chains.
    pub fn pseudo_rem(&self, d: &IntPolynomial) -> IntPolynomial {
        let dd = d.degree().expect("divisor must be nonzero");
        let Some(pd) = self.degree() else {
            return Self::zero();
        };
        if pd < dd {
            return self.clone();
        }
        let lead = d.leading().expect("nonzero").clone();
        let abs_lead = lead.abs();
        let lead_sign = if lead.is_negative() {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        let mut rem = self.coeffs.clone();
        for top in (dd..=pd).rev() {
            let t = rem[top].clone();
            for c in rem.iter_mut() {
                *c *= &abs_lead;
            }
            if t.is_zero() {
                continue;
            }
            // subtract (t · sign(lead)) λ^(top-dd) · d, which zeroes rem[top]
            let f = &t * &lead_sign;
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[top - dd + j] -= &f * c;
            }
            debug_assert!(rem[top].is_zero());
        }
        rem.truncate(dd);
        Self::new(rem)
    }

    /// Primitive gcd with positive leading coefficient.
    pub fn gcd(&self, other: &IntPolynomial) -> IntPolynomial {
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// `p / gcd(p, p')`, primitive: the same distinct roots, all simple.
    pub fn squarefree_part(&self) -> IntPolynomial {
        if self.degree().unwrap_or(0) == 0 {
            return self.primitive_part();
        }
        let g = self.gcd(&self.derivative());
        self.primitive_part()
            .divides_by(&g)
            .expect("gcd divides its argument")
            .primitive_part()
    }

    /// Human-readable form in descending powers of `var`.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }

    /// Decimal coefficient strings, constant term first.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(ToString::to_string).collect()
    }

    pub fn from_decimal_strings<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        items
            .iter()
            .map(|s| {
                s.as_ref().parse::<BigInt>().map_err(|_| {
                    parse_err("polynomial", format!("bad coefficient {:?}", s.as_ref()))
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

pub(crate) fn sign(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_negative() {
        -1
    } else {
        1
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses the text form written by [`IntPolynomial::to_text`] with any
    /// single-letter variable, e.g. `x^4 - 4x^3 + 5x^2 - 2x`.
    fn from_str(s: &str) -> Result<Self> {
        let err = |m: String| parse_err("polynomial", m);
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !compact[..i].ends_with('^') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut coeffs: Vec<BigInt> = Vec::new();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let split = body.find(|c: char| c.is_ascii_alphabetic() || c == 'λ');
            let (mag, power) = match split {
                None => (body, 0usize),
                Some(pos) => {
                    let var_len = body[pos..].chars().next().map_or(1, char::len_utf8);
                    let rest = &body[pos + var_len..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|e| e.parse().ok())
                            .ok_or_else(|| err(format!("bad exponent in {term:?}")))?
                    };
                    (&body[..pos], power)
                }
            };
            let mag = if mag.is_empty() {
                if split.is_none() {
                    return Err(err(format!("empty term in {s:?}")));
                }
                BigInt::one()
            } else {
                mag.parse::<BigInt>()
                    .map_err(|_| err(format!("bad coefficient in {term:?}")))?
            };
            if coeffs.len() <= power {
                coeffs.resize(power + 1, BigInt::zero());
            }
            coeffs[power] += if neg { -mag } else { mag };
        }
        Ok(Self::new(coeffs))
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let items = Vec::<String>::deserialize(d)?;
        Self::from_decimal_strings(&items).map_err(serde::de::Error::custom)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

/// Writes an integer as a decimal string, keeping JSON exact for any size.
pub fn serialize_decimal<S: serde::Serializer>(
    x: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// `λ(λ-1)…(λ-n+1)`; the empty product 1 for `n = 0`.
pub fn falling_factorial(n: usize) -> IntPolynomial {
    (0..n).fold(IntPolynomial::one(), |acc, i| {
        &acc * &IntPolynomial::linear(i as i64)
    })
}

/// The unique polynomial of degree below `points.len()` through the given
/// integer points, computed by Newton divided differences over the
/// rationals. Fails when an abscissa repeats or a coefficient is not an
/// integer.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> Result<IntPolynomial> {
    for (i, (a, _)) in points.iter().enumerate() {
        if points[..i].iter().any(|(b, _)| a == b) {
            return Err(Error::DuplicateAbscissa(a.to_string()));
        }
    }
    let xs: Vec<Rational> = points
        .iter()
        .map(|(x, _)| Rational::from(x.clone()))
        .collect();
    let mut dd: Vec<Rational> = points
        .iter()
        .map(|(_, y)| Rational::from(y.clone()))
        .collect();
    let m = dd.len();
    for level in 1..m {
        for i in (level..m).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Expand sum dd[i] * prod_{j<i} (λ - x_j) via Horner from the top.
    let mut acc: Vec<Rational> = Vec::new();
    for i in (0..m).rev() {
        // acc = acc * (λ - x_i) + dd[i]
        let mut next = vec![Rational::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NonIntegral(c.to_string()))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IntPolynomial::new(coeffs))
}

/// Binomial coefficient `C(n, 2)` as a big integer.
pub fn choose2(n: usize) -> BigInt {
    BigInt::from(n) * BigInt::from(n.saturating_sub(1)) / 2
}
