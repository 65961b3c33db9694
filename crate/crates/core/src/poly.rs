//! Dense univariate polynomials over arbitrary-precision rationals.
//!
//! Coefficients are stored in ascending order of degree and the
//! representation is canonical: no trailing zero coefficients are kept, so
//! structural equality coincides with mathematical equality and the zero
//! polynomial is the empty coefficient vector. The degree of the zero
//! polynomial is `None` (a stand-in for −∞), never an integer.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The rational `n/d` (normalized; `d` must be nonzero).
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Sign of an exact quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rat) -> Sign {
        Sign::of_int(r.numer())
    }

    pub(crate) fn of_int(n: &BigInt) -> Sign {
        match n.sign() {
            num_bigint::Sign::Minus => Sign::Negative,
            num_bigint::Sign::NoSign => Sign::Zero,
            num_bigint::Sign::Plus => Sign::Positive,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn product(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (a, b) if a == b => Sign::Positive,
            _ => Sign::Negative,
        }
    }

    pub fn is_zero(self) -> bool {
        self == Sign::Zero
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }
}

/// A polynomial with exact rational coefficients, stored low degree first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients, stripping trailing
    /// zeros so the representation is canonical.
    pub fn new(mut coeffs: Vec<Rat>) -> Poly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    /// The monomial `x`.
    pub fn x() -> Poly {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Poly {
        Poly::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: Rat, k: usize) -> Poly {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// Integer coefficients, ascending: `from_ints(&[-1, 0, 1])` is `x² − 1`.
    pub fn from_ints(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| rat(c)).collect())
    }

    /// Ascending coefficient slice (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (read it as −∞).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// True when the polynomial is zero or has positive leading coefficient.
    pub fn is_standard(&self) -> bool {
        self.leading_coeff().is_none_or(|c| c.is_positive())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * rat(i as i64 + 1))
                .collect(),
        )
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * at + c;
        }
        acc
    }

    pub fn sign_at(&self, at: &Rat) -> Sign {
        Sign::of(&self.eval(at))
    }

    /// Sign of `p(x)` for all sufficiently large `x`.
    pub fn sign_at_pos_infinity(&self) -> Sign {
        self.leading_coeff().map_or(Sign::Zero, Sign::of)
    }

    /// Sign of `p(x)` for all sufficiently negative `x`.
    pub fn sign_at_neg_infinity(&self) -> Sign {
        match self.degree() {
            None => Sign::Zero,
            Some(d) => {
                let lead = Sign::of(self.leading_coeff().unwrap());
                if d % 2 == 0 {
                    lead
                } else {
                    lead.flip()
                }
            }
        }
    }

    /// `p(−x)`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
                .collect(),
        )
    }

    /// `(−1)^{deg p} · p(−x)`: reverses the root signs while preserving the
    /// leading coefficient. Undefined for the zero polynomial.
    pub fn reflect_standardize(&self) -> Result<Poly> {
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        let r = self.reflect();
        Ok(if deg % 2 == 0 { r } else { -&r })
    }

    /// `c · p`.
    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `p(c·x)`.
    pub fn scale_variable(&self, c: &Rat) -> Poly {
        let mut pow = Rat::one();
        Poly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let out = a * &pow;
                    pow = &pow * c;
                    out
                })
                .collect(),
        )
    }

    /// `x^k · p`.
    pub fn mul_x_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn pow(&self, mut e: usize) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Number of leading zero coefficients, i.e. the multiplicity of the
    /// root 0 (zero polynomial: 0 by convention).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Drops the factor `x^valuation`, returning `(valuation, p / x^v)`.
    pub fn trim_valuation(&self) -> (usize, Poly) {
        let v = self.valuation();
        (
            v,
            Poly::new(self.coeffs[v.min(self.coeffs.len())..].to_vec()),
        )
    }

    /// Quotient and remainder of division by `d` (`d` nonzero).
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead = d.leading_coeff().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Poly::zero(), self.clone()));
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![Rat::zero(); qlen];
        for i in (0..qlen).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &c;
                rem[i + j] = &rem[i + j] - t;
            }
            quot[i] = c;
        }
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn exact_div(&self, d: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.div_rem(d)?;
        Ok(if r.is_zero() { Some(q) } else { None })
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    ///
    /// Computed as a primitive pseudo-remainder sequence over the integers,
    /// which sidesteps the per-operation normalization cost of rational
    /// coefficients; the final monic rescaling restores the canonical value.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut u = int_primitive_parts(a).1;
        let mut v = int_primitive_parts(b).1;
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let (mut r, _) = int_pseudo_rem(&u, &v);
            let c = int_content(&r);
            if !c.is_zero() {
                for x in r.iter_mut() {
                    *x /= &c;
                }
            }
            u = v;
            v = r;
        }
        match u.last() {
            None => Poly::zero(),
            Some(lead) => Poly::new(
                u.iter()
                    .map(|c| Rat::new(c.clone(), lead.clone()))
                    .collect::<Vec<_>>(),
            ),
        }
    }

    /// Renders with the given variable name; the output re-parses exactly.
    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let unit = mag.is_one();
            if k == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !unit {
                    out.push_str(&format!("{mag}*"));
                }
                out.push_str(var);
                if k > 1 {
                    out.push_str(&format!("^{k}"));
                }
            }
        }
        out
    }

    /// Parses the textual form: a sum of terms `c`, `c*x`, `c*x^k` (also the
    /// tolerant variants `x`, `x^k`, `cx^k`), coefficients integer or `p/q`,
    /// whitespace ignored. `q` is accepted as an alias for `x`.
    pub fn parse(text: &str) -> std::result::Result<Poly, ParseError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ParseError::new(text, "empty input"));
        }
        let mut coeffs: Vec<Rat> = Vec::new();
        let mut term = String::new();
        let mut terms: Vec<String> = Vec::new();
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 {
                terms.push(std::mem::take(&mut term));
            }
            term.push(ch);
        }
        terms.push(term);
        for t in &terms {
            let (sign, body) = match t.strip_prefix('-') {
                Some(rest) => (-1, rest),
                None => (1, t.strip_prefix('+').unwrap_or(t)),
            };
            if body.is_empty() {
                return Err(ParseError::new(text, "dangling sign"));
            }
            let (coeff_text, k) = match body.find(['x', 'q']) {
                None => (body, 0usize),
                Some(pos) => {
                    let (c, rest) = body.split_at(pos);
                    let rest = &rest[1..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        let e = rest
                            .strip_prefix('^')
                            .ok_or_else(|| ParseError::new(text, "expected '^' after variable"))?;
                        e.parse::<usize>()
                            .map_err(|_| ParseError::new(text, "bad exponent"))?
                    };
                    (c.strip_suffix('*').unwrap_or(c), k)
                }
            };
            let coeff: Rat = if coeff_text.is_empty() {
                if k == 0 {
                    return Err(ParseError::new(text, "empty term"));
                }
                Rat::one()
            } else {
                coeff_text
                    .parse()
                    .map_err(|_| ParseError::new(text, "bad coefficient"))?
            };
            if coeffs.len() < k + 1 {
                coeffs.resize(k + 1, Rat::zero());
            }
            coeffs[k] = &coeffs[k] + coeff * rat(sign);
        }
        Ok(Poly::new(coeffs))
    }
}

// --- integer evaluation kernel (crate-internal) ---------------------------
//
// A rational polynomial factors as `scale · prim` with `scale` a positive
// rational and `prim` an integer polynomial of content 1. Positive rescaling
// preserves every sign, so sign queries, sign-variation counts, and the
// shape of Euclidean remainder sequences can all be computed in plain
// integer arithmetic, avoiding the gcd normalization that rational
// coefficients pay on every single operation.

/// Strips trailing zero coefficients in place.
pub(crate) fn int_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Positive gcd of all coefficients (zero for the zero polynomial).
pub(crate) fn int_content(v: &[BigInt]) -> BigInt {
    use num_integer::Integer;
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// Splits `p` as `scale · prim` with `scale > 0` rational and `prim` an
/// integer polynomial of content 1 whose signs match `p` coefficient-wise.
/// The zero polynomial yields `(1, [])`.
pub(crate) fn int_primitive_parts(p: &Poly) -> (Rat, Vec<BigInt>) {
    use num_integer::Integer;
    if p.is_zero() {
        return (Rat::one(), Vec::new());
    }
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let content = int_content(&ints);
    let prim = ints.iter().map(|c| c / &content).collect();
    (Rat::new(content, lcm), prim)
}

/// Pseudo-remainder: returns `(r, k)` with `r = lc(b)^k · rem(a, b)` as
/// rational polynomials, computed entirely over the integers. Requires
/// `b` nonzero; `deg a < deg b` returns `(a, 0)`.
pub(crate) fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> (Vec<BigInt>, u32) {
    debug_assert!(!b.is_empty());
    let db = b.len() - 1;
    let lcb = &b[db];
    let mut r = a.to_vec();
    let mut k = 0u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for c in r.iter_mut() {
            *c *= lcb;
        }
        let shift = dr - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        debug_assert!(r[dr].is_zero());
        int_trim(&mut r);
        k += 1;
    }
    (r, k)
}

/// Sign of the integer polynomial at the rational point `x`, via the
/// homogenization `sign Σ cᵢ numၱ den^{deg−i}` (no rational arithmetic).
///
/// Points beyond a dyadic Fujiwara root bound (read off bit lengths alone)
/// take the leading term's sign directly, which keeps sign queries cheap on
/// the far-out midpoints produced by bisection from a Cauchy bound.
pub(crate) fn int_sign_at(v: &[BigInt], x: &Rat) -> Sign {
    let Some(top) = v.last() else {
        return Sign::Zero;
    };
    let d = v.len() - 1;
    let num = x.numer();
    let den = x.denom();
    if d > 0 && !num.is_zero() {
        // Fujiwara: |root| ≤ 2·max |cᵢ/c_d|^{1/(d−i)} < 2^e with
        // e = 1 + max ceil((bits cᵢ − bits c_d + 1)/(d−i)), and
        // |x| > 2^(bits num − bits den − 1).
        let top_bits = top.bits() as i64;
        let mut e = 1i64;
        for (i, c) in v[..d].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let delta = c.bits() as i64 - top_bits + 1;
            let gap = (d - i) as i64;
            e = e.max(1 + (delta + gap - 1).div_euclid(gap));
        }
        let xb = num.bits() as i64 - den.bits() as i64 - 1;
        if xb >= e {
            let lead = Sign::of_int(top);
            return if num.is_negative() && d % 2 == 1 {
                lead.flip()
            } else {
                lead
            };
        }
    }
    let mut acc = top.clone();
    let mut dp = BigInt::one();
    for c in v[..d].iter().rev() {
        dp *= den;
        acc = acc * num + c * &dp;
    }
    Sign::of_int(&acc)
}

/// Sign of the integer polynomial as `x → +∞` (its leading sign).
pub(crate) fn int_sign_pos_infinity(v: &[BigInt]) -> Sign {
    v.last().map_or(Sign::Zero, Sign::of_int)
}

/// Sign of the integer polynomial as `x → −∞`.
pub(crate) fn int_sign_neg_infinity(v: &[BigInt]) -> Sign {
    let lead = int_sign_pos_infinity(v);
    if v.len().is_multiple_of(2) {
        lead.flip()
    } else {
        lead
    }
}

/// Error produced when polynomial text cannot be parsed.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse polynomial {input:?}: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: String,
}

impl ParseError {
    fn new(input: &str, reason: &str) -> ParseError {
        ParseError {
            input: input.to_string(),
            reason: reason.to_string(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + a * b;
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

/// Total order on rationals as a convenience for sorting.
pub fn rat_cmp(a: &Rat, b: &Rat) -> Ordering {
    a.cmp(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Poly {
        Poly::parse(text).unwrap()
    }

    #[test]
    fn canonical_form_strips_trailing_zeros() {
        let a = Poly::new(vec![rat(1), rat(2), rat(0), rat(0)]);
        assert_eq!(a.coeffs().len(), 2);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(Poly::new(vec![rat(0)]), Poly::zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn arithmetic_basics() {
        let f = p("x^2 - 1");
        assert_eq!(&f + &Poly::one(), p("x^2"));
        assert_eq!(p("x+1") * p("x-1"), f);
        assert_eq!(p("2*x").scale(&frac(1, 2)), p("x"));
        assert_eq!(-&p("x"), p("-x"));
        assert_eq!(p("x^3").pow(2), p("x^6"));
    }

    #[test]
    fn derivative_and_eval() {
        let f = p("x^3 + 3*x^2 + x");
        assert_eq!(f.derivative(), p("3*x^2 + 6*x + 1"));
        assert_eq!(f.eval(&rat(1)), rat(5));
        assert_eq!(p("x^2-2").sign_at(&rat(1)), Sign::Negative);
        assert_eq!(p("x^2-2").sign_at(&rat(2)), Sign::Positive);
        assert_eq!(Poly::zero().derivative(), Poly::zero());
    }

    #[test]
    fn signs_at_infinity() {
        assert_eq!(p("-2*x^3+x").sign_at_pos_infinity(), Sign::Negative);
        assert_eq!(p("-2*x^3+x").sign_at_neg_infinity(), Sign::Positive);
        assert_eq!(p("x^2").sign_at_neg_infinity(), Sign::Positive);
        assert_eq!(Poly::zero().sign_at_pos_infinity(), Sign::Zero);
    }

    #[test]
    fn standard_and_reflect() {
        assert!(p("x^2-1").is_standard());
        assert!(!p("-x + 1").is_standard());
        assert!(Poly::zero().is_standard());
        // Frozen calibration: reflect_standardize(1 − x) = −x − 1.
        assert_eq!(p("1 - x").reflect_standardize().unwrap(), p("-x - 1"));
        assert_eq!(p("x^2").reflect_standardize().unwrap(), p("x^2"));
        assert_eq!(p("x").reflect_standardize().unwrap(), p("x"));
        assert!(Poly::zero().reflect_standardize().is_err());
    }

    #[test]
    fn division_and_gcd() {
        let (q, r) = p("x^2-1").div_rem(&p("x+1")).unwrap();
        assert_eq!(q, p("x-1"));
        assert!(r.is_zero());
        assert_eq!(p("x^2-1").exact_div(&p("x+1")).unwrap(), Some(p("x-1")));
        assert_eq!(p("x^2+1").exact_div(&p("x")).unwrap(), None);
        assert_eq!(Poly::gcd(&p("x^2-1"), &p("x-1")), p("x-1"));
        assert_eq!(Poly::gcd(&p("2*x^2-2"), &p("3*x-3")), p("x-1"));
        assert_eq!(Poly::gcd(&Poly::zero(), &Poly::zero()), Poly::zero());
        assert_eq!(Poly::gcd(&Poly::zero(), &p("2*x")), p("x"));
    }

    #[test]
    fn valuation_and_trim() {
        let f = p("x^2 + 7*x^3");
        assert_eq!(f.valuation(), 2);
        let (v, w) = f.trim_valuation();
        assert_eq!(v, 2);
        assert_eq!(w, p("1 + 7*x"));
        assert_eq!(Poly::zero().trim_valuation(), (0, Poly::zero()));
    }

    #[test]
    fn scale_variable_substitutes() {
        // p(x) = x² + 2x, p(3x) = 9x² + 6x.
        assert_eq!(p("x^2 + 2*x").scale_variable(&rat(3)), p("9*x^2 + 6*x"));
    }

    #[test]
    fn parse_accepts_spec_forms() {
        assert_eq!(
            p("-1/2*x^3 + 2*x - 7"),
            Poly::new(vec![rat(-7), rat(2), rat(0), frac(-1, 2),])
        );
        assert_eq!(p("q + 3*q^2 + q^3"), p("x + 3*x^2 + x^3"));
        assert_eq!(p("  x ^ 2 - 2 "), p("x^2-2"));
        assert_eq!(p("x + x"), p("2*x"));
        assert_eq!(p("0"), Poly::zero());
        assert!(Poly::parse("").is_err());
        assert!(Poly::parse("x^").is_err());
        assert!(Poly::parse("2**x").is_err());
        assert!(Poly::parse("1.5*x").is_err());
    }

    #[test]
    fn print_parse_round_trip() {
        for text in [
            "0",
            "-7",
            "x",
            "-x - 1",
            "1/3",
            "x^2 - 2",
            "-1/2*x^3 + 2*x - 7",
            "5/7*x^4 + x^2",
        ] {
            let f = p(text);
            assert_eq!(Poly::parse(&f.to_text("x")).unwrap(), f);
            assert_eq!(Poly::parse(&f.to_text("q")).unwrap(), f);
        }
    }

    #[test]
    fn display_ascending_with_unit_coeffs_omitted() {
        assert_eq!(p("q + 3*q^2 + q^3").to_text("q"), "q + 3*q^2 + q^3");
        assert_eq!(p("-x-1").to_text("x"), "-1 - x");
        assert_eq!(p("1/2*x^2").to_text("x"), "1/2*x^2");
    }
}
