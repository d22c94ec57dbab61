//! Exact scalars: rationals, half-integers, univariate polynomials and
//! rational functions over the rationals.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. `Display` prints `p/q`, or just `p` when `q = 1`.
pub type Rational = num_rational::BigRational;

/// Build a rational from small integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn half() -> Rational {
    rat(1, 2)
}

/// `(a,b,…)` with entries as exact strings.
pub fn display_tuple<T: fmt::Display>(xs: &[T]) -> alloc::string::String {
    let parts: Vec<alloc::string::String> = xs.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// Parse `"p"` or `"p/q"` (optional sign, surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let t = s.trim();
    let err = || Error::Parse(t.to_string());
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = n.parse().map_err(|_| err())?;
    let den: BigInt = d.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// An element of `Z ∪ (1/2 + Z)`, stored as twice its value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt {
    doubled: BigInt,
}

impl HalfInt {
    pub fn from_doubled(doubled: BigInt) -> Self {
        HalfInt { doubled }
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt {
            doubled: BigInt::from(2 * v),
        }
    }

    pub fn zero() -> Self {
        HalfInt {
            doubled: BigInt::zero(),
        }
    }

    pub fn from_rational(r: &Rational) -> Result<Self, Error> {
        let d = r * int(2);
        if !d.is_integer() {
            return Err(Error::InvalidWeight(format!(
                "{r} is not an integer or half-integer"
            )));
        }
        Ok(HalfInt {
            doubled: d.to_integer(),
        })
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        Self::from_rational(&parse_rational(s)?)
    }

    pub fn doubled(&self) -> &BigInt {
        &self.doubled
    }

    pub fn is_integer(&self) -> bool {
        self.doubled.is_even()
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.doubled.clone(), BigInt::from(2))
    }

    /// Shift by an integer amount.
    pub fn offset(&self, by: i64) -> Self {
        HalfInt {
            doubled: &self.doubled + BigInt::from(2 * by),
        }
    }

    /// The largest non-positive value with the same parity: `0` or `-1/2`.
    pub fn nonpositive_top(integer: bool) -> Self {
        if integer {
            HalfInt::zero()
        } else {
            HalfInt {
                doubled: BigInt::from(-1),
            }
        }
    }

    /// Number of values in `[lo, hi]` of the parity class of `lo`
    /// (zero when `hi < lo`).
    pub fn count_between(lo: &HalfInt, hi: &HalfInt) -> BigInt {
        if hi < lo {
            BigInt::zero()
        } else {
            (&hi.doubled - &lo.doubled) / 2 + 1
        }
    }

    pub fn is_positive(&self) -> bool {
        self.doubled.is_positive()
    }
}

impl Add<&HalfInt> for &HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: &HalfInt) -> HalfInt {
        HalfInt {
            doubled: &self.doubled + &rhs.doubled,
        }
    }
}

impl Sub<&HalfInt> for &HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: &HalfInt) -> HalfInt {
        HalfInt {
            doubled: &self.doubled - &rhs.doubled,
        }
    }
}

impl Neg for &HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            doubled: -&self.doubled,
        }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_rational().fmt(f)
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// `a + b·t`.
    pub fn linear(a: Rational, b: Rational) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.coeffs.len() {
            0 => Some(Rational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self), Error> {
        let dl = d.leading().ok_or(Error::DivisionByZero)?.clone();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for i in (0..q.len()).rev() {
            let c = &r[i + dd] / &dl;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[i + j] -= &c * dc;
                }
            }
            q[i] = c;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic greatest common divisor (zero only when both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            let c_str = if mag.is_integer() {
                mag.to_string()
            } else {
                format!("({mag})")
            };
            match (i, show_coeff) {
                (0, _) => write!(f, "{c_str}")?,
                (1, true) => write!(f, "{c_str}*e")?,
                (1, false) => f.write_str("e")?,
                (_, true) => write!(f, "{c_str}*e^{i}")?,
                (_, false) => write!(f, "e^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Reduced quotient of polynomials with a monic denominator, so equality is
/// structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g)?;
        let (mut d, _) = den.div_rem(&g)?;
        let l = d.leading().expect("nonzero").recip();
        n = n.scale(&l);
        d = d.scale(&l);
        Ok(RationalFunction { num: n, den: d })
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: UniPoly::zero(),
            den: UniPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: UniPoly::constant(c),
            den: UniPoly::one(),
        }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction {
            num: p,
            den: UniPoly::one(),
        }
    }

    pub fn num(&self) -> &UniPoly {
        &self.num
    }

    pub fn den(&self) -> &UniPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Self::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero den");
        }
        Self::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
        .expect("nonzero den")
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den)).expect("nonzero den")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }

    /// Value at `x0`. Common factors are already cancelled, so a vanishing
    /// denominator is a genuine pole.
    pub fn limit_at(&self, x0: &Rational) -> Result<Rational, Error> {
        let d = self.den.eval(x0);
        if d.is_zero() {
            return Err(Error::Pole(format!("{self} at {x0}")));
        }
        Ok(self.num.eval(x0) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The field operations the matrix-element formulas need, shared by plain
/// rationals and by rational functions of the deformation parameter.
///
/// Method names are distinct from the `num_traits` ones so that both can be
/// in scope.
pub trait Scalar: Clone {
    fn from_rational(r: Rational) -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn over(&self, rhs: &Self) -> Result<Self, Error>;

    fn from_int(v: i64) -> Self {
        Self::from_rational(int(v))
    }
    fn plus_r(&self, r: &Rational) -> Self {
        self.plus(&Self::from_rational(r.clone()))
    }
    fn times_r(&self, r: &Rational) -> Self {
        self.times(&Self::from_rational(r.clone()))
    }
    fn negated(&self) -> Self {
        Self::from_int(0).minus(self)
    }
}

impl Scalar for Rational {
    fn from_rational(r: Rational) -> Self {
        r
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn over(&self, rhs: &Self) -> Result<Self, Error> {
        if Zero::is_zero(rhs) {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / rhs)
        }
    }
}

impl Scalar for RationalFunction {
    fn from_rational(r: Rational) -> Self {
        RationalFunction::constant(r)
    }
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn over(&self, rhs: &Self) -> Result<Self, Error> {
        self.div(rhs)
    }
}

/// Truncated Laurent series `Σ c_m ε^m + O(ε^prec)` about `ε = 0`.
///
/// The precision is tracked through every operation, so a coefficient that
/// is reported is exact. Constants carry unbounded precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent {
    /// Exponent of `coeffs[0]`; `coeffs[0] ≠ 0` unless `coeffs` is empty.
    start: i64,
    coeffs: Vec<Rational>,
    /// Terms of degree `≥ prec` are unknown.
    prec: i64,
}

/// Precision of exactly known values.
const EXACT: i64 = i64::MAX / 8;

impl Laurent {
    fn normalized(start: i64, mut coeffs: Vec<Rational>, prec: i64) -> Self {
        let prec = prec.min(EXACT);
        let keep = usize::try_from(prec - start).unwrap_or(0);
        coeffs.truncate(keep);
        let lead = coeffs.iter().position(|c| !c.is_zero());
        match lead {
            None => Laurent {
                start: prec,
                coeffs: Vec::new(),
                prec,
            },
            Some(z) => {
                while coeffs.last().is_some_and(Zero::is_zero) && prec >= EXACT {
                    coeffs.pop();
                }
                coeffs.drain(..z);
                Laurent {
                    start: start + z as i64,
                    coeffs,
                    prec,
                }
            }
        }
    }

    pub fn constant(r: Rational) -> Self {
        Self::normalized(0, vec![r], EXACT)
    }

    /// `a + b·ε + O(ε^prec)`.
    pub fn linear(a: Rational, b: Rational, prec: i64) -> Self {
        Self::normalized(0, vec![a, b], prec)
    }

    /// Degree of the first nonzero term, or `prec` if none is known.
    pub fn valuation(&self) -> i64 {
        self.start
    }

    pub fn precision(&self) -> i64 {
        self.prec
    }

    pub fn coeff(&self, m: i64) -> Rational {
        usize::try_from(m - self.start)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_else(Rational::zero)
    }

    /// Value at `ε = 0`: `Pole` for a nonzero negative-degree term,
    /// `Precision` if the constant term is not known.
    pub fn value_at_zero(&self) -> Result<Rational, Error> {
        if !self.coeffs.is_empty() && self.start < 0 {
            return Err(Error::Pole(format!("order {} at eps = 0", -self.start)));
        }
        if self.prec <= 0 {
            return Err(Error::Precision);
        }
        Ok(self.coeff(0))
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let start = self.start.min(rhs.start);
        let prec = self.prec.min(rhs.prec);
        let top = [self, rhs]
            .iter()
            .filter(|x| !x.coeffs.is_empty())
            .map(|x| x.end())
            .max()
            .unwrap_or(start)
            .min(prec);
        let coeffs = (start..top).map(|m| self.coeff(m) + rhs.coeff(m)).collect();
        Self::normalized(start, coeffs, prec)
    }

    fn end(&self) -> i64 {
        self.start + self.coeffs.len() as i64
    }

    pub fn neg(&self) -> Self {
        Laurent {
            start: self.start,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            prec: self.prec,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let start = self.start.saturating_add(rhs.start);
        let prec = (self.start.saturating_add(rhs.prec)).min(rhs.start.saturating_add(self.prec));
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::normalized(prec, Vec::new(), prec);
        }
        let len = (self.coeffs.len() + rhs.coeffs.len() - 1)
            .min(usize::try_from(prec - start).unwrap_or(0));
        let mut out = vec![Rational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                out[i + j] += a * b;
            }
        }
        Self::normalized(start, out, prec)
    }

    /// `1/self`; fails if no nonzero term is known.
    pub fn recip(&self) -> Result<Self, Error> {
        let Some(b0) = self.coeffs.first() else {
            return Err(Error::DivisionByZero);
        };
        if self.prec >= EXACT && self.coeffs.len() == 1 {
            return Ok(Laurent {
                start: -self.start,
                coeffs: vec![b0.recip()],
                prec: EXACT,
            });
        }
        // an exact polynomial divisor gets the precision of its own length
        let rel = if self.prec >= EXACT {
            2 * self.coeffs.len() as i64 + 8
        } else {
            self.prec - self.start
        };
        let d0 = b0.recip();
        let mut d: Vec<Rational> = Vec::with_capacity(rel as usize);
        d.push(d0.clone());
        for m in 1..rel as usize {
            let mut s = Rational::zero();
            for j in 1..=m.min(self.coeffs.len() - 1) {
                s += &self.coeffs[j] * &d[m - j];
            }
            d.push(-(&d0 * s));
        }
        Ok(Self::normalized(-self.start, d, rel - self.start))
    }
}

impl Scalar for Laurent {
    fn from_rational(r: Rational) -> Self {
        Laurent::constant(r)
    }
    fn vanishes(&self) -> bool {
        self.coeffs.is_empty() && self.prec >= EXACT
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn over(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self.mul(&rhs.recip()?))
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::new(c.iter().map(|&v| int(v)).collect())
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(parse_rational("-3/2").unwrap().to_string(), "-3/2");
        assert_eq!(parse_rational("10/2").unwrap().to_string(), "5");
        assert_eq!(parse_rational(" 0 ").unwrap().to_string(), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn halfint_parity() {
        let a = HalfInt::parse("-1/2").unwrap();
        assert!(!a.is_integer());
        assert_eq!(a.to_rational(), rat(-1, 2));
        assert!(HalfInt::parse("-3").unwrap().is_integer());
        assert!(HalfInt::parse("1/3").is_err());
        assert_eq!(a.offset(-1).to_string(), "-3/2");
    }

    #[test]
    fn limit_removable_singularity() {
        // (t^2 - 1)/(t - 1) -> 2 at t = 1
        assert_eq!(rf(&[-1, 0, 1], &[-1, 1]).limit_at(&int(1)).unwrap(), int(2));
        // 2t / t -> 2 at 0
        assert_eq!(rf(&[0, 2], &[0, 1]).limit_at(&int(0)).unwrap(), int(2));
    }

    #[test]
    fn limit_genuine_pole() {
        assert!(matches!(
            rf(&[1], &[0, 1]).limit_at(&int(0)),
            Err(Error::Pole(_))
        ));
    }

    #[test]
    fn arithmetic_examples() {
        // 1/(t-1) + 1/(t+1) = 2t/(t^2-1)
        let s = rf(&[1], &[-1, 1]).add(&rf(&[1], &[1, 1]));
        assert_eq!(s, rf(&[0, 2], &[-1, 0, 1]));
        // t / t = 1
        let t = RationalFunction::from_poly(p(&[0, 1]));
        assert_eq!(t.div(&t).unwrap(), RationalFunction::constant(int(1)));
        // (t^2 + t) * (1/t) = t + 1
        let q = RationalFunction::from_poly(p(&[0, 1, 1])).mul(&rf(&[1], &[0, 1]));
        assert_eq!(q, rf(&[1, 1], &[1]));
        assert!(t.div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn denominators_are_monic() {
        let f = rf(&[3], &[0, 4]);
        assert!(f.den().leading().unwrap().is_one());
        assert_eq!(f.num().coeffs(), &[rat(3, 4)]);
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-4i64..=4, 0..4).prop_map(|c| p(&c))
    }

    proptest! {
        #[test]
        fn chained_quotients_reduce(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!b.is_zero() && !c.is_zero());
            let ab = RationalFunction::new(a.clone(), b.clone()).unwrap();
            let bc = RationalFunction::new(b, c.clone()).unwrap();
            prop_assert_eq!(ab.mul(&bc), RationalFunction::new(a, c).unwrap());
        }

        #[test]
        fn limit_matches_substitution(a in small_poly(), b in small_poly(), x in -5i64..=5) {
            prop_assume!(!b.is_zero());
            let x = int(x);
            prop_assume!(!b.eval(&x).is_zero());
            let f = RationalFunction::new(a.clone(), b.clone()).unwrap();
            prop_assert_eq!(f.limit_at(&x).unwrap(), a.eval(&x) / b.eval(&x));
        }

        #[test]
        fn constant_embedding_is_exact(n in -20i64..20, d in 1i64..9, a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let r = RationalFunction::constant(rat(n, d));
            let f = RationalFunction::new(a, b).unwrap();
            prop_assert_eq!(r.add(&f).sub(&f), r.clone());
            prop_assert_eq!(r.add(&f).add(&f), r.add(&f.add(&f)));
        }
    }

    #[test]
    fn laurent_cancellation() {
        // (1 + 2e)/e − 1/e = 2
        let e = Laurent::linear(int(0), int(1), 6);
        let a = Laurent::linear(int(1), int(2), 6).over(&e).unwrap();
        let b = Laurent::constant(int(1)).over(&e).unwrap();
        assert_eq!(a.minus(&b).value_at_zero().unwrap(), int(2));
        assert!(matches!(b.value_at_zero(), Err(Error::Pole(_))));
        // cancelling a sixth-order pole leaves no known constant term
        let mut x = Laurent::constant(int(1));
        for _ in 0..6 {
            x = x.over(&e).unwrap();
        }
        let y = x.minus(&x).plus_r(&int(1));
        assert!(matches!(y.value_at_zero(), Err(Error::Precision)));
        assert!(Laurent::constant(int(0)).vanishes());
        assert!(e
            .recip()
            .unwrap()
            .times(&e)
            .minus(&Laurent::constant(int(1)))
            .value_at_zero()
            .unwrap()
            .is_zero());
    }

    proptest! {
        #[test]
        fn laurent_agrees_with_rational_functions(
            nums in proptest::collection::vec((-3i64..=3, -3i64..=3), 1..4),
            dens in proptest::collection::vec((-3i64..=3, 1i64..=3), 1..4),
        ) {
            // Π (a + bε) / Π (c + dε), d ≠ 0
            let mut f = RationalFunction::constant(int(1));
            let mut g = Laurent::constant(int(1));
            for &(a, b) in &nums {
                f = f.mul(&RationalFunction::from_poly(UniPoly::linear(int(a), int(b))));
                g = g.times(&Laurent::linear(int(a), int(b), 12));
            }
            for &(c, d) in &dens {
                f = f.div(&RationalFunction::from_poly(UniPoly::linear(int(c), int(d)))).unwrap();
                g = g.over(&Laurent::linear(int(c), int(d), 12)).unwrap();
            }
            match f.limit_at(&int(0)) {
                Ok(v) => prop_assert_eq!(g.value_at_zero().unwrap(), v),
                Err(_) => prop_assert!(matches!(g.value_at_zero(), Err(Error::Pole(_)))),
            }
        }
    }
}
