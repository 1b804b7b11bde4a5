//! Exact scalar arithmetic: arbitrary-precision rationals and real quadratic
//! irrationals `(a + b*sqrt(d))/r`.
//!
//! The slope and intercept data the rest of the library works with is either
//! rational or quadratic over a single radicand, so the comparison fragment
//! implemented here (rational vs rational, rational vs quadratic, and
//! quadratic vs quadratic over the same squarefree radicand) is exactly the
//! closed fragment the decision procedures need. Comparing quadratics over
//! different radicands returns [`Error::UnsupportedComparison`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub use num_rational::BigRational;

/// `p/q` as a [`BigRational`] from machine integers.
pub fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// The integer `i` as a [`BigRational`].
pub fn rat_i(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

/// A real quadratic irrational `(a + b*sqrt(d))/r` in canonical form:
/// `r > 0`, `b != 0`, `d` squarefree and at least 2, `gcd(a, b, r) = 1`.
///
/// Canonical form makes structural equality coincide with value equality,
/// which is why construction goes through [`ExactReal::quadratic`]: inputs
/// whose irrational part cancels (square radicand, `b = 0`) come back as
/// rationals instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticIrrational {
    a: BigInt,
    b: BigInt,
    d: u64,
    r: BigInt,
}

impl QuadraticIrrational {
    pub fn rational_part(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.r)
    }

    pub fn coefficients(&self) -> (&BigInt, &BigInt, u64, &BigInt) {
        (&self.a, &self.b, self.d, &self.r)
    }

    pub fn radicand(&self) -> u64 {
        self.d
    }

    /// Sign of `a + b*sqrt(d)` (the denominator is positive).
    fn sign(&self) -> Ordering {
        sign_with_radical(&self.a, &self.b, self.d)
    }

    /// Exact floor via the width-1 integer bracket around `b*sqrt(d)`.
    ///
    /// `b^2 d` is never a perfect square (else `d` would be), so the bracket
    /// is strict and `(a + t)/r <= x < (a + t + 1)/r` pins the floor to a
    /// single integer.
    fn floor(&self) -> BigInt {
        let sq = &self.b * &self.b * BigInt::from(self.d);
        let root = sq.sqrt();
        debug_assert_ne!(&root * &root, sq, "radicand must not be square");
        let t = if self.b.is_positive() {
            root
        } else {
            -root - 1i32
        };
        let m = (&self.a + t).div_floor(&self.r);
        #[cfg(debug_assertions)]
        {
            let x = ExactReal::Quadratic(self.clone());
            let lo = ExactReal::from_integer(m.clone());
            let hi = ExactReal::from_integer(&m + 1i32);
            debug_assert_eq!(x.compare(&lo), Ok(Ordering::Greater));
            debug_assert_eq!(x.compare(&hi), Ok(Ordering::Less));
        }
        m
    }
}

/// Sign of `a + b*sqrt(d)` for `d >= 2` squarefree.
fn sign_with_radical(a: &BigInt, b: &BigInt, d: u64) -> Ordering {
    match (a.sign(), b.sign()) {
        (_, num_bigint::Sign::NoSign) => a.cmp(&BigInt::zero()),
        (num_bigint::Sign::NoSign, _) => b.cmp(&BigInt::zero()),
        (num_bigint::Sign::Plus, num_bigint::Sign::Plus) => Ordering::Greater,
        (num_bigint::Sign::Minus, num_bigint::Sign::Minus) => Ordering::Less,
        // Opposite signs: compare a^2 against b^2 d; equality would force d
        // to be a perfect square.
        (num_bigint::Sign::Plus, num_bigint::Sign::Minus) => {
            let lhs = a * a;
            let rhs = b * b * BigInt::from(d);
            debug_assert_ne!(lhs, rhs);
            if lhs > rhs {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
        (num_bigint::Sign::Minus, num_bigint::Sign::Plus) => {
            let lhs = b * b * BigInt::from(d);
            let rhs = a * a;
            debug_assert_ne!(lhs, rhs);
            if lhs > rhs {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    }
}

/// Splits `d` into `s^2 * d0` with `d0` squarefree, returning `(s, d0)`.
fn extract_square(mut d: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut p = 2u64;
    while p * p <= d {
        while d.is_multiple_of(p * p) {
            d /= p * p;
            s *= p;
        }
        p += 1;
    }
    (s, d)
}

/// An exact real number: a rational or a quadratic irrational.
///
/// The type is closed under negation, addition of a rational, multiplication
/// by a rational, and addition of another value over the same radicand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactReal {
    Rational(BigRational),
    Quadratic(QuadraticIrrational),
}

impl ExactReal {
    pub fn zero() -> Self {
        ExactReal::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactReal::Rational(BigRational::one())
    }

    pub fn from_int(i: i64) -> Self {
        ExactReal::Rational(rat_i(i))
    }

    pub fn from_integer(i: BigInt) -> Self {
        ExactReal::Rational(BigRational::from_integer(i))
    }

    pub fn from_rational(r: BigRational) -> Self {
        ExactReal::Rational(r)
    }

    /// `(a + b*sqrt(d))/r`, canonicalized. Falls back to a rational whenever
    /// the irrational part vanishes (b = 0, d = 0, or d a perfect square
    /// after extracting square factors).
    ///
    /// Panics if `r = 0`.
    pub fn quadratic(a: BigInt, b: BigInt, d: u64, r: BigInt) -> Self {
        assert!(!r.is_zero(), "quadratic irrational needs a nonzero denominator");
        let (s, d0) = extract_square(d);
        let b = b * BigInt::from(s);
        if d0 <= 1 || b.is_zero() {
            // sqrt(0) = 0 and sqrt(1) = 1 both land in the rationals.
            let num = if d0 == 1 { a + b } else { a };
            return ExactReal::Rational(BigRational::new(num, r));
        }
        let (mut a, mut b, mut r) = (a, b, r);
        if r.is_negative() {
            a = -a;
            b = -b;
            r = -r;
        }
        let g = a.gcd(&b).gcd(&r);
        ExactReal::Quadratic(QuadraticIrrational {
            a: a / &g,
            b: b / &g,
            d: d0,
            r: r / &g,
        })
    }

    pub fn quadratic_i(a: i64, b: i64, d: u64, r: i64) -> Self {
        Self::quadratic(BigInt::from(a), BigInt::from(b), d, BigInt::from(r))
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, ExactReal::Rational(_))
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactReal::Rational(r) => Some(r),
            ExactReal::Quadratic(_) => None,
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            ExactReal::Rational(r) => r.is_integer(),
            ExactReal::Quadratic(_) => false,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ExactReal::Rational(r) => ExactReal::Rational(-r),
            ExactReal::Quadratic(q) => ExactReal::Quadratic(QuadraticIrrational {
                a: -&q.a,
                b: -&q.b,
                d: q.d,
                r: q.r.clone(),
            }),
        }
    }

    /// Exact sum. Errors with [`Error::UnsupportedComparison`] when both
    /// operands are quadratic over different radicands.
    pub fn add(&self, other: &ExactReal) -> Result<ExactReal, Error> {
        match (self, other) {
            (ExactReal::Rational(x), ExactReal::Rational(y)) => {
                Ok(ExactReal::Rational(x + y))
            }
            (ExactReal::Rational(x), ExactReal::Quadratic(q))
            | (ExactReal::Quadratic(q), ExactReal::Rational(x)) => {
                // (a + b sqrt d)/r + p/s = ((as + pr) + bs sqrt d)/(rs)
                let (p, s) = (x.numer(), x.denom());
                Ok(ExactReal::quadratic(
                    &q.a * s + p * &q.r,
                    &q.b * s,
                    q.d,
                    &q.r * s,
                ))
            }
            (ExactReal::Quadratic(x), ExactReal::Quadratic(y)) => {
                if x.d != y.d {
                    return Err(Error::UnsupportedComparison(x.d, y.d));
                }
                Ok(ExactReal::quadratic(
                    &x.a * &y.r + &y.a * &x.r,
                    &x.b * &y.r + &y.b * &x.r,
                    x.d,
                    &x.r * &y.r,
                ))
            }
        }
    }

    pub fn sub(&self, other: &ExactReal) -> Result<ExactReal, Error> {
        self.add(&other.neg())
    }

    pub fn mul_rational(&self, k: &BigRational) -> Self {
        match self {
            ExactReal::Rational(r) => ExactReal::Rational(r * k),
            ExactReal::Quadratic(q) => ExactReal::quadratic(
                &q.a * k.numer(),
                &q.b * k.numer(),
                q.d,
                &q.r * k.denom(),
            ),
        }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.mul_rational(&rat_i(k))
    }

    /// Sign of the value.
    pub fn sign(&self) -> Ordering {
        match self {
            ExactReal::Rational(r) => r.cmp(&BigRational::zero()),
            ExactReal::Quadratic(q) => q.sign(),
        }
    }

    /// Exact three-way comparison. Errors when the difference leaves the
    /// supported fragment (two quadratics over different radicands).
    pub fn compare(&self, other: &ExactReal) -> Result<Ordering, Error> {
        Ok(self.sub(other)?.sign())
    }

    pub fn floor(&self) -> BigInt {
        match self {
            ExactReal::Rational(r) => r.floor().to_integer(),
            ExactReal::Quadratic(q) => q.floor(),
        }
    }

    pub fn ceil(&self) -> BigInt {
        -self.neg().floor()
    }

    /// Fractional part `x - floor(x)`, always in `[0, 1)`.
    pub fn frac(&self) -> ExactReal {
        self.add(&ExactReal::from_integer(-self.floor()))
            .expect("subtracting an integer stays in the fragment")
    }

    /// Midpoint of two values over the same radicand (or rationals).
    pub fn midpoint(&self, other: &ExactReal) -> Result<ExactReal, Error> {
        Ok(self.add(other)?.mul_rational(&rat(1, 2)))
    }
}

impl PartialOrd for ExactReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.compare(other).ok()
    }
}

impl fmt::Display for ExactReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExactReal::Rational(r) => write!(f, "{}", r),
            ExactReal::Quadratic(q) => {
                if q.b.is_negative() {
                    write!(f, "({}-{}*sqrt({}))/{}", q.a, -&q.b, q.d, q.r)
                } else {
                    write!(f, "({}+{}*sqrt({}))/{}", q.a, q.b, q.d, q.r)
                }
            }
        }
    }
}

/// Text forms: `p`, `p/q`, and `(a+b*sqrt(d))/r` (also with `a-b*sqrt(d)`).
impl FromStr for ExactReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.starts_with('(') {
            parse_quadratic(s)
        } else {
            parse_rational(s).map(ExactReal::Rational)
        }
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("expected p or p/q, got {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
    let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

fn parse_quadratic(s: &str) -> Result<ExactReal, Error> {
    let bad = || Error::Parse(format!("expected (a+b*sqrt(d))/r, got {s:?}"));
    let rest = s.strip_prefix('(').ok_or_else(bad)?;
    let (inner, denom) = rest.rsplit_once(")/").ok_or_else(bad)?;
    let r = BigInt::from_str(denom.trim()).map_err(|_| bad())?;
    if r.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    // Split "a+b*sqrt(d)" / "a-b*sqrt(d)" at the sign separating the terms;
    // the sign of `a` itself can only appear at position 0.
    let sep = inner
        .char_indices()
        .skip(1)
        .find(|&(_, c)| c == '+' || c == '-')
        .ok_or_else(bad)?;
    let (a_str, tail) = inner.split_at(sep.0);
    let b_negative = sep.1 == '-';
    let term = &tail[1..];
    let b_str = term.strip_suffix(')').ok_or_else(bad)?;
    let (b_str, d_str) = b_str.split_once("*sqrt(").ok_or_else(bad)?;
    let a = BigInt::from_str(a_str.trim()).map_err(|_| bad())?;
    let mut b = BigInt::from_str(b_str.trim()).map_err(|_| bad())?;
    if b_negative {
        b = -b;
    }
    let d: u64 = d_str.trim().parse().map_err(|_| bad())?;
    Ok(ExactReal::quadratic(a, b, d, r))
}
