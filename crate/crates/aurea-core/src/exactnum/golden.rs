//! Exact arithmetic in the quadratic field generated by the golden ratio.
//!
//! Values are kept as `r + s*phi` with arbitrary-precision rational
//! coefficients. Multiplication rewrites `phi^2` as `1 + phi`, so the
//! representation is closed under ring operations, and signs are decided
//! by integer comparisons rather than floating point.

use super::decimal::{self, RatInterval};
use crate::fibonacci::fib;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use thiserror::Error;

pub type Rational = BigRational;

/// Exact sign of a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// Inverting zero has no result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("zero has no multiplicative inverse")]
pub struct ZeroInverse;

/// An element `r + s*phi` of the field Q(sqrt 5) in the phi-power basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GoldenNumber {
    r: Rational,
    s: Rational,
}

impl GoldenNumber {
    pub fn new(r: Rational, s: Rational) -> Self {
        Self { r, s }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self {
            r,
            s: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    /// Convenience constructor for `n/d + (pn/pd) phi`.
    pub fn from_parts(n: i64, d: i64, pn: i64, pd: i64) -> Self {
        Self::new(
            Rational::new(n.into(), d.into()),
            Rational::new(pn.into(), pd.into()),
        )
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The golden ratio itself: `0 + 1*phi`.
    pub fn phi() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// The conjugate root `1 - phi = (1 - sqrt 5)/2`.
    pub fn phi_conj() -> Self {
        Self::phi().conj()
    }

    pub fn rational_part(&self) -> &Rational {
        &self.r
    }

    pub fn phi_coeff(&self) -> &Rational {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// Field conjugation `phi -> 1 - phi`; an involution fixing the rationals.
    pub fn conj(&self) -> Self {
        Self {
            r: &self.r + &self.s,
            s: -&self.s,
        }
    }

    /// `N(r + s phi) = r^2 + r s - s^2`, the product with the conjugate.
    /// Zero exactly when the value is zero.
    pub fn norm(&self) -> Rational {
        &self.r * &self.r + &self.r * &self.s - &self.s * &self.s
    }

    /// Exact inverse, as the conjugate divided by the norm.
    pub fn inv(&self) -> Result<Self, ZeroInverse> {
        if self.is_zero() {
            return Err(ZeroInverse);
        }
        let norm = self.norm();
        let conj = self.conj();
        Ok(Self {
            r: conj.r / &norm,
            s: conj.s / norm,
        })
    }

    /// Coordinates `(a, c)` with the value equal to `a + c * sqrt 5`.
    pub fn sqrt5_coords(&self) -> (Rational, Rational) {
        let half = Rational::new(1.into(), 2.into());
        (&self.r + &self.s * &half, &self.s * half)
    }

    /// Exact sign, decided without floating point.
    ///
    /// Writing the value as `(a + c sqrt 5)/2` with `a = 2r + s`, `c = s`:
    /// when the two parts agree in sign the answer is immediate; otherwise
    /// the comparison of `a^2` against `5 c^2` decides which part dominates.
    pub fn sign(&self) -> Sign {
        let a = &self.r + &self.r + &self.s;
        let c = &self.s;
        let sa = rational_sign(&a);
        let sc = rational_sign(c);
        match (sa, sc) {
            (Sign::Zero, other) | (other, Sign::Zero) => other,
            (Sign::Positive, Sign::Positive) => Sign::Positive,
            (Sign::Negative, Sign::Negative) => Sign::Negative,
            (rational_side, _) => {
                let a2 = &a * &a;
                let c2_5 = c * c * Rational::from_integer(5.into());
                // a^2 = 5 c^2 would make sqrt 5 rational, so only the
                // all-zero case (handled above) can tie.
                match a2.cmp(&c2_5) {
                    Ordering::Greater => rational_side,
                    Ordering::Less => match rational_side {
                        Sign::Positive => Sign::Negative,
                        _ => Sign::Positive,
                    },
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }

    /// `phi^n = F(n-1) + F(n) phi` for any integer n.
    pub fn phi_pow(n: i64) -> Self {
        Self::new(
            Rational::from_integer(fib(n - 1)),
            Rational::from_integer(fib(n)),
        )
    }

    /// Decimal expansion correct to `digits` significant digits.
    pub fn to_decimal(&self, digits: u32) -> String {
        assert!(digits >= 1);
        if self.s.is_zero() {
            return decimal::round_significant(&self.r, digits);
        }
        if self.is_zero() {
            return "0".to_string();
        }
        let value = self.clone();
        decimal::converge(
            move |p| value.interval(p),
            |x| decimal::round_significant(x, digits),
            digits + 10,
        )
    }

    /// Fixed-point decimal with exactly `places` digits after the point.
    pub(crate) fn to_decimal_places(&self, places: u32) -> String {
        if self.s.is_zero() {
            return decimal::round_places(&self.r, places);
        }
        let value = self.clone();
        decimal::converge(
            move |p| value.interval(p),
            |x| decimal::round_places(x, places),
            places + 10,
        )
    }

    /// Enclosing rational interval at roughly `p` decimal digits.
    pub(crate) fn interval(&self, p: u32) -> RatInterval {
        let (a, c) = self.sqrt5_coords();
        let five = Rational::from_integer(5.into());
        decimal::sqrt_interval(&five, p).scale(&c).shift(&a)
    }

    /// Rigorous rational bounds on the value: `lo <= self <= hi` with the
    /// width shrinking as `precision_digits` grows.
    pub fn to_rational_bounds(&self, precision_digits: u32) -> (Rational, Rational) {
        let iv = self.interval(precision_digits);
        (iv.lo, iv.hi)
    }

    /// Advisory double-precision value.
    pub fn to_f64(&self) -> f64 {
        let (a, c) = self.sqrt5_coords();
        a.to_f64().unwrap_or(f64::NAN) + c.to_f64().unwrap_or(f64::NAN) * 5f64.sqrt()
    }
}

fn rational_sign(x: &Rational) -> Sign {
    if x.is_zero() {
        Sign::Zero
    } else if x.is_positive() {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GoldenNumber({self})")
    }
}

/// Canonical exact form: `3/2`, `phi`, `-phi`, `1/2+3/4phi`, `2-phi`, ...
/// Round-trips through the parser.
impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            return write!(f, "{}", self.r);
        }
        if !self.r.is_zero() {
            write!(f, "{}", self.r)?;
            if !self.s.is_negative() {
                write!(f, "+")?;
            }
        }
        if self.s == Rational::one() {
            write!(f, "phi")
        } else if self.s == -Rational::one() {
            write!(f, "-phi")
        } else {
            write!(f, "{}phi", self.s)
        }
    }
}

/// Total order by exact sign of the difference.
impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).sign() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl Neg for &GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        GoldenNumber {
            r: -&self.r,
            s: -&self.s,
        }
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> GoldenNumber {
        -&self
    }
}

impl Add for &GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber {
            r: &self.r + &rhs.r,
            s: &self.s + &rhs.s,
        }
    }
}

impl Sub for &GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, rhs: &GoldenNumber) -> GoldenNumber {
        GoldenNumber {
            r: &self.r - &rhs.r,
            s: &self.s - &rhs.s,
        }
    }
}

/// `(r1 + s1 phi)(r2 + s2 phi) = (r1 r2 + s1 s2) + (r1 s2 + s1 r2 + s1 s2) phi`
/// after rewriting `phi^2 = 1 + phi`.
impl Mul for &GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, rhs: &GoldenNumber) -> GoldenNumber {
        let ss = &self.s * &rhs.s;
        GoldenNumber {
            r: &self.r * &rhs.r + &ss,
            s: &self.r * &rhs.s + &self.s * &rhs.r + ss,
        }
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident::$method:ident),*) => {$(
        impl $trait for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&GoldenNumber> for GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: &GoldenNumber) -> GoldenNumber {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<GoldenNumber> for &GoldenNumber {
            type Output = GoldenNumber;
            fn $method(self, rhs: GoldenNumber) -> GoldenNumber {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add::add, Sub::sub, Mul::mul);
