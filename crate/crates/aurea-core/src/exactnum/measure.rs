//! The three-dimensional measure algebra spanned by `{1, pi, sqrt 2}` with
//! coefficients in Q(phi).
//!
//! This is a module over Q(phi), not a ring: a product of two measures would
//! leave the basis (`pi^2`, `pi sqrt 2`, ...), so no such product is defined —
//! only componentwise addition and scaling by a field element. Relations that
//! nominally divide by pi are expressed at the coefficient level instead.

use super::decimal::{self, RatInterval};
use super::golden::{GoldenNumber, Rational};
use num_rational::BigRational;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// An exact value `u + v*pi + w*sqrt 2` with golden-number coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpiralMeasure {
    u: GoldenNumber,
    v: GoldenNumber,
    w: GoldenNumber,
}

impl SpiralMeasure {
    pub fn new(u: GoldenNumber, v: GoldenNumber, w: GoldenNumber) -> Self {
        Self { u, v, w }
    }

    pub fn zero() -> Self {
        Self::new(
            GoldenNumber::zero(),
            GoldenNumber::zero(),
            GoldenNumber::zero(),
        )
    }

    pub fn from_unit(u: GoldenNumber) -> Self {
        Self::new(u, GoldenNumber::zero(), GoldenNumber::zero())
    }

    pub fn from_pi_coeff(v: GoldenNumber) -> Self {
        Self::new(GoldenNumber::zero(), v, GoldenNumber::zero())
    }

    pub fn from_sqrt2_coeff(w: GoldenNumber) -> Self {
        Self::new(GoldenNumber::zero(), GoldenNumber::zero(), w)
    }

    pub fn unit_coeff(&self) -> &GoldenNumber {
        &self.u
    }

    pub fn pi_coeff(&self) -> &GoldenNumber {
        &self.v
    }

    pub fn sqrt2_coeff(&self) -> &GoldenNumber {
        &self.w
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero() && self.w.is_zero()
    }

    /// Scale every component by a field element.
    pub fn scale(&self, k: &GoldenNumber) -> Self {
        Self {
            u: &self.u * k,
            v: &self.v * k,
            w: &self.w * k,
        }
    }

    pub(crate) fn interval(&self, p: u32) -> RatInterval {
        let two = Rational::from_integer(2.into());
        let value = self.u.interval(p);
        let pi_part = self.v.interval(p).mul(&decimal::pi_interval(p));
        let sqrt2_part = self.w.interval(p).mul(&decimal::sqrt_interval(&two, p));
        value.add(&pi_part).add(&sqrt2_part)
    }

    /// Decimal expansion correct to `digits` significant digits.
    ///
    /// Since 1, pi and sqrt 2 are linearly independent over Q(phi), the value
    /// is rational exactly when the pi and sqrt 2 components vanish; that case
    /// is rendered directly and everything else through interval refinement.
    pub fn to_decimal(&self, digits: u32) -> String {
        assert!(digits >= 1);
        if self.v.is_zero() && self.w.is_zero() {
            return self.u.to_decimal(digits);
        }
        let value = self.clone();
        decimal::converge(
            move |p| value.interval(p),
            |x| decimal::round_significant(x, digits),
            digits + 10,
        )
    }

    /// Rigorous rational bounds `lo <= value <= hi`, shrinking with precision.
    pub fn to_rational_bounds(&self, precision_digits: u32) -> (BigRational, BigRational) {
        let iv = self.interval(precision_digits);
        (iv.lo, iv.hi)
    }

    /// Advisory double-precision value.
    pub fn to_f64(&self) -> f64 {
        self.u.to_f64() + self.v.to_f64() * std::f64::consts::PI + self.w.to_f64() * 2f64.sqrt()
    }
}

impl fmt::Debug for SpiralMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpiralMeasure({self})")
    }
}

/// Exact triple form `(u; v; w)`; each component in canonical exact form.
impl fmt::Display for SpiralMeasure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {}; {})", self.u, self.v, self.w)
    }
}

impl Neg for &SpiralMeasure {
    type Output = SpiralMeasure;
    fn neg(self) -> SpiralMeasure {
        SpiralMeasure {
            u: -&self.u,
            v: -&self.v,
            w: -&self.w,
        }
    }
}

impl Neg for SpiralMeasure {
    type Output = SpiralMeasure;
    fn neg(self) -> SpiralMeasure {
        -&self
    }
}

impl Add for &SpiralMeasure {
    type Output = SpiralMeasure;
    fn add(self, rhs: &SpiralMeasure) -> SpiralMeasure {
        SpiralMeasure {
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
            w: &self.w + &rhs.w,
        }
    }
}

impl Sub for &SpiralMeasure {
    type Output = SpiralMeasure;
    fn sub(self, rhs: &SpiralMeasure) -> SpiralMeasure {
        SpiralMeasure {
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
            w: &self.w - &rhs.w,
        }
    }
}

impl Mul<&GoldenNumber> for &SpiralMeasure {
    type Output = SpiralMeasure;
    fn mul(self, k: &GoldenNumber) -> SpiralMeasure {
        self.scale(k)
    }
}

macro_rules! forward_measure_binop {
    ($($trait:ident::$method:ident),*) => {$(
        impl $trait for SpiralMeasure {
            type Output = SpiralMeasure;
            fn $method(self, rhs: SpiralMeasure) -> SpiralMeasure {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&SpiralMeasure> for SpiralMeasure {
            type Output = SpiralMeasure;
            fn $method(self, rhs: &SpiralMeasure) -> SpiralMeasure {
                $trait::$method(&self, rhs)
            }
        }
        impl $trait<SpiralMeasure> for &SpiralMeasure {
            type Output = SpiralMeasure;
            fn $method(self, rhs: SpiralMeasure) -> SpiralMeasure {
                $trait::$method(self, &rhs)
            }
        }
    )*};
}

forward_measure_binop!(Add::add, Sub::sub);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_over_phi_squared_to_six_digits() {
        // 1/phi^2 = 2 - phi.
        let inv_phi_sq = GoldenNumber::from_int(2) - GoldenNumber::phi();
        let m = SpiralMeasure::from_pi_coeff(inv_phi_sq);
        assert_eq!(m.to_decimal(6), "1.19998");
    }

    #[test]
    fn zero_measure_renders_as_zero() {
        assert_eq!(SpiralMeasure::zero().to_decimal(9), "0");
    }

    #[test]
    fn one_plus_sqrt_two() {
        let m = SpiralMeasure::new(
            GoldenNumber::one(),
            GoldenNumber::zero(),
            GoldenNumber::one(),
        );
        assert_eq!(m.to_decimal(6), "2.41421");
    }

    #[test]
    fn scaling_acts_componentwise() {
        let m = SpiralMeasure::new(
            GoldenNumber::from_int(3),
            GoldenNumber::phi(),
            GoldenNumber::from_int(-2),
        );
        let scaled = m.scale(&GoldenNumber::phi());
        assert_eq!(*scaled.unit_coeff(), GoldenNumber::from_int(3) * GoldenNumber::phi());
        assert_eq!(*scaled.pi_coeff(), GoldenNumber::phi() * GoldenNumber::phi());
        assert_eq!(
            *scaled.sqrt2_coeff(),
            GoldenNumber::from_int(-2) * GoldenNumber::phi()
        );
    }

    #[test]
    fn bounds_enclose_the_value() {
        let m = SpiralMeasure::new(
            GoldenNumber::from_int(1),
            GoldenNumber::from_parts(1, 4, 0, 1),
            GoldenNumber::zero(),
        );
        let (lo, hi) = m.to_rational_bounds(30);
        let expected = 1.0 + std::f64::consts::PI / 4.0;
        use num_traits::ToPrimitive;
        assert!(lo.to_f64().unwrap() <= expected && expected <= hi.to_f64().unwrap());
        assert!((hi - lo) < BigRational::new(1.into(), 1_000_000_000u64.into()));
    }
}
