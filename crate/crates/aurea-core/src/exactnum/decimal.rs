//! Correctly rounded decimal rendering.
//!
//! Irrational constants (sqrt5, sqrt2, pi) are replaced by rational intervals
//! that provably enclose them at a working precision. A value is rendered by
//! rounding both interval endpoints; if the two strings differ the working
//! precision is doubled and the evaluation repeated. Exactly rational values
//! bypass the interval machinery and are rounded directly, so the loop only
//! ever runs on irrational targets, which never sit on a rounding boundary.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

pub(crate) fn pow10(n: u32) -> BigInt {
    BigInt::from(10u8).pow(n)
}

fn pow10_rat(e: i64) -> BigRational {
    if e >= 0 {
        BigRational::from_integer(pow10(e as u32))
    } else {
        BigRational::new(BigInt::one(), pow10((-e) as u32))
    }
}

/// Closed rational interval known to contain the target value.
#[derive(Debug, Clone)]
pub(crate) struct RatInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl RatInterval {
    pub fn point(x: BigRational) -> Self {
        Self { lo: x.clone(), hi: x }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().expect("four products").clone();
        let hi = products.into_iter().max().expect("four products");
        Self { lo, hi }
    }

    /// Multiply by an exact rational, swapping endpoints under a negative sign.
    pub fn scale(&self, k: &BigRational) -> Self {
        if k.is_negative() {
            Self {
                lo: &self.hi * k,
                hi: &self.lo * k,
            }
        } else {
            Self {
                lo: &self.lo * k,
                hi: &self.hi * k,
            }
        }
    }

    pub fn shift(&self, k: &BigRational) -> Self {
        Self {
            lo: &self.lo + k,
            hi: &self.hi + k,
        }
    }
}

/// Interval of width `2 * 10^-p` around `sqrt(x)` for non-negative rational x.
pub(crate) fn sqrt_interval(x: &BigRational, p: u32) -> RatInterval {
    assert!(!x.is_negative(), "square roots of negative values");
    let scale = pow10(p);
    let scaled = (x.numer() * &scale * &scale).div_floor(x.denom());
    let root = scaled.sqrt();
    RatInterval {
        lo: BigRational::new(root.clone(), scale.clone()),
        hi: BigRational::new(root + 2, scale),
    }
}

/// Truncated alternating series for `atan(1/x)` at the given integer scale.
/// Returns the sum and the number of terms, which bounds the rounding error
/// in units of the last place.
fn atan_inv_scaled(x: u32, scale: &BigInt) -> (BigInt, u64) {
    let x = BigInt::from(x);
    let x_squared = &x * &x;
    let mut power = x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = scale / (&power * BigInt::from(2 * k + 1));
        if term.is_zero() {
            break;
        }
        if k % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x_squared;
        k += 1;
    }
    (sum, k)
}

/// Interval around pi accurate to `10^-p`, by the Machin formula
/// `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub(crate) fn pi_interval(p: u32) -> RatInterval {
    const GUARD: u32 = 12;
    let scale = pow10(p + GUARD);
    let (a, terms_a) = atan_inv_scaled(5, &scale);
    let (b, terms_b) = atan_inv_scaled(239, &scale);
    let raw = a * 16 - b * 4;
    // Each series is off by at most (terms + 1) ulps before weighting.
    let slack = BigInt::from(16 * (terms_a + 1) + 4 * (terms_b + 1));
    RatInterval {
        lo: BigRational::new(&raw - &slack, scale.clone()),
        hi: BigRational::new(raw + slack, scale),
    }
}

/// Nearest integer with ties to even.
pub(crate) fn round_half_even(x: &BigRational) -> BigInt {
    let floor = x.floor().to_integer();
    let frac = x - BigRational::from_integer(floor.clone());
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    match frac.cmp(&half) {
        Ordering::Less => floor,
        Ordering::Greater => floor + 1,
        Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

/// `e` with `10^e <= x < 10^(e+1)` for positive rational x.
fn decimal_exponent(x: &BigRational) -> i64 {
    let numer_digits = x.numer().abs().to_string().len() as i64;
    let denom_digits = x.denom().to_string().len() as i64;
    let mut e = numer_digits - denom_digits;
    while *x >= pow10_rat(e + 1) {
        e += 1;
    }
    while *x < pow10_rat(e) {
        e -= 1;
    }
    e
}

/// Round half-even to `digits` significant digits, rendered positionally:
/// trailing zeros are kept so the output always shows exactly `digits`
/// significant digits, and magnitudes above the digit budget are padded
/// with zeros rather than switched to exponent notation.
pub(crate) fn round_significant(x: &BigRational, digits: u32) -> String {
    assert!(digits >= 1, "need at least one significant digit");
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let ax = x.abs();
    let mut e = decimal_exponent(&ax);
    let shift = digits as i64 - 1 - e;
    let mut n = round_half_even(&(&ax * pow10_rat(shift)));
    if n == pow10(digits) {
        // 9.99... rounded up to the next decade.
        n /= 10;
        e += 1;
    }
    let body = format_significand(&n.to_string(), e);
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn format_significand(digits: &str, e: i64) -> String {
    let k = digits.len() as i64;
    if e < 0 {
        let zeros = "0".repeat((-e - 1) as usize);
        format!("0.{zeros}{digits}")
    } else if e + 1 >= k {
        let zeros = "0".repeat((e + 1 - k) as usize);
        format!("{digits}{zeros}")
    } else {
        let (int_part, frac_part) = digits.split_at((e + 1) as usize);
        format!("{int_part}.{frac_part}")
    }
}

/// Fixed-point rendering with exactly `places` digits after the point.
pub(crate) fn round_places(x: &BigRational, places: u32) -> String {
    let n = round_half_even(&(x * pow10_rat(places as i64)));
    let negative = n.is_negative();
    let mut body = n.abs().to_string();
    if places > 0 {
        if body.len() <= places as usize {
            body = format!("{}{}", "0".repeat(places as usize + 1 - body.len()), body);
        }
        let split = body.len() - places as usize;
        body = format!("{}.{}", &body[..split], &body[split..]);
    }
    if negative && !n.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// Refine an interval evaluation until both endpoints render identically.
///
/// The caller must ensure the target value is irrational (or pass an exact
/// rational through the direct rounding paths instead); only then is
/// termination guaranteed.
pub(crate) fn converge<F, R>(eval: F, render: R, start_precision: u32) -> String
where
    F: Fn(u32) -> RatInterval,
    R: Fn(&BigRational) -> String,
{
    let mut p = start_precision;
    loop {
        let interval = eval(p);
        let lo = render(&interval.lo);
        let hi = render(&interval.hi);
        if lo == hi {
            return lo;
        }
        p = p.checked_mul(2).expect("precision overflow");
    }
}
