//! Fibonacci and Lucas numbers, convergents, and the partial sums of
//! consecutive-term products used by the subdivision measure formulas.
//!
//! `fib` uses fast doubling and is extended to negative indices by
//! `F(-k) = (-1)^(k+1) F(k)`, so every index-shifting formula in the crate
//! is total over the integers.

mod identities;

pub use identities::{
    identity_check, identity_ledger, identity_ledger_seq, FailureInstance, IdentityError,
    IdentityVerdict, LedgerEntry, VerdictStatus, IDENTITY_COUNT,
};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `F(n)` for any integer index.
pub fn fib(n: i64) -> BigInt {
    if n >= 0 {
        fib_pair(n as u64).0
    } else {
        let k = (-n) as u64;
        let f = fib_pair(k).0;
        if k % 2 == 0 {
            -f
        } else {
            f
        }
    }
}

/// Fast doubling: returns `(F(n), F(n+1))`.
///
/// Doubling steps come from the index-addition rule
/// `F(n+m) = F(n-1)F(m) + F(n)F(m+1)`:
/// `F(2k) = F(k)(2F(k+1) - F(k))` and `F(2k+1) = F(k)^2 + F(k+1)^2`.
fn fib_pair(n: u64) -> (BigInt, BigInt) {
    if n == 0 {
        return (BigInt::zero(), BigInt::one());
    }
    let (a, b) = fib_pair(n / 2);
    let c = &a * (&b * 2 - &a);
    let d = &a * &a + &b * &b;
    if n % 2 == 0 {
        (c, d)
    } else {
        let e = c + &d;
        (d, e)
    }
}

/// `L(n) = F(n+1) + F(n-1)`, the rational trace of the n-th power of the
/// golden ratio.
pub fn lucas(n: u64) -> BigInt {
    fib(n as i64 + 1) + fib(n as i64 - 1)
}

/// `tau(n) = sum_{k=1}^{n-1} F(k) F(k+1)` by direct summation.
///
/// Indices below 2 yield the empty sum.
pub fn tau(n: u64) -> BigInt {
    let mut acc = BigInt::zero();
    let mut a = BigInt::one(); // F(1)
    let mut b = BigInt::one(); // F(2)
    for _ in 1..n {
        acc += &a * &b;
        let c = &a + &b;
        a = b;
        b = c;
    }
    acc
}

/// Parity closed form of `tau`: `F(n)^2` for even n, `F(n)^2 - 1` for odd n.
pub fn tau_closed(n: u64) -> BigInt {
    let f = fib(n as i64);
    let sq = &f * &f;
    if n % 2 == 0 {
        sq
    } else {
        sq - 1
    }
}

/// `F(n+1)/F(n)` in lowest terms, the n-th convergent of the golden ratio.
pub fn convergent(n: u64) -> BigRational {
    assert!(n >= 1, "convergents start at index 1");
    BigRational::new(fib(n as i64 + 1), fib(n as i64))
}
