//! Exact integer helpers: binomial and multinomial coefficients extended to all
//! integer arguments, p-adic valuations and floor division.
//!
//! Binomials with negative entries take the limiting value of the gamma quotient
//! `Γ(z+n+1) / (Γ(z+k+1) Γ(z+n-k+1))` as `z -> 0`. That limit is an integer for
//! every pair `(n, k)`; it is nonzero only when `k >= 0, n-k >= 0`, or `n < 0, k >= 0`,
//! or `n < 0, n-k >= 0`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

/// Arbitrary-precision signed integer used for every coefficient.
pub type Integer = BigInt;

/// `n (n-1) ... (n-k+1) / k!` for `k >= 0` and arbitrary `n`.
///
/// Each partial product is itself a (generalized) binomial coefficient, so the
/// division by `i + 1` at every step is exact.
fn falling_binomial(n: i64, k: i64) -> BigInt {
    debug_assert!(k >= 0);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Binomial coefficient `binom(n, k)` for arbitrary integers.
pub fn binom_ext(n: i64, k: i64) -> Integer {
    let rest = n - k;
    if k >= 0 && rest >= 0 {
        falling_binomial(n, k.min(rest))
    } else if n < 0 && k >= 0 {
        falling_binomial(n, k)
    } else if n < 0 && rest >= 0 {
        falling_binomial(n, rest)
    } else {
        BigInt::zero()
    }
}

/// `sgn(k) (-1)^k binom(-n+k-1, k)`, with `sgn(k) = -1` only for `k < 0`.
///
/// Equal to [`binom_ext`] for every `(n, k)`; kept as a separate route so that the
/// identity can be checked.
pub fn binom_negation(n: i64, k: i64) -> Integer {
    let value = binom_ext(-n + k - 1, k);
    let negate = (k < 0) ^ (k.rem_euclid(2) == 1);
    if negate {
        -value
    } else {
        value
    }
}

/// Ordinary multinomial `(Σ b)! / Π b!` for nonnegative parts.
fn multinomial_nonneg(parts: &[i64]) -> BigInt {
    let mut total = 0i64;
    let mut acc = BigInt::one();
    for &b in parts {
        debug_assert!(b >= 0);
        total += b;
        acc *= falling_binomial(total, b.min(total - b));
    }
    acc
}

/// Multinomial coefficient `binom(N; b_1, ..., b_m)` with `N = Σ b_i`, for arbitrary
/// integer parts, as the limit of `Γ(z+N+1) / Π Γ(z+b_i+1)` at `z = 0`.
///
/// The value is found by counting poles: the numerator has one pole when `N < 0`,
/// the denominator one for each negative part. More denominator poles than
/// numerator poles gives zero.
pub fn multinomial_ext(parts: &[i64]) -> Integer {
    let total: i64 = parts.iter().sum();
    let num_poles = usize::from(total < 0);
    let mut negative = parts.iter().enumerate().filter(|(_, &b)| b < 0);
    let first_negative = negative.next();
    let den_poles = usize::from(first_negative.is_some()) + negative.count();

    assert!(
        den_poles >= num_poles,
        "parts with negative sum must contain a negative part"
    );
    if den_poles > num_poles {
        return BigInt::zero();
    }
    match first_negative {
        None => multinomial_nonneg(parts),
        Some((j, &bj)) => {
            // (-1)^(b_j - N) (-b_j - 1)! / ((-N - 1)! Π_{i != j} b_i!)
            let mut reduced = Vec::with_capacity(parts.len());
            reduced.push(-total - 1);
            reduced.extend(
                parts
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != j)
                    .map(|(_, &b)| b),
            );
            let magnitude = multinomial_nonneg(&reduced);
            if (bj - total).rem_euclid(2) == 1 {
                -magnitude
            } else {
                magnitude
            }
        }
    }
}

/// True when [`multinomial_ext`] of these parts is zero, decided from signs alone.
pub fn multinomial_vanishes(parts: &[i64]) -> bool {
    let total: i64 = parts.iter().sum();
    let den_poles = parts.iter().filter(|&&b| b < 0).count();
    den_poles > usize::from(total < 0)
}

/// p-adic valuation; zero has infinite valuation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn at_least(self, e: u64) -> bool {
        match self {
            Valuation::Finite(v) => v >= e,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Valuation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Valuation::Finite(v) => serializer.serialize_u64(*v),
            Valuation::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Largest `e` with `p^e | x`, or [`Valuation::Infinite`] for `x = 0`.
pub fn padic_valuation(x: &BigInt, p: u64) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinite;
    }
    let p = BigInt::from(p);
    let mut x = x.abs();
    let mut e = 0;
    loop {
        let (q, r) = x.div_rem(&p);
        if !r.is_zero() {
            return Valuation::Finite(e);
        }
        x = q;
        e += 1;
    }
}

/// Valuation of a machine integer.
pub fn padic_valuation_i64(x: i64, p: u64) -> Valuation {
    padic_valuation(&BigInt::from(x), p)
}

/// Floor division, rounding toward negative infinity. `b` must be positive.
pub fn floor_div(a: i64, b: i64) -> i64 {
    assert!(b > 0, "floor_div requires a positive divisor");
    num_integer::Integer::div_floor(&a, &b)
}

/// `p^e` as an [`Integer`].
pub fn prime_power(p: u64, e: u64) -> Integer {
    num_traits::pow(BigInt::from(p), e as usize)
}

/// Canonical residue of `x` in `[0, m)`.
pub fn residue(x: &BigInt, m: &BigInt) -> BigInt {
    x.mod_floor(m)
}

/// Exact division; panics when `den` does not divide `num`.
pub fn exact_div(num: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "exact division failed: {num} / {den}");
    q
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Base-`p` digits of `n`, least significant first. Zero has the single digit 0.
pub fn base_digits(mut n: u64, p: u64) -> Vec<u64> {
    let mut digits = vec![n % p];
    n /= p;
    while n > 0 {
        digits.push(n % p);
        n /= p;
    }
    digits
}
