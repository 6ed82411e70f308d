//! Truncated q-series with integer coefficients and eta quotients
//! `q^{Σ s e / 24} Π_s Π_{n ≥ 1} (1 - q^{s n})^e`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::apery_sum;
use crate::error::{Error, Result};

/// Power series `c_0 + c_1 q + … + c_N q^N + O(q^{N+1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<BigInt>,
}

impl QSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        Self { coeffs }
    }

    /// Truncation order `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order(), other.order());
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiply by `q^k`, dropping terms past the order.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for i in k..=n {
            out.coeffs[i] = self.coeffs[i - k].clone();
        }
        out
    }

    /// In-place multiplication by `(1 - q^m)^e`.
    fn mul_binomial_factor(&mut self, m: usize, e: i64) {
        let n = self.order();
        if m > n {
            return;
        }
        if e >= 0 {
            for _ in 0..e {
                for i in (m..=n).rev() {
                    let t = self.coeffs[i - m].clone();
                    self.coeffs[i] -= t;
                }
            }
        } else {
            // 1/(1 - q^m) = Σ q^{mk}: running sum along the stride.
            for _ in 0..(-e) {
                for i in m..=n {
                    let t = self.coeffs[i - m].clone();
                    self.coeffs[i] += t;
                }
            }
        }
    }
}

/// One factor `η(s τ)^e` of an eta quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EtaFactor {
    pub scale: u32,
    pub exponent: i64,
}

impl EtaFactor {
    pub const fn new(scale: u32, exponent: i64) -> Self {
        Self { scale, exponent }
    }
}

/// `t = (η(τ) η(6τ) / (η(2τ) η(3τ)))^12`.
pub const HAUPTMODUL_T: [EtaFactor; 4] = [
    EtaFactor::new(1, 12),
    EtaFactor::new(6, 12),
    EtaFactor::new(2, -12),
    EtaFactor::new(3, -12),
];

/// `F = η(2τ)^7 η(3τ)^7 / (η(τ)^5 η(6τ)^5)`.
pub const FORM_F: [EtaFactor; 4] = [
    EtaFactor::new(2, 7),
    EtaFactor::new(3, 7),
    EtaFactor::new(1, -5),
    EtaFactor::new(6, -5),
];

/// `Π_s Π_{n ≥ 1} (1 - q^{s n})^e` to order `order`, i.e. the eta quotient with its
/// fractional leading power `q^{Σ s e / 24}` removed.
pub fn euler_product(factors: &[EtaFactor], order: usize) -> Result<QSeries> {
    let mut series = QSeries::one(order);
    for f in factors {
        let s = f.scale as usize;
        if s == 0 {
            return Err(Error::Precondition("eta scale must be positive".into()));
        }
        for k in 1..=order / s {
            series.mul_binomial_factor(s * k, f.exponent);
        }
    }
    Ok(series)
}

/// q-expansion of an eta quotient to order `order`. The leading power
/// `Σ s e / 24` must be a nonnegative integer.
pub fn eta_quotient_qexp(factors: &[EtaFactor], order: usize) -> Result<QSeries> {
    let numerator: i64 = factors
        .iter()
        .map(|f| i64::from(f.scale) * f.exponent)
        .sum();
    if numerator < 0 || numerator % 24 != 0 {
        return Err(Error::NonIntegralLeadingExponent { numerator });
    }
    let lead = (numerator / 24) as usize;
    if lead > order {
        return Ok(QSeries::zero(order));
    }
    Ok(euler_product(factors, order)?.shift(lead))
}

/// `Σ_{n ≤ N} A(n) t^n` and `F`, both to order `N`.
pub fn modular_parametrization_sides(order: usize) -> Result<(QSeries, QSeries)> {
    let t = eta_quotient_qexp(&HAUPTMODUL_T, order)?;
    let f = eta_quotient_qexp(&FORM_F, order)?;
    let mut lhs = QSeries::zero(order);
    let mut t_pow = QSeries::one(order);
    for n in 0..=order {
        lhs = lhs.add(&t_pow.scale(&apery_sum(n as i64)));
        t_pow = t_pow.mul(&t);
    }
    Ok((lhs, f))
}

/// Checks `Σ A(n) t^n = F` through `q^N`.
pub fn verify_modular_parametrization(order: usize) -> Result<bool> {
    let (lhs, rhs) = modular_parametrization_sides(order)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn euler_product_pentagonal_signs() {
        assert!(matches!(
            eta_quotient_qexp(&[EtaFactor::new(1, 1)], 5),
            Err(Error::NonIntegralLeadingExponent { numerator: 1 })
        ));
        let s = euler_product(&[EtaFactor::new(1, 1)], 7).unwrap();
        assert_eq!(s.coeffs(), ints(&[1, -1, -1, 0, 0, 1, 0, 1]).as_slice());
    }

    #[test]
    fn hauptmodul_and_form_leading_terms() {
        let t = eta_quotient_qexp(&HAUPTMODUL_T, 4).unwrap();
        assert_eq!(t.coeff(0), &BigInt::zero());
        assert_eq!(t.coeff(1), &BigInt::one());
        let f = eta_quotient_qexp(&FORM_F, 4).unwrap();
        assert_eq!(f.coeff(0), &BigInt::one());
    }

    #[test]
    fn inverse_factor_is_geometric() {
        let mut s = QSeries::one(6);
        s.mul_binomial_factor(2, -1);
        assert_eq!(s.coeffs(), ints(&[1, 0, 1, 0, 1, 0, 1]).as_slice());
        s.mul_binomial_factor(2, 1);
        assert_eq!(s, QSeries::one(6));
    }

    #[test]
    fn modular_parametrization_small_orders() {
        assert!(verify_modular_parametrization(0).unwrap());
        assert!(verify_modular_parametrization(10).unwrap());
    }
}
