use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::FamilySpec;
use crate::error::{Error, Result};

/// Polynomial in `d` variables with nonnegative exponents and exact coefficients.
/// No zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly {
    dim: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SparsePoly {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(dim, vec![0; dim], BigInt::one())
    }

    pub fn monomial(dim: usize, exps: Vec<u32>, coeff: BigInt) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(exps, coeff);
        p
    }

    /// The variable `x_i` (zero-based).
    pub fn var(dim: usize, i: usize) -> Self {
        let mut e = vec![0; dim];
        e[i] = 1;
        Self::monomial(dim, e, BigInt::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.dim])
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: BigInt) {
        assert_eq!(exps.len(), self.dim, "exponent vector has wrong length");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * factor);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = Self::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Denominator `Π_j [1 - Σ_{i in block j} x_i] - α x_1 ⋯ x_d` of the family.
    pub fn family_denominator(spec: &FamilySpec) -> Self {
        let d = spec.dim();
        let mut prod = Self::one(d);
        for block in spec.lambda.blocks() {
            let mut factor = Self::one(d);
            for i in block {
                factor = factor.sub(&Self::var(d, i));
            }
            prod = prod.mul(&factor);
        }
        prod.sub(&Self::monomial(d, vec![1; d], BigInt::from(spec.alpha)))
    }

    /// `(1 - x_1) [(1 - x_2)(1 - x_3)(1 - x_4)(1 - x_5) - x_1 x_2 x_3]`, a five-variable
    /// denominator whose diagonal is the Apéry numbers.
    pub fn apery_five_variable() -> Self {
        let d = 5;
        let one = Self::one(d);
        let mut inner = one.clone();
        for i in 1..5 {
            inner = inner.mul(&one.sub(&Self::var(d, i)));
        }
        let inner = inner.sub(&Self::monomial(d, vec![1, 1, 1, 0, 0], BigInt::one()));
        one.sub(&Self::var(d, 0)).mul(&inner)
    }

    /// `1 - (x_1 + … + x_d) + b x_1 ⋯ x_d`.
    pub fn scan_family(d: usize, b: i64) -> Self {
        let mut p = Self::one(d);
        for i in 0..d {
            p = p.sub(&Self::var(d, i));
        }
        p.add(&Self::monomial(d, vec![1; d], BigInt::from(b)))
    }

    /// Checks the denominator can be inverted as a power series with integer
    /// coefficients.
    pub fn require_unit_constant(&self) -> Result<()> {
        if self.constant_term().is_one() {
            Ok(())
        } else {
            Err(Error::ConstantTermNotOne)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apery_denominator_terms() {
        let q = SparsePoly::family_denominator(&FamilySpec::from_parts(&[2, 2], 1));
        // 1 - x1 - x2 - x3 - x4 + x1x3 + x1x4 + x2x3 + x2x4 - x1x2x3x4
        assert_eq!(q.len(), 10);
        assert_eq!(q.constant_term(), BigInt::one());
        assert_eq!(q.coeff(&[1, 1, 1, 1]), BigInt::from(-1));
        assert_eq!(q.coeff(&[1, 0, 1, 0]), BigInt::from(1));
        assert_eq!(q.coeff(&[1, 1, 0, 0]), BigInt::zero());
    }

    #[test]
    fn franel_denominator_matches_product_form() {
        let q = SparsePoly::family_denominator(&FamilySpec::from_parts(&[1, 1, 1], 1));
        let d = 3;
        let one = SparsePoly::one(d);
        let expected = one
            .sub(&SparsePoly::var(d, 0))
            .mul(&one.sub(&SparsePoly::var(d, 1)))
            .mul(&one.sub(&SparsePoly::var(d, 2)))
            .sub(&SparsePoly::monomial(d, vec![1, 1, 1], BigInt::one()));
        assert_eq!(q, expected);
    }

    #[test]
    fn almkvist_zudilin_denominator() {
        let q = SparsePoly::family_denominator(&FamilySpec::from_parts(&[4], -27));
        assert_eq!(q, SparsePoly::scan_family(4, 27));
        assert_eq!(q.len(), 6);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = SparsePoly::var(2, 0);
        assert!(x.sub(&x).is_empty());
    }
}
