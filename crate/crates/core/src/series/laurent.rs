use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeff::MultiIndex;
use crate::error::{Error, Result};

/// Laurent polynomial in `d` variables: finitely many terms with signed exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    dim: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(vec![0; dim], BigInt::one())
    }

    pub fn monomial(exps: Vec<i64>, coeff: BigInt) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, coeff);
        p
    }

    /// Sum of unit monomials, e.g. `x_1 + x_2 + 1`.
    pub fn from_monomials(dim: usize, monomials: &[&[i64]]) -> Self {
        let mut p = Self::zero(dim);
        for m in monomials {
            p.add_term(m.to_vec(), BigInt::one());
        }
        p
    }

    /// Linear form `Σ_j c_j x_j`.
    pub fn linear_form(coeffs: &[i64]) -> Self {
        let d = coeffs.len();
        let mut p = Self::zero(d);
        for (j, &c) in coeffs.iter().enumerate() {
            let mut e = vec![0; d];
            e[j] = 1;
            p.add_term(e, BigInt::from(c));
        }
        p
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

    pub fn add_term(&mut self, exps: Vec<i64>, coeff: BigInt) {
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

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&vec![0; self.dim])
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

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.dim);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by `x^shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.dim);
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// `(x_1 + x_2)(x_3 + 1)(x_1 + x_2 + x_3)(x_2 + x_3 + 1) / (x_1 x_2 x_3)`, whose
    /// powers have the Apéry numbers as constant terms.
    pub fn apery() -> Self {
        let f1 = Self::from_monomials(3, &[&[1, 0, 0], &[0, 1, 0]]);
        let f2 = Self::from_monomials(3, &[&[0, 0, 1], &[0, 0, 0]]);
        let f3 = Self::from_monomials(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let f4 = Self::from_monomials(3, &[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]);
        f1.mul(&f2).mul(&f3).mul(&f4).shift(&[-1, -1, -1])
    }

    /// The four linear forms `x_1+x_2+x_3, x_1+x_2, x_3+x_4, x_2+x_3+x_4` whose mixed
    /// powers carry the four-variable Apéry coefficients.
    pub fn apery_forms() -> Vec<Self> {
        vec![
            Self::linear_form(&[1, 1, 1, 0]),
            Self::linear_form(&[1, 1, 0, 0]),
            Self::linear_form(&[0, 0, 1, 1]),
            Self::linear_form(&[0, 1, 1, 1]),
        ]
    }
}

/// Constant term of `L^n`.
pub fn constant_term_power(l: &LaurentPoly, n: u32) -> BigInt {
    l.pow(n).constant_term()
}

/// Constant term of `Π_i forms_i^{n_i} / x^n`.
pub fn mixed_constant_term(forms: &[LaurentPoly], exponents: &MultiIndex) -> Result<BigInt> {
    if forms.len() != exponents.dim() {
        return Err(Error::DimensionMismatch {
            expected: forms.len(),
            got: exponents.dim(),
        });
    }
    if !exponents.is_nonnegative() {
        return Err(Error::Precondition(
            "mixed constant term needs nonnegative exponents".into(),
        ));
    }
    let dim = forms.first().map_or(0, LaurentPoly::dim);
    if let Some(f) = forms.iter().find(|f| f.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: f.dim(),
        });
    }
    if dim != exponents.dim() {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: exponents.dim(),
        });
    }
    let mut acc = LaurentPoly::one(dim);
    for (f, &e) in forms.iter().zip(exponents.entries()) {
        acc = acc.mul(&f.pow(e as u32));
    }
    let neg: Vec<i64> = exponents.entries().iter().map(|&e| -e).collect();
    Ok(acc.shift(&neg).constant_term())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{a_lambda_coeff, apery_sum, FamilySpec};

    #[test]
    fn apery_constant_terms() {
        let l = LaurentPoly::apery();
        assert_eq!(constant_term_power(&l, 0), BigInt::one());
        assert_eq!(constant_term_power(&l, 1), BigInt::from(5));
        assert_eq!(constant_term_power(&l, 4), apery_sum(4));
    }

    #[test]
    fn apery_forms_mixed() {
        let forms = LaurentPoly::apery_forms();
        let n = |v: &[i64]| MultiIndex::new(v.to_vec());
        assert_eq!(
            mixed_constant_term(&forms, &n(&[1, 1, 1, 1])).unwrap(),
            BigInt::from(5)
        );
        assert_eq!(
            mixed_constant_term(&forms, &n(&[0, 0, 0, 0])).unwrap(),
            BigInt::one()
        );
        let spec = FamilySpec::from_parts(&[2, 2], 1);
        assert_eq!(
            mixed_constant_term(&forms, &n(&[2, 1, 1, 1])).unwrap(),
            a_lambda_coeff(&spec, &n(&[2, 1, 1, 1])).unwrap()
        );
        assert!(mixed_constant_term(&forms, &n(&[1, 1])).is_err());
        assert!(mixed_constant_term(&forms, &n(&[1, -1, 1, 1])).is_err());
    }
}
