//! Coefficients of products of linear forms and the determinant identity
//! `[x^m] Π_i (Σ_j A_ij x_j)^{m_i} = [x^m] 1/det(I - A X)`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::SparsePoly;
use super::table::expand;
use crate::coeff::MultiIndex;
use crate::error::{Error, Result};

/// Largest matrix accepted by the Leibniz expansion.
pub const MAX_LEIBNIZ_DIM: usize = 5;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: r.len(),
            });
        }
        Ok(Self { n, rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Self { n, rows }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            rows: vec![vec![0; n]; n],
        }
    }

    /// The 4×4 matrix `M` with `det(I - M X) = (1 - x1 - x2)(1 - x3 - x4) - x1 x2 x3 x4`.
    pub fn apery() -> Self {
        Self {
            n: 4,
            rows: vec![
                vec![1, 1, 1, 0],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 1],
                vec![0, 1, 1, 1],
            ],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }
}

/// `[x^m] Π_i (Σ_j A_ij x_j)^{m_i}`, expanding factor by factor and discarding
/// monomials that already exceed `m`.
pub fn linear_form_coefficient(a: &IntMatrix, m: &MultiIndex) -> Result<BigInt> {
    let n = a.dim();
    if m.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: m.dim(),
        });
    }
    if !m.is_nonnegative() {
        return Err(Error::Precondition("exponents must be nonnegative".into()));
    }
    let target: Vec<u32> = m.entries().iter().map(|&v| v as u32).collect();
    let mut current: HashMap<Vec<u32>, BigInt> = HashMap::new();
    current.insert(vec![0; n], BigInt::one());
    for (row, &power) in a.rows().iter().zip(&target) {
        for _ in 0..power {
            let mut next: HashMap<Vec<u32>, BigInt> = HashMap::with_capacity(current.len() * n);
            for (e, c) in &current {
                for (j, &aij) in row.iter().enumerate() {
                    if aij == 0 || e[j] >= target[j] {
                        continue;
                    }
                    let mut e2 = e.clone();
                    e2[j] += 1;
                    *next.entry(e2).or_default() += c * aij;
                }
            }
            next.retain(|_, c| !c.is_zero());
            current = next;
        }
    }
    Ok(current.remove(&target).unwrap_or_default())
}

/// Permutations of `0..n` with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, i64)>) {
        let n = used.len();
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// `det(I - A X)` as a polynomial in `x_1, …, x_n`, by the Leibniz formula.
pub fn det_i_minus_ax(a: &IntMatrix) -> Result<SparsePoly> {
    let n = a.dim();
    if n > MAX_LEIBNIZ_DIM {
        return Err(Error::MatrixTooLarge(n));
    }
    let entry = |i: usize, j: usize| {
        let mut p = SparsePoly::zero(n);
        if i == j {
            p.add_term(vec![0; n], BigInt::one());
        }
        let mut e = vec![0; n];
        e[j] = 1;
        p.add_term(e, BigInt::from(-a.rows()[i][j]));
        p
    };
    let mut det = SparsePoly::zero(n);
    for (perm, sign) in permutations(n) {
        let mut term = SparsePoly::one(n);
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&entry(i, j));
            if term.is_empty() {
                break;
            }
        }
        det = det.add(&term.scale(&BigInt::from(sign)));
    }
    Ok(det)
}

/// Compares the `x^m` coefficient of `1/det(I - A X)` (by series expansion) with the
/// product of linear forms.
pub fn macmahon_check(a: &IntMatrix, m: &MultiIndex) -> Result<bool> {
    let (series, forms) = macmahon_sides(a, m)?;
    Ok(series == forms)
}

/// Both sides of the identity: `(series coefficient, linear-form coefficient)`.
pub fn macmahon_sides(a: &IntMatrix, m: &MultiIndex) -> Result<(BigInt, BigInt)> {
    let forms = linear_form_coefficient(a, m)?;
    let det = det_i_minus_ax(a)?;
    let bounds: Vec<usize> = m.entries().iter().map(|&v| v as usize).collect();
    let table = expand(&det, &bounds)?;
    let series = table.get(&bounds).cloned().expect("target inside table");
    Ok((series, forms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::FamilySpec;

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn apery_matrix_determinant() {
        let det = det_i_minus_ax(&IntMatrix::apery()).unwrap();
        let expected = SparsePoly::family_denominator(&FamilySpec::from_parts(&[2, 2], 1));
        assert_eq!(det, expected);
    }

    #[test]
    fn linear_form_examples() {
        assert_eq!(
            linear_form_coefficient(&IntMatrix::apery(), &mi(&[1, 1, 1, 1])).unwrap(),
            BigInt::from(5)
        );
        for m in [[0, 0, 0], [1, 2, 3], [4, 0, 1]] {
            assert_eq!(
                linear_form_coefficient(&IntMatrix::identity(3), &mi(&m)).unwrap(),
                BigInt::one()
            );
        }
        // (x1+x2+x3)^n1 (x1+x2)^n2 (x2+x3)^n3
        let b = IntMatrix::new(vec![vec![1, 1, 1], vec![1, 1, 0], vec![0, 1, 1]]).unwrap();
        assert_eq!(
            linear_form_coefficient(&b, &mi(&[1, 1, 1])).unwrap(),
            BigInt::from(3)
        );
        assert!(linear_form_coefficient(&b, &mi(&[1, 1])).is_err());
    }

    #[test]
    fn macmahon_examples() {
        assert!(macmahon_check(&IntMatrix::zero(3), &mi(&[0, 0, 0])).unwrap());
        assert!(macmahon_check(&IntMatrix::apery(), &mi(&[1, 2, 1, 2])).unwrap());
        assert!(matches!(
            macmahon_check(&IntMatrix::identity(6), &mi(&[0; 6])),
            Err(Error::MatrixTooLarge(6))
        ));
        assert!(IntMatrix::new(vec![vec![1, 2], vec![3]]).is_err());
    }

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().map(|(_, s)| s).sum::<i64>(), 0);
    }
}
