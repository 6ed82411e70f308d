use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::poly::SparsePoly;
use crate::error::{Error, Result};

/// Default cap on the number of cells in a dense table.
pub const DEFAULT_MAX_CELLS: u128 = 2_000_000;

/// Order in which cells of the table are filled. Both respect the recurrence since
/// every dependency `n - m` precedes `n` in either order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FillOrder {
    #[default]
    TotalDegree,
    Lexicographic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExpandConfig {
    pub max_cells: u128,
    pub order: FillOrder,
}

impl Default for ExpandConfig {
    fn default() -> Self {
        Self {
            max_cells: DEFAULT_MAX_CELLS,
            order: FillOrder::default(),
        }
    }
}

/// Dense table of the Taylor coefficients of `1/Q` for `0 ≤ n_i ≤ bounds[i]`,
/// stored row-major with the last variable fastest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffTable {
    bounds: Vec<usize>,
    strides: Vec<usize>,
    entries: Vec<BigInt>,
}

impl CoeffTable {
    pub fn dim(&self) -> usize {
        self.bounds.len()
    }

    pub fn bounds(&self) -> &[usize] {
        &self.bounds
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn offset(&self, n: &[usize]) -> Option<usize> {
        if n.len() != self.dim() || n.iter().zip(&self.bounds).any(|(a, b)| a > b) {
            return None;
        }
        Some(n.iter().zip(&self.strides).map(|(a, s)| a * s).sum())
    }

    pub fn get(&self, n: &[usize]) -> Option<&BigInt> {
        self.offset(n).map(|o| &self.entries[o])
    }

    /// Coefficient at a signed index; `None` when outside the table or negative.
    pub fn get_signed(&self, n: &[i64]) -> Option<&BigInt> {
        if n.iter().any(|&v| v < 0) {
            return None;
        }
        let n: Vec<usize> = n.iter().map(|&v| v as usize).collect();
        self.get(&n)
    }

    /// Diagonal coefficients `c(k, …, k)` for `k ≤ min bound`.
    pub fn diagonal(&self) -> Vec<BigInt> {
        let top = self.bounds.iter().copied().min().unwrap_or(0);
        (0..=top)
            .map(|k| self.get(&vec![k; self.dim()]).cloned().expect("in range"))
            .collect()
    }

    /// All `(index, coefficient)` pairs in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &BigInt)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(|(o, c)| (decode(o, &self.strides), c))
    }

    pub fn to_export(&self) -> TableExport {
        TableExport {
            d: self.dim(),
            bounds: self.bounds.clone(),
            entries: self
                .iter()
                .map(|(n, c)| ExportEntry {
                    n,
                    c: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_export()).expect("table serializes")
    }
}

/// JSON shape of an exported table; coefficients are decimal strings.
#[derive(Debug, Clone, Serialize)]
pub struct TableExport {
    pub d: usize,
    pub bounds: Vec<usize>,
    pub entries: Vec<ExportEntry>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportEntry {
    pub n: Vec<usize>,
    pub c: String,
}

fn decode(mut offset: usize, strides: &[usize]) -> Vec<usize> {
    strides
        .iter()
        .map(|s| {
            let v = offset / s;
            offset %= s;
            v
        })
        .collect()
}

/// Number of cells for the given bounds, without overflow.
pub fn cell_count(bounds: &[usize]) -> u128 {
    bounds
        .iter()
        .try_fold(1u128, |acc, &b| acc.checked_mul(b as u128 + 1))
        .unwrap_or(u128::MAX)
}

/// Taylor coefficients of `1/Q` via `c(0) = 1`, `c(n) = -Σ_{0 ≠ m ≤ n} q(m) c(n - m)`.
pub fn expand(q: &SparsePoly, bounds: &[usize]) -> Result<CoeffTable> {
    expand_with(q, bounds, ExpandConfig::default())
}

pub fn expand_with(q: &SparsePoly, bounds: &[usize], config: ExpandConfig) -> Result<CoeffTable> {
    if bounds.len() != q.dim() {
        return Err(Error::DimensionMismatch {
            expected: q.dim(),
            got: bounds.len(),
        });
    }
    q.require_unit_constant()?;
    let cells = cell_count(bounds);
    if cells > config.max_cells {
        return Err(Error::TableTooLarge {
            cells,
            budget: config.max_cells,
        });
    }
    let cells = cells as usize;
    let d = bounds.len();
    let mut strides = vec![1usize; d];
    for i in (0..d.saturating_sub(1)).rev() {
        strides[i] = strides[i + 1] * (bounds[i + 1] + 1);
    }

    // Nonconstant terms that can reach inside the table.
    let steps: Vec<(Vec<usize>, usize, BigInt)> = q
        .terms()
        .filter(|(e, _)| e.iter().any(|&x| x > 0))
        .filter(|(e, _)| e.iter().zip(bounds).all(|(&x, &b)| x as usize <= b))
        .map(|(e, c)| {
            let e: Vec<usize> = e.iter().map(|&x| x as usize).collect();
            let off = e.iter().zip(&strides).map(|(a, s)| a * s).sum();
            (e, off, c.clone())
        })
        .collect();

    let order: Vec<usize> = match config.order {
        FillOrder::Lexicographic => (0..cells).collect(),
        FillOrder::TotalDegree => {
            let mut idx: Vec<(usize, usize)> = (0..cells)
                .map(|o| (decode(o, &strides).iter().sum(), o))
                .collect();
            idx.sort_unstable();
            idx.into_iter().map(|(_, o)| o).collect()
        }
    };

    let mut entries = vec![BigInt::zero(); cells];
    let mut filled = vec![false; cells];
    for o in order {
        if o == 0 {
            entries[0] = BigInt::from(1);
            filled[0] = true;
            continue;
        }
        let n = decode(o, &strides);
        let mut acc = BigInt::zero();
        for (m, moff, coeff) in &steps {
            if n.iter().zip(m).all(|(a, b)| a >= b) {
                let src = o - moff;
                debug_assert!(
                    filled[src],
                    "fill order visited a cell before its dependency"
                );
                acc -= coeff * &entries[src];
            }
        }
        entries[o] = acc;
        filled[o] = true;
    }

    Ok(CoeffTable {
        bounds: bounds.to_vec(),
        strides,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{apery_sum, FamilySpec};

    #[test]
    fn apery_table_small_values() {
        let q = SparsePoly::family_denominator(&FamilySpec::from_parts(&[2, 2], 1));
        let t = expand(&q, &[2, 2, 2, 2]).unwrap();
        assert_eq!(t.get(&[0, 0, 0, 0]), Some(&BigInt::from(1)));
        assert_eq!(t.get(&[1, 1, 1, 1]), Some(&BigInt::from(5)));
        assert_eq!(t.get(&[1, 0, 0, 0]), Some(&BigInt::from(1)));
        assert_eq!(t.get(&[3, 0, 0, 0]), None);
        assert_eq!(t.diagonal(), vec![apery_sum(0), apery_sum(1), apery_sum(2)]);
    }

    #[test]
    fn errors() {
        let q = SparsePoly::family_denominator(&FamilySpec::from_parts(&[2, 2], 1));
        assert_eq!(
            expand(&q, &[1, 1]).unwrap_err(),
            Error::DimensionMismatch {
                expected: 4,
                got: 2
            }
        );
        let two = SparsePoly::one(2).scale(&BigInt::from(2));
        assert_eq!(
            expand(&two, &[1, 1]).unwrap_err(),
            Error::ConstantTermNotOne
        );
        let small = ExpandConfig {
            max_cells: 100,
            ..Default::default()
        };
        assert_eq!(
            expand_with(&q, &[3, 3, 3, 3], small).unwrap_err(),
            Error::TableTooLarge {
                cells: 256,
                budget: 100
            }
        );
    }

    #[test]
    fn fill_orders_agree() {
        let q = SparsePoly::family_denominator(&FamilySpec::from_parts(&[2, 1], 1));
        let a = expand_with(&q, &[4, 3, 5], ExpandConfig::default()).unwrap();
        let b = expand_with(
            &q,
            &[4, 3, 5],
            ExpandConfig {
                order: FillOrder::Lexicographic,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn json_export_shape() {
        let q = SparsePoly::family_denominator(&FamilySpec::from_parts(&[2, 1], 1));
        let t = expand(&q, &[0, 0, 0]).unwrap();
        assert_eq!(
            t.to_json(),
            r#"{"d":3,"bounds":[0,0,0],"entries":[{"n":[0,0,0],"c":"1"}]}"#
        );
        let t = expand(&q, &[3, 3, 3]).unwrap();
        assert_eq!(t.len(), 64);
        assert_eq!(t.get(&[1, 1, 1]), Some(&BigInt::from(3)));
    }
}
