//! Search over the family `1 - (x_1 + … + x_d) + b x_1 ⋯ x_d` for values of `b`
//! whose Taylor coefficients satisfy `c(p^r n) ≡ c(p^{r-1} n) (mod p^{e r})`.

use rayon::prelude::*;
use serde::Serialize;

use super::cell::{ClaimClass, CongruenceCell, CongruenceReport};
use super::claims::require_prime;
use crate::coeff::MultiIndex;
use crate::error::{Error, Result};
use crate::params;
use crate::series::{expand, SparsePoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub dimension: usize,
    /// `b` values for which every cell holds, in increasing order.
    pub survivors: Vec<i64>,
    pub report: CongruenceReport,
}

/// Checks every `b` against every prime and grid point. The coefficient table for each
/// `b` is expanded once, large enough for all `p^r n`.
pub fn scan_b(
    d: usize,
    bs: &[i64],
    primes: &[u64],
    r: u32,
    exponent: u32,
    grid: &[MultiIndex],
) -> Result<ScanReport> {
    if d == 0 {
        return Err(Error::Precondition("dimension must be positive".into()));
    }
    if r == 0 {
        return Err(Error::Precondition("r must be positive".into()));
    }
    for &p in primes {
        require_prime(p)?;
    }
    for n in grid {
        if n.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: n.dim(),
            });
        }
        if !n.is_nonnegative() {
            return Err(Error::Precondition("scan grid must be nonnegative".into()));
        }
    }
    let top = primes.iter().map(|&p| p.pow(r) as usize).max().unwrap_or(1);
    let bounds: Vec<usize> = (0..d)
        .map(|i| {
            grid.iter()
                .map(|n| n.entries()[i] as usize * top)
                .max()
                .unwrap_or(0)
        })
        .collect();

    let per_b: Vec<Vec<CongruenceCell>> = bs
        .par_iter()
        .map(|&b| {
            let table = expand(&SparsePoly::scan_family(d, b), &bounds)?;
            let mut cells = Vec::with_capacity(primes.len() * grid.len());
            for &p in primes {
                let (hi, lo) = (p.pow(r) as i64, p.pow(r - 1) as i64);
                for n in grid {
                    let at = |scale: i64| {
                        let idx: Vec<usize> =
                            n.scaled(scale).entries().iter().map(|&v| v as usize).collect();
                        table.get(&idx).cloned().expect("index inside table")
                    };
                    cells.push(CongruenceCell::modular(
                        "scan-b",
                        params! {"b" => b, "n" => n.entries(), "p" => p, "r" => r, "exponent" => exponent},
                        at(hi),
                        at(lo),
                        p,
                        u64::from(exponent * r),
                    ));
                }
            }
            Ok(cells)
        })
        .collect::<Result<_>>()?;

    let mut survivors: Vec<i64> = bs
        .iter()
        .zip(&per_b)
        .filter(|(_, cells)| cells.iter().all(|c| c.holds))
        .map(|(&b, _)| b)
        .collect();
    survivors.sort_unstable();
    let range = match (bs.iter().min(), bs.iter().max()) {
        (Some(lo), Some(hi)) => format!("[{lo}, {hi}] ({} values)", bs.len()),
        _ => "no values".to_string(),
    };
    let grid_desc = format!(
        "d={d}, b in {range}, primes {primes:?}, r={r}, exponent {exponent}, {} points",
        grid.len()
    );
    Ok(ScanReport {
        dimension: d,
        survivors,
        report: CongruenceReport::new(
            "scan-b",
            ClaimClass::ConjectureSupport,
            grid_desc,
            per_b.into_iter().flatten().collect(),
        ),
    })
}

/// Diagonal points `(n, …, n)` for `1 ≤ n ≤ max`.
pub fn diagonal_grid(d: usize, max: i64) -> Vec<MultiIndex> {
    (1..=max).map(|n| MultiIndex::diagonal(d, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn askey_gasper_value_survives() {
        let bs: Vec<i64> = (-6..=6).collect();
        let s = scan_b(3, &bs, &[5], 1, 3, &diagonal_grid(3, 1)).unwrap();
        assert!(s.survivors.contains(&4));
        assert!(s.survivors.contains(&0));
        assert_eq!(s.report.summary.tested, bs.len());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(scan_b(3, &[1], &[4], 1, 3, &diagonal_grid(3, 1)).is_err());
        assert!(scan_b(3, &[1], &[5], 1, 3, &diagonal_grid(2, 1)).is_err());
    }
}
