//! The coefficient family `A_{λ,α}(n)`: Taylor coefficients of
//! `1 / (Π_j [1 - Σ_{r ≤ λ_j} x_{s(j)+r}] - α x_1 ⋯ x_d)` written as a single sum over
//! `k` of products of multinomials, plus the classical one-variable sums that
//! appear as its diagonals.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binom_ext, multinomial_ext, multinomial_vanishes, Integer};
use crate::error::{Error, Result};

/// Composition `λ = (λ_1, …, λ_ℓ)` grouping the `d = Σ λ_j` variables into blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition(
                "at least one part is required".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of blocks `ℓ`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Number of variables `d`.
    pub fn dim(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn max_part(&self) -> usize {
        *self.parts.iter().max().expect("nonempty")
    }

    /// Block offsets `s(j) = λ_1 + … + λ_{j-1}` (zero-based block index).
    pub fn offsets(&self) -> Vec<usize> {
        self.parts
            .iter()
            .scan(0, |acc, &p| {
                let s = *acc;
                *acc += p;
                Some(s)
            })
            .collect()
    }

    /// Index ranges of the blocks.
    pub fn blocks(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.offsets()
            .into_iter()
            .zip(self.parts.iter())
            .map(|(s, &len)| s..s + len)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Signed multi-index `n ∈ Z^d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct MultiIndex(pub Vec<i64>);

impl MultiIndex {
    pub fn new(entries: Vec<i64>) -> Self {
        Self(entries)
    }

    pub fn diagonal(d: usize, n: i64) -> Self {
        Self(vec![n; d])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn scaled(&self, factor: i64) -> Self {
        Self(self.0.iter().map(|&n| n * factor).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&n| n >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&n| n == 0)
    }
}

impl FromStr for MultiIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|e| Error::Precondition(format!("bad index entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// A member `(λ, α)` of the family.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub lambda: Partition,
    pub alpha: i64,
}

impl FamilySpec {
    pub fn new(lambda: Partition, alpha: i64) -> Self {
        Self { lambda, alpha }
    }

    /// Convenience constructor from raw parts; panics on an invalid partition.
    pub fn from_parts(parts: &[usize], alpha: i64) -> Self {
        Self::new(
            Partition::new(parts.to_vec()).expect("valid partition"),
            alpha,
        )
    }

    pub fn dim(&self) -> usize {
        self.lambda.dim()
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lambda={} alpha={}", self.lambda, self.alpha)
    }
}

/// Named members of the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSequence {
    AperyA,
    AperyB,
    SequenceC,
    Franel,
    YangZudilin,
    Delannoy,
    AskeyGasper,
    AlmkvistZudilin,
}

impl NamedSequence {
    pub const ALL: [NamedSequence; 8] = [
        NamedSequence::AperyA,
        NamedSequence::AperyB,
        NamedSequence::SequenceC,
        NamedSequence::Franel,
        NamedSequence::YangZudilin,
        NamedSequence::Delannoy,
        NamedSequence::AskeyGasper,
        NamedSequence::AlmkvistZudilin,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            NamedSequence::AperyA => "apery-A",
            NamedSequence::AperyB => "apery-B",
            NamedSequence::SequenceC => "sequence-C",
            NamedSequence::Franel => "franel",
            NamedSequence::YangZudilin => "yang-zudilin",
            NamedSequence::Delannoy => "delannoy",
            NamedSequence::AskeyGasper => "askey-gasper",
            NamedSequence::AlmkvistZudilin => "almkvist-zudilin",
        }
    }

    pub fn spec(self) -> FamilySpec {
        let (parts, alpha): (&[usize], i64) = match self {
            NamedSequence::AperyA => (&[2, 2], 1),
            NamedSequence::AperyB => (&[2, 1], 1),
            NamedSequence::SequenceC => (&[3, 1], 1),
            NamedSequence::Franel => (&[1, 1, 1], 1),
            NamedSequence::YangZudilin => (&[1, 1, 1, 1], 1),
            NamedSequence::Delannoy => (&[2], 1),
            NamedSequence::AskeyGasper => (&[3], -4),
            NamedSequence::AlmkvistZudilin => (&[4], -27),
        };
        FamilySpec::from_parts(parts, alpha)
    }
}

impl FromStr for NamedSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedSequence::ALL
            .into_iter()
            .find(|n| n.tag() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown sequence {s:?}")))
    }
}

fn check_dim(lambda: &Partition, n: &MultiIndex) -> Result<()> {
    if lambda.dim() != n.dim() {
        return Err(Error::DimensionMismatch {
            expected: lambda.dim(),
            got: n.dim(),
        });
    }
    Ok(())
}

fn block_parts(entries: &[i64], k: i64, buf: &mut Vec<i64>) {
    buf.clear();
    buf.extend(entries.iter().map(|&m| m - k));
    buf.push(k);
}

/// True when the single term `A_λ(n; k)` vanishes, decided from signs alone.
fn term_vanishes(lambda: &Partition, n: &[i64], k: i64, buf: &mut Vec<i64>) -> bool {
    lambda.blocks().any(|block| {
        block_parts(&n[block], k, buf);
        multinomial_vanishes(buf)
    })
}

/// The single summand `A_λ(n; k) = Π_j binom(Σ_block n - (λ_j - 1) k; n_i - k, …, k)`.
pub fn lambda_term(lambda: &Partition, n: &MultiIndex, k: i64) -> Result<Integer> {
    check_dim(lambda, n)?;
    let mut buf = Vec::new();
    Ok(lambda_term_unchecked(lambda, n.entries(), k, &mut buf))
}

fn lambda_term_unchecked(lambda: &Partition, n: &[i64], k: i64, buf: &mut Vec<i64>) -> Integer {
    let mut acc = BigInt::one();
    for block in lambda.blocks() {
        block_parts(&n[block], k, buf);
        let factor = multinomial_ext(buf);
        if factor.is_zero() {
            return factor;
        }
        acc *= factor;
    }
    acc
}

/// Summation window for `k`: `[0, min n_i]` for nonnegative indices, otherwise the
/// conservative `±(1 + Σ|n_i|)`.
pub fn k_window(n: &MultiIndex) -> (i64, i64) {
    if n.is_nonnegative() {
        (0, n.entries().iter().copied().min().unwrap_or(0))
    } else {
        wide_k_window(n)
    }
}

pub fn wide_k_window(n: &MultiIndex) -> (i64, i64) {
    let w = 1 + n.entries().iter().map(|v| v.abs()).sum::<i64>();
    (-w, w)
}

fn alpha_power(alpha: i64, k: i64) -> Result<Integer> {
    if k >= 0 {
        return Ok(num_traits::pow(BigInt::from(alpha), k as usize));
    }
    match alpha {
        1 => Ok(BigInt::one()),
        -1 => Ok(BigInt::from(if k % 2 == 0 { 1 } else { -1 })),
        _ => Err(Error::NonIntegralPower { alpha, k }),
    }
}

/// `A_{λ,α}(n) = Σ_k α^k A_λ(n; k)`.
pub fn a_lambda_coeff(spec: &FamilySpec, n: &MultiIndex) -> Result<Integer> {
    let (lo, hi) = k_window(n);
    a_lambda_coeff_in_window(spec, n, lo, hi)
}

/// Same sum restricted to `k ∈ [lo, hi]`; the caller is responsible for the window
/// covering the support.
pub fn a_lambda_coeff_in_window(
    spec: &FamilySpec,
    n: &MultiIndex,
    lo: i64,
    hi: i64,
) -> Result<Integer> {
    check_dim(&spec.lambda, n)?;
    if spec.lambda.max_part() == 1 && !n.is_nonnegative() {
        return Err(Error::InfiniteSupport {
            index: n.entries().to_vec(),
        });
    }
    let entries = n.entries();
    let mut buf = Vec::with_capacity(spec.lambda.max_part() + 1);
    let mut sum = BigInt::zero();
    for k in lo..=hi {
        if term_vanishes(&spec.lambda, entries, k, &mut buf) {
            continue;
        }
        let term = lambda_term_unchecked(&spec.lambda, entries, k, &mut buf);
        sum += alpha_power(spec.alpha, k)? * term;
    }
    Ok(sum)
}

/// Apéry numbers `A(n) = Σ_k binom(n,k)^2 binom(n+k,k)^2`, for every integer `n`.
pub fn apery_sum(n: i64) -> Integer {
    single_window(n)
        .map(|k| {
            let a = binom_ext(n, k);
            if a.is_zero() {
                return a;
            }
            let b = binom_ext(n + k, k);
            &a * &a * &b * &b
        })
        .sum()
}

/// `B(n) = Σ_k binom(n,k)^2 binom(n+k,k)`, for every integer `n`.
pub fn b_sum(n: i64) -> Integer {
    single_window(n)
        .map(|k| {
            let a = binom_ext(n, k);
            if a.is_zero() {
                return a;
            }
            &a * &a * binom_ext(n + k, k)
        })
        .sum()
}

/// `C(n) = Σ_k binom(n,k)^2 binom(n+k,k) binom(n+2k,k)` for `n ≥ 0`.
pub fn c_sum(n: u32) -> Integer {
    let n = i64::from(n);
    (0..=n)
        .map(|k| {
            let a = binom_ext(n, k);
            &a * &a * binom_ext(n + k, k) * binom_ext(n + 2 * k, k)
        })
        .sum()
}

/// `Y_d(n) = Σ_k Π_i binom(n_i, k)` for nonnegative `n`.
pub fn yd_sum(n: &MultiIndex) -> Result<Integer> {
    if !n.is_nonnegative() {
        return Err(Error::Precondition(format!(
            "yd_sum needs nonnegative indices, got {n}"
        )));
    }
    let top = n.entries().iter().copied().min().unwrap_or(0);
    Ok((0..=top)
        .map(|k| {
            n.entries()
                .iter()
                .map(|&m| binom_ext(m, k))
                .product::<BigInt>()
        })
        .sum())
}

/// Almkvist–Zudilin numbers `Z(n) = Σ_k (-3)^{n-3k} binom(n,3k) binom(n+k,n) (3k)!/k!^3`.
pub fn z_sum(n: u32) -> Integer {
    let n = i64::from(n);
    (0..=n / 3)
        .map(|k| {
            let sign_pow = num_traits::pow(BigInt::from(-3), (n - 3 * k) as usize);
            // (3k)!/k!^3 = binom(3k, k) binom(2k, k)
            let central = binom_ext(3 * k, k) * binom_ext(2 * k, k);
            sign_pow * binom_ext(n, 3 * k) * binom_ext(n + k, n) * central
        })
        .sum()
}

fn single_window(n: i64) -> std::ops::RangeInclusive<i64> {
    let w = 2 + 2 * n.abs();
    -w..=w
}

/// `(A(-n), A(n-1))`, which agree for every positive `n`.
pub fn reflect_a(n: u32) -> (Integer, Integer) {
    let n = i64::from(n);
    (apery_sum(-n), apery_sum(n - 1))
}

/// `(B(-n), (-1)^{n-1} B(n-1))`, which agree for every positive `n`.
pub fn reflect_b(n: u32) -> (Integer, Integer) {
    let n = i64::from(n);
    let shifted = b_sum(n - 1);
    let rhs = if (n - 1) % 2 == 0 { shifted } else { -shifted };
    (b_sum(-n), rhs)
}

/// Both sides of `Σ binom(n,k)^2 binom(n+k,k) = Σ (-1)^{n+k} binom(n,k) binom(n+k,k)^2`.
pub fn identity25(n: u32) -> (Integer, Integer) {
    let n = i64::from(n);
    let lhs = (0..=n)
        .map(|k| {
            let a = binom_ext(n, k);
            &a * &a * binom_ext(n + k, k)
        })
        .sum();
    let rhs = (0..=n)
        .map(|k| {
            let b = binom_ext(n + k, k);
            let t = binom_ext(n, k) * &b * &b;
            if (n + k) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn mi(v: &[i64]) -> MultiIndex {
        MultiIndex::new(v.to_vec())
    }

    #[test]
    fn partition_offsets() {
        let p: Partition = "3,1,2".parse().unwrap();
        assert_eq!(p.offsets(), vec![0, 3, 4]);
        assert_eq!(p.dim(), 6);
        assert_eq!(p.len(), 3);
        assert!(Partition::new(vec![]).is_err());
        assert!("2,0".parse::<Partition>().is_err());
    }

    #[test]
    fn a_lambda_examples() {
        let apery = NamedSequence::AperyA.spec();
        assert_eq!(a_lambda_coeff(&apery, &mi(&[0, 0, 0, 0])).unwrap(), b(1));
        assert_eq!(a_lambda_coeff(&apery, &mi(&[1, 1, 1, 1])).unwrap(), b(5));
        assert_eq!(
            a_lambda_coeff(&apery, &mi(&[-1, -1, -1, -1])).unwrap(),
            b(1)
        );
        let c = NamedSequence::SequenceC.spec();
        assert_eq!(
            a_lambda_coeff(&c, &mi(&[5, 5, 5, 5])).unwrap(),
            b(4_009_657)
        );
        let y2 = FamilySpec::from_parts(&[1, 1], 1);
        assert_eq!(a_lambda_coeff(&y2, &mi(&[2, 3])).unwrap(), b(10));
    }

    #[test]
    fn a_lambda_errors() {
        let franel = NamedSequence::Franel.spec();
        assert!(matches!(
            a_lambda_coeff(&franel, &mi(&[1, -1, 2])),
            Err(Error::InfiniteSupport { .. })
        ));
        let single = FamilySpec::from_parts(&[1], 1);
        assert!(matches!(
            a_lambda_coeff(&single, &mi(&[-2])),
            Err(Error::InfiniteSupport { .. })
        ));
        assert!(matches!(
            a_lambda_coeff(&franel, &mi(&[1, 1])),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2
            })
        ));
        // α = -27 with a negative summation index leaves Z.
        let az = NamedSequence::AlmkvistZudilin.spec();
        assert!(matches!(
            a_lambda_coeff(&az, &mi(&[-1, -1, -1, -1])),
            Err(Error::NonIntegralPower { .. })
        ));
    }

    #[test]
    fn sum_examples() {
        assert_eq!(apery_sum(0), b(1));
        assert_eq!(apery_sum(1), b(5));
        assert_eq!(apery_sum(-1), b(1));
        assert_eq!(b_sum(0), b(1));
        assert_eq!(b_sum(1), b(3));
        assert_eq!(b_sum(-2), b(-3));
        assert_eq!(c_sum(0), b(1));
        assert_eq!(c_sum(1), b(7));
        assert_eq!(c_sum(5), b(4_009_657));
        assert_eq!(yd_sum(&mi(&[1, 1, 1])).unwrap(), b(2));
        assert_eq!(yd_sum(&mi(&[2, 3])).unwrap(), b(10));
        assert_eq!(yd_sum(&mi(&[0, 0, 0, 0])).unwrap(), b(1));
        assert!(yd_sum(&mi(&[1, -1])).is_err());
        assert_eq!(z_sum(0), b(1));
        assert_eq!(z_sum(1), b(-3));
        let az = NamedSequence::AlmkvistZudilin.spec();
        assert_eq!(
            z_sum(3),
            a_lambda_coeff(&az, &MultiIndex::diagonal(4, 3)).unwrap()
        );
    }

    #[test]
    fn reflections() {
        assert_eq!(reflect_a(1), (b(1), b(1)));
        assert_eq!(reflect_a(2), (b(5), b(5)));
        assert_eq!(reflect_a(3), (b(73), b(73)));
        assert_eq!(reflect_b(1), (b(1), b(1)));
        assert_eq!(reflect_b(2), (b(-3), b(-3)));
        let (l, r) = identity25(2);
        assert_eq!(l, r);
    }

    #[test]
    fn named_tags_roundtrip() {
        for s in NamedSequence::ALL {
            assert_eq!(s.tag().parse::<NamedSequence>().unwrap(), s);
        }
        assert_eq!(NamedSequence::AskeyGasper.spec().alpha, -4);
    }
}
