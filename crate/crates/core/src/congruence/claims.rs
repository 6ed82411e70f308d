//! Single-cell checks, one per congruence claim.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cell::CongruenceCell;
use crate::arith::{
    base_digits, binom_ext, floor_div, is_prime, padic_valuation_i64, prime_power, residue,
};
use crate::coeff::{
    a_lambda_coeff, apery_sum, b_sum, identity25, lambda_term, reflect_a, reflect_b, FamilySpec,
    MultiIndex, NamedSequence, Partition,
};
use crate::error::{Error, Result};
use crate::params;

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(msg()))
    }
}

fn require_exponent(exponent: u32) -> Result<()> {
    require(exponent == 2 || exponent == 3, || {
        format!("exponent must be 2 or 3, got {exponent}")
    })
}

fn pow_i64(p: u64, e: u32) -> i64 {
    (p as i64).pow(e)
}

fn sign_pow(e: i64) -> BigInt {
    if e.rem_euclid(2) == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `A(p^r n) ≡ A(p^{r-1} n) (mod p^{exponent r})` for any integral `α`; shared by the
/// theorem and conjecture checks.
fn two_term_cell(
    claim: &str,
    spec: &FamilySpec,
    n: &MultiIndex,
    p: u64,
    r: u32,
    exponent: u32,
) -> Result<CongruenceCell> {
    require_prime(p)?;
    require(r >= 1, || "r must be positive".into())?;
    let high = n.scaled(pow_i64(p, r));
    let low = n.scaled(pow_i64(p, r - 1));
    let lhs = a_lambda_coeff(spec, &high)?;
    let rhs = a_lambda_coeff(spec, &low)?;
    Ok(CongruenceCell::modular(
        claim,
        params! {
            "lambda" => spec.lambda.parts(),
            "alpha" => spec.alpha,
            "n" => n.entries(),
            "p" => p,
            "r" => r,
            "exponent" => exponent,
        },
        lhs,
        rhs,
        p,
        u64::from(exponent * r),
    ))
}

/// Multivariate supercongruence for `α = ε ∈ {-1, 1}`.
pub fn verify_supercongruence(
    spec: &FamilySpec,
    n: &MultiIndex,
    p: u64,
    r: u32,
    exponent: u32,
) -> Result<CongruenceCell> {
    require(spec.alpha == 1 || spec.alpha == -1, || {
        format!("alpha must be 1 or -1, got {}", spec.alpha)
    })?;
    require_exponent(exponent)?;
    two_term_cell("supercongruence", spec, n, p, r, exponent)
}

/// `G(p^r n) ≡ G(p^{r-1} n) (mod p^{3r})` for the Askey–Gasper coefficients.
pub fn verify_conjecture_g(n: &MultiIndex, p: u64, r: u32) -> Result<CongruenceCell> {
    require(n.dim() == 3, || "conjecture G needs a 3-index".into())?;
    require(p >= 5, || "conjecture G is stated for p >= 5".into())?;
    two_term_cell(
        "conjecture-g",
        &NamedSequence::AskeyGasper.spec(),
        n,
        p,
        r,
        3,
    )
}

/// `Z(p^r n) ≡ Z(p^{r-1} n) (mod p^{3r})` for the Almkvist–Zudilin coefficients.
pub fn verify_conjecture_z(n: &MultiIndex, p: u64, r: u32) -> Result<CongruenceCell> {
    require(n.dim() == 4, || "conjecture Z needs a 4-index".into())?;
    require(p >= 5, || "conjecture Z is stated for p >= 5".into())?;
    two_term_cell(
        "conjecture-z",
        &NamedSequence::AlmkvistZudilin.spec(),
        n,
        p,
        r,
        3,
    )
}

/// Dwork congruence for a sequence given by `value`.
pub fn dwork_cell_with(
    value: impl Fn(i64) -> BigInt,
    m: u64,
    n: u64,
    p: u64,
    r: u32,
) -> Result<CongruenceCell> {
    require_prime(p)?;
    require(r >= 1, || "r must be positive".into())?;
    let (m, n) = (m as i64, n as i64);
    let n_low = floor_div(n, p as i64);
    let lhs = value(pow_i64(p, r) * m + n) * value(n_low);
    let rhs = value(pow_i64(p, r - 1) * m + n_low) * value(n);
    Ok(CongruenceCell::modular(
        "dwork",
        params! {"m" => m, "n" => n, "p" => p, "r" => r},
        lhs,
        rhs,
        p,
        u64::from(r),
    ))
}

/// `A(p^r m + n) A(⌊n/p⌋) ≡ A(p^{r-1} m + ⌊n/p⌋) A(n) (mod p^r)`.
pub fn verify_dwork(m: u64, n: u64, p: u64, r: u32) -> Result<CongruenceCell> {
    dwork_cell_with(apery_sum, m, n, p, r)
}

/// Lucas congruence for a sequence given by `value`.
pub fn lucas_cell_with(value: impl Fn(i64) -> BigInt, n: u64, p: u64) -> Result<CongruenceCell> {
    require_prime(p)?;
    let digits = base_digits(n, p);
    let rhs = digits.iter().map(|&d| value(d as i64)).product();
    Ok(CongruenceCell::modular(
        "lucas",
        params! {"n" => n, "p" => p, "digits" => digits},
        value(n as i64),
        rhs,
        p,
        1,
    ))
}

/// `A(n) ≡ Π A(n_i) (mod p)` over the base-`p` digits of `n`.
pub fn verify_lucas(n: u64, p: u64) -> Result<CongruenceCell> {
    lucas_cell_with(apery_sum, n, p)
}

/// Sign in the Jacobsthal congruence: `-1` exactly when `p = 2` and `(a, b) ≡ (0, 1)`.
pub fn jacobsthal_sign(a: i64, b: i64, p: u64) -> i64 {
    if p == 2 && a.rem_euclid(2) == 0 && b.rem_euclid(2) == 1 {
        -1
    } else {
        1
    }
}

/// Modulus exponent `q = v_p(p^3 a b (a - b) / 12)`; `None` when `a b (a - b) = 0`.
pub fn jacobsthal_exponent(a: i64, b: i64, p: u64) -> Option<u64> {
    if a == 0 || b == 0 || a == b {
        return None;
    }
    let v = |x: i64| {
        padic_valuation_i64(x, p)
            .finite()
            .expect("nonzero argument")
    };
    Some(3 + v(a) + v(b) + v(a - b) - v(12))
}

/// `binom(ap, bp) / binom(a, b) ≡ ε (mod p^q)` for all integers `a, b`.
pub fn verify_jacobsthal(a: i64, b: i64, p: u64) -> Result<CongruenceCell> {
    require_prime(p)?;
    let pi = p as i64;
    let eps = jacobsthal_sign(a, b, p);
    let lhs = binom_ext(a * pi, b * pi);
    let base = binom_ext(a, b);
    let rhs = &base * eps;
    let q = jacobsthal_exponent(a, b, p);
    let params = params! {"a" => a, "b" => b, "p" => p, "epsilon" => eps, "q" => q};
    match q {
        Some(q) if !base.is_zero() => Ok(CongruenceCell::ratio(
            "jacobsthal",
            params,
            lhs,
            rhs,
            &base,
            p,
            q,
        )),
        // Degenerate a b (a - b) = 0, or both binomials vanish: exact equality.
        _ => Ok(CongruenceCell::exact("jacobsthal", params, lhs, rhs)),
    }
}

/// `binom(pa, pb) ≡ binom(a, b) (mod p^3)` for `p ≥ 5`.
pub fn verify_ljunggren(a: i64, b: i64, p: u64) -> Result<CongruenceCell> {
    require_prime(p)?;
    require(p >= 5, || "Ljunggren's congruence needs p >= 5".into())?;
    require(a >= 0 && b >= 0, || "a and b must be nonnegative".into())?;
    let pi = p as i64;
    Ok(CongruenceCell::modular(
        "ljunggren",
        params! {"a" => a, "b" => b, "p" => p},
        binom_ext(a * pi, b * pi),
        binom_ext(a, b),
        p,
        3,
    ))
}

/// `Σ_{1 ≤ k < p^r, p ∤ k} ε^k / k^2 ≡ 0 (mod p^r)`, inverses taken mod `p^r`.
pub fn verify_powersum(p: u64, r: u32, eps: i64) -> Result<CongruenceCell> {
    require_prime(p)?;
    require(p >= 5, || "the power sum lemma needs p >= 5".into())?;
    require(eps == 1 || eps == -1, || "epsilon must be 1 or -1".into())?;
    let modulus = prime_power(p, u64::from(r));
    let mut sum = BigInt::zero();
    let top = pow_i64(p, r);
    for k in (1..top).filter(|k| k % p as i64 != 0) {
        let k2 = BigInt::from(k * k);
        let inv = k2.modinv(&modulus).expect("k is a unit modulo p^r");
        if eps == -1 && k % 2 == 1 {
            sum -= inv;
        } else {
            sum += inv;
        }
    }
    Ok(CongruenceCell::modular(
        "powersum",
        params! {"p" => p, "r" => r, "epsilon" => eps},
        residue(&sum, &modulus),
        BigInt::zero(),
        p,
        u64::from(r),
    ))
}

/// `A_λ(p^r n; p k) ≡ A_λ(p^{r-1} n; k) (mod p^{exponent r})` for single summands.
pub fn verify_term_lemma(
    lambda: &Partition,
    n: &MultiIndex,
    k: i64,
    p: u64,
    r: u32,
    exponent: u32,
) -> Result<CongruenceCell> {
    require_prime(p)?;
    require_exponent(exponent)?;
    require(r >= 1, || "r must be positive".into())?;
    require(lambda.len() >= 2, || {
        "the term lemma needs at least two blocks".into()
    })?;
    if exponent == 3 {
        require(lambda.max_part() <= 2 && p >= 5, || {
            "modulus p^{3r} needs parts <= 2 and p >= 5".into()
        })?;
    }
    let lhs = lambda_term(lambda, &n.scaled(pow_i64(p, r)), p as i64 * k)?;
    let rhs = lambda_term(lambda, &n.scaled(pow_i64(p, r - 1)), k)?;
    Ok(CongruenceCell::modular(
        "lemma53",
        params! {
            "lambda" => lambda.parts(),
            "n" => n.entries(),
            "k" => k,
            "p" => p,
            "r" => r,
            "exponent" => exponent,
        },
        lhs,
        rhs,
        p,
        u64::from(exponent * r),
    ))
}

/// `binom(p^r m - 1, k) (-1)^k ≡ binom(p^{r-1} m - 1, ⌊k/p⌋) (-1)^{⌊k/p⌋} (mod p^r)`.
pub fn verify_binom_lemma4(m: i64, k: i64, p: u64, r: u32) -> Result<CongruenceCell> {
    require_prime(p)?;
    require(r >= 1, || "r must be positive".into())?;
    let kp = floor_div(k, p as i64);
    let lhs = binom_ext(pow_i64(p, r) * m - 1, k) * sign_pow(k);
    let rhs = binom_ext(pow_i64(p, r - 1) * m - 1, kp) * sign_pow(kp);
    Ok(CongruenceCell::modular(
        "lemma54",
        params! {"m" => m, "k" => k, "p" => p, "r" => r},
        lhs,
        rhs,
        p,
        u64::from(r),
    ))
}

/// `binom(p^r m1 + p^r m2 - k - 1, p^r m1) ≡
///  binom(p^{r-1} m1 + p^{r-1} m2 - ⌊k/p⌋ - 1, p^{r-1} m1) (mod p^r)`.
pub fn verify_binom_lemma5(m1: i64, m2: i64, k: i64, p: u64, r: u32) -> Result<CongruenceCell> {
    require_prime(p)?;
    require(r >= 1, || "r must be positive".into())?;
    let (hi, lo) = (pow_i64(p, r), pow_i64(p, r - 1));
    let kp = floor_div(k, p as i64);
    let lhs = binom_ext(hi * m1 + hi * m2 - k - 1, hi * m1);
    let rhs = binom_ext(lo * m1 + lo * m2 - kp - 1, lo * m1);
    Ok(CongruenceCell::modular(
        "lemma55",
        params! {"m1" => m1, "m2" => m2, "k" => k, "p" => p, "r" => r},
        lhs,
        rhs,
        p,
        u64::from(r),
    ))
}

/// `A(-n) = A(n-1)`.
pub fn reflect_a_cell(n: u32) -> CongruenceCell {
    let (lhs, rhs) = reflect_a(n);
    CongruenceCell::exact("reflect-a", params! {"n" => n}, lhs, rhs)
}

/// `B(-n) = (-1)^{n-1} B(n-1)`.
pub fn reflect_b_cell(n: u32) -> CongruenceCell {
    let (lhs, rhs) = reflect_b(n);
    CongruenceCell::exact("reflect-b", params! {"n" => n}, lhs, rhs)
}

/// Both sums of the `B(n)` identity agree.
pub fn identity25_cell(n: u32) -> CongruenceCell {
    let (lhs, rhs) = identity25(n);
    CongruenceCell::exact("identity25", params! {"n" => n}, lhs, rhs)
}

/// Shifted supercongruence `S(p^r m - 1) ≡ S(p^{r-1} m - 1) (mod p^{3r})` for
/// `S = A` or `S = B`.
pub fn verify_shifted(
    claim: &str,
    value: impl Fn(i64) -> BigInt,
    m: i64,
    p: u64,
    r: u32,
) -> Result<CongruenceCell> {
    require_prime(p)?;
    require(r >= 1, || "r must be positive".into())?;
    Ok(CongruenceCell::modular(
        claim,
        params! {"m" => m, "p" => p, "r" => r},
        value(pow_i64(p, r) * m - 1),
        value(pow_i64(p, r - 1) * m - 1),
        p,
        u64::from(3 * r),
    ))
}

pub fn verify_shifted_apery(m: i64, p: u64, r: u32) -> Result<CongruenceCell> {
    verify_shifted("apery-shifted", apery_sum, m, p, r)
}

pub fn verify_shifted_b(m: i64, p: u64, r: u32) -> Result<CongruenceCell> {
    verify_shifted("b-shifted", b_sum, m, p, r)
}
