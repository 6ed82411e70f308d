//! Three-term recurrences with initial conditions `u_{-1} = 0`, `u_0 = 1`:
//!
//! * cubic: `(n+1)^3 u_{n+1} = (2n+1)(a n^2 + a n + b) u_n - n (c n^2 + d) u_{n-1}`
//! * quadratic: `(n+1)^2 u_{n+1} = (a n^2 + a n + b) u_n - c n^2 u_{n-1}`
//!
//! For generic parameters the solutions are not integral, so a failed exact division
//! is reported as [`Error::NonIntegralStep`] rather than treated as a bug.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubicParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl CubicParams {
    pub const APERY: Self = Self::new(17, 5, 1, 0);
    pub const ALMKVIST_ZUDILIN: Self = Self::new(-7, -3, 81, 0);
    pub const YANG_ZUDILIN: Self = Self::new(6, 2, -64, 4);

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticParams {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadraticParams {
    pub const APERY_B: Self = Self::new(11, 3, -1);
    pub const FRANEL: Self = Self::new(7, 2, -8);

    pub const fn new(a: i64, b: i64, c: i64) -> Self {
        Self { a, b, c }
    }
}

fn run(count: usize, mut step: impl FnMut(i64) -> (BigInt, BigInt, BigInt)) -> Result<Vec<BigInt>> {
    let mut out = Vec::with_capacity(count + 1);
    let mut prev = BigInt::zero();
    let mut cur = BigInt::one();
    out.push(cur.clone());
    for n in 0..count {
        let (lead, mid, back) = step(n as i64);
        let num = mid * &cur - back * &prev;
        let (next, rem) = num.div_rem(&lead);
        if !rem.is_zero() {
            return Err(Error::NonIntegralStep { n });
        }
        prev = std::mem::replace(&mut cur, next);
        out.push(cur.clone());
    }
    Ok(out)
}

/// `u_0, …, u_N` for the cubic recurrence.
pub fn run_cubic(params: CubicParams, count: usize) -> Result<Vec<BigInt>> {
    let CubicParams { a, b, c, d } = params;
    run(count, |n| {
        let n1 = BigInt::from(n + 1);
        (
            &n1 * &n1 * &n1,
            BigInt::from(2 * n + 1) * BigInt::from(a * n * n + a * n + b),
            BigInt::from(n) * BigInt::from(c * n * n + d),
        )
    })
}

/// `u_0, …, u_N` for the quadratic recurrence.
pub fn run_quadratic(params: QuadraticParams, count: usize) -> Result<Vec<BigInt>> {
    let QuadraticParams { a, b, c } = params;
    run(count, |n| {
        let n1 = BigInt::from(n + 1);
        (
            &n1 * &n1,
            BigInt::from(a * n * n + a * n + b),
            BigInt::from(c * n * n),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn cubic_examples() {
        assert_eq!(run_cubic(CubicParams::APERY, 2).unwrap(), ints(&[1, 5, 73]));
        assert_eq!(
            run_cubic(CubicParams::ALMKVIST_ZUDILIN, 1).unwrap(),
            ints(&[1, -3])
        );
        assert_eq!(
            run_cubic(CubicParams::YANG_ZUDILIN, 1).unwrap(),
            ints(&[1, 2])
        );
        assert_eq!(
            run_cubic(CubicParams::APERY, 3).unwrap(),
            ints(&[1, 5, 73, 1445])
        );
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(
            run_quadratic(QuadraticParams::APERY_B, 1).unwrap(),
            ints(&[1, 3])
        );
        assert_eq!(
            run_quadratic(QuadraticParams::FRANEL, 1).unwrap(),
            ints(&[1, 2])
        );
        assert_eq!(
            run_quadratic(QuadraticParams::new(5, -9, 2), 0).unwrap(),
            ints(&[1])
        );
    }

    #[test]
    fn generic_parameters_are_not_integral() {
        // u_1 = 2, then 8 u_2 = 3 * 4 * 2 - 1 = 23.
        assert_eq!(
            run_cubic(CubicParams::new(1, 2, 1, 0), 5).unwrap_err(),
            Error::NonIntegralStep { n: 1 }
        );
        assert_eq!(
            run_quadratic(QuadraticParams::new(1, 1, 1), 5).unwrap_err(),
            Error::NonIntegralStep { n: 1 }
        );
    }
}
