use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::arith::{padic_valuation, prime_power, Valuation};

pub(crate) fn decimal<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// How a failure of a claim should be read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimClass {
    /// A proved statement; any failure is an error.
    Theorem,
    /// Numerical evidence for an open conjecture.
    ConjectureSupport,
    /// A documented non-example; failures are expected.
    Counterexample,
}

/// Ordered parameter map for a cell.
pub type Params = BTreeMap<String, Value>;

/// Builds a [`Params`] map from `key => value` pairs.
#[macro_export]
macro_rules! params {
    ($($key:expr => $value:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut map = $crate::congruence::Params::new();
        $( map.insert($key.to_string(), serde_json::json!($value)); )*
        map
    }};
}

/// One evaluated congruence `lhs ≡ rhs (mod modulus)`.
///
/// For plain cells `modulus = p^required_valuation` and `defect_valuation = v_p(lhs - rhs)`.
/// Ratio cells compare `lhs / divisor` with `rhs / divisor` in `Z_(p)`; their defect is
/// `v_p(lhs - rhs) - v_p(divisor)`, clamped at zero. Exact cells (no prime) demand
/// `lhs = rhs`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceCell {
    pub claim: String,
    pub params: Params,
    #[serde(serialize_with = "decimal")]
    pub lhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub rhs: BigInt,
    #[serde(serialize_with = "decimal")]
    pub modulus: BigInt,
    pub prime: Option<u64>,
    pub required_valuation: Option<u64>,
    pub holds: bool,
    pub defect_valuation: Valuation,
}

impl CongruenceCell {
    /// `lhs ≡ rhs (mod p^e)`.
    pub fn modular(claim: &str, params: Params, lhs: BigInt, rhs: BigInt, p: u64, e: u64) -> Self {
        let defect = padic_valuation(&(&lhs - &rhs), p);
        Self {
            claim: claim.to_string(),
            params,
            lhs,
            rhs,
            modulus: prime_power(p, e),
            prime: Some(p),
            required_valuation: Some(e),
            holds: defect.at_least(e),
            defect_valuation: defect,
        }
    }

    /// `lhs / divisor ≡ rhs / divisor (mod p^e)` for a nonzero divisor.
    pub fn ratio(
        claim: &str,
        params: Params,
        lhs: BigInt,
        rhs: BigInt,
        divisor: &BigInt,
        p: u64,
        e: u64,
    ) -> Self {
        assert!(!divisor.is_zero(), "ratio cell needs a nonzero divisor");
        let raw = padic_valuation(&(&lhs - &rhs), p);
        let shift = padic_valuation(divisor, p)
            .finite()
            .expect("nonzero divisor");
        let defect = match raw {
            Valuation::Finite(v) => Valuation::Finite(v.saturating_sub(shift)),
            Valuation::Infinite => Valuation::Infinite,
        };
        Self {
            claim: claim.to_string(),
            params,
            lhs,
            rhs,
            modulus: prime_power(p, e),
            prime: Some(p),
            required_valuation: Some(e),
            holds: defect.at_least(e),
            defect_valuation: defect,
        }
    }

    /// `lhs = rhs` exactly.
    pub fn exact(claim: &str, params: Params, lhs: BigInt, rhs: BigInt) -> Self {
        let equal = lhs == rhs;
        Self {
            claim: claim.to_string(),
            params,
            lhs,
            rhs,
            modulus: BigInt::zero(),
            prime: None,
            required_valuation: None,
            holds: equal,
            defect_valuation: if equal {
                Valuation::Infinite
            } else {
                Valuation::Finite(0)
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub tested: usize,
    pub failed: usize,
    /// Index into `cells` of the first failing cell.
    pub first_failure: Option<usize>,
}

/// Result of evaluating one claim over a grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CongruenceReport {
    pub claim: String,
    pub class: ClaimClass,
    pub grid: String,
    pub summary: Summary,
    pub cells: Vec<CongruenceCell>,
}

impl CongruenceReport {
    pub fn new(
        claim: &str,
        class: ClaimClass,
        grid: impl Into<String>,
        cells: Vec<CongruenceCell>,
    ) -> Self {
        let failed = cells.iter().filter(|c| !c.holds).count();
        let first_failure = cells.iter().position(|c| !c.holds);
        Self {
            claim: claim.to_string(),
            class,
            grid: grid.into(),
            summary: Summary {
                tested: cells.len(),
                failed,
                first_failure,
            },
            cells,
        }
    }

    pub fn all_hold(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn first_failure(&self) -> Option<&CongruenceCell> {
        self.summary.first_failure.map(|i| &self.cells[i])
    }

    /// Concatenates reports of the same claim; the result does not depend on how the
    /// cells were split between the inputs, only on their order.
    pub fn merge(mut self, other: CongruenceReport) -> Self {
        self.cells.extend(other.cells);
        Self::new(&self.claim, self.class, self.grid, self.cells)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}
