use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// The map parameters: base `β ≥ 2` and threshold exponent `k ≥ 1`.
///
/// The threshold is `1 − u` with `u = β^{−k}`; a point exceeds it exactly
/// when its first `k` base-β digits all equal `β − 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MapParams {
    beta: u32,
    k: u32,
}

impl MapParams {
    pub fn new(beta: u32, k: u32) -> Result<Self> {
        if beta < 2 {
            return Err(Error::InvalidParams(format!("beta must be >= 2, got {beta}")));
        }
        if k < 1 {
            return Err(Error::InvalidParams("k must be >= 1".into()));
        }
        Ok(MapParams { beta, k })
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// `u = β^{−k}`, the measure of each exceedance set.
    pub fn u(&self) -> Rational {
        Rational::new(BigInt::one(), self.beta_pow(self.k))
    }

    /// `β^e` as a big integer.
    pub fn beta_pow(&self, e: u32) -> BigInt {
        BigInt::from(self.beta).pow(e)
    }

    /// The extremal index `θ = (β−1)/β`.
    pub fn theta(&self) -> Rational {
        Rational::new(BigInt::from(self.beta - 1), BigInt::from(self.beta))
    }
}

/// Resource limits for operations whose cost grows like `β^i`.
///
/// Defaults are desk-scale: they keep every construction in memory and every
/// sweep in minutes. All limits can be raised by callers with more budget.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Budget {
    /// Maximum number of intervals a single set construction may produce.
    pub max_intervals: u64,
    /// Maximum number of digit strings the brute-force oracle may enumerate.
    pub max_enumeration: u64,
    /// Maximum characteristic polynomial degree (= k).
    pub max_degree: u32,
    /// Maximum working precision in bits before a precision error is raised.
    pub max_precision_bits: u32,
    /// Maximum recursion length for exact Fibonacci/probability evaluation.
    pub max_fib_steps: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_intervals: 1 << 26,
            max_enumeration: 1 << 24,
            max_degree: 64,
            max_precision_bits: 1024,
            max_fib_steps: 1 << 21,
        }
    }
}

impl Budget {
    /// Check that `β^e` stays within `limit`; returns `β^e` as u64 on success.
    pub fn check_beta_pow(&self, what: &str, beta: u32, e: u32, limit: u64) -> Result<u64> {
        let value = BigInt::from(beta).pow(e);
        if value > BigInt::from(limit) {
            return Err(Error::budget(format!("{what} = {beta}^{e} = {value}"), limit));
        }
        // value <= limit <= u64::MAX
        let (_, digits) = value.to_u64_digits();
        Ok(digits.first().copied().unwrap_or(0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn params_validation() {
        assert!(MapParams::new(1, 1).is_err());
        assert!(MapParams::new(2, 0).is_err());
        let p = MapParams::new(2, 2).unwrap();
        assert_eq!(p.u(), rat(1, 4));
        assert_eq!(p.theta(), rat(1, 2));
    }

    #[test]
    fn budget_beta_pow() {
        let b = Budget::default();
        assert_eq!(b.check_beta_pow("beta^i", 2, 10, 1 << 20).unwrap(), 1024);
        let err = b.check_beta_pow("beta^i", 2, 30, 1 << 20).unwrap_err();
        match err {
            Error::BudgetExceeded { quantity, limit } => {
                assert!(quantity.contains("2^30"));
                assert_eq!(limit, 1 << 20);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }
}
