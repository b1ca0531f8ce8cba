use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::{divisors, eigenvalue_indices, TwistKnotParam};
use crate::scalar::Real;

/// The exact limit `(log a - log 2) / d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ExactLimit {
    /// `a = |Δ_{T(2,2n+1)}(-1)| = |2n+1|`.
    pub log_arg: i64,
    /// `d = p_k`.
    pub denom: i64,
}

impl ExactLimit {
    pub fn new(n: i64, pk: i64) -> Self {
        ExactLimit {
            log_arg: (2 * n + 1).abs(),
            denom: pk,
        }
    }

    pub fn value<T: Real>(&self) -> T {
        (T::from_int(self.log_arg).ln() - T::from_int(2).ln()) / T::from_int(self.denom)
    }
}

impl fmt::Display for ExactLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(log {} - log 2)/{}", self.log_arg, self.denom)
    }
}

/// Limits of `log|Tor|/(2N)` over all eigenvalue indices.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LimitSet {
    pub n: i64,
    /// Ascending by denominator.
    pub limits: Vec<ExactLimit>,
    pub minimum: ExactLimit,
    /// The divisor description agrees with the limits realized over `j`.
    pub realized: bool,
}

/// `{(log|2n+1| - log 2)/d : d | p, d > 1}` and its minimum
/// `(log|2n+1| - log 2)/p`.
pub fn limit_set(n: i64) -> Result<LimitSet> {
    let param = TwistKnotParam::new(n)?;
    let from_divisors: BTreeSet<ExactLimit> = divisors(param.p())
        .into_iter()
        .filter(|&d| d > 1)
        .map(|d| ExactLimit::new(n, d))
        .collect();
    let from_indices: BTreeSet<ExactLimit> = eigenvalue_indices(n)?
        .iter()
        .map(|idx| ExactLimit::new(n, idx.pk()))
        .collect();
    let minimum = ExactLimit::new(n, param.p());
    Ok(LimitSet {
        n,
        limits: from_divisors.iter().copied().collect(),
        minimum,
        realized: from_divisors == from_indices,
    })
}
