use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::RootOfUnity;
use crate::error::{Error, Result};

/// Twist parameter `n` of the twist knot `K_n`, with `p = |4n+1|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwistKnotParam {
    n: i64,
}

impl TwistKnotParam {
    pub fn new(n: i64) -> Result<Self> {
        if n == 0 || n == -1 {
            return Err(Error::ExcludedTwist(n));
        }
        Ok(TwistKnotParam { n })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// `|4n + 1| = |Δ_{K_n}(-1)|`.
    pub fn p(&self) -> i64 {
        (4 * self.n + 1).abs()
    }

    /// `|2n + 1| = |Δ_{T(2,2n+1)}(-1)|`.
    pub fn torus_determinant(&self) -> i64 {
        (2 * self.n + 1).abs()
    }

    /// Number of conjugacy classes, `(p - 1) / 2`.
    pub fn num_classes(&self) -> i64 {
        (self.p() - 1) / 2
    }
}

/// Index `j` of the meridian eigenvalue `ξ = e^{iπ(2j-1)/p}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EigenvalueIndex {
    param: TwistKnotParam,
    j: i64,
}

impl EigenvalueIndex {
    pub fn new(param: TwistKnotParam, j: i64) -> Result<Self> {
        if j < 1 || j > param.num_classes() {
            return Err(Error::IndexOutOfRange {
                name: "j",
                value: j,
                max: param.num_classes(),
            });
        }
        Ok(EigenvalueIndex { param, j })
    }

    pub fn param(&self) -> TwistKnotParam {
        self.param
    }

    pub fn j(&self) -> i64 {
        self.j
    }

    pub fn xi(&self) -> RootOfUnity {
        RootOfUnity::new(2 * self.j - 1, self.param.p())
    }

    /// `p_k = p / gcd(2j - 1, p)`; `ξ` has order `2 p_k`.
    pub fn pk(&self) -> i64 {
        let p = self.param.p();
        p / (2 * self.j - 1).gcd(&p)
    }
}

/// All eigenvalue indices for `n`.
pub fn eigenvalue_indices(n: i64) -> Result<Vec<EigenvalueIndex>> {
    let param = TwistKnotParam::new(n)?;
    (1..=param.num_classes()).map(|j| EigenvalueIndex::new(param, j)).collect()
}

/// Conjugate pairs `(ξ, ξ^-1)` of meridian eigenvalues.
pub fn eigenvalue_set(n: i64) -> Result<Vec<(RootOfUnity, RootOfUnity)>> {
    Ok(eigenvalue_indices(n)?
        .into_iter()
        .map(|idx| (idx.xi(), idx.xi().inv()))
        .collect())
}

/// `p / gcd(2j - 1, p)`.
pub fn order_pk(n: i64, j: i64) -> Result<i64> {
    Ok(EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?.pk())
}

/// Positive divisors of `m`, ascending.
pub fn divisors(m: i64) -> Vec<i64> {
    let m = m.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
