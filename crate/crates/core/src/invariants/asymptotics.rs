use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{EigenvalueIndex, ExactLimit, TwistKnotParam};
use crate::scalar::Real;
use crate::torsion::graph_manifold_log_sequence;

/// One row of an asymptotics sweep.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticsRow {
    #[serde(rename = "N")]
    pub big_n: u64,
    pub seq: f64,
    pub limit: f64,
    pub abs_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticsReport {
    pub n: i64,
    pub j: i64,
    pub pk: i64,
    pub exact_limit: ExactLimit,
    pub predicted_limit: f64,
    pub rows: Vec<AsymptoticsRow>,
    /// Largest error at `N ≡ 0 (mod p_k)`, if any such `N` was sampled.
    pub max_error_at_multiples: Option<f64>,
    /// Fitted `α` in `error ≈ C N^-α` over the other `N`.
    pub decay_exponent: Option<f64>,
}

/// Errors below this are treated as exact and left out of the decay fit.
const FIT_FLOOR: f64 = 1e-12;

/// `log|Tor(M; σ_{2N} ∘ ρ̄)|/(2N)` for `N = 1..=n_max` against the predicted
/// limit `(log|2n+1| - log 2)/p_k`.
pub fn leading_coefficient_sequence<T: Real>(n: i64, j: i64, n_max: u64) -> Result<AsymptoticsReport> {
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    if n_max < 1 {
        return Err(Error::EmptySweep);
    }
    let pk = idx.pk();
    let exact = ExactLimit::new(n, pk);
    let limit: T = exact.value();
    let seq = graph_manifold_log_sequence::<T>(n, j, n_max)?;
    let rows: Vec<AsymptoticsRow> = seq
        .iter()
        .enumerate()
        .map(|(k, &s)| AsymptoticsRow {
            big_n: k as u64 + 1,
            seq: s.to_f64_lossy(),
            limit: limit.to_f64_lossy(),
            abs_error: (s - limit).abs().to_f64_lossy(),
        })
        .collect();
    let at_multiples = rows
        .iter()
        .filter(|r| r.big_n % pk as u64 == 0)
        .map(|r| r.abs_error)
        .fold(None, |m: Option<f64>, e| Some(m.map_or(e, |m| m.max(e))));
    let fit_points: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.big_n % pk as u64 != 0 && r.abs_error > FIT_FLOOR)
        .map(|r| ((r.big_n as f64).ln(), r.abs_error.ln()))
        .collect();
    Ok(AsymptoticsReport {
        n,
        j,
        pk,
        exact_limit: exact,
        predicted_limit: limit.to_f64_lossy(),
        rows,
        max_error_at_multiples: at_multiples,
        decay_exponent: fit_slope(&fit_points).map(|s| -s),
    })
}

/// Least-squares slope; `None` for fewer than two distinct abscissae.
fn fit_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}
