use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, ToPrimitive};

use crate::algebra::{LaurentPolynomial, RootOfUnity};
use crate::error::{Error, Result};
use crate::groups::Presentation;
use crate::invariants::{alexander_torus, EigenvalueIndex, TwistKnotParam};
use crate::reps::graph_manifold_rep;
use crate::scalar::Real;
use crate::torsion::{klein_bottle_torsion, klein_bottle_torsion_diagonal, Provenance, TorsionValue};

/// Largest `N` for which the complex value is materialized.
pub const VALUE_MAX_N: u64 = 16;

/// Largest `2N` for which the Klein-bottle factor is computed from the
/// full `σ_{2N}` matrices rather than from eigenvalues.
pub const KLEIN_MATRIX_MAX_DIM: u64 = 32;

fn coefficient_scale<T: Real>(p: &LaurentPolynomial) -> T {
    let s: f64 = p.terms().map(|(_, c)| c.to_f64().unwrap_or(f64::INFINITY).abs()).sum();
    T::from_f64_lossy(s.max(1.0))
}

struct Factor<T: Real> {
    log: T,
    value: Complex<T>,
}

/// `Δ(z) Δ(z^-1) / ((z - 1)(z^-1 - 1))` at `z = ξ^{2i-1}`.
fn abelian_factor<T: Real>(delta: &LaurentPolynomial, xi: RootOfUnity, i: u64, scale: T) -> Result<Factor<T>> {
    let z = xi.pow(2 * i as i64 - 1);
    if z.is_one() {
        return Err(Error::Pole { i });
    }
    let d1: Complex<T> = delta.eval_root(z);
    let d2: Complex<T> = delta.eval_root(z.inv());
    if d1.norm() <= T::tolerance(1) * scale || d2.norm() <= T::tolerance(1) * scale {
        return Err(Error::NotAcyclic { degree: 1 });
    }
    let one = Complex::<T>::one();
    let (zc, zi): (Complex<T>, Complex<T>) = (z.to_complex(), z.inv().to_complex());
    let den = (zc - one) * (zi - one);
    let value = d1 * d2 / den;
    let log = d1.norm().ln() + d2.norm().ln() - (zc - one).norm().ln() - (zi - one).norm().ln();
    Ok(Factor { log, value })
}

/// Per-factor log-magnitudes for `i = 1..=count`.
pub fn abelian_factor_logs<T: Real>(delta: &LaurentPolynomial, xi: RootOfUnity, count: u64) -> Result<Vec<T>> {
    let scale = coefficient_scale::<T>(delta);
    let period = factor_period(xi);
    let cycle = (1..=period.min(count))
        .map(|i| abelian_factor::<T>(delta, xi, i, scale).map(|f| f.log))
        .collect::<Result<Vec<_>>>()?;
    Ok((0..count as usize).map(|k| cycle[k % cycle.len()]).collect())
}

/// The factors depend on `i` only through `ξ^{2i}`, whose order this is.
pub fn factor_period(xi: RootOfUnity) -> u64 {
    xi.pow(2).order()
}

/// Torsion of a knot exterior for an abelian representation whose
/// meridian has eigenvalues `ξ^{±1}`:
/// `∏_{i=1}^N Δ(ξ^{2i-1}) Δ(ξ^{-2i+1}) / ((ξ^{2i-1} - 1)(ξ^{-2i+1} - 1))`.
///
/// The log-magnitude is accumulated additively; the value is kept only for
/// `N <= 16`.
pub fn abelian_knot_torsion<T: Real>(delta: &LaurentPolynomial, xi: RootOfUnity, big_n: u64) -> Result<TorsionValue<T>> {
    let scale = coefficient_scale::<T>(delta);
    let period = factor_period(xi);
    let cycle_len = period.min(big_n);
    let factors = (1..=cycle_len)
        .map(|i| abelian_factor::<T>(delta, xi, i, scale))
        .collect::<Result<Vec<_>>>()?;
    let cycle_log: T = factors.iter().fold(T::zero(), |a, f| a + f.log);
    let (full, rest) = if cycle_len == 0 { (0, 0) } else { (big_n / cycle_len, big_n % cycle_len) };
    let mut log = cycle_log * T::from_int(full as i64);
    for f in &factors[..rest as usize] {
        log += f.log;
    }
    let value = (big_n <= VALUE_MAX_N).then(|| {
        (0..big_n as usize).fold(Complex::<T>::one(), |acc, k| acc * factors[k % factors.len()].value)
    });
    Ok(TorsionValue {
        log_magnitude: log,
        value,
        provenance: Provenance::ClosedForm,
    })
}

/// Klein-bottle factor of the graph-manifold torsion for `ρ̄(n, j)`.
pub fn graph_manifold_klein_factor<T: Real>(n: i64, j: i64, big_n: u64) -> Result<TorsionValue<T>> {
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    if 2 * big_n <= KLEIN_MATRIX_MAX_DIM {
        let rep = graph_manifold_rep::<T>(n, j)?;
        let kb = rep.restrict(Arc::new(Presentation::klein_bottle()), &["x", "y"])?;
        klein_bottle_torsion(&kb, big_n as usize)
    } else {
        klein_bottle_torsion_diagonal(idx.xi().inv().to_complex(), big_n as usize)
    }
}

fn check_klein_factor<T: Real>(k: &TorsionValue<T>) -> Result<()> {
    if k.distance_from_one() > T::tolerance(1) {
        return Err(Error::KleinFactor(format!("{:?}", k.value)));
    }
    Ok(())
}

/// Torsion of the graph manifold `M = E_{T(2,2n+1)} ∪ N(Kb)` for `σ_{2N} ∘ ρ̄`,
/// as the product of the torus-knot factor and the Klein-bottle factor.
/// The latter must equal 1; any deviation is an error.
pub fn graph_manifold_torsion<T: Real>(n: i64, j: i64, big_n: u64) -> Result<TorsionValue<T>> {
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    let abelian = abelian_knot_torsion::<T>(&alexander_torus(n)?, idx.xi(), big_n)?;
    if big_n == 0 {
        return Ok(TorsionValue {
            provenance: Provenance::ProductOfPieces,
            ..abelian
        });
    }
    let klein = graph_manifold_klein_factor::<T>(n, j, big_n)?;
    check_klein_factor(&klein)?;
    let mut t = abelian.times(&klein, Provenance::ProductOfPieces);
    if t.value.is_none() && big_n <= VALUE_MAX_N {
        t.value = abelian.value;
    }
    Ok(t)
}

/// `log|Tor(M; σ_{2N} ∘ ρ̄)| / (2N)` for `N = 1..=n_max`, from prefix sums
/// of the factor logs. The Klein factor is checked at every `N`.
pub fn graph_manifold_log_sequence<T: Real>(n: i64, j: i64, n_max: u64) -> Result<Vec<T>> {
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    let logs = abelian_factor_logs::<T>(&alexander_torus(n)?, idx.xi(), n_max)?;
    let eta: Complex<T> = idx.xi().inv().to_complex();
    let mut acc = T::zero();
    let mut out = Vec::with_capacity(n_max as usize);
    for (k, l) in logs.into_iter().enumerate() {
        let big_n = k as u64 + 1;
        let klein = klein_bottle_torsion_diagonal(eta, big_n as usize)?;
        check_klein_factor(&klein)?;
        acc += l + klein.log_magnitude;
        out.push(acc / T::from_int(2 * big_n as i64));
    }
    Ok(out)
}
