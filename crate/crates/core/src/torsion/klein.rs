use num_complex::Complex;
use num_traits::One;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::groups::verify_relations;
use crate::reps::{sym_power, sym_power_diagonal, Rep};
use crate::scalar::Real;
use crate::torsion::{Provenance, TorsionValue, TwistedChainComplex};

fn klein_matrices<T: Real>(rep: &Rep<T>, big_n: usize) -> Result<(Matrix<T>, Matrix<T>)> {
    if rep.presentation().num_generators() != 2 || rep.presentation().relators().len() != 1 {
        return Err(Error::Dimension("expected the Klein bottle presentation <x, y>".into()));
    }
    let report = verify_relations(rep, rep.presentation())?;
    let bound = T::tolerance(2) * T::from_int(100);
    if !report.passes(bound) {
        return Err(Error::RelationViolated {
            relator: 0,
            residual: report.max_residual().to_f64_lossy(),
        });
    }
    let dim = 2 * big_n;
    Ok((sym_power(&rep.images()[0], dim)?, sym_power(&rep.images()[1], dim)?))
}

/// The twisted complex of the one-vertex Klein-bottle CW structure:
/// `∂₂ = [1 - Y; -XY - 1]`, `∂₁ = [X - 1, Y - 1]` with `X = σ_{2N}(ρ(x))`
/// and `Y = σ_{2N}(ρ(y))`.
pub fn klein_bottle_complex<T: Real>(rep: &Rep<T>, big_n: usize) -> Result<TwistedChainComplex<T>> {
    if big_n == 0 {
        return Err(Error::Dimension("coefficient dimension 2N must be positive".into()));
    }
    let (x, y) = klein_matrices(rep, big_n)?;
    let id = Matrix::identity(2 * big_n);
    let d2 = (&id - &y).vstack(&(-&(&x * &y) - id.clone()));
    let d1 = (&x - &id).hstack(&(&y - &id));
    TwistedChainComplex::new(
        vec![vec!["p".into()], vec!["x".into(), "y".into()], vec!["D".into()]],
        2 * big_n,
        vec![d1, d2],
    )
}

fn ratio<T: Real>(num: Complex<T>, den: Complex<T>, scale: T) -> Option<Complex<T>> {
    if den.norm() <= T::tolerance(1) * scale {
        None
    } else {
        Some(num / den)
    }
}

/// Closed form `det(1 - Y) / det(Y - 1)`, falling back to
/// `det(-XY - 1) / det(X - 1)`.
pub fn klein_bottle_torsion<T: Real>(rep: &Rep<T>, big_n: usize) -> Result<TorsionValue<T>> {
    if big_n == 0 {
        return Ok(TorsionValue::one(Provenance::ClosedForm));
    }
    let (x, y) = klein_matrices(rep, big_n)?;
    let id = Matrix::identity(2 * big_n);
    let y1 = &y - &id;
    let scale = hadamard_bound(&y1);
    if let Some(v) = ratio((-&y1).det(), y1.det(), scale) {
        return Ok(TorsionValue::from_value(v, Provenance::ClosedForm));
    }
    let x1 = &x - &id;
    let scale = hadamard_bound(&x1);
    if let Some(v) = ratio((-&(&x * &y) - id).det(), x1.det(), scale) {
        return Ok(TorsionValue::from_value(v, Provenance::ClosedForm));
    }
    Err(Error::TorsionUndefined("both Klein-bottle branches are degenerate".into()))
}

/// Klein-bottle torsion when `ρ(y) = diag(η, η^-1)`: `Y - 1` is diagonal
/// with entries `η^{-(2N-1)+2i} - 1`, so the first branch is a product of
/// per-eigenvalue ratios.
pub fn klein_bottle_torsion_diagonal<T: Real>(eta: Complex<T>, big_n: usize) -> Result<TorsionValue<T>> {
    let mut v = Complex::<T>::one();
    for lambda in sym_power_diagonal(eta, 2 * big_n) {
        let den = lambda - Complex::one();
        if den.norm() <= T::tolerance(1) {
            return Err(Error::TorsionUndefined("eigenvalue 1 in the diagonal Klein-bottle branch".into()));
        }
        v *= (Complex::<T>::one() - lambda) / den;
    }
    Ok(TorsionValue::from_value(v, Provenance::ClosedForm))
}

/// Product of column norms, an upper bound for `|det|`.
pub(crate) fn hadamard_bound<T: Real>(m: &Matrix<T>) -> T {
    let mut b = T::one();
    for c in 0..m.cols() {
        let n = m.column(c).iter().map(|z| z.norm_sqr()).fold(T::zero(), |a, x| a + x).sqrt();
        b *= T::one().max(n);
    }
    b
}
