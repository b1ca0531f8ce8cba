use num_complex::Complex;
use num_integer::Integer;
use num_traits::One;

use crate::error::Result;
use crate::invariants::{alexander_torus, EigenvalueIndex, TwistKnotParam};
use crate::scalar::Real;

/// Magnitudes of the two products over one full cycle `i = 1..=p_k`:
/// `|∏ Δ_{T(2,2n+1)}(ξ^{2i-1})|` and `|∏ (ξ^{2i-1} - 1)|`.
pub fn cycle_products<T: Real>(n: i64, j: i64) -> Result<(T, T)> {
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    let delta = alexander_torus(n)?;
    let xi = idx.xi();
    let mut num = Complex::<T>::one();
    let mut den = Complex::<T>::one();
    for i in 1..=idx.pk() {
        let z = xi.pow(2 * i - 1);
        num *= delta.eval_root::<T>(z);
        den *= z.to_complex::<T>() - Complex::one();
    }
    Ok((num.norm(), den.norm()))
}

/// Smallest `p` with `seq[i] ≈ seq[i + p]` for every valid `i`, provided
/// at least one full repetition is visible.
pub fn detect_period<T: Real>(seq: &[T], tol: T) -> Option<usize> {
    (1..=seq.len() / 2).find(|&p| (0..seq.len() - p).all(|i| (seq[i] - seq[i + p]).abs() <= tol))
}

/// `gcd(2 p_k, 2n + 1) = 1`.
pub fn order_coprime_to_torus_determinant(n: i64, j: i64) -> Result<bool> {
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    Ok((2 * idx.pk()).gcd(&(2 * n + 1)) == 1)
}
