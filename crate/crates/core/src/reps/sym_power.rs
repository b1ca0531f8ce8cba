use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Optional push-forward of a 2x2 representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lift {
    None,
    /// The n-dimensional irreducible representation of SL(2,C).
    SymPower(usize),
}

impl Lift {
    pub fn dim(self) -> usize {
        match self {
            Lift::None => 2,
            Lift::SymPower(n) => n,
        }
    }
}

/// Matrix of `σ_n(a)` on the monomial basis
/// `x^{n-1}, x^{n-2} y, ..., y^{n-1}`.
///
/// `σ_n(a) p(x, y) = p(x', y')` with `(x', y') = a^{-1} (x, y)`; this is
/// a homomorphism, and `diag(ξ, ξ^-1)` scales `x^{n-1-i} y^i` by
/// `ξ^{-(n-1)+2i}`.
pub fn sym_power<T: Real>(a: &Matrix<T>, n: usize) -> Result<Matrix<T>> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Dimension(format!("sym_power needs a 2x2 matrix, got {}x{}", a.rows(), a.cols())));
    }
    if n == 0 {
        return Err(Error::Dimension("sym_power dimension must be positive".into()));
    }
    let det = a.det();
    let scale = T::one().max(a.max_norm() * a.max_norm());
    let defect = (det - Complex::one()).norm();
    if defect > T::tolerance(2) * scale * T::from_int(100) {
        return Err(Error::NotUnimodular(defect.to_f64_lossy()));
    }
    Ok(sym_power_unchecked(a, n))
}

/// [`sym_power`] without the unimodularity check; uses the adjugate as
/// the inverse.
pub(crate) fn sym_power_unchecked<T: Real>(a: &Matrix<T>, n: usize) -> Matrix<T> {
    let (p, q, r, s) = (a[(0, 0)], a[(0, 1)], a[(1, 0)], a[(1, 1)]);
    // a^{-1} = [[s, -q], [-r, p]]: x' = s x - q y, y' = -r x + p y.
    // Polynomials are coefficient vectors indexed by the power of y.
    let x_lin = [s, -q];
    let y_lin = [-r, p];
    let xp = linear_powers(&x_lin, n - 1);
    let yp = linear_powers(&y_lin, n - 1);
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        let col = convolve(&xp[n - 1 - i], &yp[i]);
        for (row, v) in col.into_iter().enumerate() {
            m[(row, i)] = v;
        }
    }
    m
}

fn linear_powers<T: Real>(lin: &[Complex<T>; 2], max: usize) -> Vec<Vec<Complex<T>>> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(vec![Complex::one()]);
    for k in 1..=max {
        let next = convolve(&out[k - 1], lin);
        out.push(next);
    }
    out
}

fn convolve<T: Real>(a: &[Complex<T>], b: &[Complex<T>]) -> Vec<Complex<T>> {
    let mut out = vec![Complex::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += *x * *y;
        }
    }
    out
}

/// Eigenvalues of `σ_n(diag(ξ, ξ^-1))` in basis order: `ξ^{-(n-1)+2i}`.
pub fn sym_power_diagonal<T: Real>(xi: Complex<T>, n: usize) -> Vec<Complex<T>> {
    (0..n).map(|i| xi.powi(-(n as i32 - 1) + 2 * i as i32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RootOfUnity;
    use crate::reps::random_sl2;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_lifts_to_identity() {
        assert_eq!(sym_power(&Matrix::<f64>::identity(2), 4).unwrap(), Matrix::identity(4));
    }

    #[test]
    fn diagonal_action() {
        let xi: Complex<f64> = RootOfUnity::new(1, 5).to_complex();
        let s = sym_power(&Matrix::from_diagonal(&[xi, xi.inv()]), 4).unwrap();
        let expected = [xi.powi(-3), xi.powi(-1), xi, xi.powi(3)];
        assert!(s.is_diagonal(1e-15));
        for (i, e) in expected.iter().enumerate() {
            assert!((s[(i, i)] - e).norm() < 1e-14);
        }
        let eig = sym_power_diagonal(xi, 4);
        for (a, b) in eig.iter().zip(expected.iter()) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn sigma_two_is_adjugate_transpose() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let a = random_sl2::<f64, _>(&mut rng);
        let s = sym_power(&a, 2).unwrap();
        let expected = Matrix::from_2x2(a[(1, 1)], -a[(1, 0)], -a[(0, 1)], a[(0, 0)]);
        assert!(s.max_diff(&expected) < 1e-15);
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (a, b) = (random_sl2::<f64, _>(&mut rng), random_sl2::<f64, _>(&mut rng));
            let lhs = sym_power(&(&a * &b), 3).unwrap();
            let rhs = &sym_power(&a, 3).unwrap() * &sym_power(&b, 3).unwrap();
            assert!(lhs.max_diff(&rhs) < 1e-12);
        }
    }

    #[test]
    fn rejects_non_unimodular() {
        let m = Matrix::<f64>::identity(2).scale(Complex::new(2.0, 0.0));
        assert!(matches!(sym_power(&m, 3), Err(Error::NotUnimodular(_))));
        assert!(matches!(sym_power(&Matrix::<f64>::identity(3), 3), Err(Error::Dimension(_))));
    }

    #[test]
    fn determinant_is_one() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let a = random_sl2::<f64, _>(&mut rng);
        for n in 2..8 {
            let d = sym_power(&a, n).unwrap().det();
            assert!((d - Complex::new(1.0, 0.0)).norm() < 1e-10);
        }
    }
}
