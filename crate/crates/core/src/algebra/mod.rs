//! Exact and floating-point arithmetic shared by every other module.

mod laurent;
mod matrix;
mod root_of_unity;

pub use laurent::LaurentPolynomial;
pub use matrix::{Matrix, SquareMatrix};
pub use root_of_unity::RootOfUnity;

use num_complex::Complex;

use crate::scalar::Real;

/// Determinant of a square matrix (zero when singular).
pub fn det<T: Real>(m: &Matrix<T>) -> Complex<T> {
    m.det()
}

/// Evaluation point for [`eval_laurent`].
#[derive(Debug, Clone, Copy)]
pub enum EvalPoint<T: Real> {
    Root(RootOfUnity),
    Complex(Complex<T>),
}

pub fn eval_laurent<T: Real>(p: &LaurentPolynomial, z: EvalPoint<T>) -> Complex<T> {
    match z {
        EvalPoint::Root(r) => p.eval_root(r),
        EvalPoint::Complex(c) => p.eval(c),
    }
}
