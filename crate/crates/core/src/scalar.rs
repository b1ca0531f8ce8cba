//! Real scalar abstraction.
//!
//! Everything numeric in the crate is generic over [`Real`]. `f64` is the
//! default working precision; [`DoubleDouble`] (~106 bits) backs
//! stress runs and `f32` exists mostly to exercise the tolerance scaling.

use std::fmt::{Debug, Display};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
pub use crate::double_double::DoubleDouble;

/// Real field used for matrix entries and eigenvalue embeddings.
pub trait Real:
    Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Number of significand bits.
    const PRECISION_BITS: u32;

    /// Lossy conversion used for reports and serialization.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn from_f64_lossy(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 converts")
    }

    fn from_int(x: i64) -> Self {
        Self::from_i64(x).expect("integer converts")
    }

    /// Relative tolerance for a dense operation of the given dimension.
    ///
    /// 1e-10 at binary64 for dim <= 64, linear in dim above. Other
    /// precisions scale by the ratio of machine epsilons.
    fn tolerance(dim: usize) -> Self {
        let base = 1e-10 * (Self::epsilon().to_f64_lossy() / f64::EPSILON);
        let scale = if dim <= 64 { 1.0 } else { dim as f64 / 64.0 };
        Self::from_f64_lossy(base * scale)
    }
}

impl Real for f32 {
    const PRECISION_BITS: u32 = f32::MANTISSA_DIGITS;
}

impl Real for f64 {
    const PRECISION_BITS: u32 = f64::MANTISSA_DIGITS;
}

impl Real for DoubleDouble {
    const PRECISION_BITS: u32 = 2 * f64::MANTISSA_DIGITS;

    fn from_f64_lossy(x: f64) -> Self {
        DoubleDouble::from(x)
    }
}

/// Complex scalar at the precision of `T`.
pub type ComplexScalar<T> = Complex<T>;

/// Natural logarithm of `|z|`, or `None` for zero.
pub fn log_magnitude<T: Real>(z: Complex<T>) -> Option<T> {
    let m = z.norm();
    if m == T::zero() {
        None
    } else {
        Some(m.ln())
    }
}

/// `e^{i angle}`.
pub fn cis<T: Real>(angle: T) -> Complex<T> {
    Complex::new(angle.cos(), angle.sin())
}

/// Maps a precision request in bits onto a supported scalar width.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    Binary64,
    DoubleDouble,
}

impl Precision {
    pub fn from_bits(bits: u32) -> Option<Self> {
        match bits {
            53 => Some(Precision::Binary64),
            54..=106 => Some(Precision::DoubleDouble),
            _ => None,
        }
    }

    pub fn bits(self) -> u32 {
        match self {
            Precision::Binary64 => f64::PRECISION_BITS,
            Precision::DoubleDouble => DoubleDouble::PRECISION_BITS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_magnitude_examples() {
        assert_eq!(log_magnitude(Complex::new(1.0f64, 0.0)), Some(0.0));
        let l = log_magnitude(Complex::new(-2.0f64, 0.0)).unwrap();
        assert!((l - 2f64.ln()).abs() < 1e-15);
        let z = cis(std::f64::consts::PI / 7.0);
        assert!(log_magnitude(z).unwrap().abs() < 1e-15);
        assert_eq!(log_magnitude(Complex::new(0.0f64, 0.0)), None);
    }

    #[test]
    fn tolerance_scales_with_dimension_and_epsilon() {
        assert_eq!(f64::tolerance(8), 1e-10);
        assert_eq!(f64::tolerance(64), 1e-10);
        assert!((f64::tolerance(128) - 2e-10).abs() < 1e-24);
        assert!(f32::tolerance(8) > 1e-3);
        assert!(DoubleDouble::tolerance(8).to_f64_lossy() < 1e-20);
        assert!(DoubleDouble::tolerance(8).to_f64_lossy() > 1e-30);
    }

    #[test]
    fn precision_mapping() {
        assert_eq!(Precision::from_bits(53), Some(Precision::Binary64));
        assert_eq!(Precision::from_bits(106), Some(Precision::DoubleDouble));
        assert_eq!(Precision::from_bits(52), None);
        assert_eq!(Precision::from_bits(256), None);
    }

    #[test]
    fn double_double_log_magnitude() {
        let z = Complex::new(DoubleDouble::from(3.0), DoubleDouble::from(4.0));
        let l = log_magnitude(z).unwrap();
        let expected = DoubleDouble::from(5.0).ln();
        assert!((l - expected).abs().to_f64_lossy() < 1e-30);
        assert!((l.to_f64_lossy() - 5f64.ln()).abs() < 1e-15);
    }
}
