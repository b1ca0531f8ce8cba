//! Higher-dimensional Reidemeister torsion for the graph manifolds obtained
//! by 4-surgery on twist knots.
//!
//! The numeric core is generic over [`Real`]; the aliases below fix the
//! default binary64 precision.

pub mod algebra;
pub mod double_double;
pub mod error;
pub mod groups;
pub mod invariants;
pub mod reps;
pub mod scalar;
pub mod torsion;
pub mod verify;

pub use error::{Error, Result};
pub use double_double::DoubleDouble;
pub use scalar::{Precision, Real};

pub type Complex64 = num_complex::Complex<f64>;
pub type Matrix64 = algebra::Matrix<f64>;
pub type Rep64 = reps::Rep<f64>;
pub type TorsionValue64 = torsion::TorsionValue<f64>;
pub type ChainComplex64 = torsion::TwistedChainComplex<f64>;
