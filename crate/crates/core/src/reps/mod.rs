//! SL(2,C)-representations: symmetric powers, the metabelian family on
//! twist-knot groups, the induced graph-manifold representation and the
//! Klein-bottle classification.

mod classify;
mod construct;
mod json;
mod rep;
mod sym_power;

pub use classify::{
    classify_klein, commutator_samples, eigenvalues_2x2, is_abelian, is_irreducible, is_metabelian, KleinCase,
};
pub use construct::{
    graph_manifold_rep, graph_manifold_rep_with_sign, klein_irreducible_rep, klein_reducible_rep, metabelian_rep,
    metabelian_u, torus_knot_abelian_rep, XSign,
};
pub use json::{RepMeta, RepRecord};
pub use rep::{Rep, RepOrigin, RepTags};
pub use sym_power::{sym_power, sym_power_diagonal, Lift};

use num_complex::Complex;
use rand::Rng;

use crate::algebra::Matrix;
use crate::scalar::Real;

/// A random element of SL(2,C): entries uniform in the unit square,
/// rescaled by a square root of the determinant.
pub fn random_sl2<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Matrix<T> {
    loop {
        let mut entry = || Complex::new(T::from_f64_lossy(rng.gen_range(-1.0..1.0)), T::from_f64_lossy(rng.gen_range(-1.0..1.0)));
        let m = Matrix::from_2x2(entry(), entry(), entry(), entry());
        let d = m.det();
        if d.norm() > T::from_f64_lossy(0.1) {
            return m.scale(d.sqrt().inv());
        }
    }
}
