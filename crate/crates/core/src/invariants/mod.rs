//! Knot invariants, eigenvalue data and the asymptotics of the torsion.

mod asymptotics;
mod cycles;
mod limits;
mod params;
mod polys;

pub use asymptotics::{leading_coefficient_sequence, AsymptoticsReport, AsymptoticsRow};
pub use cycles::{cycle_products, detect_period, order_coprime_to_torus_determinant};
pub use limits::{limit_set, ExactLimit, LimitSet};
pub use params::{divisors, eigenvalue_indices, eigenvalue_set, order_pk, EigenvalueIndex, TwistKnotParam};
pub use polys::{a_poly_specialized, alexander_torus, alexander_twist};
