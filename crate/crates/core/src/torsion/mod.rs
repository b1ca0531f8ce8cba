//! Reidemeister torsion: the generic chain-complex engine, explicit
//! complexes, the Fox-calculus oracle and the closed forms.

mod closed;
mod complex;
mod fox;
mod klein;
mod value;

pub use closed::{
    abelian_factor_logs, abelian_knot_torsion, factor_period, graph_manifold_klein_factor,
    graph_manifold_log_sequence, graph_manifold_torsion, KLEIN_MATRIX_MAX_DIM, VALUE_MAX_N,
};
pub use complex::{generic_torsion, generic_torsion_with, LiftSelection, TwistedChainComplex, ENGINE_DIM_CAP, RANK_REL_TOL};
pub use fox::{fox_oracle_torsion, fox_oracle_torsion_auto, presentation_complex, torus_torsion_check};
pub use klein::{klein_bottle_complex, klein_bottle_torsion, klein_bottle_torsion_diagonal};
pub use value::{Provenance, TorsionRecord, TorsionValue};
