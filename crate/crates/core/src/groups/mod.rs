//! Finitely presented groups, word evaluation and Fox calculus.

mod group_ring;
mod presentation;
mod word;

pub use group_ring::{fox_derivative, GroupRingElement};
pub use presentation::Presentation;
pub use word::{Letter, Word};

use num_complex::Complex;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::reps::{sym_power, Lift, Rep};
use crate::scalar::Real;

/// `rep(w)`, optionally pushed through a symmetric power.
pub fn evaluate_word<T: Real>(rep: &Rep<T>, w: &Word, lift: Lift) -> Result<Matrix<T>> {
    let mut acc = Matrix::identity(2);
    for l in w.letters() {
        let img = if l.inverse {
            rep.image_inverse(l.gen)?
        } else {
            rep.image(l.gen).ok_or(Error::UnknownGenerator(l.gen))?.clone()
        };
        acc = &acc * &img;
    }
    match lift {
        Lift::None => Ok(acc),
        Lift::SymPower(n) => sym_power(&acc, n),
    }
}

/// Residual of each relator: entrywise max-norm of `rep(r) - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct RelationReport<T: Real> {
    pub residuals: Vec<T>,
}

impl<T: Real> RelationReport<T> {
    pub fn max_residual(&self) -> T {
        self.residuals.iter().copied().fold(T::zero(), T::max)
    }

    pub fn passes(&self, threshold: T) -> bool {
        self.max_residual() < threshold
    }
}

pub fn verify_relations<T: Real>(rep: &Rep<T>, pres: &Presentation) -> Result<RelationReport<T>> {
    let id = Matrix::identity(2);
    let residuals = pres
        .relators()
        .iter()
        .map(|r| Ok(evaluate_word(rep, r, Lift::None)?.max_diff(&id)))
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport { residuals })
}

/// `Σ c_w · rep(w)` through the given lift.
pub fn eval_group_ring<T: Real>(e: &GroupRingElement, rep: &Rep<T>, lift: Lift) -> Result<Matrix<T>> {
    let dim = match lift {
        Lift::None => 2,
        Lift::SymPower(n) => n,
    };
    let mut acc = Matrix::zeros(dim, dim);
    for (w, c) in e.terms() {
        let m = evaluate_word(rep, w, lift)?;
        acc = &acc + &m.scale(Complex::new(T::from_int(c), T::zero()));
    }
    Ok(acc)
}
