use std::sync::{Arc, OnceLock};

use num_complex::Complex;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix, RootOfUnity};
use crate::error::{Error, Result};
use crate::groups::{evaluate_word, Presentation, Word};
use crate::reps::{classify, Lift};
use crate::scalar::Real;

/// Where a representation came from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepOrigin {
    /// `ρ_k` on the twist-knot group, with `u_k`.
    Metabelian { n: i64, k: i64, u: f64 },
    /// `ρ̄` on `π₁(M)` in diagonal normal form.
    GraphManifold { n: i64, j: i64, xi: RootOfUnity },
    Other,
}

/// Cached classification flags.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepTags {
    pub irreducible: bool,
    pub abelian: bool,
    /// Only decided for two-generator presentations.
    pub metabelian: Option<bool>,
}

/// An SL(2,C)-representation: one image per generator of `presentation`.
#[derive(Debug, Clone)]
pub struct Rep<T: Real> {
    presentation: Arc<Presentation>,
    images: Vec<Matrix<T>>,
    origin: RepOrigin,
    tags: OnceLock<RepTags>,
}

impl<T: Real> Rep<T> {
    /// Checks the image count and that every image lies in SL(2,C).
    pub fn new(presentation: Arc<Presentation>, images: Vec<Matrix<T>>) -> Result<Self> {
        if images.len() != presentation.num_generators() {
            return Err(Error::Dimension(format!(
                "{} images for {} generators",
                images.len(),
                presentation.num_generators()
            )));
        }
        for m in &images {
            if m.rows() != 2 || m.cols() != 2 {
                return Err(Error::Dimension("generator images must be 2x2".into()));
            }
            let defect = (m.det() - Complex::one()).norm();
            let scale = T::one().max(m.max_norm() * m.max_norm());
            if defect > T::tolerance(2) * scale {
                return Err(Error::NotUnimodular(defect.to_f64_lossy()));
            }
        }
        Ok(Self::new_unchecked(presentation, images))
    }

    pub fn new_unchecked(presentation: Arc<Presentation>, images: Vec<Matrix<T>>) -> Self {
        Rep {
            presentation,
            images,
            origin: RepOrigin::Other,
            tags: OnceLock::new(),
        }
    }

    pub fn trivial(presentation: Arc<Presentation>) -> Self {
        let images = vec![Matrix::identity(2); presentation.num_generators()];
        Self::new_unchecked(presentation, images)
    }

    pub(crate) fn with_origin(mut self, origin: RepOrigin) -> Self {
        self.origin = origin;
        self
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.presentation
    }

    pub fn images(&self) -> &[Matrix<T>] {
        &self.images
    }

    pub fn image(&self, gen: usize) -> Option<&Matrix<T>> {
        self.images.get(gen)
    }

    pub fn image_by_name(&self, name: &str) -> Option<&Matrix<T>> {
        self.presentation.generator_index(name).and_then(|g| self.images.get(g))
    }

    /// Inverse of a generator image via the adjugate.
    pub fn image_inverse(&self, gen: usize) -> Result<Matrix<T>> {
        let m = self.images.get(gen).ok_or(Error::UnknownGenerator(gen))?;
        Ok(Matrix::from_2x2(m[(1, 1)], -m[(0, 1)], -m[(1, 0)], m[(0, 0)]))
    }

    pub fn origin(&self) -> &RepOrigin {
        &self.origin
    }

    /// Pulls back along `target generator i ↦ words[i]`.
    pub fn pullback(&self, target: Arc<Presentation>, words: &[Word]) -> Result<Rep<T>> {
        if words.len() != target.num_generators() {
            return Err(Error::Dimension("one word per target generator".into()));
        }
        let images = words
            .iter()
            .map(|w| evaluate_word(self, w, Lift::None))
            .collect::<Result<Vec<_>>>()?;
        Ok(Rep::new_unchecked(target, images))
    }

    /// Restriction to the subgroup generated by the named generators,
    /// presented by `target` (generators matched positionally).
    pub fn restrict(&self, target: Arc<Presentation>, names: &[&str]) -> Result<Rep<T>> {
        let words = names
            .iter()
            .map(|n| {
                self.presentation
                    .generator_index(n)
                    .map(Word::gen)
                    .ok_or_else(|| Error::UnknownGeneratorName(n.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        self.pullback(target, &words)
    }

    /// `P^{-1} ρ P` generator-wise.
    pub fn conjugate(&self, p: &Matrix<T>) -> Result<Rep<T>> {
        let pinv = p.inverse().ok_or_else(|| Error::Dimension("singular conjugator".into()))?;
        let images = self.images.iter().map(|m| &(&pinv * m) * p).collect();
        Ok(Rep::new_unchecked(self.presentation.clone(), images).with_origin(self.origin.clone()))
    }

    /// Classification flags, computed once.
    pub fn tags(&self) -> RepTags {
        *self.tags.get_or_init(|| RepTags {
            irreducible: classify::is_irreducible(self),
            abelian: classify::is_abelian(self),
            metabelian: classify::is_metabelian(self).ok(),
        })
    }
}
