use num_complex::Complex;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::torsion::{Provenance, TorsionValue};

/// Total dimension above which the generic engine refuses to run.
pub const ENGINE_DIM_CAP: usize = 512;

/// Relative pivot threshold for rank decisions.
pub const RANK_REL_TOL: f64 = 1e-9;

/// A finite chain complex `0 → C_top → ... → C_1 → C_0 → 0` of
/// coefficient blocks, one block of size `block` per cell.
///
/// `boundaries[i]` is `∂_{i+1}: C_{i+1} → C_i` acting on column vectors.
#[derive(Debug, Clone)]
pub struct TwistedChainComplex<T: Real> {
    cells: Vec<Vec<String>>,
    block: usize,
    boundaries: Vec<Matrix<T>>,
}

impl<T: Real> TwistedChainComplex<T> {
    pub fn new(cells: Vec<Vec<String>>, block: usize, boundaries: Vec<Matrix<T>>) -> Result<Self> {
        if boundaries.len() + 1 != cells.len() {
            return Err(Error::Dimension(format!(
                "{} degrees need {} boundary maps, got {}",
                cells.len(),
                cells.len().saturating_sub(1),
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let (rows, cols) = (cells[i].len() * block, cells[i + 1].len() * block);
            if d.rows() != rows || d.cols() != cols {
                return Err(Error::Dimension(format!(
                    "boundary {} is {}x{}, expected {rows}x{cols}",
                    i + 1,
                    d.rows(),
                    d.cols()
                )));
            }
        }
        Ok(TwistedChainComplex { cells, block, boundaries })
    }

    /// Module dimensions `dim C_0, dim C_1, ...`.
    pub fn dims(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len() * self.block).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    pub fn top_degree(&self) -> usize {
        self.cells.len() - 1
    }

    pub fn block(&self) -> usize {
        self.block
    }

    /// `∂_i: C_i → C_{i-1}` for `1 <= i <= top`.
    pub fn boundary(&self, i: usize) -> Option<&Matrix<T>> {
        i.checked_sub(1).and_then(|k| self.boundaries.get(k))
    }

    /// Basis labels of `C_i`: `cell⊗k`.
    pub fn labels(&self, i: usize) -> Vec<String> {
        self.cells[i]
            .iter()
            .flat_map(|c| (0..self.block).map(move |k| format!("{c}⊗{k}")))
            .collect()
    }

    /// Largest entry of `∂_{i} ∘ ∂_{i+1}` over all `i`.
    pub fn chain_defect(&self) -> T {
        self.boundaries
            .windows(2)
            .map(|w| (&w[0] * &w[1]).max_norm())
            .fold(T::zero(), T::max)
    }

    fn ranks(&self) -> Vec<usize> {
        let tol = T::from_f64_lossy(RANK_REL_TOL);
        let mut r = vec![0];
        r.extend(self.boundaries.iter().map(|d| d.rank(tol)));
        r.push(0);
        r
    }

    /// First degree where `rank ∂_i + rank ∂_{i+1} != dim C_i`.
    pub fn acyclicity_defect(&self) -> Option<usize> {
        let ranks = self.ranks();
        self.dims()
            .iter()
            .enumerate()
            .find(|(i, &d)| ranks[*i] + ranks[i + 1] != d)
            .map(|(i, _)| i)
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclicity_defect().is_none()
    }

    /// Reorders the cells of degree `i`: new cell `k` is old cell `perm[k]`.
    pub fn permute_cells(&self, i: usize, perm: &[usize]) -> Self {
        let b = self.block;
        let basis: Vec<usize> = perm.iter().flat_map(|&p| (p * b)..(p * b + b)).collect();
        let mut out = self.clone();
        out.cells[i] = perm.iter().map(|&p| self.cells[i][p].clone()).collect();
        if i >= 1 {
            out.boundaries[i - 1] = self.boundaries[i - 1].select_columns(&basis);
        }
        if i < self.boundaries.len() {
            out.boundaries[i] = self.boundaries[i].transpose().select_columns(&basis).transpose();
        }
        out
    }

    /// Reverses the orientation of one cell of degree `i`.
    pub fn flip_cell(&self, i: usize, cell: usize) -> Self {
        let b = self.block;
        let mut out = self.clone();
        out.cells[i][cell] = format!("-{}", self.cells[i][cell]);
        let range = cell * b..cell * b + b;
        if i >= 1 {
            let d = &mut out.boundaries[i - 1];
            for r in 0..d.rows() {
                for c in range.clone() {
                    d[(r, c)] = -d[(r, c)];
                }
            }
        }
        if i < self.boundaries.len() {
            let d = &mut out.boundaries[i];
            for r in range {
                for c in 0..d.cols() {
                    d[(r, c)] = -d[(r, c)];
                }
            }
        }
        out
    }
}

/// How the lifts `b̃^i` of the boundary bases are chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftSelection {
    /// Unit vectors at the greedy pivot columns of `∂_i`.
    Greedy,
    /// Shuffled pivot order, a random change of basis and a random
    /// cycle added to every lift vector.
    Random(u64),
}

fn random_complex<T: Real, R: Rng>(rng: &mut R) -> Complex<T> {
    Complex::new(
        T::from_f64_lossy(rng.gen_range(-1.0..1.0)),
        T::from_f64_lossy(rng.gen_range(-1.0..1.0)),
    )
}

fn random_matrix<T: Real, R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<T> {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m[(r, c)] = random_complex(rng);
        }
    }
    m
}

/// Torsion of an acyclic complex by the alternating product
/// `∏_i det(∂_{i+1} b̃^{i+1} ∪ b̃^i / c^i)^{(-1)^{i+1}}`.
pub fn generic_torsion<T: Real>(c: &TwistedChainComplex<T>) -> Result<TorsionValue<T>> {
    generic_torsion_with(c, LiftSelection::Greedy)
}

pub fn generic_torsion_with<T: Real>(c: &TwistedChainComplex<T>, sel: LiftSelection) -> Result<TorsionValue<T>> {
    let total = c.total_dim();
    if total > ENGINE_DIM_CAP {
        return Err(Error::EngineTooLarge {
            cap: ENGINE_DIM_CAP,
            got: total,
        });
    }
    if let Some(degree) = c.acyclicity_defect() {
        return Err(Error::NotAcyclic { degree });
    }
    let dims = c.dims();
    let top = c.top_degree();
    let tol = T::from_f64_lossy(RANK_REL_TOL);
    let mut rng = match sel {
        LiftSelection::Greedy => None,
        LiftSelection::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
    };

    // lifts[i] ⊂ C_i, mapped by ∂_i onto a basis of im ∂_i
    let mut lifts: Vec<Matrix<T>> = Vec::with_capacity(top + 2);
    lifts.push(Matrix::zeros(dims[0], 0));
    for i in 1..=top {
        let d = c.boundary(i).expect("degree in range");
        let mut order: Vec<usize> = (0..d.cols()).collect();
        if let Some(rng) = rng.as_mut() {
            order.shuffle(rng);
        }
        let piv = d.pivot_columns_in_order(&order, tol);
        let mut lift = Matrix::identity(dims[i]).select_columns(&piv);
        if let Some(rng) = rng.as_mut() {
            let r = piv.len();
            let mix = loop {
                let g = random_matrix::<T, _>(rng, r, r);
                if g.det().norm() > T::from_f64_lossy(1e-2) {
                    break g;
                }
            };
            lift = &lift * &mix;
            if let Some(up) = c.boundary(i + 1) {
                lift = &lift + &(up * &random_matrix::<T, _>(rng, up.cols(), r));
            }
        }
        lifts.push(lift);
    }
    lifts.push(Matrix::zeros(0, 0));

    let mut value = Complex::<T>::one();
    let mut log = T::zero();
    for i in 0..=top {
        let upper = match c.boundary(i + 1) {
            Some(d) => d * &lifts[i + 1],
            None => Matrix::zeros(dims[i], 0),
        };
        let m = upper.hstack(&lifts[i]);
        if !m.is_square() {
            return Err(Error::NotAcyclic { degree: i });
        }
        let det = m.det();
        if det.is_zero() {
            return Err(Error::NotAcyclic { degree: i });
        }
        if i % 2 == 1 {
            value *= det;
            log += det.norm().ln();
        } else {
            value /= det;
            log -= det.norm().ln();
        }
    }
    Ok(TorsionValue {
        log_magnitude: log,
        value: Some(value),
        provenance: Provenance::GenericEngine,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn cells(names: &[&[&str]]) -> Vec<Vec<String>> {
        names.iter().map(|d| d.iter().map(|s| s.to_string()).collect()).collect()
    }

    #[test]
    fn identity_boundary_has_torsion_one() {
        let cx = TwistedChainComplex::new(cells(&[&["v"], &["e"]]), 3, vec![Matrix::<f64>::identity(3)]).unwrap();
        let t = generic_torsion(&cx).unwrap();
        assert!((t.value.unwrap() - c(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(t.provenance, Provenance::GenericEngine);
    }

    #[test]
    fn two_term_complex_is_inverse_determinant() {
        let d = Matrix::from_rows(vec![vec![c(2.0, 0.0), c(1.0, 0.0)], vec![c(0.0, 1.0), c(3.0, 0.0)]]);
        let cx = TwistedChainComplex::new(cells(&[&["v"], &["e"]]), 2, vec![d.clone()]).unwrap();
        let t = generic_torsion(&cx).unwrap();
        assert!((t.value.unwrap() - d.det().inv()).norm() < 1e-14);
        assert!((t.log_magnitude + d.det().norm().ln()).abs() < 1e-14);
    }

    #[test]
    fn non_acyclic_reports_degree() {
        let cx = TwistedChainComplex::new(cells(&[&["v"], &["e"]]), 2, vec![Matrix::<f64>::zeros(2, 2)]).unwrap();
        assert_eq!(generic_torsion(&cx).unwrap_err(), Error::NotAcyclic { degree: 0 });
        assert!(!cx.is_acyclic());
    }

    #[test]
    fn shape_checks() {
        assert!(matches!(
            TwistedChainComplex::new(cells(&[&["v"], &["e"]]), 2, vec![Matrix::<f64>::zeros(2, 3)]),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            TwistedChainComplex::<f64>::new(cells(&[&["v"], &["e"]]), 2, vec![]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn engine_cap() {
        let cx = TwistedChainComplex::new(cells(&[&["v"], &["e"]]), 300, vec![Matrix::<f64>::identity(300)]).unwrap();
        assert_eq!(
            generic_torsion(&cx).unwrap_err(),
            Error::EngineTooLarge { cap: 512, got: 600 }
        );
    }

    #[test]
    fn three_term_complex_lift_independence() {
        // C_2 = C^2 -> C_1 = C^4 -> C_0 = C^2, built so that ∂1 ∂2 = 0
        let a = Matrix::from_rows(vec![vec![c(1.0, 0.5), c(0.0, 1.0)], vec![c(2.0, 0.0), c(1.0, -1.0)]]);
        // ∂1 = [A | B], ∂2 = [B; -A] with commuting A, B = A^2
        let b = &a * &a;
        let d1 = a.hstack(&b);
        let d2 = b.vstack(&-&a);
        let cx = TwistedChainComplex::new(cells(&[&["v"], &["e", "f"], &["s"]]), 2, vec![d1, d2]).unwrap();
        assert!(cx.chain_defect() < 1e-14);
        let base = generic_torsion(&cx).unwrap().value.unwrap();
        for seed in 0..10 {
            let t = generic_torsion_with(&cx, LiftSelection::Random(seed)).unwrap().value.unwrap();
            assert!((t - base).norm() / base.norm() < 1e-10, "seed {seed}: {t} vs {base}");
        }
    }

    #[test]
    fn permutation_and_orientation_invariance_for_even_blocks() {
        let a = Matrix::from_rows(vec![vec![c(1.0, 0.5), c(0.0, 1.0)], vec![c(2.0, 0.0), c(1.0, -1.0)]]);
        let b = &a * &a;
        let cx = TwistedChainComplex::new(
            cells(&[&["v"], &["e", "f"], &["s"]]),
            2,
            vec![a.hstack(&b), b.vstack(&-&a)],
        )
        .unwrap();
        let base = generic_torsion(&cx).unwrap().value.unwrap();
        let variants = [cx.permute_cells(1, &[1, 0]), cx.flip_cell(1, 0), cx.flip_cell(2, 0), cx.flip_cell(0, 0)];
        for v in &variants {
            assert!(v.chain_defect() < 1e-14);
            let t = generic_torsion(v).unwrap().value.unwrap();
            assert!((t - base).norm() / base.norm() < 1e-12);
        }
        assert_eq!(cx.permute_cells(1, &[1, 0]).labels(1)[0], "f⊗0");
    }
}
