use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::groups::{evaluate_word, verify_relations, Word};
use crate::reps::{Lift, Rep};
use crate::scalar::Real;

/// Membership tolerance for eigenvector and commutation tests.
const CLASSIFY_TOL: f64 = 1e-8;

fn tol<T: Real>() -> T {
    T::from_f64_lossy(CLASSIFY_TOL)
}

fn is_scalar<T: Real>(m: &Matrix<T>) -> bool {
    let s = T::one().max(m.max_norm());
    m[(0, 1)].norm() <= tol::<T>() * s
        && m[(1, 0)].norm() <= tol::<T>() * s
        && (m[(0, 0)] - m[(1, 1)]).norm() <= tol::<T>() * s
}

/// Eigenvalues of a 2x2 matrix.
pub fn eigenvalues_2x2<T: Real>(m: &Matrix<T>) -> [Complex<T>; 2] {
    let tr = m.trace();
    let det = m.det();
    let two = T::from_int(2);
    let disc = (tr * tr - det * T::from_int(4)).sqrt();
    [(tr + disc) / two, (tr - disc) / two]
}

/// A unit eigenvector for `lambda` of a non-scalar 2x2 matrix.
fn eigenvector<T: Real>(m: &Matrix<T>, lambda: Complex<T>) -> [Complex<T>; 2] {
    // rows of m - lambda: (a - l, b), (c, d - l); each gives a kernel candidate
    let c1 = [m[(0, 1)], lambda - m[(0, 0)]];
    let c2 = [lambda - m[(1, 1)], m[(1, 0)]];
    let n1 = (c1[0].norm_sqr() + c1[1].norm_sqr()).sqrt();
    let n2 = (c2[0].norm_sqr() + c2[1].norm_sqr()).sqrt();
    let (v, nv) = if n1 >= n2 { (c1, n1) } else { (c2, n2) };
    [v[0] / nv, v[1] / nv]
}

fn fixes_line<T: Real>(m: &Matrix<T>, v: &[Complex<T>; 2]) -> bool {
    let w0 = m[(0, 0)] * v[0] + m[(0, 1)] * v[1];
    let w1 = m[(1, 0)] * v[0] + m[(1, 1)] * v[1];
    (w0 * v[1] - w1 * v[0]).norm() <= tol::<T>() * T::one().max(m.max_norm())
}

/// True iff the images share no common eigenvector.
pub fn is_irreducible<T: Real>(rep: &Rep<T>) -> bool {
    let Some(pivot) = rep.images().iter().find(|m| !is_scalar(*m)) else {
        return false;
    };
    let [l1, l2] = eigenvalues_2x2(pivot);
    for v in [eigenvector(pivot, l1), eigenvector(pivot, l2)] {
        if rep.images().iter().all(|m| fixes_line(m, &v)) {
            return false;
        }
    }
    true
}

fn commute<T: Real>(a: &Matrix<T>, b: &Matrix<T>) -> bool {
    let d = (a * b).max_diff(&(b * a));
    d <= tol::<T>() * T::one().max(a.max_norm() * b.max_norm())
}

pub fn is_abelian<T: Real>(rep: &Rep<T>) -> bool {
    let imgs = rep.images();
    imgs.iter().enumerate().all(|(i, a)| imgs[i + 1..].iter().all(|b| commute(a, b)))
}

/// Sampled elements of the commutator subgroup of a two-generator group.
pub fn commutator_samples() -> Vec<Word> {
    let (a, b) = (Word::gen(0), Word::gen(1));
    let w = Word::commutator(&a, &b);
    let mut samples = vec![w.clone()];
    for u in [a.clone(), b.clone(), a.inverse(), b.inverse(), a.pow(2), b.pow(2), a.concat(&b)] {
        samples.push(w.conjugate_by(&u));
    }
    for u in [&a, &b] {
        samples.push(Word::commutator(&w, u));
        samples.push(Word::commutator(&w.conjugate_by(u), &w));
    }
    samples.push(Word::commutator(&Word::commutator(&w, &a), &b));
    samples
}

/// Semi-decision for metabelian: every pair of sampled commutator-subgroup
/// images commutes. `false` is certain, `true` is sampled.
pub fn is_metabelian<T: Real>(rep: &Rep<T>) -> Result<bool> {
    if rep.presentation().num_generators() != 2 {
        return Err(Error::Classification(
            "metabelian test needs a two-generator presentation".into(),
        ));
    }
    let imgs = commutator_samples()
        .iter()
        .map(|w| evaluate_word(rep, w, Lift::None))
        .collect::<Result<Vec<_>>>()?;
    Ok(imgs
        .iter()
        .enumerate()
        .all(|(i, a)| imgs[i + 1..].iter().all(|b| commute(a, b))))
}

/// The three conjugacy types of SL(2,C)-representations of the Klein
/// bottle group `⟨x, y | y x = x y^-1⟩`.
#[derive(Debug, Clone, PartialEq)]
pub enum KleinCase<T: Real> {
    /// `ρ(y) = ±1`, `ρ(x)` arbitrary.
    Abelian { y_sign: i8, x: Matrix<T> },
    /// `ρ(y) ~ diag(η, η^-1)`, `η ≠ ±1`, `ρ(x) ~ [[0, -1], [1, 0]]`.
    Irreducible { eta: Complex<T>, conjugator: Matrix<T> },
    /// `ρ(y) ~ [[ε, ω], [0, ε]]`, `ρ(x) ~ [[δ i, ω'], [0, -δ i]]`.
    ReducibleNonAbelian {
        y_sign: i8,
        omega: Complex<T>,
        x_sign: i8,
        omega_prime: Complex<T>,
        conjugator: Matrix<T>,
    },
}

impl<T: Real> KleinCase<T> {
    pub fn label(&self) -> &'static str {
        match self {
            KleinCase::Abelian { .. } => "abelian",
            KleinCase::Irreducible { .. } => "irreducible",
            KleinCase::ReducibleNonAbelian { .. } => "reducible-non-abelian",
        }
    }
}

fn sign_of<T: Real>(z: Complex<T>) -> i8 {
    if z.re >= T::zero() {
        1
    } else {
        -1
    }
}

/// Columns `(v, w)` scaled so the determinant is one.
fn unimodular_frame<T: Real>(v: [Complex<T>; 2], w: [Complex<T>; 2]) -> Option<Matrix<T>> {
    let p = Matrix::from_2x2(v[0], w[0], v[1], w[1]);
    let d = p.det();
    if d.norm() <= T::epsilon() {
        return None;
    }
    let s = d.sqrt().inv();
    Some(p.scale(s))
}

/// Classifies a Klein-bottle representation and extracts its normal-form
/// parameters. For case (2), `η` is the eigenvalue of `ρ(y)` nearest its
/// (1,1) entry, so a diagonal `ρ(y)` yields `η = ρ(y)_{11}`.
pub fn classify_klein<T: Real>(rep: &Rep<T>) -> Result<KleinCase<T>> {
    let pres = rep.presentation();
    if pres.num_generators() != 2 || pres.relators().len() != 1 {
        return Err(Error::Classification("expected the Klein bottle presentation".into()));
    }
    let report = verify_relations(rep, pres)?;
    let bound = tol::<T>() * T::one().max(rep.images().iter().map(|m| m.max_norm()).fold(T::zero(), T::max));
    if !report.passes(bound) {
        return Err(Error::RelationViolated {
            relator: 0,
            residual: report.max_residual().to_f64_lossy(),
        });
    }
    let x = rep.images()[0].clone();
    let y = rep.images()[1].clone();

    if is_scalar(&y) {
        return Ok(KleinCase::Abelian {
            y_sign: sign_of(y[(0, 0)]),
            x,
        });
    }

    let tr = y.trace();
    let four = T::from_int(4);
    if (tr * tr - four).norm() > tol::<T>() * four {
        // diagonalizable with distinct eigenvalues
        let [l1, l2] = eigenvalues_2x2(&y);
        let (eta, other) = if (l1 - y[(0, 0)]).norm() <= (l2 - y[(0, 0)]).norm() {
            (l1, l2)
        } else {
            (l2, l1)
        };
        let frame = unimodular_frame(eigenvector(&y, eta), eigenvector(&y, other))
            .ok_or_else(|| Error::Classification("degenerate eigenbasis".into()))?;
        let conj = rep.conjugate(&frame)?;
        // x is now anti-diagonal [[0, c], [-1/c, 0]]; diag(d, 1/d) sends c to c/d²
        let c = conj.images()[0][(0, 1)];
        let d = (-c).sqrt();
        let scale = Matrix::from_diagonal(&[d, d.inv()]);
        let conjugator = &frame * &scale;
        return Ok(KleinCase::Irreducible { eta, conjugator });
    }

    // parabolic: a single fixed line
    let eps = tr / T::from_int(2);
    let v = eigenvector(&y, eps);
    let w = if v[0].norm() >= v[1].norm() {
        [Complex::zero(), Complex::one()]
    } else {
        [Complex::one(), Complex::zero()]
    };
    let frame = if y[(1, 0)].norm() <= tol::<T>() {
        Matrix::identity(2)
    } else {
        unimodular_frame(v, w).ok_or_else(|| Error::Classification("degenerate frame".into()))?
    };
    let conj = rep.conjugate(&frame)?;
    let (cx, cy) = (&conj.images()[0], &conj.images()[1]);
    Ok(KleinCase::ReducibleNonAbelian {
        y_sign: sign_of(cy[(0, 0)]),
        omega: cy[(0, 1)],
        x_sign: if cx[(0, 0)].im >= T::zero() { 1 } else { -1 },
        omega_prime: cx[(0, 1)],
        conjugator: frame,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RootOfUnity;
    use crate::groups::Presentation;
    use crate::invariants::TwistKnotParam;
    use crate::reps::{
        graph_manifold_rep, klein_irreducible_rep, klein_reducible_rep, metabelian_rep, random_sl2,
    };
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn trivial_rep_is_reducible() {
        let rep = Rep::<f64>::trivial(Arc::new(Presentation::torus()));
        assert!(!is_irreducible(&rep));
        assert!(is_abelian(&rep));
        assert_eq!(is_metabelian(&rep), Ok(true));
    }

    #[test]
    fn metabelian_reps_are_irreducible_and_metabelian() {
        for n in [1, 2, 3, -2, -3] {
            for k in 1..=TwistKnotParam::new(n).unwrap().num_classes() {
                let rep = metabelian_rep::<f64>(n, k).unwrap();
                assert!(is_irreducible(&rep), "n={n} k={k}");
                assert_eq!(is_metabelian(&rep), Ok(true), "n={n} k={k}");
                assert!(!is_abelian(&rep));
            }
        }
    }

    #[test]
    fn torus_knot_piece_is_abelian_and_klein_piece_irreducible() {
        for n in [1, 2, 3, -2, -3] {
            for j in 1..=TwistKnotParam::new(n).unwrap().num_classes() {
                let rep = graph_manifold_rep::<f64>(n, j).unwrap();
                let ab = rep.restrict(Arc::new(Presentation::torus_knot(n)), &["a", "b"]).unwrap();
                assert!(!is_irreducible(&ab));
                assert!(is_abelian(&ab));
                let kb = rep.restrict(Arc::new(Presentation::klein_bottle()), &["x", "y"]).unwrap();
                assert!(is_irreducible(&kb), "n={n} j={j}");
                assert!(is_irreducible(&rep));
            }
        }
    }

    #[test]
    fn random_rep_is_not_metabelian() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let pres = Arc::new(Presentation::new(vec!["p".into(), "q".into()], vec![]).unwrap());
        for _ in 0..5 {
            let rep = Rep::<f64>::new(pres.clone(), vec![random_sl2(&mut rng), random_sl2(&mut rng)]).unwrap();
            assert_eq!(is_metabelian(&rep), Ok(false));
            assert!(is_irreducible(&rep));
        }
    }

    #[test]
    fn metabelian_needs_two_generators() {
        let rep = graph_manifold_rep::<f64>(1, 1).unwrap();
        assert!(matches!(is_metabelian(&rep), Err(Error::Classification(_))));
    }

    #[test]
    fn klein_case_abelian() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let x = random_sl2::<f64, _>(&mut rng);
        let rep = Rep::new(Arc::new(Presentation::klein_bottle()), vec![x, Matrix::identity(2)]).unwrap();
        assert_eq!(classify_klein(&rep).unwrap().label(), "abelian");
    }

    #[test]
    fn klein_case_irreducible_from_graph_manifold() {
        let rep = graph_manifold_rep::<f64>(1, 1).unwrap();
        let kb = rep.restrict(Arc::new(Presentation::klein_bottle()), &["x", "y"]).unwrap();
        match classify_klein(&kb).unwrap() {
            KleinCase::Irreducible { eta, conjugator } => {
                let expected: Complex<f64> = RootOfUnity::new(1, 5).inv().to_complex();
                assert!((eta - expected).norm() < 1e-12);
                let normal = kb.conjugate(&conjugator).unwrap();
                let want = klein_irreducible_rep(eta);
                assert!(normal.images()[0].max_diff(&want.images()[0]) < 1e-12);
                assert!(normal.images()[1].max_diff(&want.images()[1]) < 1e-12);
            }
            other => panic!("expected irreducible, got {other:?}"),
        }
    }

    #[test]
    fn klein_case_irreducible_after_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let p = random_sl2::<f64, _>(&mut rng);
        let eta = RootOfUnity::new(2, 7).to_complex::<f64>();
        let rep = klein_irreducible_rep(eta).conjugate(&p).unwrap();
        match classify_klein(&rep).unwrap() {
            KleinCase::Irreducible { eta: e, conjugator } => {
                assert!((e - eta).norm() < 1e-10 || (e - eta.inv()).norm() < 1e-10);
                let normal = rep.conjugate(&conjugator).unwrap();
                assert!(normal.images()[1].is_diagonal(1e-10));
                let x = &normal.images()[0];
                assert!((x[(0, 1)] - c(-1.0, 0.0)).norm() < 1e-10);
                assert!((x[(1, 0)] - c(1.0, 0.0)).norm() < 1e-10);
            }
            other => panic!("expected irreducible, got {other:?}"),
        }
    }

    #[test]
    fn klein_case_reducible() {
        let rep = Rep::new(
            Arc::new(Presentation::klein_bottle()),
            vec![
                Matrix::from_2x2(c(0.0, 1.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, -1.0)),
                Matrix::from_2x2(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)),
            ],
        )
        .unwrap();
        match classify_klein(&rep).unwrap() {
            KleinCase::ReducibleNonAbelian {
                y_sign,
                omega,
                x_sign,
                omega_prime,
                ..
            } => {
                assert_eq!((y_sign, x_sign), (1, 1));
                assert!((omega - c(1.0, 0.0)).norm() < 1e-14);
                assert!(omega_prime.norm() < 1e-14);
            }
            other => panic!("expected case (3), got {other:?}"),
        }
        assert!(!is_irreducible(&rep));
    }

    #[test]
    fn klein_case_reducible_conjugated() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let p = random_sl2::<f64, _>(&mut rng);
        let rep = klein_reducible_rep::<f64>(-1, c(0.5, 1.0), -1, c(2.0, 0.0)).conjugate(&p).unwrap();
        let case = classify_klein(&rep).unwrap();
        assert_eq!(case.label(), "reducible-non-abelian");
        if let KleinCase::ReducibleNonAbelian { y_sign, x_sign, omega, conjugator, .. } = case {
            assert_eq!((y_sign, x_sign), (-1, -1));
            assert!(omega.norm() > 1e-6);
            let normal = rep.conjugate(&conjugator).unwrap();
            assert!(normal.images()[1][(1, 0)].norm() < 1e-10);
            assert!(normal.images()[0][(1, 0)].norm() < 1e-10);
        }
    }

    #[test]
    fn klein_relation_violation() {
        let rep = Rep::new(
            Arc::new(Presentation::klein_bottle()),
            vec![
                Matrix::from_2x2(c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)),
                Matrix::from_2x2(c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)),
            ],
        )
        .unwrap();
        assert!(matches!(classify_klein(&rep), Err(Error::RelationViolated { .. })));
    }

    #[test]
    fn conjugation_invariance_of_relation_check() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        let rep = graph_manifold_rep::<f64>(2, 1).unwrap();
        let p = random_sl2::<f64, _>(&mut rng);
        let cond = p.max_norm() * p.inverse().unwrap().max_norm();
        assert!(cond < 1e3);
        let conj = rep.conjugate(&p).unwrap();
        let r = verify_relations(&conj, conj.presentation()).unwrap();
        assert!(r.passes(1e-8));
    }
}
