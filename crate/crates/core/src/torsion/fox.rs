use num_traits::Zero;

use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::groups::{eval_group_ring, evaluate_word, fox_derivative, Presentation, Word};
use crate::reps::{Lift, Rep};
use crate::scalar::Real;
use crate::torsion::klein::hadamard_bound;
use crate::torsion::{generic_torsion, Provenance, TorsionValue, TwistedChainComplex};

/// Twisted complex of the presentation 2-complex (one 0-cell, one 1-cell
/// per generator, one 2-cell per relator), with coefficients in `σ_{2N}`.
///
/// Boundary blocks are transposes of the Fox matrices:
/// `(∂₂)_{g,r} = Φ(∂r/∂g)^T` and `(∂₁)_g = (Φ(g) - 1)^T`.
pub fn presentation_complex<T: Real>(pres: &Presentation, rep: &Rep<T>, big_n: usize) -> Result<TwistedChainComplex<T>> {
    if big_n == 0 {
        return Err(Error::Dimension("coefficient dimension 2N must be positive".into()));
    }
    let d = 2 * big_n;
    let lift = Lift::SymPower(d);
    let (ng, nr) = (pres.num_generators(), pres.relators().len());
    let id = Matrix::identity(d);
    let mut d1 = Matrix::zeros(d, ng * d);
    for g in 0..ng {
        let block = (&evaluate_word(rep, &Word::gen(g), lift)? - &id).transpose();
        put_block(&mut d1, &block, 0, g * d);
    }
    let mut d2 = Matrix::zeros(ng * d, nr * d);
    for (r, rel) in pres.relators().iter().enumerate() {
        for g in 0..ng {
            let block = eval_group_ring(&fox_derivative(rel, g), rep, lift)?.transpose();
            put_block(&mut d2, &block, g * d, r * d);
        }
    }
    let cells = vec![
        vec!["p".to_string()],
        pres.generators().to_vec(),
        (0..nr).map(|r| format!("r{r}")).collect(),
    ];
    TwistedChainComplex::new(cells, d, vec![d1, d2])
}

fn put_block<T: Real>(m: &mut Matrix<T>, b: &Matrix<T>, r0: usize, c0: usize) {
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            m[(r0 + r, c0 + c)] = b[(r, c)];
        }
    }
}

fn is_negligible<T: Real>(det: num_complex::Complex<T>, m: &Matrix<T>) -> bool {
    det.is_zero() || det.norm() <= T::from_f64_lossy(1e-9) * hadamard_bound(m)
}

/// `det Φ(∂r/∂g₁) / det(Φ(g₂) - 1)` for a two-generator one-relator
/// presentation, with `Φ = σ_{2N} ∘ ρ`.
pub fn fox_oracle_torsion<T: Real>(pres: &Presentation, rep: &Rep<T>, big_n: usize) -> Result<TorsionValue<T>> {
    if pres.num_generators() != 2 || pres.relators().len() != 1 {
        return Err(Error::Dimension("fox oracle needs two generators and one relator".into()));
    }
    if big_n == 0 {
        return Ok(TorsionValue::one(Provenance::FoxOracle));
    }
    let d = 2 * big_n;
    let lift = Lift::SymPower(d);
    let g1 = evaluate_word(rep, &Word::gen(0), lift)?;
    let g2 = evaluate_word(rep, &Word::gen(1), lift)?;
    let id = Matrix::identity(d);
    let rank_tol = T::from_f64_lossy(super::RANK_REL_TOL);
    if (&g1 - &id).hstack(&(&g2 - &id)).rank(rank_tol) < d {
        return Err(Error::NotAcyclic { degree: 0 });
    }
    let den_m = &g2 - &id;
    let den = den_m.det();
    if is_negligible(den, &den_m) {
        return Err(Error::DegenerateDenominator);
    }
    let num_m = eval_group_ring(&fox_derivative(&pres.relators()[0], 0), rep, lift)?;
    let num = num_m.det();
    if is_negligible(num, &num_m) {
        return Err(Error::NotAcyclic { degree: 1 });
    }
    Ok(TorsionValue::from_value(num / den, Provenance::FoxOracle))
}

/// [`fox_oracle_torsion`], retrying with the generator roles swapped when
/// the first denominator degenerates.
pub fn fox_oracle_torsion_auto<T: Real>(pres: &Presentation, rep: &Rep<T>, big_n: usize) -> Result<TorsionValue<T>> {
    match fox_oracle_torsion(pres, rep, big_n) {
        Err(Error::DegenerateDenominator) => {
            let swapped = pres.swap_first_two();
            let mut images = rep.images().to_vec();
            images.swap(0, 1);
            let rep = Rep::new_unchecked(std::sync::Arc::new(swapped.clone()), images);
            fox_oracle_torsion(&swapped, &rep, big_n)
        }
        other => other,
    }
}

/// Generic-engine torsion of the one-vertex torus `⟨u, v | u v u^-1 v^-1⟩`
/// twisted by `σ_{2N} ∘ ρ`; it equals 1 whenever defined.
pub fn torus_torsion_check<T: Real>(rep: &Rep<T>, big_n: usize) -> Result<TorsionValue<T>> {
    let pres = rep.presentation();
    if pres.num_generators() != 2 || pres.relators().len() != 1 {
        return Err(Error::Dimension("expected a torus presentation <u, v>".into()));
    }
    let cx = presentation_complex(pres, rep, big_n)?;
    match generic_torsion(&cx) {
        Err(Error::NotAcyclic { degree }) => Err(Error::TorsionUndefined(format!(
            "torus complex is not acyclic in degree {degree}"
        ))),
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RootOfUnity;
    use crate::reps::{graph_manifold_rep, random_sl2, torus_knot_abelian_rep};
    use num_complex::Complex;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::sync::Arc;

    fn diag_rep(z1: RootOfUnity, z2: RootOfUnity) -> Rep<f64> {
        let d = |z: RootOfUnity| Matrix::from_diagonal(&[z.to_complex(), z.inv().to_complex()]);
        Rep::new(Arc::new(Presentation::torus()), vec![d(z1), d(z2)]).unwrap()
    }

    #[test]
    fn presentation_complex_chain_condition() {
        let rep = torus_knot_abelian_rep::<f64>(1, RootOfUnity::new(1, 5)).unwrap();
        for big_n in 1..=4 {
            let cx = presentation_complex(rep.presentation(), &rep, big_n).unwrap();
            assert!(cx.chain_defect() < 1e-12);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let pres = Arc::new(Presentation::parse("gens: a,b\nrel: a b a^-1 b a").unwrap());
        let rep = Rep::<f64>::new(pres.clone(), vec![random_sl2(&mut rng), random_sl2(&mut rng)]).unwrap();
        // not a representation of the group, but ∂∂ = 0 needs the relator to hold
        let cx = presentation_complex(&pres, &rep, 1).unwrap();
        assert!(cx.chain_defect() > 1e-6);
    }

    #[test]
    fn torus_knot_xi_minus_one() {
        let rep = torus_knot_abelian_rep::<f64>(1, RootOfUnity::minus_one()).unwrap();
        assert_eq!(
            fox_oracle_torsion(rep.presentation(), &rep, 1).unwrap_err(),
            Error::DegenerateDenominator
        );
        let t = fox_oracle_torsion_auto(rep.presentation(), &rep, 1).unwrap();
        assert!((t.value.unwrap() - Complex::new(2.25, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn trivial_rep_not_acyclic() {
        let pres = Presentation::torus_knot(1);
        let rep = Rep::<f64>::trivial(Arc::new(pres.clone()));
        assert!(matches!(fox_oracle_torsion(&pres, &rep, 1), Err(Error::NotAcyclic { .. })));
    }

    #[test]
    fn oracle_matches_generic_engine() {
        let rep = torus_knot_abelian_rep::<f64>(1, RootOfUnity::new(1, 5)).unwrap();
        for big_n in 1..=3 {
            let fox = fox_oracle_torsion_auto(rep.presentation(), &rep, big_n).unwrap();
            let cx = presentation_complex(rep.presentation(), &rep, big_n).unwrap();
            let gen = generic_torsion(&cx).unwrap();
            assert!(fox.relative_error(&gen) < 1e-9, "N={big_n}: {fox:?} vs {gen:?}");
        }
    }

    #[test]
    fn torus_examples() {
        let rep = diag_rep(RootOfUnity::new(1, 5), RootOfUnity::new(1, 7));
        assert!(torus_torsion_check(&rep, 1).unwrap().distance_from_one() < 1e-10);
        let triv = Rep::<f64>::trivial(Arc::new(Presentation::torus()));
        assert!(matches!(torus_torsion_check(&triv, 1), Err(Error::TorsionUndefined(_))));
    }

    #[test]
    fn jsj_torus_of_graph_manifold() {
        let rep = graph_manifold_rep::<f64>(1, 1).unwrap();
        let (a, b) = (Word::gen(0), Word::gen(1));
        let mu = b.pow(-1).concat(&a);
        let h = a.pow(2);
        let t = rep.pullback(Arc::new(Presentation::torus()), &[mu, h]).unwrap();
        for big_n in 1..=3 {
            assert!(torus_torsion_check(&t, big_n).unwrap().distance_from_one() < 1e-10);
        }
    }
}
