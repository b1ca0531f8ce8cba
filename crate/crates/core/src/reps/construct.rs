use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::algebra::{Matrix, RootOfUnity};
use crate::error::{Error, Result};
use crate::groups::Presentation;
use crate::invariants::{EigenvalueIndex, TwistKnotParam};
use crate::reps::{Rep, RepOrigin};
use crate::scalar::Real;

/// `u_k = -4 sin^2(k π / (4n+1))`.
pub fn metabelian_u<T: Real>(n: i64, k: i64) -> T {
    let angle = T::PI() * T::from_int(k) / T::from_int(4 * n + 1);
    let s = angle.sin();
    -T::from_int(4) * s * s
}

/// The irreducible metabelian representative `ρ_k` on the twist-knot group:
///
/// ```text
/// ρ_k(α) = [[i, -i], [0, -i]],   ρ_k(β) = [[i, 0], [-u_k i, -i]]
/// ```
pub fn metabelian_rep<T: Real>(n: i64, k: i64) -> Result<Rep<T>> {
    let param = TwistKnotParam::new(n)?;
    if k < 1 || k > param.num_classes() {
        return Err(Error::IndexOutOfRange {
            name: "k",
            value: k,
            max: param.num_classes(),
        });
    }
    let u = metabelian_u::<T>(n, k);
    let (z, i) = (Complex::<T>::zero(), Complex::<T>::i());
    let alpha = Matrix::from_2x2(i, -i, z, -i);
    let beta = Matrix::from_2x2(i, z, -i * u, -i);
    let pres = Arc::new(Presentation::twist_knot(n));
    Ok(Rep::new(pres, vec![alpha, beta])?.with_origin(RepOrigin::Metabelian {
        n,
        k,
        u: u.to_f64_lossy(),
    }))
}

/// Sign of the off-diagonal normal form of `ρ̄(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum XSign {
    /// `[[0, 1], [-1, 0]]`
    Plus,
    /// `[[0, -1], [1, 0]]`
    Minus,
}

/// `ρ̄` on `π₁(M)` in diagonal normal form, with `ξ = e^{iπ(2j-1)/p}`:
/// `ρ̄(a) = diag(ξ^{2n+1}, ·)`, `ρ̄(b) = diag(ξ², ·)`, `ρ̄(y) = diag(ξ^-1, ξ)`
/// and `ρ̄(x) = [[0, 1], [-1, 0]]`, so that `ρ̄(b^-n a) = diag(ξ, ξ^-1)`.
pub fn graph_manifold_rep<T: Real>(n: i64, j: i64) -> Result<Rep<T>> {
    graph_manifold_rep_with_sign(n, j, XSign::Plus)
}

pub fn graph_manifold_rep_with_sign<T: Real>(n: i64, j: i64, sign: XSign) -> Result<Rep<T>> {
    let idx = EigenvalueIndex::new(TwistKnotParam::new(n)?, j)?;
    let xi = idx.xi();
    let diag = |r: RootOfUnity| Matrix::from_diagonal(&[r.to_complex::<T>(), r.inv().to_complex::<T>()]);
    let (z, o) = (Complex::<T>::zero(), Complex::<T>::one());
    let x = match sign {
        XSign::Plus => Matrix::from_2x2(z, o, -o, z),
        XSign::Minus => Matrix::from_2x2(z, -o, o, z),
    };
    let images = vec![diag(xi.pow(2 * n + 1)), diag(xi.pow(2)), x, diag(xi.inv())];
    let pres = Arc::new(Presentation::graph_manifold(n));
    Ok(Rep::new(pres, images)?.with_origin(RepOrigin::GraphManifold { n, j, xi }))
}

/// Abelian representation of the torus-knot group `⟨a, b | a² = b^{2n+1}⟩`
/// whose meridian `b^-n a` has eigenvalues `ξ^{±1}`:
/// `a ↦ diag(ξ^{2n+1}, ·)`, `b ↦ diag(ξ², ·)`.
pub fn torus_knot_abelian_rep<T: Real>(n: i64, xi: RootOfUnity) -> Result<Rep<T>> {
    if (2 * n + 1).abs() == 1 {
        return Err(Error::ExcludedTwist(n));
    }
    let diag = |r: RootOfUnity| Matrix::from_diagonal(&[r.to_complex::<T>(), r.inv().to_complex::<T>()]);
    let images = vec![diag(xi.pow(2 * n + 1)), diag(xi.pow(2))];
    Rep::new(Arc::new(Presentation::torus_knot(n)), images)
}

/// Klein-bottle representation in the irreducible normal form:
/// `ρ(x) = [[0, -1], [1, 0]]`, `ρ(y) = diag(η, η^-1)`.
pub fn klein_irreducible_rep<T: Real>(eta: Complex<T>) -> Rep<T> {
    let (z, o) = (Complex::<T>::zero(), Complex::<T>::one());
    let images = vec![Matrix::from_2x2(z, -o, o, z), Matrix::from_diagonal(&[eta, eta.inv()])];
    Rep::new_unchecked(Arc::new(Presentation::klein_bottle()), images)
}

/// Klein-bottle representation in the reducible non-abelian normal form:
/// `ρ(y) = [[ε, ω], [0, ε]]`, `ρ(x) = [[δ i, ω'], [0, -δ i]]` with
/// `ε, δ ∈ {±1}`.
pub fn klein_reducible_rep<T: Real>(y_sign: i8, omega: Complex<T>, x_sign: i8, omega_prime: Complex<T>) -> Rep<T> {
    let z = Complex::<T>::zero();
    let e = Complex::new(T::from_int(y_sign as i64), T::zero());
    let d = Complex::new(T::zero(), T::from_int(x_sign as i64));
    let images = vec![Matrix::from_2x2(d, omega_prime, z, -d), Matrix::from_2x2(e, omega, z, e)];
    Rep::new_unchecked(Arc::new(Presentation::klein_bottle()), images)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::verify_relations;

    #[test]
    fn u_value_for_figure_eight() {
        let u = metabelian_u::<f64>(1, 1);
        assert!((u + 1.381966011250105).abs() < 1e-12);
        let u2 = metabelian_u::<f64>(1, 2);
        assert!((u2 + 4.0 * (2.0 * std::f64::consts::PI / 5.0).sin().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn metabelian_rep_is_trace_free_on_meridian() {
        for n in [1, 2, 3, -2, -3] {
            let p = TwistKnotParam::new(n).unwrap();
            for k in 1..=p.num_classes() {
                let rep = metabelian_rep::<f64>(n, k).unwrap();
                assert_eq!(rep.image(0).unwrap().trace(), Complex::new(0.0, 0.0));
            }
        }
    }

    #[test]
    fn metabelian_relator_n2_k3() {
        let rep = metabelian_rep::<f64>(2, 3).unwrap();
        let r = verify_relations(&rep, rep.presentation()).unwrap();
        assert!(r.passes(1e-12), "{r:?}");
    }

    #[test]
    fn range_errors() {
        assert_eq!(metabelian_rep::<f64>(0, 1).unwrap_err(), Error::ExcludedTwist(0));
        assert_eq!(metabelian_rep::<f64>(-1, 1).unwrap_err(), Error::ExcludedTwist(-1));
        assert!(matches!(
            metabelian_rep::<f64>(1, 3),
            Err(Error::IndexOutOfRange { name: "k", .. })
        ));
        assert!(matches!(
            graph_manifold_rep::<f64>(2, 5),
            Err(Error::IndexOutOfRange { name: "j", .. })
        ));
    }

    #[test]
    fn graph_manifold_rep_n1_j1() {
        let rep = graph_manifold_rep::<f64>(1, 1).unwrap();
        let xi: Complex<f64> = RootOfUnity::new(1, 5).to_complex();
        let b = Matrix::from_diagonal(&[xi.powi(2), xi.powi(-2)]);
        let a = Matrix::from_diagonal(&[xi.powi(3), xi.powi(-3)]);
        assert!(rep.image_by_name("b").unwrap().max_diff(&b) < 1e-15);
        assert!(rep.image_by_name("a").unwrap().max_diff(&a) < 1e-15);
        let a5 = rep.image_by_name("a").unwrap().pow(5).unwrap();
        assert!(a5.max_diff(&Matrix::identity(2).scale(Complex::new(-1.0, 0.0))) < 1e-14);
    }

    #[test]
    fn b_has_order_dividing_p() {
        let rep = graph_manifold_rep::<f64>(2, 2).unwrap();
        let b9 = rep.image_by_name("b").unwrap().pow(9).unwrap();
        assert!(b9.max_diff(&Matrix::identity(2)) < 1e-13);
    }

    #[test]
    fn relations_hold_for_all_parameters() {
        for n in [1, 2, 3, -2, -3] {
            let p = TwistKnotParam::new(n).unwrap();
            for j in 1..=p.num_classes() {
                for sign in [XSign::Plus, XSign::Minus] {
                    let rep = graph_manifold_rep_with_sign::<f64>(n, j, sign).unwrap();
                    let r = verify_relations(&rep, rep.presentation()).unwrap();
                    assert!(r.passes(1e-12), "n={n} j={j}: {r:?}");
                }
            }
        }
    }

    #[test]
    fn torus_knot_abelian_rep_relations() {
        for (n, xi) in [(1, RootOfUnity::new(1, 5)), (2, RootOfUnity::new(1, 9)), (1, RootOfUnity::minus_one()), (-3, RootOfUnity::new(3, 11))] {
            let rep = torus_knot_abelian_rep::<f64>(n, xi).unwrap();
            assert!(verify_relations(&rep, rep.presentation()).unwrap().passes(1e-12));
        }
        assert!(torus_knot_abelian_rep::<f64>(0, RootOfUnity::one()).is_err());
    }

    #[test]
    fn klein_normal_forms_satisfy_relation() {
        let eta = RootOfUnity::new(1, 5).to_complex::<f64>();
        let rep = klein_irreducible_rep(eta);
        assert!(verify_relations(&rep, rep.presentation()).unwrap().passes(1e-14));
        let rep = klein_reducible_rep::<f64>(1, Complex::new(1.0, 0.0), 1, Complex::new(0.0, 0.0));
        assert!(verify_relations(&rep, rep.presentation()).unwrap().passes(1e-14));
        let rep = klein_reducible_rep::<f64>(-1, Complex::new(0.3, 2.0), -1, Complex::new(1.5, -0.5));
        assert!(verify_relations(&rep, rep.presentation()).unwrap().passes(1e-14));
    }
}
