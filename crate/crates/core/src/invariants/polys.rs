use num_bigint::BigInt;

use crate::algebra::LaurentPolynomial;
use crate::error::{Error, Result};
use crate::invariants::TwistKnotParam;

/// `Δ_{K_n}(t) = -n t² + (2n+1) t - n`.
pub fn alexander_twist(n: i64) -> Result<LaurentPolynomial> {
    if n == 0 {
        return Err(Error::ExcludedTwist(0));
    }
    Ok(LaurentPolynomial::from_coeffs(&[-n, 2 * n + 1, -n]))
}

/// `Δ_{T(2,2n+1)}(t) = (t^m + 1) / (t + 1)` with `m = |2n+1|`.
pub fn alexander_torus(n: i64) -> Result<LaurentPolynomial> {
    let m = (2 * n + 1).abs();
    if m == 1 {
        return Err(Error::ExcludedTwist(n));
    }
    let num = &LaurentPolynomial::monomial(1, m) + &LaurentPolynomial::one();
    num.div_exact(&LaurentPolynomial::from_coeffs(&[1, 1]))
}

/// `A_{K_n}(M^-4, M)` up to units, expanded:
/// `M^{-8n} (M + M^-1)^{2n}` for `n > 0` and
/// `M^{-8|n|+3} (M + M^-1)^{2|n|-1}` for `n < 0`.
pub fn a_poly_specialized(n: i64) -> Result<LaurentPolynomial> {
    TwistKnotParam::new(n)?;
    let (shift, power) = if n > 0 { (-8 * n, 2 * n) } else { (-8 * n.abs() + 3, 2 * n.abs() - 1) };
    let mut c = BigInt::from(1);
    let mut terms = Vec::with_capacity(power as usize + 1);
    for i in 0..=power {
        terms.push((shift + power - 2 * i, c.clone()));
        c = c * (power - i) / (i + 1);
    }
    Ok(LaurentPolynomial::from_terms(terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    fn p(terms: &[(i64, i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(terms.iter().copied())
    }

    #[test]
    fn twist_alexander() {
        assert_eq!(alexander_twist(1).unwrap(), p(&[(2, -1), (1, 3), (0, -1)]));
        for n in [-5, -2, 1, 2, 7] {
            let d = alexander_twist(n).unwrap();
            let v: Complex<f64> = d.eval(Complex::new(-1.0, 0.0));
            assert_eq!(v.re, -(4 * n + 1) as f64);
            assert_eq!(d.reciprocal().shift(2), d);
        }
        assert!(alexander_twist(0).is_err());
    }

    #[test]
    fn torus_alexander() {
        assert_eq!(alexander_torus(1).unwrap(), LaurentPolynomial::from_coeffs(&[1, -1, 1]));
        assert_eq!(alexander_torus(2).unwrap(), LaurentPolynomial::from_coeffs(&[1, -1, 1, -1, 1]));
        assert_eq!(alexander_torus(-2).unwrap(), LaurentPolynomial::from_coeffs(&[1, -1, 1]));
        for n in [1, 2, 3, 5, -2, -3, -6] {
            let v: Complex<f64> = alexander_torus(n).unwrap().eval(Complex::new(-1.0, 0.0));
            assert_eq!(v.re, (2 * n + 1).abs() as f64);
        }
        assert!(alexander_torus(0).is_err());
        assert!(alexander_torus(-1).is_err());
    }

    #[test]
    fn a_poly_examples() {
        assert_eq!(a_poly_specialized(1).unwrap(), p(&[(-6, 1), (-8, 2), (-10, 1)]));
        // M^-13 (M + M^-1)^3
        assert_eq!(
            a_poly_specialized(-2).unwrap(),
            p(&[(-10, 1), (-12, 3), (-14, 3), (-16, 1)])
        );
        assert!(a_poly_specialized(0).is_err());
        assert!(a_poly_specialized(-1).is_err());
    }

    #[test]
    fn a_poly_matches_repeated_multiplication() {
        let m_plus = p(&[(1, 1), (-1, 1)]);
        for n in [1, 2, 3, -2, -3, -4, 9] {
            let (shift, power) = if n > 0 { (-8 * n, 2 * n) } else { (-8 * -n + 3, -2 * n - 1) };
            let mut expected = LaurentPolynomial::monomial(1, shift);
            for _ in 0..power {
                expected = &expected * &m_plus;
            }
            assert_eq!(a_poly_specialized(n).unwrap(), expected, "n={n}");
        }
    }

    #[test]
    fn a_poly_roots_are_trace_free() {
        let i = Complex::new(0.0, 1.0);
        for n in [1, 2, -2, -3] {
            let a = a_poly_specialized(n).unwrap();
            assert!(a.eval::<f64>(i).norm() < 1e-12);
            assert!(a.eval::<f64>(-i).norm() < 1e-12);
            assert!(a.eval::<f64>(Complex::new(0.7, 0.2)).norm() > 1e-3);
        }
    }
}
