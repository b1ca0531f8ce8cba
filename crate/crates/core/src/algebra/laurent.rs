use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::RootOfUnity;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Laurent polynomial in one variable with integer coefficients.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `coeff * t^exp`.
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Ordinary polynomial from ascending coefficients `c0 + c1 t + ...`.
    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_terms(coeffs.iter().enumerate().map(|(e, &c)| (e as i64, c)))
    }

    /// From rational coefficients `(exp, numer, denom)`; rejects any
    /// coefficient that is not an integer.
    pub fn from_ratios(terms: &[(i64, i64, i64)]) -> Result<Self> {
        let mut p = Self::zero();
        for &(e, num, den) in terms {
            if den == 0 || num % den != 0 {
                return Err(Error::NonIntegralCoefficient(format!("{num}/{den}")));
            }
            p.add_term(e, BigInt::from(num / den));
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `t^k * self`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `p(t^-1)`.
    pub fn reciprocal(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division by a divisor whose lowest and highest coefficients
    /// are units (+1 or -1).
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (dlo, dhi) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::InexactDivision),
        };
        let lead = divisor.coeff(dhi);
        if !lead.abs().is_one() {
            return Err(Error::InexactDivision);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            if top - dhi < rem.min_exp().unwrap() - dlo {
                break;
            }
            let c = rem.coeff(top) * &lead;
            let step = Self::monomial(c, top - dhi);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Horner evaluation at a complex point, after factoring out the
    /// lowest power of `z`.
    pub fn eval<T: Real>(&self, z: Complex<T>) -> Complex<T> {
        let (lo, hi) = match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Complex::zero(),
        };
        let mut acc = Complex::<T>::zero();
        for e in (lo..=hi).rev() {
            acc = acc * z + Complex::new(big_to_real::<T>(&self.coeff(e)), T::zero());
        }
        if lo != 0 {
            acc = acc * z.powi(lo as i32);
        }
        acc
    }

    /// Evaluation at an exact root of unity: every power is reduced
    /// exactly, only the final embedding into `Complex<T>` rounds.
    pub fn eval_root<T: Real>(&self, z: RootOfUnity) -> Complex<T> {
        self.terms
            .iter()
            .map(|(e, c)| z.pow(*e).to_complex::<T>() * big_to_real::<T>(c))
            .fold(Complex::zero(), |a, b| a + b)
    }

    /// Coefficients are palindromic up to a shift.
    pub fn is_symmetric(&self) -> bool {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => self.reciprocal().shift(lo + hi) == *self,
            _ => true,
        }
    }
}

fn big_to_real<T: Real>(c: &BigInt) -> T {
    T::from_f64_lossy(c.to_f64().unwrap_or(f64::NAN))
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self + &rhs
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one();
            match *e {
                0 => write!(f, "{mag}")?,
                1 if unit => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if unit => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}t^{e}")?,
            }
        }
        Ok(())
    }
}
