use std::fmt;

use num_complex::Complex;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::scalar::Real;

/// The exact root of unity `exp(i pi numer / denom)`.
///
/// Stored reduced with `0 <= numer < 2 denom`, so structural equality is
/// equality of values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootOfUnity {
    numer: i64,
    denom: i64,
}

impl RootOfUnity {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom > 0, "root of unity denominator must be positive");
        Self::reduce(numer as i128, denom as i128)
    }

    fn reduce(numer: i128, denom: i128) -> Self {
        let numer = numer.rem_euclid(2 * denom);
        let g = numer.gcd(&denom);
        let (numer, denom) = if g == 0 { (0, 1) } else { (numer / g, denom / g) };
        let numer = numer.rem_euclid(2 * denom);
        RootOfUnity {
            numer: numer as i64,
            denom: denom as i64,
        }
    }

    pub fn one() -> Self {
        RootOfUnity { numer: 0, denom: 1 }
    }

    pub fn minus_one() -> Self {
        RootOfUnity { numer: 1, denom: 1 }
    }

    pub fn numer(&self) -> i64 {
        self.numer
    }

    pub fn denom(&self) -> i64 {
        self.denom
    }

    pub fn is_one(&self) -> bool {
        self.numer == 0
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::reduce(self.numer as i128 * k as i128, self.denom as i128)
    }

    pub fn inv(&self) -> Self {
        self.pow(-1)
    }

    /// Multiplicative order: smallest `m >= 1` with `self^m = 1`.
    pub fn order(&self) -> u64 {
        // exp(2 pi i numer / (2 denom)), fraction already reduced against denom
        let two_d = 2 * self.denom;
        (two_d / self.numer.gcd(&two_d)) as u64
    }

    /// Embeds into `Complex<T>`. Quarter turns are returned exactly.
    pub fn to_complex<T: Real>(&self) -> Complex<T> {
        let (o, z) = (T::one(), T::zero());
        match (self.numer, self.denom) {
            (0, _) => return Complex::new(o, z),
            (1, 1) => return Complex::new(-o, z),
            (1, 2) => return Complex::new(z, o),
            (3, 2) => return Complex::new(z, -o),
            _ => {}
        }
        // angle in (-pi, pi]
        let signed = if self.numer > self.denom {
            self.numer - 2 * self.denom
        } else {
            self.numer
        };
        let angle = T::PI() * T::from_int(signed) / T::from_int(self.denom);
        Complex::new(angle.cos(), angle.sin())
    }
}

impl std::ops::Mul for RootOfUnity {
    type Output = RootOfUnity;

    fn mul(self, rhs: RootOfUnity) -> RootOfUnity {
        let l = self.denom.lcm(&rhs.denom) as i128;
        let a = self.numer as i128 * (l / self.denom as i128);
        let b = rhs.numer as i128 * (l / rhs.denom as i128);
        RootOfUnity::reduce(a + b, l)
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(i*pi*{}/{})", self.numer, self.denom)
    }
}
