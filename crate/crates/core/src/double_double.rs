//! Double-double scalar.
//!
//! Storage and the error-free additions and multiplications come from
//! [`twofloat::TwoFloat`]. Division, `ln`, `exp`, `sin` and `cos` are
//! reimplemented here: the upstream versions stop at roughly binary64
//! accuracy (division, `ln`) or about 1e-22 (`exp`, trigonometry).

use std::cmp::Ordering;
use std::fmt;
use std::num::FpCategory;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Rem, RemAssign, Sub, SubAssign};

use num_traits::{Float, FloatConst, FromPrimitive, Num, NumCast, One, ToPrimitive, Zero};
use twofloat::TwoFloat;

/// About 106 significand bits.
#[derive(Clone, Copy, Default, PartialEq, PartialOrd)]
pub struct DoubleDouble(TwoFloat);

const LN_2_LO: f64 = 2.319_046_813_846_299_6e-17;
const EPS: f64 = 4.930_380_657_631_324e-32; // 2^-104

impl DoubleDouble {
    pub fn new(hi: f64, lo: f64) -> Self {
        DoubleDouble(TwoFloat::new_add(hi, lo))
    }

    pub fn hi(self) -> f64 {
        self.0.hi()
    }

    pub fn lo(self) -> f64 {
        self.0.lo()
    }

    fn f(x: f64) -> Self {
        DoubleDouble(<TwoFloat as From<f64>>::from(x))
    }

    fn ln2() -> Self {
        Self::new(std::f64::consts::LN_2, LN_2_LO)
    }

    fn pi() -> Self {
        DoubleDouble(<TwoFloat as FloatConst>::PI())
    }

    /// Series for `sin r` and `cos r`, `|r| <= π/4`.
    fn sin_cos_reduced(r: Self) -> (Self, Self) {
        let r2 = r * r;
        let mut s = r;
        let mut c = Self::one();
        let mut ts = r;
        let mut tc = Self::one();
        let mut k = 1.0;
        loop {
            ts = -ts * r2 / Self::f((k + 1.0) * (k + 2.0));
            tc = -tc * r2 / Self::f(k * (k + 1.0));
            s += ts;
            c += tc;
            k += 2.0;
            if ts.hi().abs() < 1e-34 && tc.hi().abs() < 1e-34 {
                break;
            }
        }
        (s, c)
    }
}

impl fmt::Debug for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DoubleDouble({:e} + {:e})", self.hi(), self.lo())
    }
}

impl fmt::Display for DoubleDouble {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl From<f64> for DoubleDouble {
    fn from(x: f64) -> Self {
        Self::f(x)
    }
}

impl Add for DoubleDouble {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        DoubleDouble(self.0 + rhs.0)
    }
}

impl Sub for DoubleDouble {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        DoubleDouble(self.0 - rhs.0)
    }
}

impl Mul for DoubleDouble {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        DoubleDouble(self.0 * rhs.0)
    }
}

impl Div for DoubleDouble {
    type Output = Self;
    /// Long division with three quotient digits.
    fn div(self, rhs: Self) -> Self {
        let b = rhs.0;
        if !b.hi().is_finite() || b.hi() == 0.0 || !self.0.hi().is_finite() {
            return DoubleDouble(<TwoFloat as From<f64>>::from(self.hi() / b.hi()));
        }
        let q1 = self.0.hi() / b.hi();
        let r = self.0 - b * q1;
        let q2 = r.hi() / b.hi();
        let r = r - b * q2;
        let q3 = r.hi() / b.hi();
        DoubleDouble(TwoFloat::new_add(q1, q2) + q3)
    }
}

impl Rem for DoubleDouble {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        self - (self / rhs).trunc() * rhs
    }
}

impl Neg for DoubleDouble {
    type Output = Self;
    fn neg(self) -> Self {
        DoubleDouble(-self.0)
    }
}

macro_rules! assign_ops {
    ($($tr:ident $m:ident $op:tt),*) => {
        $(impl $tr for DoubleDouble {
            fn $m(&mut self, rhs: Self) {
                *self = *self $op rhs;
            }
        })*
    };
}

assign_ops!(AddAssign add_assign +, SubAssign sub_assign -, MulAssign mul_assign *, DivAssign div_assign /, RemAssign rem_assign %);

impl Zero for DoubleDouble {
    fn zero() -> Self {
        Self::f(0.0)
    }
    fn is_zero(&self) -> bool {
        self.hi() == 0.0
    }
}

impl One for DoubleDouble {
    fn one() -> Self {
        Self::f(1.0)
    }
}

impl Num for DoubleDouble {
    type FromStrRadixErr = <TwoFloat as Num>::FromStrRadixErr;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        TwoFloat::from_str_radix(s, radix).map(DoubleDouble)
    }
}

impl ToPrimitive for DoubleDouble {
    fn to_i64(&self) -> Option<i64> {
        self.0.to_i64()
    }
    fn to_u64(&self) -> Option<u64> {
        self.0.to_u64()
    }
    fn to_f64(&self) -> Option<f64> {
        Some(self.hi() + self.lo())
    }
}

impl FromPrimitive for DoubleDouble {
    fn from_i64(n: i64) -> Option<Self> {
        TwoFloat::from_i64(n).map(DoubleDouble)
    }
    fn from_u64(n: u64) -> Option<Self> {
        TwoFloat::from_u64(n).map(DoubleDouble)
    }
    fn from_f64(n: f64) -> Option<Self> {
        Some(Self::f(n))
    }
}

impl NumCast for DoubleDouble {
    fn from<T: ToPrimitive>(n: T) -> Option<Self> {
        <TwoFloat as NumCast>::from(n).map(DoubleDouble)
    }
}

macro_rules! consts {
    ($($name:ident),*) => {
        $(fn $name() -> Self {
            DoubleDouble(<TwoFloat as FloatConst>::$name())
        })*
    };
}

impl FloatConst for DoubleDouble {
    consts!(
        E, FRAC_1_PI, FRAC_1_SQRT_2, FRAC_2_PI, FRAC_2_SQRT_PI, FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, FRAC_PI_6,
        FRAC_PI_8, LN_10, LOG10_E, LOG2_E, PI, SQRT_2
    );
    fn LN_2() -> Self {
        Self::ln2()
    }
}

macro_rules! delegate {
    ($($name:ident),*) => {
        $(fn $name(self) -> Self {
            DoubleDouble(Float::$name(self.0))
        })*
    };
}

macro_rules! delegate_bool {
    ($($name:ident),*) => {
        $(fn $name(self) -> bool {
            Float::$name(self.0)
        })*
    };
}

impl Float for DoubleDouble {
    fn nan() -> Self {
        DoubleDouble(TwoFloat::NAN)
    }
    fn infinity() -> Self {
        DoubleDouble(TwoFloat::INFINITY)
    }
    fn neg_infinity() -> Self {
        DoubleDouble(TwoFloat::NEG_INFINITY)
    }
    fn neg_zero() -> Self {
        Self::f(-0.0)
    }
    fn min_value() -> Self {
        DoubleDouble(TwoFloat::MIN)
    }
    fn min_positive_value() -> Self {
        DoubleDouble(TwoFloat::MIN_POSITIVE)
    }
    fn max_value() -> Self {
        DoubleDouble(TwoFloat::MAX)
    }
    fn epsilon() -> Self {
        Self::f(EPS)
    }

    delegate_bool!(is_nan, is_infinite, is_finite, is_normal, is_sign_positive, is_sign_negative);
    delegate!(floor, ceil, round, trunc, fract, abs, signum, sqrt, cbrt, tan, asin, acos, atan, sinh, cosh, tanh, asinh, acosh, atanh);

    fn classify(self) -> FpCategory {
        self.hi().classify()
    }

    fn mul_add(self, a: Self, b: Self) -> Self {
        self * a + b
    }

    fn recip(self) -> Self {
        Self::one() / self
    }

    fn powi(self, n: i32) -> Self {
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            e >>= 1;
            if e > 0 {
                base *= base;
            }
        }
        acc
    }

    fn powf(self, n: Self) -> Self {
        (n * self.ln()).exp()
    }

    /// One Newton step on the upstream value, using the accurate `ln`.
    fn exp(self) -> Self {
        let y = DoubleDouble(Float::exp(self.0));
        if !y.is_finite() || y.is_zero() {
            return y;
        }
        y * (Self::one() + self - y.ln())
    }

    fn exp2(self) -> Self {
        (self * Self::ln2()).exp()
    }

    /// `e ln 2 + 2 atanh((m - 1)/(m + 1))` with `m ∈ [1/√2, √2]`.
    fn ln(self) -> Self {
        if self.hi() <= 0.0 || !self.is_finite() {
            return DoubleDouble(Float::ln(self.0));
        }
        let mut e = self.hi().log2().round() as i32;
        let mut m = self * Self::f(2f64.powi(-e));
        if m.hi() > std::f64::consts::SQRT_2 {
            m = m * Self::f(0.5);
            e += 1;
        } else if m.hi() < std::f64::consts::FRAC_1_SQRT_2 {
            m = m * Self::f(2.0);
            e -= 1;
        }
        let s = (m - Self::one()) / (m + Self::one());
        let s2 = s * s;
        let mut term = s;
        let mut sum = s;
        let mut k = 1.0;
        while term.hi().abs() > 1e-34 {
            term *= s2;
            k += 2.0;
            sum += term / Self::f(k);
        }
        Self::ln2() * Self::f(e as f64) + sum * Self::f(2.0)
    }

    fn log(self, base: Self) -> Self {
        self.ln() / base.ln()
    }

    fn log2(self) -> Self {
        self.ln() / Self::ln2()
    }

    fn log10(self) -> Self {
        self.ln() / Self::f(10.0).ln()
    }

    fn max(self, other: Self) -> Self {
        match self.partial_cmp(&other) {
            Some(Ordering::Less) => other,
            Some(_) => self,
            None => if self.is_nan() { other } else { self },
        }
    }

    fn min(self, other: Self) -> Self {
        match self.partial_cmp(&other) {
            Some(Ordering::Greater) => other,
            Some(_) => self,
            None => if self.is_nan() { other } else { self },
        }
    }

    fn abs_sub(self, other: Self) -> Self {
        if self > other { self - other } else { Self::zero() }
    }

    fn hypot(self, other: Self) -> Self {
        (self * self + other * other).sqrt()
    }

    fn sin(self) -> Self {
        self.sin_cos().0
    }

    fn cos(self) -> Self {
        self.sin_cos().1
    }

    /// Reduction modulo `π/2`, then the Taylor series.
    fn sin_cos(self) -> (Self, Self) {
        if !self.is_finite() {
            return (Self::nan(), Self::nan());
        }
        let half_pi = Self::pi() * Self::f(0.5);
        let q = (self / half_pi).round();
        let r = self - q * half_pi;
        let (s, c) = Self::sin_cos_reduced(r);
        match (q.to_i64().unwrap_or(0)).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    fn atan2(self, other: Self) -> Self {
        // Newton on the upstream angle: θ ← θ + (y cos θ - x sin θ)/(x cos θ + y sin θ)
        let t = DoubleDouble(Float::atan2(self.0, other.0));
        let (s, c) = t.sin_cos();
        let den = other * c + self * s;
        if den.is_zero() {
            return t;
        }
        t + (self * c - other * s) / den
    }

    fn exp_m1(self) -> Self {
        if self.abs().hi() < 1e-5 {
            // x + x²/2 + x³/6 + x⁴/24 + x⁵/120 + x⁶/720
            let mut term = self;
            let mut sum = self;
            for k in 2..=8 {
                term = term * self / Self::f(k as f64);
                sum += term;
            }
            sum
        } else {
            self.exp() - Self::one()
        }
    }

    fn ln_1p(self) -> Self {
        (Self::one() + self).ln()
    }

    fn integer_decode(self) -> (u64, i16, i8) {
        self.hi().integer_decode()
    }
}
