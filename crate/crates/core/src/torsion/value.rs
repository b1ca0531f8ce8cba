use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::scalar::{log_magnitude, Real};

/// Which computation produced a torsion value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    GenericEngine,
    ClosedForm,
    FoxOracle,
    ProductOfPieces,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::GenericEngine => "generic-engine",
            Provenance::ClosedForm => "closed-form",
            Provenance::FoxOracle => "fox-oracle",
            Provenance::ProductOfPieces => "product-of-pieces",
        }
    }
}

/// A torsion value. `log_magnitude` is always present; the complex value
/// only when it is small enough to represent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorsionValue<T: Real> {
    pub log_magnitude: T,
    pub value: Option<Complex<T>>,
    pub provenance: Provenance,
}

impl<T: Real> TorsionValue<T> {
    /// From a nonzero complex value.
    pub fn from_value(value: Complex<T>, provenance: Provenance) -> Self {
        TorsionValue {
            log_magnitude: log_magnitude(value).unwrap_or(T::neg_infinity()),
            value: Some(value),
            provenance,
        }
    }

    pub fn from_log(log_magnitude: T, provenance: Provenance) -> Self {
        TorsionValue {
            log_magnitude,
            value: None,
            provenance,
        }
    }

    pub fn one(provenance: Provenance) -> Self {
        Self::from_value(Complex::new(T::one(), T::zero()), provenance)
    }

    /// `|a - b| / max(1, |b|)` on values when both are present, else the
    /// absolute difference of log-magnitudes.
    pub fn relative_error(&self, other: &Self) -> T {
        match (self.value, other.value) {
            (Some(a), Some(b)) => (a - b).norm() / T::one().max(b.norm()),
            _ => (self.log_magnitude - other.log_magnitude).abs(),
        }
    }

    /// Distance from 1 (value when present, else the log-magnitude).
    pub fn distance_from_one(&self) -> T {
        match self.value {
            Some(v) => (v - Complex::new(T::one(), T::zero())).norm(),
            None => self.log_magnitude.abs(),
        }
    }

    /// Product of two values; the value survives only if both have one.
    pub fn times(&self, other: &Self, provenance: Provenance) -> Self {
        TorsionValue {
            log_magnitude: self.log_magnitude + other.log_magnitude,
            value: match (self.value, other.value) {
                (Some(a), Some(b)) => Some(a * b),
                _ => None,
            },
            provenance,
        }
    }
}

/// Serialized torsion report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TorsionRecord {
    pub n: i64,
    pub j: i64,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub log_magnitude: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_re: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value_im: Option<f64>,
    pub provenance: Provenance,
}

impl TorsionRecord {
    pub fn new<T: Real>(n: i64, j: i64, big_n: u64, t: &TorsionValue<T>) -> Self {
        TorsionRecord {
            n,
            j,
            big_n,
            log_magnitude: t.log_magnitude.to_f64_lossy(),
            value_re: t.value.map(|v| v.re.to_f64_lossy()),
            value_im: t.value.map(|v| v.im.to_f64_lossy()),
            provenance: t.provenance,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_matches_value() {
        let t = TorsionValue::from_value(Complex::new(-2.0f64, 0.0), Provenance::ClosedForm);
        assert!((t.log_magnitude - 2f64.ln()).abs() < 1e-15);
        let u = TorsionValue::from_log(1.0f64, Provenance::ClosedForm);
        let p = t.times(&u, Provenance::ProductOfPieces);
        assert!(p.value.is_none());
        assert!((p.log_magnitude - 1.0 - 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn record_json_shape() {
        let t = TorsionValue::from_value(Complex::new(2.25f64, 0.0), Provenance::FoxOracle);
        let v = serde_json::to_value(TorsionRecord::new(1, 1, 1, &t)).unwrap();
        assert_eq!(v["N"], 1);
        assert_eq!(v["provenance"], "fox-oracle");
        assert_eq!(v["value_re"], 2.25);
        let big = TorsionRecord::new(1, 1, 100, &TorsionValue::from_log(3.0f64, Provenance::ProductOfPieces));
        let v = serde_json::to_value(big).unwrap();
        assert!(v.get("value_re").is_none());
        assert_eq!(v["provenance"], "product-of-pieces");
    }
}
