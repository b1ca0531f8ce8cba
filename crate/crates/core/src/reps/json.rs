use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::RootOfUnity;
use crate::reps::{Rep, RepOrigin};
use crate::scalar::Real;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepMeta {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<RootOfUnity>,
}

/// Serializable form: each generator maps to its four entries
/// `[[re, im]; 4]` in row-major order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepRecord {
    pub generators: BTreeMap<String, [[f64; 2]; 4]>,
    pub meta: RepMeta,
}

impl<T: Real> From<&Rep<T>> for RepRecord {
    fn from(rep: &Rep<T>) -> Self {
        let generators = rep
            .presentation()
            .generators()
            .iter()
            .zip(rep.images())
            .map(|(name, m)| {
                let e = m.entries();
                let pair = |i: usize| [e[i].re.to_f64_lossy(), e[i].im.to_f64_lossy()];
                (name.clone(), [pair(0), pair(1), pair(2), pair(3)])
            })
            .collect();
        let meta = match rep.origin() {
            RepOrigin::Metabelian { n, k, u } => RepMeta {
                n: Some(*n),
                k: Some(*k),
                j: None,
                u: Some(*u),
                xi: None,
            },
            RepOrigin::GraphManifold { n, j, xi } => RepMeta {
                n: Some(*n),
                k: None,
                j: Some(*j),
                u: None,
                xi: Some(*xi),
            },
            RepOrigin::Other => RepMeta {
                n: None,
                k: None,
                j: None,
                u: None,
                xi: None,
            },
        };
        RepRecord { generators, meta }
    }
}
