use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::groups::Word;

/// Element of the integral group ring of a free group, keyed by reduced
/// words.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity(), 1)
    }

    pub fn from_word(w: Word, coeff: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn add_term(&mut self, w: Word, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.terms.entry(w.clone()).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.terms.remove(&w);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn coeff(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// `u * self`.
    pub fn left_mul(&self, u: &Word) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(u.concat(w), *c);
        }
        out
    }
}

impl Add for &GroupRingElement {
    type Output = GroupRingElement;

    fn add(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), *c);
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;

    fn neg(self) -> GroupRingElement {
        GroupRingElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Sub for &GroupRingElement {
    type Output = GroupRingElement;

    fn sub(self, rhs: &GroupRingElement) -> GroupRingElement {
        self + &(-rhs)
    }
}

impl Mul for &GroupRingElement {
    type Output = GroupRingElement;

    fn mul(self, rhs: &GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }
}

/// Fox derivative `∂w/∂g`.
///
/// A letter `g` at position k contributes `+w[..k]`, a letter `g^-1`
/// contributes `-w[..k+1]`.
pub fn fox_derivative(w: &Word, g: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    for (k, l) in w.letters().iter().enumerate() {
        if l.gen != g {
            continue;
        }
        if l.inverse {
            out.add_term(w.prefix(k + 1), -1);
        } else {
            out.add_term(w.prefix(k), 1);
        }
    }
    out
}
