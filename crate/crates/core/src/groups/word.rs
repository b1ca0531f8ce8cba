use std::fmt;

use serde::{Deserialize, Serialize};

/// One generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, exponent: i8) -> Self {
        assert!(exponent == 1 || exponent == -1, "letter exponent must be +1 or -1");
        Letter {
            gen,
            inverse: exponent < 0,
        }
    }

    pub fn exponent(&self) -> i8 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }
}

/// A freely reduced word in the generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn new(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// From `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        Word::new(pairs.iter().map(|&(g, e)| Letter::new(g, e)))
    }

    pub fn gen(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, 1)],
        }
    }

    pub fn gen_inv(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, -1)],
        }
    }

    /// `g^k`.
    pub fn gen_pow(g: usize, k: i64) -> Self {
        let l = Letter::new(g, if k < 0 { -1 } else { 1 });
        Word {
            letters: vec![l; k.unsigned_abs() as usize],
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::new(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.concat(&base);
        }
        acc
    }

    /// `u v u^-1 v^-1`.
    pub fn commutator(u: &Word, v: &Word) -> Self {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    /// `u self u^-1`.
    pub fn conjugate_by(&self, u: &Word) -> Self {
        u.concat(self).concat(&u.inverse())
    }

    /// Prefix of length `k` (reduced because `self` is).
    pub fn prefix(&self, k: usize) -> Self {
        Word {
            letters: self.letters[..k].to_vec(),
        }
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Whitespace-separated tokens using the given generator names.
    pub fn to_text(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = names.get(l.gen).map(String::as_str).unwrap_or("?");
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.to_string()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl std::ops::Mul for &Word {
    type Output = Word;

    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "g{}", l.gen)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn arb_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec((0..gens, any::<bool>()), 0..max_len)
            .prop_map(|v| Word::new(v.into_iter().map(|(g, inv)| Letter { gen: g, inverse: inv })))
    }

    #[test]
    fn reduction() {
        let w = Word::from_pairs(&[(0, 1), (1, 1), (1, -1), (0, -1), (2, 1)]);
        assert_eq!(w, Word::gen(2));
        assert!(Word::gen(0).concat(&Word::gen_inv(0)).is_empty());
        assert_eq!(Word::gen_pow(1, -3).len(), 3);
        assert_eq!(Word::gen(0).pow(-2), Word::gen_pow(0, -2));
    }

    #[test]
    fn text_rendering() {
        let names = vec!["a".to_string(), "b".to_string()];
        let w = Word::from_pairs(&[(0, 1), (1, -1)]);
        assert_eq!(w.to_text(&names), "a b^-1");
        assert_eq!(Word::identity().to_text(&names), "1");
    }

    proptest! {
        #[test]
        fn reduction_idempotent_and_inverse_involutive(w in arb_word(4, 20)) {
            prop_assert_eq!(Word::new(w.letters().iter().copied()), w.clone());
            prop_assert_eq!(w.inverse().inverse(), w.clone());
            prop_assert!(w.concat(&w.inverse()).is_empty());
        }
    }
}
