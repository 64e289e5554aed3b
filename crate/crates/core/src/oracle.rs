//! Decision interfaces for word problems and subgroup membership.

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

/// A solved word problem: decides whether a word over the alphabet
/// represents the identity.
pub trait GroupOracle: Send + Sync {
    fn alphabet(&self) -> &Alphabet;

    fn is_trivial(&self, w: &Word) -> Result<bool>;

    fn equal(&self, u: &Word, v: &Word) -> Result<bool> {
        self.is_trivial(&u.concat(&v.inverse()))
    }
}

/// A cyclic subgroup with decidable membership.
///
/// `exponent(w)` returns `k` when `w` equals the `k`-th power of the chosen
/// generator; `power(k)` is a canonical word for that power.
pub trait SubgroupHandle: Send + Sync {
    fn label(&self) -> String;

    fn exponent(&self, w: &Word) -> Result<Option<i64>>;

    fn power(&self, k: i64) -> Word;

    fn contains(&self, w: &Word) -> Result<bool> {
        Ok(self.exponent(w)?.is_some())
    }
}

/// The free group on an alphabet.
#[derive(Clone, Debug)]
pub struct FreeGroup {
    alphabet: Alphabet,
}

impl FreeGroup {
    pub fn new(alphabet: Alphabet) -> Self {
        FreeGroup { alphabet }
    }
}

impl GroupOracle for FreeGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.alphabet.check_word(w)?;
        Ok(w.free_reduce().is_empty())
    }
}

/// `Z` (modulus `None`) or `Z/nZ`, marked by the single generator `1`.
#[derive(Clone, Debug)]
pub struct CyclicGroup {
    alphabet: Alphabet,
    modulus: Option<u64>,
}

impl CyclicGroup {
    pub fn integers() -> Self {
        CyclicGroup {
            alphabet: Alphabet::new(["x"]).expect("valid alphabet"),
            modulus: None,
        }
    }

    pub fn modulo(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("Z/0 is Z; use `integers`".into()));
        }
        Ok(CyclicGroup {
            modulus: Some(n),
            ..CyclicGroup::integers()
        })
    }

    pub fn with_alphabet(mut self, alphabet: Alphabet) -> Result<Self> {
        if alphabet.arity() != 1 {
            return Err(Error::ArityMismatch {
                left: 1,
                right: alphabet.arity(),
            });
        }
        self.alphabet = alphabet;
        Ok(self)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn name(&self) -> String {
        match self.modulus {
            None => "Z".to_string(),
            Some(n) => format!("Z/{n}"),
        }
    }
}

impl GroupOracle for CyclicGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.alphabet.check_word(w)?;
        let sum = w.exponent_sum(0);
        Ok(match self.modulus {
            None => sum == 0,
            Some(n) => sum.rem_euclid(n as i64) == 0,
        })
    }
}

/// `Z` as a subgroup of itself, generated by `x`.
#[derive(Clone, Debug, Default)]
pub struct WholeInfiniteCyclic;

impl SubgroupHandle for WholeInfiniteCyclic {
    fn label(&self) -> String {
        "Z".to_string()
    }

    fn exponent(&self, w: &Word) -> Result<Option<i64>> {
        if w.letters().iter().any(|l| l.index != 0) {
            return Err(Error::ForeignLetter(format!(
                "#{}",
                w.max_index().unwrap_or(0)
            )));
        }
        Ok(Some(w.exponent_sum(0)))
    }

    fn power(&self, k: i64) -> Word {
        Word::power_of(0, k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn cyclic_groups() {
        let z = CyclicGroup::integers();
        let z5 = CyclicGroup::modulo(5).unwrap();
        let w = parse_word(z.alphabet(), "x^5").unwrap();
        assert!(!z.is_trivial(&w).unwrap());
        assert!(z5.is_trivial(&w).unwrap());
        assert!(z5.is_trivial(&w.inverse()).unwrap());
        assert!(CyclicGroup::modulo(0).is_err());
        assert_eq!(z5.name(), "Z/5");
    }

    #[test]
    fn free_group() {
        let f = FreeGroup::new(Alphabet::new(["a", "b"]).unwrap());
        let al = f.alphabet().clone();
        assert!(f
            .is_trivial(&parse_word(&al, "a b b^-1 a^-1").unwrap())
            .unwrap());
        assert!(!f.is_trivial(&parse_word(&al, "[a, b]").unwrap()).unwrap());
    }
}
