//! Words in free groups over named alphabets.
//!
//! A [`Word`] is a plain sequence of signed generator letters. It does not
//! remember its alphabet; the [`Alphabet`] is supplied wherever names matter
//! (parsing and rendering). Extensions by a stable letter append the new
//! generator at the end, so words over a base alphabet are valid words over
//! every extension without re-indexing.

mod alphabet;
mod enumerate;
pub(crate) mod parse;
mod substitution;

use std::cmp::Ordering;

pub(crate) use alphabet::is_identifier;
pub use alphabet::Alphabet;
pub use enumerate::{ball, ball_partitions, ball_size, sphere, sphere_partitions, Ball, Sphere};
pub use parse::{parse_relation, parse_word};
pub use substitution::Substitution;

/// Exponent of a single letter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }
}

/// A generator index with a sign. Ordered by `(index, sign)` with `+1 < -1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub index: u32,
    pub sign: Sign,
}

impl Letter {
    pub const fn new(index: u32, sign: Sign) -> Self {
        Letter { index, sign }
    }

    pub const fn pos(index: u32) -> Self {
        Letter::new(index, Sign::Pos)
    }

    pub const fn neg(index: u32) -> Self {
        Letter::new(index, Sign::Neg)
    }

    pub fn inverse(self) -> Letter {
        Letter::new(self.index, self.sign.flip())
    }

    pub fn cancels(self, other: Letter) -> bool {
        self.index == other.index && self.sign != other.sign
    }

    /// Dense code `2 * index + (sign == -1)`, matching the letter order.
    pub fn code(self) -> usize {
        2 * self.index as usize + usize::from(self.sign == Sign::Neg)
    }

    pub fn from_code(code: usize) -> Letter {
        let sign = if code.is_multiple_of(2) {
            Sign::Pos
        } else {
            Sign::Neg
        };
        Letter::new((code / 2) as u32, sign)
    }
}

/// A finite sequence of letters; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// Word for `x_index^exponent`.
    pub fn power_of(index: u32, exponent: i64) -> Word {
        let sign = if exponent < 0 { Sign::Neg } else { Sign::Pos };
        Word(vec![
            Letter::new(index, sign);
            exponent.unsigned_abs() as usize
        ])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Appends `letter`, cancelling it against the last letter if possible.
    pub fn push_reduced(&mut self, letter: Letter) {
        match self.0.last() {
            Some(&last) if last.cancels(letter) => {
                self.0.pop();
            }
            _ => self.0.push(letter),
        }
    }

    pub fn free_reduce(&self) -> Word {
        let mut out = Word(Vec::with_capacity(self.0.len()));
        for &l in &self.0 {
            out.push_reduced(l);
        }
        out
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| !p[0].cancels(p[1]))
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Concatenation without cancellation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Freely reduced product; both factors are assumed reduced for the
    /// result to be reduced.
    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &l in &other.0 {
            out.push_reduced(l);
        }
        out
    }

    /// Product of several words, freely reduced.
    pub fn product<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Word {
        let mut out = Word::empty();
        for w in words {
            for &l in &w.0 {
                out.push_reduced(l);
            }
        }
        out
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            for &l in &base.0 {
                out.push_reduced(l);
            }
        }
        out
    }

    /// `self^by = by^-1 self by`.
    pub fn conjugate(&self, by: &Word) -> Word {
        Word::product([&by.inverse(), self, by])
    }

    /// `[u, v] = u^-1 v^-1 u v`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        Word::product([&u.inverse(), &v.inverse(), u, v])
    }

    pub fn exponent_sum(&self, index: u32) -> i64 {
        self.0
            .iter()
            .filter(|l| l.index == index)
            .map(|l| l.sign.as_i64())
            .sum()
    }

    pub fn occurrences(&self, index: u32) -> usize {
        self.0.iter().filter(|l| l.index == index).count()
    }

    pub fn max_index(&self) -> Option<u32> {
        self.0.iter().map(|l| l.index).max()
    }

    /// Writes a reduced word as `g · core · g^-1` with `core` cyclically
    /// reduced. Returns `(g, core)`.
    pub fn cyclic_core(&self) -> (Word, Word) {
        let w = self.free_reduce();
        let letters = w.letters();
        let mut k = 0;
        while 2 * k + 1 < letters.len() && letters[k].cancels(letters[letters.len() - 1 - k]) {
            k += 1;
        }
        (
            Word(letters[..k].to_vec()),
            Word(letters[k..letters.len() - k].to_vec()),
        )
    }

    /// All rotations of the word (the word itself first).
    pub fn rotations(&self) -> impl Iterator<Item = Word> + '_ {
        let n = self.0.len().max(1);
        (0..n).map(move |k| {
            let mut v = self.0[k.min(self.0.len())..].to_vec();
            v.extend_from_slice(&self.0[..k.min(self.0.len())]);
            Word(v)
        })
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Length first, then lexicographic in letter order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Alphabet {
        Alphabet::new(["a", "b", "c", "h", "s", "t"]).unwrap()
    }

    fn w(s: &str) -> Word {
        parse_word(&abc(), s).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        let al = abc();
        assert_eq!(al.render(&w("a a^-1 b").free_reduce()), "b");
        assert!(w("").free_reduce().is_empty());
        assert_eq!(al.render(&w("a b b^-1 a").free_reduce()), "a a");
    }

    #[test]
    fn invert_examples() {
        let al = abc();
        assert_eq!(al.render(&w("a b").inverse()), "b^-1 a^-1");
        assert!(w("").inverse().is_empty());
        assert_eq!(al.render(&w("s^-1 h h s").inverse()), "s^-1 h^-1 h^-1 s");
    }

    #[test]
    fn cyclic_core_splits_conjugator() {
        let (g, core) = w("b^-1 s^-1 h h s b").cyclic_core();
        assert_eq!(g, w("b^-1 s^-1"));
        assert_eq!(core, w("h h"));
        let (g, core) = w("a b a^-1").cyclic_core();
        assert_eq!(g, w("a"));
        assert_eq!(core, w("b"));
        let (g, core) = w("a a^-1").cyclic_core();
        assert!(g.is_empty() && core.is_empty());
    }

    #[test]
    fn order_is_length_then_lex() {
        assert!(w("t") < w("a a"));
        assert!(w("a") < w("a^-1"));
        assert!(w("a^-1") < w("b"));
    }

    #[test]
    fn power_and_commutator() {
        assert_eq!(w("a b").pow(-2), w("b^-1 a^-1 b^-1 a^-1"));
        assert_eq!(Word::commutator(&w("a"), &w("b")), w("a^-1 b^-1 a b"));
        assert_eq!(w("a").conjugate(&w("b")), w("b^-1 a b"));
        assert_eq!(Word::power_of(3, -2), w("h^-1 h^-1"));
    }
}
