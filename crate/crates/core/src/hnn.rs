//! Britton reduction for HNN extensions with cyclic associated subgroups.
//!
//! Convention: the stable letter `t` satisfies `t^-1 z t = phi(z)` for `z`
//! in the left subgroup, where `phi` sends the `k`-th power of the left
//! generator to the `k`-th power of the right generator. A pinch
//! `t^-1 z t` with `z` in the left subgroup is rewritten to
//! `right.power(k)`; a pinch `t z t^-1` with `z` in the right subgroup to
//! `left.power(k)`. A word equals the identity iff its pinch-free form has
//! no stable letter and a trivial base part.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::oracle::{GroupOracle, SubgroupHandle};
use crate::word::{Alphabet, Letter, Sign, Word};

/// Default cap on the length of any intermediate word.
pub const DEFAULT_BUDGET: usize = 10_000;

/// The two associated cyclic subgroups and the isomorphism between them,
/// matching generator powers.
#[derive(Clone)]
pub struct AssociatedPair {
    pub left: Arc<dyn SubgroupHandle>,
    pub right: Arc<dyn SubgroupHandle>,
}

impl AssociatedPair {
    pub fn new(left: Arc<dyn SubgroupHandle>, right: Arc<dyn SubgroupHandle>) -> Self {
        AssociatedPair { left, right }
    }

    /// Both sides equal: the stable letter centralizes the subgroup.
    pub fn identity(subgroup: Arc<dyn SubgroupHandle>) -> Self {
        AssociatedPair {
            left: subgroup.clone(),
            right: subgroup,
        }
    }

    pub fn transport_left_to_right(&self, k: i64) -> Word {
        self.right.power(k)
    }

    pub fn transport_right_to_left(&self, k: i64) -> Word {
        self.left.power(k)
    }
}

impl fmt::Debug for AssociatedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AssociatedPair({} -> {})",
            self.left.label(),
            self.right.label()
        )
    }
}

/// `g0 t^e1 g1 ... t^ek gk` with stable-free parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrittonWord {
    pub parts: Vec<Word>,
    pub signs: Vec<Sign>,
}

impl BrittonWord {
    pub fn stable_count(&self) -> usize {
        self.signs.len()
    }

    /// The single part when no stable letter is left.
    pub fn base_part(&self) -> Option<&Word> {
        if self.signs.is_empty() {
            self.parts.first()
        } else {
            None
        }
    }

    pub fn to_word(&self, stable: u32) -> Word {
        let mut letters = self.parts[0].letters().to_vec();
        for (sign, part) in self.signs.iter().zip(&self.parts[1..]) {
            letters.push(Letter::new(stable, *sign));
            letters.extend_from_slice(part.letters());
        }
        Word::from_letters(letters)
    }

    /// `g0 · t^{e1} · g1 · …`
    pub fn render(&self, alphabet: &Alphabet, stable: u32) -> String {
        let name = alphabet.name(stable as usize);
        let mut out = alphabet.render(&self.parts[0]);
        for (sign, part) in self.signs.iter().zip(&self.parts[1..]) {
            out.push_str(&format!(
                " · {}^{{{}}} · {}",
                name,
                sign.as_i64(),
                alphabet.render(part)
            ));
        }
        out
    }
}

/// Splits a word at its stable letters. The parts are not reduced.
pub fn split(w: &Word, stable: u32) -> BrittonWord {
    let mut parts = vec![Word::empty()];
    let mut signs = Vec::new();
    for &l in w.letters() {
        if l.index == stable {
            signs.push(l.sign);
            parts.push(Word::empty());
        } else {
            parts.last_mut().expect("non-empty").push(l);
        }
    }
    BrittonWord { parts, signs }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PinchOrder {
    #[default]
    Leftmost,
    Rightmost,
}

/// Result of a reduction: the pinch-free word and the number of pinches
/// removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub word: BrittonWord,
    pub pinches: usize,
}

/// An HNN extension of a base group with a decidable associated pair.
pub struct HnnExtension {
    name: String,
    base: Arc<dyn GroupOracle>,
    pair: AssociatedPair,
    alphabet: Alphabet,
    stable: u32,
    budget: usize,
    order: PinchOrder,
}

impl HnnExtension {
    /// The stable letter is appended to the base alphabet.
    pub fn new(
        name: impl Into<String>,
        base: Arc<dyn GroupOracle>,
        pair: AssociatedPair,
        stable: &str,
    ) -> Result<Self> {
        let alphabet = base.alphabet().extend(stable)?;
        let stable = (alphabet.arity() - 1) as u32;
        Ok(HnnExtension {
            name: name.into(),
            base,
            pair,
            alphabet,
            stable,
            budget: DEFAULT_BUDGET,
            order: PinchOrder::Leftmost,
        })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_order(mut self, order: PinchOrder) -> Self {
        self.order = order;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Arc<dyn GroupOracle> {
        &self.base
    }

    pub fn pair(&self) -> &AssociatedPair {
        &self.pair
    }

    pub fn stable(&self) -> u32 {
        self.stable
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    fn check_len(&self, len: usize) -> Result<()> {
        if len > self.budget {
            Err(Error::Budget {
                length: len,
                limit: self.budget,
            })
        } else {
            Ok(())
        }
    }

    pub fn split(&self, w: &Word) -> BrittonWord {
        split(&w.free_reduce(), self.stable)
    }

    /// Replacement for the pinch around `parts[j + 1]`, if there is one.
    fn pinch(&self, bw: &BrittonWord, j: usize) -> Result<Option<Word>> {
        let z = &bw.parts[j + 1];
        match (bw.signs[j], bw.signs[j + 1]) {
            (Sign::Neg, Sign::Pos) => Ok(self
                .pair
                .left
                .exponent(z)?
                .map(|k| self.pair.transport_left_to_right(k))),
            (Sign::Pos, Sign::Neg) => Ok(self
                .pair
                .right
                .exponent(z)?
                .map(|k| self.pair.transport_right_to_left(k))),
            _ => Ok(None),
        }
    }

    fn apply_pinch(&self, bw: &mut BrittonWord, j: usize, replacement: Word) -> Result<()> {
        let right = bw.parts.remove(j + 2);
        bw.parts.remove(j + 1);
        let merged = Word::product([&bw.parts[j], &replacement, &right]);
        self.check_len(merged.len())?;
        bw.parts[j] = merged;
        bw.signs.drain(j..j + 2);
        Ok(())
    }

    /// Removes pinches until none is left, in the configured order.
    pub fn britton_reduce(&self, mut bw: BrittonWord) -> Result<Reduction> {
        for p in bw.parts.iter_mut() {
            *p = p.free_reduce();
        }
        let mut pinches = 0;
        match self.order {
            PinchOrder::Leftmost => {
                let mut j = 0;
                while j + 1 < bw.signs.len() {
                    match self.pinch(&bw, j)? {
                        Some(rep) => {
                            self.apply_pinch(&mut bw, j, rep)?;
                            pinches += 1;
                            j = j.saturating_sub(1);
                        }
                        None => j += 1,
                    }
                }
            }
            PinchOrder::Rightmost => {
                let mut p = bw.signs.len().checked_sub(2);
                while let Some(q) = p {
                    match self.pinch(&bw, q)? {
                        Some(rep) => {
                            self.apply_pinch(&mut bw, q, rep)?;
                            pinches += 1;
                            // positions right of q were pinch-free and are unchanged
                            p = q.checked_sub(1).and_then(|r| {
                                bw.signs.len().checked_sub(2).map(|last| r.min(last))
                            });
                        }
                        None => p = q.checked_sub(1),
                    }
                }
            }
        }
        Ok(Reduction { word: bw, pinches })
    }

    pub fn reduce(&self, w: &Word) -> Result<Reduction> {
        self.alphabet.check_word(w)?;
        self.check_len(w.len())?;
        self.britton_reduce(self.split(w))
    }

    /// `Some(g)` with `g` a stable-free word equal to `w`, or `None` when
    /// `w` does not lie in the base group.
    pub fn base_part(&self, w: &Word) -> Result<Option<Word>> {
        Ok(self.reduce(w)?.word.base_part().cloned())
    }
}

impl GroupOracle for HnnExtension {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn is_trivial(&self, w: &Word) -> Result<bool> {
        match self.base_part(w)? {
            Some(g) => self.base.is_trivial(&g),
            None => Ok(false),
        }
    }
}

impl fmt::Debug for HnnExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HnnExtension")
            .field("name", &self.name)
            .field("alphabet", &self.alphabet)
            .field("pair", &self.pair)
            .field("budget", &self.budget)
            .field("order", &self.order)
            .finish()
    }
}

/// A subgroup of the base group, queried with words of the extension.
pub struct LiftedSubgroup {
    extension: Arc<HnnExtension>,
    inner: Arc<dyn SubgroupHandle>,
}

impl LiftedSubgroup {
    pub fn new(extension: Arc<HnnExtension>, inner: Arc<dyn SubgroupHandle>) -> Self {
        LiftedSubgroup { extension, inner }
    }
}

impl SubgroupHandle for LiftedSubgroup {
    fn label(&self) -> String {
        self.inner.label()
    }

    fn exponent(&self, w: &Word) -> Result<Option<i64>> {
        match self.extension.base_part(w)? {
            Some(g) => self.inner.exponent(&g),
            None => Ok(None),
        }
    }

    fn power(&self, k: i64) -> Word {
        self.inner.power(k)
    }
}

/// `g H g^-1`: `z` is a member iff `g^-1 z g` lies in `H`.
pub struct ConjugateSubgroup {
    conjugator: Word,
    label: String,
    inner: Arc<dyn SubgroupHandle>,
}

impl ConjugateSubgroup {
    pub fn new(conjugator: Word, label: impl Into<String>, inner: Arc<dyn SubgroupHandle>) -> Self {
        ConjugateSubgroup {
            conjugator: conjugator.free_reduce(),
            label: label.into(),
            inner,
        }
    }

    pub fn conjugator(&self) -> &Word {
        &self.conjugator
    }
}

impl SubgroupHandle for ConjugateSubgroup {
    fn label(&self) -> String {
        self.label.clone()
    }

    fn exponent(&self, w: &Word) -> Result<Option<i64>> {
        let g = &self.conjugator;
        self.inner.exponent(&Word::product([&g.inverse(), w, g]))
    }

    fn power(&self, k: i64) -> Word {
        let g = &self.conjugator;
        Word::product([g, &self.inner.power(k), &g.inverse()])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{CyclicGroup, WholeInfiniteCyclic};
    use crate::word::parse_word;

    fn z2() -> HnnExtension {
        HnnExtension::new(
            "Z^2",
            Arc::new(CyclicGroup::integers()),
            AssociatedPair::identity(Arc::new(WholeInfiniteCyclic)),
            "t",
        )
        .unwrap()
    }

    #[test]
    fn split_examples() {
        let al = Alphabet::new(["a", "h", "s"]).unwrap();
        let w = |s: &str| parse_word(&al, s).unwrap();
        let bw = split(&w("s^-1 h h s"), 2);
        assert_eq!(bw.parts, vec![Word::empty(), w("h h"), Word::empty()]);
        assert_eq!(bw.signs, vec![Sign::Neg, Sign::Pos]);
        assert_eq!(bw.render(&al, 2), "1 · s^{-1} · h h · s^{1} · 1");
        let bw = split(&w("a h"), 2);
        assert_eq!(bw.stable_count(), 0);
        assert_eq!(bw.base_part(), Some(&w("a h")));
        let bw = split(&w("s a s"), 2);
        assert_eq!(bw.parts, vec![Word::empty(), w("a"), Word::empty()]);
        assert_eq!(bw.signs, vec![Sign::Pos, Sign::Pos]);
        assert_eq!(bw.to_word(2), w("s a s"));
    }

    #[test]
    fn integer_square() {
        let e = z2();
        let al = e.alphabet().clone();
        let w = |s: &str| parse_word(&al, s).unwrap();
        assert!(e.is_trivial(&w("[x, t]")).unwrap());
        assert!(e.is_trivial(&w("t^-1 x^3 t x^-3")).unwrap());
        assert!(!e.is_trivial(&w("t x")).unwrap());
        assert!(!e.is_trivial(&w("t")).unwrap());
        assert!(e.is_trivial(&w("t^2 x t^-2 x^-1")).unwrap());
    }

    #[test]
    fn budget_is_enforced() {
        let e = z2().with_budget(8);
        let long = Word::power_of(0, 9);
        assert_eq!(
            e.is_trivial(&long),
            Err(Error::Budget {
                length: 9,
                limit: 8
            })
        );
    }

    #[test]
    fn orders_agree_on_z2() {
        let left = z2();
        let right = z2().with_order(PinchOrder::Rightmost);
        let al = left.alphabet().clone();
        for w in crate::word::ball(&al, 6) {
            let (a, b) = (left.reduce(&w).unwrap(), right.reduce(&w).unwrap());
            assert_eq!(a.word.stable_count(), b.word.stable_count());
            assert_eq!(left.is_trivial(&w).unwrap(), right.is_trivial(&w).unwrap());
            // abelian ground truth
            let trivial = w.exponent_sum(0) == 0 && w.exponent_sum(1) == 0;
            assert_eq!(left.is_trivial(&w).unwrap(), trivial, "{}", al.render(&w));
        }
    }
}
