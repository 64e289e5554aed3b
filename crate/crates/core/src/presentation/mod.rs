//! Group presentations as data.

mod builtin;
mod derivation;
mod format;

use std::collections::BTreeSet;

pub use builtin::{builtin, BUILTIN_NAMES};
pub use derivation::{Derivation, DerivationBuilder, DerivationError, Step, StepKind};
pub use format::parse_presentation;

use crate::error::{Error, Result};
use crate::word::{Alphabet, Substitution, Word};

/// A named subgroup of the ambient group of a presentation.
///
/// When `conjugator` is `Some(g)`, this denotes `g H g^-1` where `H` is
/// generated by `generators` (and named by `base`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupSpec {
    pub name: String,
    pub generators: Vec<Word>,
    pub conjugator: Option<Word>,
    pub base: Option<String>,
}

impl SubgroupSpec {
    pub fn generated(name: impl Into<String>, generators: Vec<Word>) -> Self {
        SubgroupSpec {
            name: name.into(),
            generators: generators.into_iter().map(|w| w.free_reduce()).collect(),
            conjugator: None,
            base: None,
        }
    }

    /// `g H g^-1` for the subgroup `H = base`.
    pub fn conjugate(name: impl Into<String>, g: Word, base: &SubgroupSpec) -> Self {
        SubgroupSpec {
            name: name.into(),
            generators: base.generators.clone(),
            conjugator: Some(g.free_reduce()),
            base: Some(base.name.clone()),
        }
    }

    /// Generating words of the subgroup itself, with the conjugator applied.
    pub fn generator_words(&self) -> Vec<Word> {
        match &self.conjugator {
            None => self.generators.clone(),
            Some(g) => self
                .generators
                .iter()
                .map(|h| Word::product([g, h, &g.inverse()]))
                .collect(),
        }
    }
}

/// `<alphabet | relators>`, relators freely reduced, non-empty and distinct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    name: String,
    alphabet: Alphabet,
    relators: Vec<Word>,
    subgroups: Vec<SubgroupSpec>,
}

impl Presentation {
    pub fn new(name: impl Into<String>, alphabet: Alphabet, relators: Vec<Word>) -> Result<Self> {
        let mut p = Presentation {
            name: name.into(),
            alphabet,
            relators: Vec::with_capacity(relators.len()),
            subgroups: Vec::new(),
        };
        for r in relators {
            p.push_relator(r)?;
        }
        Ok(p)
    }

    pub(crate) fn push_relator(&mut self, r: Word) -> Result<()> {
        self.alphabet.check_word(&r)?;
        let r = r.free_reduce();
        if r.is_empty() {
            return Err(Error::InvalidPresentation(
                "relator is trivial in the free group".into(),
            ));
        }
        if self.relators.contains(&r) {
            return Err(Error::InvalidPresentation(format!(
                "duplicate relator `{}`",
                self.alphabet.render(&r)
            )));
        }
        self.relators.push(r);
        Ok(())
    }

    pub fn with_subgroup(mut self, spec: SubgroupSpec) -> Result<Self> {
        for w in spec.generators.iter().chain(spec.conjugator.iter()) {
            self.alphabet.check_word(w)?;
        }
        if self.subgroup(&spec.name).is_some() {
            return Err(Error::InvalidPresentation(format!(
                "subgroup `{}` declared twice",
                spec.name
            )));
        }
        self.subgroups.push(spec);
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn subgroups(&self) -> &[SubgroupSpec] {
        &self.subgroups
    }

    pub fn subgroup(&self, name: &str) -> Option<&SubgroupSpec> {
        self.subgroups.iter().find(|s| s.name == name)
    }

    /// The HNN extension with stable letter `stable` commuting with every
    /// generator of `subgroup`: one relator `[stable, h]` per generator.
    pub fn hnn_extension(&self, subgroup: &SubgroupSpec, stable: &str) -> Result<Presentation> {
        let alphabet = self.alphabet.extend(stable)?;
        let t = alphabet.generator(stable)?;
        let mut out = Presentation {
            name: format!("E({},{})", self.name, subgroup.name),
            alphabet,
            relators: self.relators.clone(),
            subgroups: Vec::new(),
        };
        for h in subgroup.generator_words() {
            if h.is_empty() {
                return Err(Error::InvalidPresentation(format!(
                    "subgroup `{}` has an empty generator",
                    subgroup.name
                )));
            }
            self.alphabet.check_word(&h)?;
            out.push_relator(Word::commutator(&t, &h))?;
        }
        Ok(out)
    }

    /// The map fixing every generator except `stable`, which goes to
    /// `g^-1 stable g`.
    pub fn conjugation_substitution(&self, g: &Word, stable: &str) -> Result<Substitution> {
        let index = self
            .alphabet
            .index_of(stable)
            .ok_or_else(|| Error::UnknownGenerator(stable.to_string()))?;
        self.alphabet.check_word(g)?;
        if g.occurrences(index as u32) > 0 {
            return Err(Error::InvalidConjugator(stable.to_string()));
        }
        let t = Word::power_of(index as u32, 1);
        Substitution::identity(&self.alphabet).with_image(stable, t.conjugate(g))
    }

    /// Cyclic permutations of every cyclically reduced relator and of its
    /// inverse.
    pub fn symmetrized(&self) -> BTreeSet<Word> {
        symmetrize(&self.relators)
    }

    /// Same marking and the same symmetrized relator set.
    pub fn same_relations(&self, other: &Presentation) -> bool {
        self.alphabet == other.alphabet && self.symmetrized() == other.symmetrized()
    }
}

pub(crate) fn symmetrize(relators: &[Word]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for r in relators {
        let (_, core) = r.cyclic_core();
        if core.is_empty() {
            continue;
        }
        for w in [core.clone(), core.inverse()] {
            out.extend(w.rotations());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    #[test]
    fn hnn_of_g_over_h2_is_e() {
        let g = builtin("G").unwrap();
        let h2 = g.subgroup("H2").unwrap().clone();
        let e = g.hnn_extension(&h2, "t").unwrap();
        assert_eq!(e.relators().len(), 9);
        assert_eq!(e.alphabet(), builtin("E").unwrap().alphabet());
        assert_eq!(&e.relators()[..8], g.relators());
        assert!(e.same_relations(&builtin("E").unwrap()));
    }

    #[test]
    fn hnn_small_cases() {
        let a = Alphabet::new(["a"]).unwrap();
        let free = Presentation::new("Z", a.clone(), vec![]).unwrap();
        let whole = SubgroupSpec::generated("Z", vec![parse_word(&a, "a").unwrap()]);
        let z2 = free.hnn_extension(&whole, "t").unwrap();
        assert_eq!(z2.relators().len(), 1);
        assert_eq!(z2.alphabet().render(&z2.relators()[0]), "t^-1 a^-1 t a");

        let c2 = Presentation::new("C2", a.clone(), vec![parse_word(&a, "a^2").unwrap()]).unwrap();
        let trivial = SubgroupSpec::generated("1", vec![]);
        let free_product = c2.hnn_extension(&trivial, "t").unwrap();
        assert_eq!(free_product.relators(), c2.relators());
        assert_eq!(free_product.alphabet().arity(), 2);

        assert_eq!(
            c2.hnn_extension(&trivial, "a"),
            Err(Error::AlphabetConflict("a".into()))
        );
    }

    #[test]
    fn conjugation_substitution_examples() {
        let e = builtin("E").unwrap();
        let al = e.alphabet().clone();
        let t = parse_word(&al, "t").unwrap();
        let id = e.conjugation_substitution(&Word::empty(), "t").unwrap();
        assert_eq!(id, Substitution::identity(&al));
        let s1 = e
            .conjugation_substitution(&parse_word(&al, "s b").unwrap(), "t")
            .unwrap();
        assert_eq!(al.render(&s1.apply(&t)), "b^-1 s^-1 t s b");
        let s2 = e
            .conjugation_substitution(&parse_word(&al, "s b^2").unwrap(), "t")
            .unwrap();
        assert_eq!(al.render(&s2.apply(&t)), "b^-1 b^-1 s^-1 t s b b");
        assert_eq!(
            e.conjugation_substitution(&parse_word(&al, "s t").unwrap(), "t"),
            Err(Error::InvalidConjugator("t".into()))
        );
    }

    #[test]
    fn relator_invariants() {
        let a = Alphabet::new(["a", "b"]).unwrap();
        assert!(
            Presentation::new("x", a.clone(), vec![parse_word(&a, "a a^-1").unwrap()]).is_err()
        );
        let r = parse_word(&a, "a b").unwrap();
        assert!(Presentation::new("x", a.clone(), vec![r.clone(), r]).is_err());
    }

    #[test]
    fn conjugate_spec_generators() {
        let g = builtin("G").unwrap();
        let al = g.alphabet();
        let h2 = g.subgroup("H2").unwrap();
        let k = SubgroupSpec::conjugate("K", parse_word(al, "(s b)^-1").unwrap(), h2);
        assert_eq!(al.render(&k.generator_words()[0]), "b^-1 s^-1 h h s b");
    }
}
