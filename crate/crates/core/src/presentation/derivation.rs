//! Explicit rewriting traces: sequences of relator applications and free
//! reductions, checkable step by step against a presentation.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::presentation::Presentation;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepKind {
    FreeReduction,
    /// `removed` at `position` was replaced by `inserted`, where
    /// `removed · inserted^-1` is a cyclic permutation of a relator or of
    /// its inverse.
    Relator {
        position: usize,
        removed: Word,
        inserted: Word,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub kind: StepKind,
    pub result: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub start: Word,
    pub steps: Vec<Step>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("step {step}: {reason}")]
    InvalidStep { step: usize, reason: String },
    #[error("pattern not found in the current word")]
    PatternNotFound,
    #[error("the replacement is not a relator instance")]
    NotARelator,
}

impl Derivation {
    pub fn end(&self) -> &Word {
        self.steps.last().map(|s| &s.result).unwrap_or(&self.start)
    }

    pub fn relator_steps(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s.kind, StepKind::Relator { .. }))
            .count()
    }

    /// Replays every step against the symmetrized relators of `p`.
    pub fn check(&self, p: &Presentation) -> Result<(), DerivationError> {
        let sym = p.symmetrized();
        let mut current = self.start.clone();
        for (k, step) in self.steps.iter().enumerate() {
            let bad = |reason: &str| DerivationError::InvalidStep {
                step: k,
                reason: reason.to_string(),
            };
            match &step.kind {
                StepKind::FreeReduction => {
                    if step.result != current.free_reduce() {
                        return Err(bad("result is not the free reduction"));
                    }
                }
                StepKind::Relator {
                    position,
                    removed,
                    inserted,
                } => {
                    let letters = current.letters();
                    let end = position + removed.len();
                    if end > letters.len() || &letters[*position..end] != removed.letters() {
                        return Err(bad("removed subword does not occur at the position"));
                    }
                    let mut expected = letters[..*position].to_vec();
                    expected.extend_from_slice(inserted.letters());
                    expected.extend_from_slice(&letters[end..]);
                    if step.result.letters() != expected {
                        return Err(bad("result does not match the replacement"));
                    }
                    if !is_relator_instance(&sym, removed, inserted) {
                        return Err(bad("replacement is not a relator instance"));
                    }
                }
            }
            current = step.result.clone();
        }
        Ok(())
    }

    /// `true` when every step checks and the trace ends at the empty word.
    pub fn proves_trivial(&self, p: &Presentation) -> bool {
        self.check(p).is_ok() && self.end().is_empty()
    }
}

fn is_relator_instance(sym: &BTreeSet<Word>, removed: &Word, inserted: &Word) -> bool {
    sym.contains(&removed.concat(&inserted.inverse()).free_reduce())
}

/// Builds a derivation by replacing the first occurrence of a pattern.
pub struct DerivationBuilder<'a> {
    presentation: &'a Presentation,
    symmetrized: BTreeSet<Word>,
    derivation: Derivation,
}

impl<'a> DerivationBuilder<'a> {
    pub fn new(presentation: &'a Presentation, start: Word) -> Self {
        DerivationBuilder {
            presentation,
            symmetrized: presentation.symmetrized(),
            derivation: Derivation {
                start,
                steps: Vec::new(),
            },
        }
    }

    pub fn current(&self) -> &Word {
        self.derivation.end()
    }

    pub fn free_reduce(&mut self) -> &mut Self {
        let next = self.current().free_reduce();
        if &next != self.current() {
            self.derivation.steps.push(Step {
                kind: StepKind::FreeReduction,
                result: next,
            });
        }
        self
    }

    /// Replaces the leftmost occurrence of `removed` by `inserted`.
    pub fn rewrite(
        &mut self,
        removed: &Word,
        inserted: &Word,
    ) -> Result<&mut Self, DerivationError> {
        if !is_relator_instance(&self.symmetrized, removed, inserted) {
            return Err(DerivationError::NotARelator);
        }
        let letters = self.current().letters();
        let n = removed.len();
        let position = (0..=letters.len().saturating_sub(n))
            .find(|&p| p + n <= letters.len() && &letters[p..p + n] == removed.letters())
            .ok_or(DerivationError::PatternNotFound)?;
        let mut result = letters[..position].to_vec();
        result.extend_from_slice(inserted.letters());
        result.extend_from_slice(&letters[position + n..]);
        self.derivation.steps.push(Step {
            kind: StepKind::Relator {
                position,
                removed: removed.clone(),
                inserted: inserted.clone(),
            },
            result: Word::from_letters(result),
        });
        Ok(self)
    }

    pub fn presentation(&self) -> &Presentation {
        self.presentation
    }

    pub fn finish(self) -> Derivation {
        self.derivation
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::builtin;
    use crate::word::parse_word;

    #[test]
    fn h_a_h_a_rewrites_to_h_squared() {
        let zb = builtin("ZxB").unwrap();
        let al = zb.alphabet();
        let w = |s: &str| parse_word(al, s).unwrap();
        let mut b = DerivationBuilder::new(&zb, w("h a h a"));
        b.rewrite(&w("a h"), &w("h a")).unwrap();
        b.rewrite(&w("a a"), &Word::empty()).unwrap();
        let d = b.finish();
        d.check(&zb).unwrap();
        assert_eq!(d.end(), &w("h h"));
        assert_eq!(d.relator_steps(), 2);
    }

    #[test]
    fn checker_rejects_forged_steps() {
        let zb = builtin("ZxB").unwrap();
        let al = zb.alphabet();
        let w = |s: &str| parse_word(al, s).unwrap();
        let forged = Derivation {
            start: w("b a"),
            steps: vec![Step {
                kind: StepKind::Relator {
                    position: 0,
                    removed: w("b a"),
                    inserted: w("a b"),
                },
                result: w("a b"),
            }],
        };
        assert!(forged.check(&zb).is_err());
        let mut b = DerivationBuilder::new(&zb, w("b a"));
        assert_eq!(
            b.rewrite(&w("b a"), &w("a b")).err(),
            Some(DerivationError::NotARelator)
        );
        assert_eq!(
            b.rewrite(&w("c h"), &w("h c")).err(),
            Some(DerivationError::PatternNotFound)
        );
    }
}
