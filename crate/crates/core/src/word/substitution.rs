use crate::error::{Error, Result};
use crate::word::{Alphabet, Sign, Word};

/// A homomorphism between free groups, given by the image of each source
/// generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    source: Alphabet,
    target: Alphabet,
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(source: Alphabet, target: Alphabet, images: Vec<Word>) -> Result<Self> {
        if images.len() != source.arity() {
            return Err(Error::ArityMismatch {
                left: source.arity(),
                right: images.len(),
            });
        }
        for w in &images {
            target.check_word(w)?;
        }
        let images = images.into_iter().map(|w| w.free_reduce()).collect();
        Ok(Substitution {
            source,
            target,
            images,
        })
    }

    pub fn identity(alphabet: &Alphabet) -> Self {
        let images = (0..alphabet.arity() as u32)
            .map(|i| Word::power_of(i, 1))
            .collect();
        Substitution {
            source: alphabet.clone(),
            target: alphabet.clone(),
            images,
        }
    }

    /// Replaces the image of one generator.
    pub fn with_image(mut self, name: &str, image: Word) -> Result<Self> {
        let i = self
            .source
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
        self.target.check_word(&image)?;
        self.images[i] = image.free_reduce();
        Ok(self)
    }

    pub fn source(&self) -> &Alphabet {
        &self.source
    }

    pub fn target(&self) -> &Alphabet {
        &self.target
    }

    pub fn image(&self, index: usize) -> &Word {
        &self.images[index]
    }

    /// Image of `w`, freely reduced.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Word::empty();
        for l in w.letters() {
            let img = &self.images[l.index as usize];
            match l.sign {
                Sign::Pos => img.letters().iter().for_each(|&x| out.push_reduced(x)),
                Sign::Neg => img
                    .letters()
                    .iter()
                    .rev()
                    .for_each(|&x| out.push_reduced(x.inverse())),
            }
        }
        out
    }
}
