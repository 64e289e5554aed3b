use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::word::{Letter, Sign, Word};

/// An ordered list of distinct generator names; the order is the marking.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    names: Arc<[String]>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("no generators".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidAlphabet(format!(
                    "`{name}` is not an identifier"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidAlphabet(format!("`{name}` appears twice")));
            }
        }
        Ok(Alphabet {
            names: names.into(),
        })
    }

    /// The basis `x1, ..., xn` of the free group of rank `n`.
    pub fn standard(n: usize) -> Result<Self> {
        Alphabet::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The positive letter of the named generator.
    pub fn letter(&self, name: &str) -> Result<Letter> {
        self.index_of(name)
            .map(|i| Letter::new(i as u32, Sign::Pos))
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Single-generator word for `name`.
    pub fn generator(&self, name: &str) -> Result<Word> {
        Ok(Word::from_letters(vec![self.letter(name)?]))
    }

    /// Appends a new generator at the end.
    pub fn extend(&self, name: &str) -> Result<Alphabet> {
        if self.index_of(name).is_some() {
            return Err(Error::AlphabetConflict(name.to_string()));
        }
        let mut names = self.names.to_vec();
        names.push(name.to_string());
        Alphabet::new(names)
    }

    pub fn is_prefix_of(&self, other: &Alphabet) -> bool {
        other.names.len() >= self.names.len() && other.names[..self.names.len()] == self.names[..]
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters()
            .iter()
            .all(|l| (l.index as usize) < self.arity())
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w
            .letters()
            .iter()
            .find(|l| l.index as usize >= self.arity())
        {
            Some(l) => Err(Error::ForeignLetter(format!("#{}", l.index))),
            None => Ok(()),
        }
    }

    /// Renders a word letter by letter, `1` for the empty word.
    pub fn render(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (k, l) in w.letters().iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            match self.names.get(l.index as usize) {
                Some(name) => out.push_str(name),
                None => out.push_str(&format!("#{}", l.index)),
            }
            if l.sign == Sign::Neg {
                out.push_str("^-1");
            }
        }
        out
    }
}

impl fmt::Debug for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Alphabet{:?}", &self.names[..])
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_names() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["1a"]).is_err());
        assert!(Alphabet::new(["a-b"]).is_err());
        assert!(Alphabet::new(["x_1", "y2"]).is_ok());
    }

    #[test]
    fn extend_checks_collisions() {
        let a = Alphabet::new(["a", "t"]).unwrap();
        assert_eq!(a.extend("t"), Err(Error::AlphabetConflict("t".into())));
        let b = a.extend("s").unwrap();
        assert!(a.is_prefix_of(&b));
        assert_eq!(b.index_of("s"), Some(2));
    }
}
