//! Word grammar with power, conjugation and commutator sugar.
//!
//! ```text
//! relation := word ('=' word)?
//! word     := factor*
//! factor   := primary ('^' exponent)*
//! primary  := NAME | '1' | '(' word ')' | '[' word ',' word ']'
//! exponent := '-'? INT | NAME | '(' word ')' | '{' word '}'
//! ```
//!
//! An integer exponent is a power; any other exponent conjugates, with
//! `x^y = y^-1 x y`. Commutators follow `[u, v] = u^-1 v^-1 u v`.

use crate::error::{Error, Result};
use crate::word::{Alphabet, Word};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    Minus,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    Equals,
}

struct Lexed {
    tok: Tok,
    column: usize,
}

fn lex(src: &str, line: usize, column0: usize) -> Result<Vec<Lexed>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    let err = |column: usize, message: String| Error::Syntax {
        line,
        column,
        message,
    };
    while k < chars.len() {
        let c = chars[k];
        let column = column0 + k;
        if c.is_whitespace() {
            k += 1;
            continue;
        }
        let simple = match c {
            '-' => Some(Tok::Minus),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            ',' => Some(Tok::Comma),
            '=' => Some(Tok::Equals),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Lexed { tok, column });
            k += 1;
        } else if c.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].is_ascii_digit() {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            let value = text
                .parse::<i64>()
                .map_err(|_| err(column, format!("integer `{text}` out of range")))?;
            out.push(Lexed {
                tok: Tok::Int(value),
                column,
            });
        } else if c.is_ascii_alphabetic() {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_alphanumeric() || chars[k] == '_') {
                k += 1;
            }
            out.push(Lexed {
                tok: Tok::Name(chars[start..k].iter().collect()),
                column,
            });
        } else {
            return Err(err(column, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    alphabet: &'a Alphabet,
    toks: Vec<Lexed>,
    pos: usize,
    line: usize,
    end_column: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|l| &l.tok)
    }

    fn column(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|l| l.column)
            .unwrap_or(self.end_column)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected {what}"))
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut out = Word::empty();
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Name(_) | Tok::Int(_) | Tok::LParen | Tok::LBracket => {
                    let f = self.factor()?;
                    out = out.mul(&f);
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Word> {
        let mut base = self.primary()?;
        while self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Tok::Minus) => {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(k)) => {
                            self.pos += 1;
                            base = base.pow(-k);
                        }
                        _ => return self.error("expected integer after `^-`"),
                    }
                }
                Some(Tok::Int(k)) => {
                    self.pos += 1;
                    base = base.pow(k);
                }
                Some(Tok::Name(_)) => {
                    let by = self.name()?;
                    base = base.conjugate(&by);
                }
                Some(Tok::LParen) => {
                    self.pos += 1;
                    let by = self.word()?;
                    self.expect(Tok::RParen, "`)`")?;
                    base = base.conjugate(&by);
                }
                Some(Tok::LBrace) => {
                    self.pos += 1;
                    let by = self.word()?;
                    self.expect(Tok::RBrace, "`}`")?;
                    base = base.conjugate(&by);
                }
                _ => return self.error("expected exponent after `^`"),
            }
        }
        Ok(base)
    }

    fn name(&mut self) -> Result<Word> {
        match self.peek().cloned() {
            Some(Tok::Name(n)) => match self.alphabet.generator(&n) {
                Ok(w) => {
                    self.pos += 1;
                    Ok(w)
                }
                Err(_) => self.error(format!("unknown generator `{n}`")),
            },
            _ => self.error("expected generator name"),
        }
    }

    fn primary(&mut self) -> Result<Word> {
        match self.peek().cloned() {
            Some(Tok::Name(_)) => self.name(),
            Some(Tok::Int(1)) => {
                self.pos += 1;
                Ok(Word::empty())
            }
            Some(Tok::Int(k)) => self.error(format!("bare integer {k}; only `1` denotes a word")),
            Some(Tok::LParen) => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(w)
            }
            Some(Tok::LBracket) => {
                self.pos += 1;
                let u = self.word()?;
                self.expect(Tok::Comma, "`,` in commutator")?;
                let v = self.word()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(Word::commutator(&u, &v))
            }
            _ => self.error("expected a word"),
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos < self.toks.len() {
            self.error("unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

fn parser<'a>(alphabet: &'a Alphabet, src: &str, line: usize, column: usize) -> Result<Parser<'a>> {
    Ok(Parser {
        alphabet,
        toks: lex(src, line, column)?,
        pos: 0,
        line,
        end_column: column + src.chars().count(),
    })
}

/// Parses a single word; the result is freely reduced.
pub fn parse_word(alphabet: &Alphabet, src: &str) -> Result<Word> {
    parse_word_at(alphabet, src, 1, 1)
}

pub(crate) fn parse_word_at(
    alphabet: &Alphabet,
    src: &str,
    line: usize,
    column: usize,
) -> Result<Word> {
    let mut p = parser(alphabet, src, line, column)?;
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}

/// Parses `u` or `u = v`; an equation becomes the relator `u v^-1`.
pub fn parse_relation(alphabet: &Alphabet, src: &str) -> Result<Word> {
    parse_relation_at(alphabet, src, 1, 1)
}

pub(crate) fn parse_relation_at(
    alphabet: &Alphabet,
    src: &str,
    line: usize,
    column: usize,
) -> Result<Word> {
    let mut p = parser(alphabet, src, line, column)?;
    let lhs = p.word()?;
    let out = if p.peek() == Some(&Tok::Equals) {
        p.pos += 1;
        let rhs = p.word()?;
        lhs.mul(&rhs.inverse())
    } else {
        lhs
    };
    p.finish()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn al() -> Alphabet {
        Alphabet::new(["a", "b", "c", "h", "s", "t"]).unwrap()
    }

    fn render(s: &str) -> String {
        let al = al();
        al.render(&parse_relation(&al, s).unwrap())
    }

    #[test]
    fn powers_and_identity() {
        assert_eq!(render("a^2"), "a a");
        assert_eq!(render("h^-3"), "h^-1 h^-1 h^-1");
        assert_eq!(render("1"), "1");
        assert_eq!(render(""), "1");
        assert_eq!(render("(h a)^-1"), "a^-1 h^-1");
    }

    #[test]
    fn conjugation_sugar() {
        assert_eq!(render("a^b"), "b^-1 a b");
        assert_eq!(render("(h^2)^s"), "s^-1 h h s");
        assert_eq!(render("a^{b^2}"), "b^-1 b^-1 a b b");
        assert_eq!(render("a^(s b)"), "b^-1 s^-1 a s b");
        assert_eq!(render("a^b^2"), "b^-1 a a b");
    }

    #[test]
    fn commutator_sugar() {
        assert_eq!(render("[a,h]"), "a^-1 h^-1 a h");
        assert_eq!(render("[a, a^b]"), "a^-1 b^-1 a^-1 b a b^-1 a b");
    }

    #[test]
    fn equations_become_relators() {
        assert_eq!(render("(h^2)^s = h a"), "s^-1 h h s a^-1 h^-1");
        assert_eq!(render("a^c = a a^b"), "c^-1 a c b^-1 a^-1 b a^-1");
    }

    #[test]
    fn errors_carry_positions() {
        let al = al();
        match parse_word(&al, "a (b") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (1, 5)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_word(&al, "a zz") {
            Err(Error::Syntax {
                column, message, ..
            }) => {
                assert_eq!(column, 3);
                assert!(message.contains("zz"));
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_word(&al, "a = b").is_err());
        assert!(parse_word(&al, "a ^").is_err());
        assert!(parse_word(&al, "2").is_err());
    }
}
