//! Line-oriented text format for presentations.
//!
//! ```text
//! # comment
//! group G
//! gens a b c h s
//! rel a^2
//! rel (h^2)^s = h a
//! subgroup H2 gen h^2
//! subgroup K conj (s b)^-1 of H2
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::presentation::{Presentation, SubgroupSpec};
use crate::word::parse::{parse_relation_at, parse_word_at};
use crate::word::{Alphabet, Word};

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Splits off the first whitespace-delimited token; returns it, its
/// 1-based column, and the remainder with the remainder's column.
fn token(s: &str, column: usize) -> Option<(&str, usize, &str, usize)> {
    let start = s.len() - s.trim_start().len();
    let rest = &s[start..];
    if rest.is_empty() {
        return None;
    }
    let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
    let col = column + s[..start].chars().count();
    let after = &rest[end..];
    let after_col = col + rest[..end].chars().count();
    Some((&rest[..end], col, after, after_col))
}

pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut name: Option<String> = None;
    let mut pres: Option<Presentation> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        let Some((keyword, kcol, rest, rcol)) = token(content, 1) else {
            continue;
        };
        match keyword {
            "group" => {
                if name.is_some() {
                    return Err(syntax(line, kcol, "duplicate `group` line"));
                }
                let n = rest.trim();
                if n.is_empty() || n.contains(char::is_whitespace) {
                    return Err(syntax(line, rcol, "expected a single group name"));
                }
                name = Some(n.to_string());
            }
            "gens" => {
                if pres.is_some() {
                    return Err(syntax(line, kcol, "duplicate `gens` line"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                let alphabet =
                    Alphabet::new(names).map_err(|e| syntax(line, rcol, e.to_string()))?;
                let group = name.clone().unwrap_or_else(|| "unnamed".to_string());
                pres = Some(Presentation::new(group, alphabet, Vec::new())?);
            }
            "rel" => {
                let p = pres
                    .as_mut()
                    .ok_or_else(|| syntax(line, kcol, "`rel` before `gens`"))?;
                let r = parse_relation_at(p.alphabet(), rest, line, rcol)?;
                p.push_relator(r)
                    .map_err(|e| syntax(line, rcol, e.to_string()))?;
            }
            "subgroup" => {
                let p = pres
                    .take()
                    .ok_or_else(|| syntax(line, kcol, "`subgroup` before `gens`"))?;
                let (sname, scol, rest, rcol) = token(rest, rcol)
                    .ok_or_else(|| syntax(line, rcol, "expected subgroup name"))?;
                if !crate::word::is_identifier(sname) {
                    return Err(syntax(
                        line,
                        scol,
                        format!("`{sname}` is not an identifier"),
                    ));
                }
                let (kind, kcol, rest, rcol) = token(rest, rcol)
                    .ok_or_else(|| syntax(line, rcol, "expected `gen` or `conj`"))?;
                let spec = match kind {
                    "gen" => {
                        let mut gens = Vec::new();
                        let mut rest = rest;
                        let mut col = rcol;
                        // generators are whitespace separated; sugar must not
                        // contain spaces here
                        while let Some((tok, tcol, after, acol)) = token(rest, col) {
                            gens.push(parse_word_at(p.alphabet(), tok, line, tcol)?);
                            rest = after;
                            col = acol;
                        }
                        SubgroupSpec::generated(sname, gens)
                    }
                    "conj" => {
                        let Some(of_at) = rest.rfind(" of ") else {
                            return Err(syntax(line, rcol, "expected `conj WORD of NAME`"));
                        };
                        let g = parse_word_at(p.alphabet(), &rest[..of_at], line, rcol)?;
                        let base_name = rest[of_at + 4..].trim();
                        let base = p.subgroup(base_name).ok_or_else(|| {
                            syntax(line, rcol, format!("unknown subgroup `{base_name}`"))
                        })?;
                        SubgroupSpec::conjugate(sname, g, base)
                    }
                    other => {
                        return Err(syntax(
                            line,
                            kcol,
                            format!("unknown subgroup kind `{other}`"),
                        ))
                    }
                };
                pres = Some(
                    p.with_subgroup(spec)
                        .map_err(|e| syntax(line, kcol, e.to_string()))?,
                );
            }
            other => return Err(syntax(line, kcol, format!("unknown keyword `{other}`"))),
        }
    }
    let mut p = pres.ok_or_else(|| syntax(1, 1, "missing `gens` line"))?;
    if let Some(n) = name {
        p.name = n;
    }
    Ok(p)
}

fn render_compact(al: &Alphabet, w: &Word) -> String {
    // subgroup generators must be single tokens: join letters with `*`-free
    // parenthesised form
    if w.len() <= 1 {
        return al.render(w);
    }
    let mut s = String::from("(");
    s.push_str(&al.render(w).replace(' ', ")("));
    s.push(')');
    s
}

impl Presentation {
    /// Canonical text form; parsing it back yields an equal presentation.
    pub fn to_text(&self) -> String {
        let al = &self.alphabet;
        let mut out = String::new();
        let _ = writeln!(out, "group {}", self.name);
        let _ = writeln!(out, "gens {}", al.names().join(" "));
        for r in &self.relators {
            let _ = writeln!(out, "rel {}", al.render(r));
        }
        for s in &self.subgroups {
            match (&s.conjugator, &s.base) {
                (Some(g), Some(base)) => {
                    let _ = writeln!(out, "subgroup {} conj {} of {}", s.name, al.render(g), base);
                }
                _ => {
                    let gens: Vec<String> =
                        s.generators.iter().map(|w| render_compact(al, w)).collect();
                    let _ = writeln!(out, "subgroup {} gen {}", s.name, gens.join(" "));
                }
            }
        }
        out
    }
}
