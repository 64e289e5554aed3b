use crate::error::{Error, Result};
use crate::presentation::{Presentation, SubgroupSpec};
use crate::word::{parse_relation, parse_word, Alphabet};

pub const BUILTIN_NAMES: [&str; 4] = ["B", "ZxB", "G", "E"];

const B_RELATIONS: [&str; 4] = ["a^2", "[a, a^b]", "[b, c]", "a^c = a a^b"];
const CENTRAL_H: [&str; 3] = ["[h, a]", "[h, b]", "[h, c]"];
const S_RELATION: &str = "(h^2)^s = h a";

// E is listed in its own display order: commutators of h first.
const E_RELATIONS: [&str; 9] = [
    "[a, h]",
    "[b, h]",
    "[c, h]",
    "a^2",
    "[a, a^b]",
    "[b, c]",
    "a^c = a a^b",
    "(h^2)^s = h a",
    "(h^2)^t = h^2",
];

fn build(name: &str, gens: &[&str], relations: &[&str]) -> Result<Presentation> {
    let alphabet = Alphabet::new(gens.iter().copied())?;
    let relators = relations
        .iter()
        .map(|r| parse_relation(&alphabet, r))
        .collect::<Result<Vec<_>>>()?;
    Presentation::new(name, alphabet, relators)
}

fn with_h_subgroups(p: Presentation, include_ha: bool) -> Result<Presentation> {
    let al = p.alphabet().clone();
    let p = p.with_subgroup(SubgroupSpec::generated("H2", vec![parse_word(&al, "h^2")?]))?;
    if include_ha {
        p.with_subgroup(SubgroupSpec::generated("HA", vec![parse_word(&al, "h a")?]))
    } else {
        Ok(p)
    }
}

/// The built-in presentations `B`, `ZxB`, `G` and `E`, generators in the
/// order `a, b, c[, h][, s][, t]`.
pub fn builtin(name: &str) -> Result<Presentation> {
    match name {
        "B" => build("B", &["a", "b", "c"], &B_RELATIONS),
        "ZxB" => {
            let rels: Vec<&str> = B_RELATIONS
                .iter()
                .chain(CENTRAL_H.iter())
                .copied()
                .collect();
            with_h_subgroups(build("ZxB", &["a", "b", "c", "h"], &rels)?, true)
        }
        "G" => {
            let rels: Vec<&str> = B_RELATIONS
                .iter()
                .chain(CENTRAL_H.iter())
                .copied()
                .chain([S_RELATION])
                .collect();
            with_h_subgroups(build("G", &["a", "b", "c", "h", "s"], &rels)?, true)
        }
        "E" => with_h_subgroups(
            build("E", &["a", "b", "c", "h", "s", "t"], &E_RELATIONS)?,
            false,
        ),
        other => Err(Error::UnknownGroup(other.to_string())),
    }
}
