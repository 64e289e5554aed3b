//! The tower `<h> x B  ->  G (stable s)  ->  E (stable t)` and name-based
//! lookup of marked groups.

use std::sync::Arc;

use crate::baumslag::{eval_base, BaumslagGroup, Gf2Poly, PolyFrac, ProductGroup, ProductSubgroup};
use crate::error::{Error, Result};
use crate::hnn::{
    AssociatedPair, ConjugateSubgroup, HnnExtension, LiftedSubgroup, PinchOrder, DEFAULT_BUDGET,
};
use crate::marked::MarkedGroup;
use crate::oracle::{CyclicGroup, FreeGroup, GroupOracle, SubgroupHandle};
use crate::presentation::{builtin, parse_presentation, Presentation, SubgroupSpec};
use crate::word::Word;

/// Settings shared by every oracle in a tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub budget: usize,
    pub order: PinchOrder,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
            order: PinchOrder::Leftmost,
        }
    }
}

/// Oracles for `<h> x B`, `G` and `E = E(G, <h^2>)`, plus the subgroups of
/// `G` they are built from.
#[derive(Clone)]
pub struct Tower {
    pub config: OracleConfig,
    pub base: Arc<ProductGroup>,
    pub g: Arc<HnnExtension>,
    /// `<h^2>` queried with `G`-words.
    pub h2: Arc<dyn SubgroupHandle>,
    /// `<h a>` queried with `G`-words.
    pub ha: Arc<dyn SubgroupHandle>,
    pub e: Arc<HnnExtension>,
}

impl Tower {
    pub fn new(config: OracleConfig) -> Result<Tower> {
        let base = Arc::new(ProductGroup::default());
        let pair =
            AssociatedPair::new(Arc::new(ProductSubgroup::H2), Arc::new(ProductSubgroup::HA));
        let g = Arc::new(
            HnnExtension::new("G", base.clone(), pair, "s")?
                .with_budget(config.budget)
                .with_order(config.order),
        );
        let h2: Arc<dyn SubgroupHandle> = Arc::new(LiftedSubgroup::new(
            g.clone(),
            Arc::new(ProductSubgroup::H2),
        ));
        let ha: Arc<dyn SubgroupHandle> = Arc::new(LiftedSubgroup::new(
            g.clone(),
            Arc::new(ProductSubgroup::HA),
        ));
        let e = Arc::new(condense_oracle("E", g.clone(), h2.clone(), config)?);
        Ok(Tower {
            config,
            base,
            g,
            h2,
            ha,
            e,
        })
    }

    pub fn standard() -> Tower {
        Tower::new(OracleConfig::default()).expect("built-in tower")
    }

    /// `Some(k)` iff the `G`-word `w` equals `h^(2k)`.
    pub fn member_h2_in_g(&self, w: &Word) -> Result<Option<i64>> {
        self.h2.exponent(w)
    }

    /// `E(G, K)` for a subgroup handle `K` of `G`.
    pub fn condense(&self, name: &str, k: Arc<dyn SubgroupHandle>) -> Result<HnnExtension> {
        condense_oracle(name, self.g.clone(), k, self.config)
    }

    /// Resolves a subgroup of `G` from its spec. Supports the names `H2` and
    /// `HA`, single generators of the form `g u g^-1` with `u` a stable-free
    /// generator of `<h^2>` or `<h a>`, and conjugates of either.
    pub fn subgroup_handle(&self, spec: &SubgroupSpec) -> Result<Arc<dyn SubgroupHandle>> {
        let semantic = spec.base.as_deref().unwrap_or(&spec.name);
        let inner = match (semantic, spec.generators.as_slice()) {
            ("H2", []) => self.h2.clone(),
            ("HA", []) => self.ha.clone(),
            (_, [w]) => self.cyclic_from_generator(w).ok_or_else(|| {
                Error::Undecidable(format!("`{}` generated by an unsupported word", spec.name))
            })?,
            _ => return Err(Error::Undecidable(spec.name.clone())),
        };
        Ok(match &spec.conjugator {
            Some(g) => {
                if !self.g.alphabet().contains_word(g) {
                    return Err(Error::InvalidConjugator(format!(
                        "conjugator of `{}` is not a word of G",
                        spec.name
                    )));
                }
                Arc::new(ConjugateSubgroup::new(g.clone(), spec.name.clone(), inner))
            }
            None => inner,
        })
    }

    fn cyclic_from_generator(&self, w: &Word) -> Option<Arc<dyn SubgroupHandle>> {
        if !self.g.alphabet().contains_word(w) {
            return None;
        }
        let (g, core) = w.cyclic_core();
        if core.occurrences(self.g.stable()) > 0 {
            return None;
        }
        let z = eval_base(&core).ok()?;
        let (inner, shift) = match (z.h.abs(), z.beta.b, z.beta.c) {
            (2, 0, 0) if z.beta.module.is_zero() => (self.h2.clone(), None),
            // h^±1 times a^(b^i c^j) generates a conjugate of <h a>
            (1, 0, 0) => (self.ha.clone(), Some(monomial_exponents(&z.beta.module)?)),
            _ => return None,
        };
        let al = self.g.alphabet();
        let mut g = g;
        if let Some((i, j)) = shift {
            let (b, c) = (al.generator("b").ok()?, al.generator("c").ok()?);
            g = g.mul(&b.pow(-i)).mul(&c.pow(-j));
        }
        if g.is_empty() {
            Some(inner)
        } else {
            let label = format!(
                "({}) {} ({})^-1",
                al.render(&g),
                inner.label(),
                al.render(&g)
            );
            Some(Arc::new(ConjugateSubgroup::new(g, label, inner)))
        }
    }
}

/// `(i, j)` with `m = x^i (1+x)^j`, if `m` is such a monomial.
fn monomial_exponents(m: &PolyFrac) -> Option<(i64, i64)> {
    let mut num = m.numerator().clone();
    let p = num.trailing_zeros()?;
    num = num.shr(p);
    let mut q = 0usize;
    while num != Gf2Poly::one() {
        num = num.div_one_plus_x()?;
        q += 1;
    }
    Some((p as i64 - m.xpow() as i64, q as i64 - m.ypow() as i64))
}

fn condense_oracle(
    name: &str,
    g: Arc<HnnExtension>,
    k: Arc<dyn SubgroupHandle>,
    config: OracleConfig,
) -> Result<HnnExtension> {
    Ok(
        HnnExtension::new(name, g, AssociatedPair::identity(k), "t")?
            .with_budget(config.budget)
            .with_order(config.order),
    )
}

/// Marked group for a built-in name: `B`, `ZxB`, `G`, `E`, `Z`, `Z/n`, or
/// `F<n>` (free of rank `n`).
pub fn builtin_marked(name: &str, config: OracleConfig) -> Result<MarkedGroup> {
    let oracle: Arc<dyn GroupOracle> = match name {
        "B" => Arc::new(BaumslagGroup::default()),
        "ZxB" => Arc::new(ProductGroup::default()),
        "G" => Tower::new(config)?.g,
        "E" => Tower::new(config)?.e,
        "Z" => Arc::new(CyclicGroup::integers()),
        _ => {
            if let Some(n) = name.strip_prefix("Z/") {
                let n: u64 = n
                    .parse()
                    .map_err(|_| Error::UnknownGroup(name.to_string()))?;
                Arc::new(CyclicGroup::modulo(n)?)
            } else if let Some(n) = name.strip_prefix('F') {
                let n: usize = n
                    .parse()
                    .map_err(|_| Error::UnknownGroup(name.to_string()))?;
                Arc::new(FreeGroup::new(crate::word::Alphabet::standard(n)?))
            } else {
                return Err(Error::UnknownGroup(name.to_string()));
            }
        }
    };
    Ok(MarkedGroup::new(name, oracle))
}

/// Resolves a group argument: a built-in name or `file:PATH`.
pub fn resolve_group(spec: &str, config: OracleConfig) -> Result<MarkedGroup> {
    match spec.strip_prefix("file:") {
        Some(path) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
            marked_from_presentation(&parse_presentation(&text)?, config)
        }
        None => builtin_marked(spec, config),
    }
}

/// Finds a word-problem solver for a presentation read from a file.
///
/// Recognized: the built-in presentations (same marking, same symmetrized
/// relators), free groups, one-generator groups, and HNN extensions of `G`
/// by one stable letter commuting with a resolvable cyclic subgroup.
pub fn marked_from_presentation(p: &Presentation, config: OracleConfig) -> Result<MarkedGroup> {
    for name in ["B", "ZxB", "G", "E"] {
        if p.same_relations(&builtin(name)?) {
            return Ok(builtin_marked(name, config)?.renamed(p.name()));
        }
    }
    if p.relators().is_empty() {
        return Ok(MarkedGroup::new(
            p.name(),
            Arc::new(FreeGroup::new(p.alphabet().clone())),
        ));
    }
    if p.alphabet().arity() == 1 {
        let n = p
            .relators()
            .iter()
            .fold(0u64, |acc, r| gcd(acc, r.exponent_sum(0).unsigned_abs()));
        let group = if n == 0 {
            CyclicGroup::integers()
        } else {
            CyclicGroup::modulo(n)?
        };
        return Ok(MarkedGroup::new(
            p.name(),
            Arc::new(group.with_alphabet(p.alphabet().clone())?),
        ));
    }
    if let Some(m) = hnn_over_g(p, config)? {
        return Ok(m);
    }
    Err(Error::Undecidable(format!(
        "no word-problem solver recognizes presentation `{}`",
        p.name()
    )))
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn hnn_over_g(p: &Presentation, config: OracleConfig) -> Result<Option<MarkedGroup>> {
    let g = builtin("G")?;
    let al = p.alphabet();
    if al.arity() != 6 || !g.alphabet().is_prefix_of(al) {
        return Ok(None);
    }
    let stable = 5u32;
    let (base_rels, extra): (Vec<Word>, Vec<Word>) = p
        .relators()
        .iter()
        .cloned()
        .partition(|r| r.occurrences(stable) == 0);
    let base = Presentation::new("G", g.alphabet().clone(), base_rels)?;
    if !base.same_relations(&g) || extra.len() != 1 {
        return Ok(None);
    }
    let Some(h) = commuting_word(&extra[0], stable) else {
        return Ok(None);
    };
    let tower = Tower::new(config)?;
    let spec = SubgroupSpec::generated("K", vec![h]);
    let Ok(handle) = tower.subgroup_handle(&spec) else {
        return Ok(None);
    };
    let e = tower.condense(p.name(), handle)?;
    Ok(Some(MarkedGroup::new(p.name(), Arc::new(e))))
}

/// For a relator that is a cyclic permutation of `[t, h]^{±1}` with `h`
/// stable-free, returns `h` (up to inversion).
fn commuting_word(r: &Word, stable: u32) -> Option<Word> {
    if r.occurrences(stable) != 2 {
        return None;
    }
    for cand in [r.clone(), r.inverse()] {
        for rot in cand.rotations() {
            let l = rot.letters();
            if l[0].index != stable || l[0].sign != crate::word::Sign::Neg {
                continue;
            }
            let Some(k) = l[1..].iter().position(|x| x.index == stable) else {
                continue;
            };
            let k = k + 1;
            if l[k].sign != crate::word::Sign::Pos {
                continue;
            }
            let x = Word::from_letters(l[1..k].to_vec());
            let y = Word::from_letters(l[k + 1..].to_vec());
            if !y.is_empty() && x == y.inverse() {
                return Some(y);
            }
        }
    }
    None
}

impl MarkedGroup {
    fn renamed(self, name: &str) -> MarkedGroup {
        MarkedGroup::new(name, self.oracle().clone())
    }
}
