use std::fmt;
use std::sync::Arc;

use super::MarkedGroup;
use crate::baumslag::{eval_base, member_a, span_membership, PolyFrac};
use crate::error::{Error, Result};
use crate::groups::{OracleConfig, Tower};
use crate::hnn::{AssociatedPair, ConjugateSubgroup, HnnExtension};
use crate::oracle::{GroupOracle, SubgroupHandle};
use crate::word::Word;

/// A subgroup of a fixed ambient group, given by a membership handle.
#[derive(Clone)]
pub struct ChabautyPoint {
    pub ambient: Arc<dyn GroupOracle>,
    pub handle: Arc<dyn SubgroupHandle>,
    pub label: String,
}

impl ChabautyPoint {
    pub fn new(ambient: Arc<dyn GroupOracle>, handle: Arc<dyn SubgroupHandle>) -> Self {
        let label = handle.label();
        ChabautyPoint {
            ambient,
            handle,
            label,
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn contains(&self, w: &Word) -> Result<bool> {
        self.handle.contains(w)
    }
}

impl fmt::Debug for ChabautyPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ChabautyPoint({})", self.label)
    }
}

fn same_ambient(h: &ChabautyPoint, k: &ChabautyPoint) -> Result<()> {
    if h.ambient.alphabet() != k.ambient.alphabet() {
        return Err(Error::InvalidArgument(format!(
            "{} and {} live in different groups",
            h.label, k.label
        )));
    }
    Ok(())
}

/// First word of `f` on which the membership verdicts differ.
pub fn chabauty_disagreement(
    h: &ChabautyPoint,
    k: &ChabautyPoint,
    f: &[Word],
) -> Result<Option<Word>> {
    same_ambient(h, k)?;
    for w in f {
        if h.contains(w)? != k.contains(w)? {
            return Ok(Some(w.clone()));
        }
    }
    Ok(None)
}

/// `H ∩ F = K ∩ F`.
pub fn chabauty_agree(h: &ChabautyPoint, k: &ChabautyPoint, f: &[Word]) -> Result<bool> {
    Ok(chabauty_disagreement(h, k, f)?.is_none())
}

/// `(E(G, H), (a_1, ..., a_n, t))` with the default reduction settings.
pub fn condense(m: &MarkedGroup, h: &ChabautyPoint) -> Result<MarkedGroup> {
    condense_with(m, h, OracleConfig::default())
}

pub fn condense_with(
    m: &MarkedGroup,
    h: &ChabautyPoint,
    config: OracleConfig,
) -> Result<MarkedGroup> {
    if m.alphabet() != h.ambient.alphabet() {
        return Err(Error::InvalidArgument(format!(
            "{} is not a subgroup of {}",
            h.label,
            m.name()
        )));
    }
    let name = format!("E({},{})", m.name(), h.label);
    let e = HnnExtension::new(
        name.clone(),
        m.oracle().clone(),
        AssociatedPair::identity(h.handle.clone()),
        "t",
    )?
    .with_budget(config.budget)
    .with_order(config.order);
    Ok(MarkedGroup::new(name, Arc::new(e)))
}

/// Searches `i = 0, 1, -1, 2, -2, ...` for the first `x^i` outside the
/// span of the module parts of `F ∩ A`, where `A = <h, a^(b^j) : j ∈ Z>`.
pub fn escape_index(tower: &Tower, f: &[Word]) -> Result<i64> {
    let mut parts: Vec<PolyFrac> = Vec::new();
    for w in f {
        if let Some(base) = tower.g.base_part(w)? {
            let z = eval_base(&base)?;
            if member_a(&z) {
                parts.push(z.beta.module);
            }
        }
    }
    // at most |parts| monomials lie in the span, so this terminates
    let mut step = 0i64;
    loop {
        let i = if step % 2 == 1 {
            (step + 1) / 2
        } else {
            -step / 2
        };
        if !span_membership(&parts, &PolyFrac::x_pow(i)) {
            return Ok(i);
        }
        step += 1;
    }
}

/// The conjugate `K = g <h^2> g^-1` with `g = (s b^i)^-1`, which equals
/// `<h a^(b^i)>`.
#[derive(Clone, Debug)]
pub struct OrbitWitness {
    pub index: i64,
    pub conjugator: Word,
    pub subgroup: ChabautyPoint,
    /// `h a^(b^i)`: lies in `K` but not in `<h^2>`.
    pub witness: Word,
}

pub fn orbit_witness(tower: &Tower, i: i64) -> Result<OrbitWitness> {
    let al = tower.g.alphabet();
    let (a, b, h, s) = (
        al.generator("a")?,
        al.generator("b")?,
        al.generator("h")?,
        al.generator("s")?,
    );
    let conjugator = s.mul(&b.pow(i)).inverse();
    let handle = ConjugateSubgroup::new(
        conjugator.clone(),
        format!(
            "({})H2({})^-1",
            al.render(&conjugator),
            al.render(&conjugator)
        ),
        tower.h2.clone(),
    );
    let label = format!("<h a^(b^{i})>");
    let subgroup = ChabautyPoint::new(tower.g.clone(), Arc::new(handle)).with_label(label);
    let witness = h.mul(&a.conjugate(&b.pow(i)));
    Ok(OrbitWitness {
        index: i,
        conjugator,
        subgroup,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{ball, parse_word};

    fn tower() -> Tower {
        Tower::standard()
    }

    fn words(t: &Tower, src: &[&str]) -> Vec<Word> {
        src.iter()
            .map(|s| parse_word(t.g.alphabet(), s).unwrap())
            .collect()
    }

    #[test]
    fn escape_examples() {
        let t = tower();
        assert_eq!(escape_index(&t, &words(&t, &["a", "h"])).unwrap(), 1);
        assert_eq!(escape_index(&t, &[]).unwrap(), 0);
        assert_eq!(
            escape_index(&t, &words(&t, &["a", "a^b", "a^(b^-1)", "h"])).unwrap(),
            2
        );
        assert_eq!(
            escape_index(&t, &words(&t, &["a", "a^b", "h"])).unwrap(),
            -1
        );
        // words outside A contribute nothing, even when they lie in the base
        assert_eq!(escape_index(&t, &words(&t, &["a^c", "b", "s"])).unwrap(), 0);
        // membership in A is decided after Britton reduction
        assert_eq!(
            escape_index(&t, &words(&t, &["s^-1 h^2 s h^-1"])).unwrap(),
            1
        );
    }

    #[test]
    fn witness_lies_in_conjugate_only() {
        let t = tower();
        let h2 = ChabautyPoint::new(t.g.clone(), t.h2.clone());
        for i in -3..=3 {
            let o = orbit_witness(&t, i).unwrap();
            assert!(o.subgroup.contains(&o.witness).unwrap());
            assert!(!h2.contains(&o.witness).unwrap());
            let sq = o.witness.pow(2);
            assert_eq!(t.h2.exponent(&sq).unwrap(), Some(1));
        }
        let o = orbit_witness(&t, 0).unwrap();
        let ha = ChabautyPoint::new(t.g.clone(), t.ha.clone());
        let f: Vec<Word> = ball(t.g.alphabet(), 2).collect();
        assert!(chabauty_agree(&o.subgroup, &ha, &f).unwrap());
        let f = words(&t, &["h a"]);
        assert!(!chabauty_agree(&h2, &ha, &f).unwrap());
        assert_eq!(
            chabauty_disagreement(&h2, &ha, &f).unwrap(),
            Some(f[0].clone())
        );
    }

    #[test]
    fn condensing_g_gives_e() {
        let t = tower();
        let g = MarkedGroup::new("G", t.g.clone());
        let h2 = ChabautyPoint::new(t.g.clone(), t.h2.clone()).with_label("H2");
        let e = condense(&g, &h2).unwrap();
        assert_eq!(e.name(), "E(G,H2)");
        assert_eq!(e.alphabet().names().last().unwrap(), "t");
        let w = parse_word(e.alphabet(), "[t, h^2 a^b a^b]").unwrap();
        assert!(e.is_trivial(&w).unwrap());
        let w = parse_word(e.alphabet(), "[t, h a]").unwrap();
        assert!(!e.is_trivial(&w).unwrap());
    }
}
