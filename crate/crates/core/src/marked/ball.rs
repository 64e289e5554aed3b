use std::fmt;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use super::MarkedGroup;
use crate::error::{Error, Result};
use crate::oracle::GroupOracle;
use crate::word::{ball_partitions, ball_size, sphere_partitions, Alphabet, Word};

/// Parallelism and size limits for ball sweeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BallConfig {
    /// Worker threads; `0` lets rayon choose.
    pub workers: usize,
    /// Largest number of words a sweep may enumerate.
    pub max_words: u64,
}

impl Default for BallConfig {
    fn default() -> Self {
        BallConfig {
            workers: 0,
            max_words: 3_000_000,
        }
    }
}

impl BallConfig {
    pub fn with_workers(workers: usize) -> Self {
        BallConfig {
            workers,
            ..BallConfig::default()
        }
    }

    fn check(&self, arity: usize, radius: usize) -> Result<()> {
        let size = ball_size(arity, radius);
        if size > u128::from(self.max_words) {
            return Err(Error::BallBudget {
                radius,
                size,
                limit: self.max_words,
            });
        }
        Ok(())
    }

    pub(crate) fn run<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("thread pool: {e}")))?;
        Ok(pool.install(job))
    }
}

/// The trivial words of length at most `radius`, sorted in word order.
#[derive(Clone, PartialEq, Eq)]
pub struct RelationBall {
    group: String,
    alphabet: Alphabet,
    radius: usize,
    words: Vec<Word>,
    fingerprint: [u8; 32],
}

impl RelationBall {
    fn new(group: &str, alphabet: &Alphabet, radius: usize, mut words: Vec<Word>) -> Self {
        words.sort();
        words.dedup();
        let fingerprint = fingerprint(alphabet.arity(), &words);
        RelationBall {
            group: group.to_string(),
            alphabet: alphabet.clone(),
            radius,
            words,
            fingerprint,
        }
    }

    pub fn group(&self) -> &str {
        &self.group
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// SHA-256 of the sorted words rendered over `x1..xn`, so balls of
    /// different presentations with the same arity are comparable.
    pub fn fingerprint(&self) -> [u8; 32] {
        self.fingerprint
    }

    pub fn fingerprint_hex(&self) -> String {
        self.fingerprint
            .iter()
            .map(|b| format!("{b:02x}"))
            .collect()
    }

    /// Header line followed by one word per line.
    pub fn export(&self) -> String {
        let mut out = format!(
            "# group={} radius={} count={} fingerprint={}\n",
            self.group,
            self.radius,
            self.words.len(),
            self.fingerprint_hex()
        );
        for w in &self.words {
            out.push_str(&self.alphabet.render(w));
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for RelationBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RelationBall({}, r={}, {} words, {})",
            self.group,
            self.radius,
            self.words.len(),
            &self.fingerprint_hex()[..12]
        )
    }
}

fn fingerprint(arity: usize, words: &[Word]) -> [u8; 32] {
    let standard = Alphabet::standard(arity).expect("positive arity");
    let mut hasher = Sha256::new();
    for w in words {
        hasher.update(standard.render(w).as_bytes());
        hasher.update(b"\n");
    }
    hasher.finalize().into()
}

/// Trivial words among `words`, testing one of each inverse pair.
fn trivial_among(oracle: &dyn GroupOracle, words: impl Iterator<Item = Word>) -> Result<Vec<Word>> {
    let mut found = Vec::new();
    for w in words {
        let inv = w.inverse();
        if inv < w {
            continue;
        }
        if oracle.is_trivial(&w)? {
            if inv != w {
                found.push(inv);
            }
            found.push(w);
        }
    }
    Ok(found)
}

pub fn relation_ball(m: &MarkedGroup, radius: usize, config: &BallConfig) -> Result<RelationBall> {
    config.check(m.arity(), radius)?;
    let oracle = m.oracle().as_ref();
    let parts = ball_partitions(m.alphabet(), radius);
    let found = config.run(|| {
        parts
            .into_par_iter()
            .map(|part| trivial_among(oracle, part))
            .collect::<Result<Vec<_>>>()
    })??;
    Ok(RelationBall::new(
        m.name(),
        m.alphabet(),
        radius,
        found.concat(),
    ))
}

fn sphere_relations(m: &MarkedGroup, len: usize, config: &BallConfig) -> Result<Vec<Word>> {
    let oracle = m.oracle().as_ref();
    let parts = sphere_partitions(m.alphabet(), len);
    let mut found = config
        .run(|| {
            parts
                .into_par_iter()
                .map(|part| trivial_among(oracle, part))
                .collect::<Result<Vec<_>>>()
        })??
        .concat();
    found.sort();
    Ok(found)
}

fn same_arity(m1: &MarkedGroup, m2: &MarkedGroup) -> Result<()> {
    if m1.arity() != m2.arity() {
        return Err(Error::ArityMismatch {
            left: m1.arity(),
            right: m2.arity(),
        });
    }
    Ok(())
}

/// Whether the two marked groups have the same relations of length at most
/// `r`.
pub fn cong_r(m1: &MarkedGroup, m2: &MarkedGroup, r: usize, config: &BallConfig) -> Result<bool> {
    same_arity(m1, m2)?;
    let b1 = relation_ball(m1, r, config)?;
    let b2 = relation_ball(m2, r, config)?;
    Ok(b1.fingerprint() == b2.fingerprint())
}

/// Largest agreement radius found by [`max_agreement`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Agreement {
    Exact(usize),
    /// Agreement holds up to the search limit.
    AtLeast(usize),
}

impl fmt::Display for Agreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Agreement::Exact(r) => write!(f, "{r}"),
            Agreement::AtLeast(r) => write!(f, ">= {r}"),
        }
    }
}

/// Compares spheres outward and stops at the first radius with a
/// differing relation.
pub fn max_agreement(
    m1: &MarkedGroup,
    m2: &MarkedGroup,
    r_max: usize,
    config: &BallConfig,
) -> Result<Agreement> {
    same_arity(m1, m2)?;
    for len in 1..=r_max {
        config.check(m1.arity(), len)?;
        if sphere_relations(m1, len, config)? != sphere_relations(m2, len, config)? {
            return Ok(Agreement::Exact(len - 1));
        }
    }
    Ok(Agreement::AtLeast(r_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::CyclicGroup;
    use std::sync::Arc;

    fn cyclic(n: u64) -> MarkedGroup {
        let g = if n == 0 {
            CyclicGroup::integers()
        } else {
            CyclicGroup::modulo(n).unwrap()
        };
        MarkedGroup::new(g.name(), Arc::new(g))
    }

    #[test]
    fn cyclic_balls() {
        let cfg = BallConfig::default();
        let z = relation_ball(&cyclic(0), 3, &cfg).unwrap();
        assert_eq!(z.words(), &[Word::empty()]);
        let z2 = relation_ball(&cyclic(2), 2, &cfg).unwrap();
        assert_eq!(
            z2.words(),
            &[Word::empty(), Word::power_of(0, 2), Word::power_of(0, -2)]
        );
        assert!(z2
            .export()
            .starts_with("# group=Z/2 radius=2 count=3 fingerprint="));
        assert!(z2.export().ends_with("1\nx x\nx^-1 x^-1\n"));
    }

    #[test]
    fn agreement_radii() {
        let cfg = BallConfig::default();
        assert!(cong_r(&cyclic(5), &cyclic(0), 4, &cfg).unwrap());
        assert!(!cong_r(&cyclic(5), &cyclic(0), 5, &cfg).unwrap());
        assert_eq!(
            max_agreement(&cyclic(7), &cyclic(0), 10, &cfg).unwrap(),
            Agreement::Exact(6)
        );
        assert_eq!(
            max_agreement(&cyclic(2), &cyclic(3), 5, &cfg).unwrap(),
            Agreement::Exact(1)
        );
        assert_eq!(
            max_agreement(&cyclic(4), &cyclic(4), 5, &cfg).unwrap(),
            Agreement::AtLeast(5)
        );
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = BallConfig {
            workers: 1,
            max_words: 10,
        };
        assert!(matches!(
            relation_ball(&cyclic(0), 20, &cfg),
            Err(Error::BallBudget { .. })
        ));
    }
}
