//! Marked groups, relation balls and the topology of the space of marked
//! groups; subgroups as points of the Chabauty space.
//!
//! Two marked groups of the same arity agree at radius `r` when the same
//! reduced words of length at most `r` evaluate to the identity in both.

mod ball;
mod chabauty;

use std::fmt;
use std::sync::Arc;

use crate::error::Result;
use crate::oracle::GroupOracle;
use crate::word::{Alphabet, Word};

pub use ball::{cong_r, max_agreement, relation_ball, Agreement, BallConfig, RelationBall};
pub use chabauty::{
    chabauty_agree, chabauty_disagreement, condense, condense_with, escape_index, orbit_witness,
    ChabautyPoint, OrbitWitness,
};

/// A group oracle together with its marking, the ordered alphabet.
///
/// That the marking generates the group is an assumption made by whoever
/// builds the value; it cannot be checked from an oracle.
#[derive(Clone)]
pub struct MarkedGroup {
    name: String,
    oracle: Arc<dyn GroupOracle>,
}

impl MarkedGroup {
    pub fn new(name: impl Into<String>, oracle: Arc<dyn GroupOracle>) -> Self {
        MarkedGroup {
            name: name.into(),
            oracle,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn oracle(&self) -> &Arc<dyn GroupOracle> {
        &self.oracle
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.oracle.alphabet()
    }

    pub fn arity(&self) -> usize {
        self.alphabet().arity()
    }

    pub fn is_trivial(&self, w: &Word) -> Result<bool> {
        self.oracle.is_trivial(w)
    }
}

impl fmt::Debug for MarkedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MarkedGroup({}, {})", self.name, self.alphabet())
    }
}
