use std::fmt;

use crate::baumslag::PolyFrac;
use crate::error::{Error, Result};
use crate::oracle::{GroupOracle, SubgroupHandle};
use crate::word::{Alphabet, Letter, Sign, Word};

const A: u32 = 0;
const B: u32 = 1;
const C: u32 = 2;
const H: u32 = 3;

/// `(m, i, j)` standing for `m · b^i c^j` with `m` in the module.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BElement {
    pub module: PolyFrac,
    pub b: i64,
    pub c: i64,
}

impl BElement {
    pub fn identity() -> Self {
        BElement::default()
    }

    pub fn a() -> Self {
        BElement {
            module: PolyFrac::one(),
            ..Default::default()
        }
    }

    pub fn b() -> Self {
        BElement {
            b: 1,
            ..Default::default()
        }
    }

    pub fn c() -> Self {
        BElement {
            c: 1,
            ..Default::default()
        }
    }

    /// Pure module element.
    pub fn from_module(m: PolyFrac) -> Self {
        BElement {
            module: m,
            ..Default::default()
        }
    }

    pub fn is_identity(&self) -> bool {
        self.module.is_zero() && self.b == 0 && self.c == 0
    }

    /// `(m1,i1,j1)(m2,i2,j2) = (m1 + x^-i1 (1+x)^-j1 m2, i1+i2, j1+j2)`.
    pub fn mul(&self, other: &BElement) -> BElement {
        BElement {
            module: self
                .module
                .add(&other.module.mul_monomial(-self.b, -self.c)),
            b: self.b + other.b,
            c: self.c + other.c,
        }
    }

    /// `(m,i,j)^-1 = (x^i (1+x)^j m, -i, -j)`.
    pub fn inverse(&self) -> BElement {
        BElement {
            module: self.module.mul_monomial(self.b, self.c),
            b: -self.b,
            c: -self.c,
        }
    }

    fn mul_letter(&mut self, l: Letter) {
        match l.index {
            A => {
                // a is an involution, so a^-1 contributes the same term
                self.module = self.module.add(&PolyFrac::monomial(-self.b, -self.c));
            }
            B => self.b += l.sign.as_i64(),
            C => self.c += l.sign.as_i64(),
            _ => unreachable!("checked by caller"),
        }
    }
}

impl fmt::Display for BElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; b^{} c^{})", self.module, self.b, self.c)
    }
}

/// `h^h_exp · beta` in `<h> x B`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BaseElement {
    pub h: i64,
    pub beta: BElement,
}

impl BaseElement {
    pub fn identity() -> Self {
        BaseElement::default()
    }

    pub fn new(h: i64, beta: BElement) -> Self {
        BaseElement { h, beta }
    }

    pub fn is_identity(&self) -> bool {
        self.h == 0 && self.beta.is_identity()
    }

    pub fn mul(&self, other: &BaseElement) -> BaseElement {
        BaseElement {
            h: self.h + other.h,
            beta: self.beta.mul(&other.beta),
        }
    }

    pub fn inverse(&self) -> BaseElement {
        BaseElement {
            h: -self.h,
            beta: self.beta.inverse(),
        }
    }
}

impl fmt::Display for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h^{} * {}", self.h, self.beta)
    }
}

fn foreign(l: &Letter) -> Error {
    Error::ForeignLetter(format!(
        "#{}{}",
        l.index,
        if l.sign == Sign::Neg { "^-1" } else { "" }
    ))
}

/// Evaluates a word over `a, b, c`.
pub fn eval_b(w: &Word) -> Result<BElement> {
    let mut acc = BElement::identity();
    for &l in w.letters() {
        if l.index > C {
            return Err(foreign(&l));
        }
        acc.mul_letter(l);
    }
    Ok(acc)
}

/// Evaluates a word over `a, b, c, h`; `h` is central.
pub fn eval_base(w: &Word) -> Result<BaseElement> {
    let mut out = BaseElement::identity();
    for &l in w.letters() {
        match l.index {
            H => out.h += l.sign.as_i64(),
            i if i <= C => out.beta.mul_letter(l),
            _ => return Err(foreign(&l)),
        }
    }
    Ok(out)
}

/// `Some(k)` iff `z = h^(2k)`.
pub fn member_h2(z: &BaseElement) -> Option<i64> {
    (z.beta.is_identity() && z.h % 2 == 0).then_some(z.h / 2)
}

/// `Some(k)` iff `z = (ha)^k = h^k a^(k mod 2)`.
pub fn member_ha(z: &BaseElement) -> Option<i64> {
    if z.beta.b != 0 || z.beta.c != 0 {
        return None;
    }
    let expected = if z.h.rem_euclid(2) == 1 {
        PolyFrac::one()
    } else {
        PolyFrac::zero()
    };
    (z.beta.module == expected).then_some(z.h)
}

/// Membership in `<h> x <a^(b^i) : i in Z>`: trivial `b`, `c` parts and a
/// Laurent polynomial module part.
pub fn member_a(z: &BaseElement) -> bool {
    z.beta.b == 0 && z.beta.c == 0 && z.beta.module.is_laurent()
}

/// Word problem for `B` over the alphabet `a, b, c`.
#[derive(Clone, Debug)]
pub struct BaumslagGroup {
    alphabet: Alphabet,
}

impl Default for BaumslagGroup {
    fn default() -> Self {
        BaumslagGroup {
            alphabet: Alphabet::new(["a", "b", "c"]).expect("valid alphabet"),
        }
    }
}

impl GroupOracle for BaumslagGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(eval_b(w)?.is_identity())
    }
}

/// Word problem for `<h> x B` over the alphabet `a, b, c, h`.
#[derive(Clone, Debug)]
pub struct ProductGroup {
    alphabet: Alphabet,
}

impl Default for ProductGroup {
    fn default() -> Self {
        ProductGroup {
            alphabet: Alphabet::new(["a", "b", "c", "h"]).expect("valid alphabet"),
        }
    }
}

impl GroupOracle for ProductGroup {
    fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    fn is_trivial(&self, w: &Word) -> Result<bool> {
        Ok(eval_base(w)?.is_identity())
    }
}

/// The cyclic subgroups `<h^2>` and `<ha>` of `<h> x B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductSubgroup {
    H2,
    HA,
}

impl SubgroupHandle for ProductSubgroup {
    fn label(&self) -> String {
        match self {
            ProductSubgroup::H2 => "<h^2>".into(),
            ProductSubgroup::HA => "<h a>".into(),
        }
    }

    fn exponent(&self, w: &Word) -> Result<Option<i64>> {
        let z = eval_base(w)?;
        Ok(match self {
            ProductSubgroup::H2 => member_h2(&z),
            ProductSubgroup::HA => member_ha(&z),
        })
    }

    fn power(&self, k: i64) -> Word {
        match self {
            ProductSubgroup::H2 => Word::power_of(H, 2 * k),
            ProductSubgroup::HA => {
                let mut w = Word::power_of(H, k);
                if k.rem_euclid(2) == 1 {
                    w.push(Letter::pos(A));
                }
                w
            }
        }
    }
}
